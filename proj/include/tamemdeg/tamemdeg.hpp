#pragma once

#include "tamemdeg/aut2.hpp"
#include "tamemdeg/bracket.hpp"
#include "tamemdeg/construct3.hpp"
#include "tamemdeg/decide3.hpp"
#include "tamemdeg/errors.hpp"
#include "tamemdeg/numsg.hpp"
#include "tamemdeg/poly_text.hpp"
#include "tamemdeg/polymap.hpp"
#include "tamemdeg/polynomial.hpp"
#include "tamemdeg/rational.hpp"
#include "tamemdeg/su_checks.hpp"
