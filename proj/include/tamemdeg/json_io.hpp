#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "tamemdeg/aut2.hpp"
#include "tamemdeg/construct3.hpp"
#include "tamemdeg/decide3.hpp"
#include "tamemdeg/polymap.hpp"

namespace tamemdeg {

using Json = nlohmann::ordered_json;

/// {"n": n, "vars": [...], "components": ["...", ...]}
inline Json map_to_json(const PolyMap& f, const VarNames& vars) {
  return Json{{"n", f.n()}, {"vars", vars}, {"components", f.component_strings(vars)}};
}

inline Json map_to_json(const PolyMap& f) { return map_to_json(f, default_var_names(f.n())); }

inline PolyMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw DomainError("map JSON needs a \"components\" array");
  std::vector<std::string> comps;
  for (const auto& c : j["components"]) {
    if (!c.is_string()) throw DomainError("map components must be strings");
    comps.push_back(c.get<std::string>());
  }
  VarNames vars = j.contains("vars") ? j["vars"].get<VarNames>() : default_var_names(static_cast<int>(comps.size()));
  if (j.contains("n") && j["n"].get<long long>() != static_cast<long long>(comps.size()))
    throw DimensionError("map JSON: \"n\" differs from the number of components");
  return PolyMap::parse(comps, vars);
}

/// Recipe indices and positions are written 1-based.
inline Json recipe_to_json(const WitnessRecipe& r) {
  Json j{{"kind", to_string(r.kind)}, {"target", r.target}};
  switch (r.kind) {
    case RecipeKind::SumRule:
    case RecipeKind::Gcd2:
      j["index"] = r.index + 1;
      j["coeffs"] = r.coeffs;
      break;
    case RecipeKind::Padding: {
      std::vector<int> pos;
      for (int p : r.positions) pos.push_back(p + 1);
      j["positions"] = pos;
      j["sub"] = r.sub ? recipe_to_json(*r.sub) : Json(nullptr);
      break;
    }
    case RecipeKind::Ex469family:
      j["k"] = r.k;
      j["variant"] = r.variant;
      break;
    case RecipeKind::FourK2:
      j["k"] = r.k;
      break;
    case RecipeKind::Gallery:
      j["name"] = r.name;
      break;
    case RecipeKind::Ex4610family:
    case RecipeKind::TabTail:
      break;
  }
  return j;
}

inline WitnessRecipe recipe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("target")) throw DomainError("recipe JSON needs kind and target");
  WitnessRecipe r;
  r.kind = recipe_kind_from_string(j["kind"].get<std::string>());
  r.target = j["target"].get<Multidegree>();
  if (j.contains("index")) r.index = j["index"].get<int>() - 1;
  if (j.contains("coeffs")) r.coeffs = j["coeffs"].get<std::vector<long long>>();
  if (j.contains("k")) r.k = j["k"].get<long long>();
  if (j.contains("variant")) r.variant = j["variant"].get<long long>();
  if (j.contains("name")) r.name = j["name"].get<std::string>();
  if (j.contains("positions"))
    for (int p : j["positions"].get<std::vector<int>>()) r.positions.push_back(p - 1);
  if (j.contains("sub") && !j["sub"].is_null()) r.sub = std::make_shared<WitnessRecipe>(recipe_from_json(j["sub"]));
  return r;
}

/// {"target": [...], "recipe": {...}, "factors": [map, ...]}; factors outermost first.
inline Json witness_to_json(const Witness& w) {
  Json factors = Json::array();
  for (const auto& f : w.factors) factors.push_back(map_to_json(f.map));
  Json j{{"target", w.recipe.target}, {"recipe", recipe_to_json(w.recipe)}, {"factors", factors}};
  if (w.cancellation_degree) j["cancellation_degree"] = *w.cancellation_degree;
  return j;
}

/// Replays a persisted witness: certifies each factor, recomposes and re-measures the multidegree.
inline Witness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("factors") || !j["factors"].is_array())
    throw DomainError("witness JSON needs \"target\" and \"factors\"");
  WitnessRecipe r;
  if (j.contains("recipe") && !j["recipe"].is_null()) r = recipe_from_json(j["recipe"]);
  r.target = j["target"].get<Multidegree>();
  std::vector<Invertible> factors;
  for (const auto& fj : j["factors"]) factors.push_back(certified_generator(map_from_json(fj)));
  return finish_witness(std::move(r), std::move(factors));
}

inline Json classification_to_json(const Classification& c) {
  Json j{{"input", c.input},
         {"mdeg", c.sorted_mdeg},
         {"status", to_string(c.status)},
         {"rule", c.rule},
         {"rule_id", c.rule_id},
         {"recipe", c.witness_recipe ? recipe_to_json(*c.witness_recipe) : Json(nullptr)},
         {"notes", c.notes}};
  return j;
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json factors = Json::array();
  for (const auto& t : d.factors) factors.push_back(map_to_json(t.map));
  return Json{{"length", d.length},
              {"factor_degrees", d.factor_degrees},
              {"L1", map_to_json(d.L1.map)},
              {"factors", factors},
              {"L2", map_to_json(d.L2.map)}};
}

}  // namespace tamemdeg
