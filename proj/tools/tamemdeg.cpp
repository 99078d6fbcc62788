#include <CLI/CLI.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tamemdeg/json_io.hpp"
#include "tamemdeg/tamemdeg.hpp"

using namespace tamemdeg;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;

class MissingFile : public Error {
 public:
  explicit MissingFile(const std::string& path) : Error("cannot open '" + path + "'") {}
};

int status_exit_code(Status s) {
  switch (s) {
    case Status::Realizable: return 0;
    case Status::NotRealizable: return 1;
    case Status::Unknown: return 2;
    case Status::ConditionalOnJC2: return 3;
  }
  return 2;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

PolyMap load_map(const std::string& path, const std::string& gallery_name) {
  if (!gallery_name.empty()) return gallery(gallery_name);
  if (path.empty()) throw DomainError("give either --map FILE or --gallery NAME");
  return map_from_json(read_json_file(path));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_map(const PolyMap& f) {
  VarNames vars = default_var_names(f.n());
  for (const auto& c : f.component_strings(vars)) std::cout << c << "\n";
}

int jobs_default() {
  if (const char* env = std::getenv("TAMEMDEG_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Random plane automorphism L2 o T_l o ... o T_1 o L1 in normalized alternating form.
PolyMap sample_plane(std::uint64_t seed, long long max_product) {
  std::mt19937_64 eng(seed);
  auto uni = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng); };
  auto random_affine = [&]() {
    for (;;) {
      Matrix m(2, std::vector<Rational>(2));
      for (auto& row : m)
        for (auto& v : row) v = Rational(uni(-2, 2));
      if ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero()) continue;
      return affine_map(m, {Rational(uni(-3, 3)), Rational(uni(-3, 3))});
    }
  };
  std::vector<long long> degrees;
  long long prod = 1;
  for (long long i = 0, len = uni(0, 4); i < len; ++i) {
    long long d = uni(2, 5);
    while (d > 2 && prod * d > max_product) --d;
    if (prod * d > max_product) break;
    degrees.push_back(d);
    prod *= d;
  }
  std::vector<PolyMap> chain{random_affine()};
  for (std::size_t i = degrees.size(); i-- > 0;) {
    int var = i % 2 == 0 ? 1 : 0;
    Polynomial f(2);
    for (long long e = 0; e <= degrees[i]; ++e) {
      Monomial m(2);
      m.set(var, static_cast<unsigned>(e));
      long long c = uni(-3, 3);
      if (e == degrees[i] && c == 0) c = 1;
      f += Polynomial::monomial(m, Rational(c));
    }
    chain.push_back(elementary(2, 1 - var, f).map);
  }
  chain.push_back(random_affine());
  return compose_chain(chain);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidegrees of tame polynomial automorphisms"};
  app.require_subcommand(1);
  int exit_code = 0;

  // decide
  std::vector<long long> triple;
  bool want_witness = false, want_json = false;
  auto* decide = app.add_subcommand("decide", "classify a multidegree triple");
  decide->add_option("degrees", triple, "d1 d2 d3")->required()->expected(3)->check(CLI::PositiveNumber);
  decide->add_flag("--witness", want_witness, "build and verify a witness when realizable");
  decide->add_flag("--json", want_json, "machine-readable output");

  // construct
  std::vector<long long> ctriple;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build a verified witness for a realizable triple");
  construct->add_option("degrees", ctriple, "d1 d2 d3")->required()->expected(3)->check(CLI::PositiveNumber);
  construct->add_option("-o,--out", out_path, "write the witness JSON to this file");

  // verify
  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "replay a witness file and re-measure its multidegree");
  verify->add_option("witness", witness_path, "witness JSON file")->required();

  // enumerate
  long long max_bound = 0;
  std::string format = "csv";
  bool as_csv = false, as_json = false;
  int jobs = jobs_default();
  auto* enumerate_cmd = app.add_subcommand("enumerate", "classify every sorted triple up to a bound");
  enumerate_cmd->add_option("--max", max_bound, "largest d3")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  enumerate_cmd->add_flag("--csv", as_csv, "same as --format csv");
  enumerate_cmd->add_flag("--json", as_json, "same as --format json");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads (default TAMEMDEG_JOBS or 1)")->check(CLI::PositiveNumber);

  // semigroup
  std::vector<long long> gens;
  long long member_k = -1, min_k = 0;
  bool list_gaps = false, sg_json = false;
  auto* semigroup = app.add_subcommand("semigroup", "two-generator numerical semigroup data");
  semigroup->add_option("generators", gens, "d1 d2")->required()->expected(2)->check(CLI::PositiveNumber);
  semigroup->add_option("--k", member_k, "membership query")->check(CLI::NonNegativeNumber);
  semigroup->add_flag("--gaps", list_gaps, "list the gaps");
  semigroup->add_option("--min", min_k, "only gaps >= this value");
  semigroup->add_flag("--json", sg_json, "machine-readable output");

  // analyze2
  std::string map_path, map_gallery;
  bool want_inverse = false, want_decompose = false, a2_json = false;
  auto* analyze2 = app.add_subcommand("analyze2", "decompose a plane automorphism");
  analyze2->add_option("--map", map_path, "map JSON file");
  analyze2->add_flag("--inverse", want_inverse, "print the exact inverse");
  analyze2->add_flag("--decompose", want_decompose, "print the factor decomposition");
  analyze2->add_flag("--json", a2_json, "machine-readable output");

  // reduce
  std::string rmap_path, rmap_gallery;
  int target = 0;
  long long degy_bound = 4, deg_bound = 12;
  auto* reduce = app.add_subcommand("reduce", "bounded search for an elementary reduction");
  reduce->add_option("--map", rmap_path, "map JSON file");
  reduce->add_option("--gallery", rmap_gallery, "use a gallery map instead of a file");
  reduce->add_option("--target", target, "component to reduce (1-based)")->required()->check(CLI::Range(1, 3));
  reduce->add_option("--degy-bound", degy_bound, "largest degree in the higher-degree partner");
  reduce->add_option("--deg-bound", deg_bound, "largest total degree of the candidate");

  // gallery
  std::string gallery_name;
  bool want_mdeg = false, g_json = false;
  auto* gallery_cmd = app.add_subcommand("gallery", "named maps");
  gallery_cmd->add_option("name", gallery_name, "map name (omit to list)");
  gallery_cmd->add_flag("--mdeg", want_mdeg, "print the multidegree only");
  gallery_cmd->add_flag("--json", g_json, "print map JSON");

  // sample2
  std::uint64_t seed = 1;
  long long max_product = 64;
  auto* sample2 = app.add_subcommand("sample2", "seeded random plane automorphism as map JSON");
  sample2->add_option("--seed", seed, "generator seed");
  sample2->add_option("--max-product", max_product, "bound on the product of factor degrees")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decide) {
      Classification c = classify(triple[0], triple[1], triple[2]);
      exit_code = status_exit_code(c.status);
      std::optional<Witness> w;
      if (want_witness && c.witness_recipe) w = build(*c.witness_recipe);
      if (want_json) {
        Json j = classification_to_json(c);
        if (want_witness) j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else if (w) {
        std::cout << witness_to_json(*w).dump(2) << "\n";
      } else {
        std::cout << "mdeg: " << to_string(c.sorted_mdeg) << "\n"
                  << "status: " << to_string(c.status) << "\n"
                  << "rule: " << c.rule << " [" << c.rule_id << "]\n";
        for (const auto& n : c.notes) std::cout << "note: " << n << "\n";
        if (want_witness) std::cout << "witness: none\n";
      }
    } else if (*construct) {
      Classification c = classify(ctriple[0], ctriple[1], ctriple[2]);
      if (!c.witness_recipe) {
        std::cerr << "no construction for (" << to_string(c.sorted_mdeg, ",") << "): " << to_string(c.status) << ", "
                  << c.rule << "\n";
        return status_exit_code(c.status);
      }
      std::string text = witness_to_json(build(*c.witness_recipe)).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw MissingFile(out_path);
        out << text;
      }
    } else if (*verify) {
      Json j = read_json_file(witness_path);
      try {
        Witness w = witness_from_json(j);
        std::cout << "verified: mdeg " << to_string(w.verified_mdeg) << "\n";
      } catch (const VerificationError& e) {
        std::cout << "mismatch: " << e.what() << "\n";
        return 1;
      }
    } else if (*enumerate_cmd) {
      if (as_json) format = "json";
      if (as_csv) format = "csv";
      Enumeration e = enumerate(max_bound, jobs);
      if (format == "json") {
        Json results = Json::array();
        for (const auto& c : e.results) results.push_back(classification_to_json(c));
        Json counts = Json::object();
        for (const auto& [s, n] : e.counts) counts[to_string(s)] = n;
        std::cout << Json{{"max", max_bound}, {"counts", counts}, {"results", results}}.dump(2) << "\n";
      } else {
        std::ostringstream out;
        out << "d1,d2,d3,status,rule,original\n";
        for (const auto& c : e.results) {
          const Multidegree& d = c.sorted_mdeg;
          out << d[0] << "," << d[1] << "," << d[2] << "," << to_string(c.status) << "," << csv_field(c.rule) << ","
              << to_string(c.input) << "\n";
        }
        std::cout << out.str();
        for (const auto& [s, n] : e.counts) std::cerr << to_string(s) << ": " << n << "\n";
      }
    } else if (*semigroup) {
      SemigroupPair s(gens[0], gens[1]);
      bool coprime = s.gcd() == 1;
      if (sg_json) {
        Json j{{"d1", s.d1}, {"d2", s.d2}};
        if (member_k >= 0) {
          auto m = member(s, member_k);
          j["k"] = member_k;
          j["member"] = m.has_value();
          j["decomposition"] = m ? Json({m->k1, m->k2}) : Json(nullptr);
        }
        j["frobenius"] = coprime ? Json(frobenius(s)) : Json(nullptr);
        if (list_gaps) j["gaps"] = gaps(s, min_k);
        std::cout << j.dump(2) << "\n";
      } else if (list_gaps) {
        std::vector<long long> g = gaps(s, min_k);
        for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
        std::cout << "\n";
      } else if (member_k >= 0) {
        auto m = member(s, member_k);
        if (m) std::cout << member_k << " = " << m->k1 << "*" << s.d1 << " + " << m->k2 << "*" << s.d2 << "\n";
        else std::cout << member_k << " is not a member\n";
        if (!m) exit_code = 1;
      } else {
        if (!coprime) throw DomainError("frobenius: generators must be coprime");
        std::cout << frobenius(s) << "\n";
      }
    } else if (*analyze2) {
      PolyMap f = load_map(map_path, "");
      if (f.n() != 2) throw DimensionError("analyze2 needs a map of the plane");
      Decomposition d = peel(f);
      if (a2_json) {
        Json j{{"mdeg", mdeg(f)}, {"length", d.length}};
        if (want_decompose) j["decomposition"] = decomposition_to_json(d);
        if (want_inverse) j["inverse"] = map_to_json(d.inverse());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "mdeg: " << to_string(mdeg(f)) << "\n" << "length: " << d.length << "\n";
        if (want_decompose) {
          std::cout << "factor degrees:";
          for (long long v : d.factor_degrees) std::cout << " " << v;
          std::cout << "\nL1:\n";
          print_map(d.L1.map);
          for (std::size_t i = 0; i < d.factors.size(); ++i) {
            std::cout << "T" << i + 1 << ":\n";
            print_map(d.factors[i].map);
          }
          std::cout << "L2:\n";
          print_map(d.L2.map);
        }
        if (want_inverse) {
          std::cout << "inverse:\n";
          print_map(d.inverse());
        }
      }
    } else if (*reduce) {
      PolyMap f = load_map(rmap_path, rmap_gallery);
      auto c = bounded_reduction_search(f, target - 1, degy_bound, deg_bound);
      if (c) {
        ReductionCheck chk = check_elementary_reduction(f, *c);
        std::cout << "reduction: " << to_string(c->g) << "\n" << "degree: " << chk.achieved.str() << "\n";
      } else {
        std::cout << "no reduction within bounds\n";
        exit_code = 1;
      }
    } else if (*gallery_cmd) {
      if (gallery_name.empty()) {
        for (const auto& n : gallery_names()) std::cout << n << "\n";
      } else {
        PolyMap f = gallery(gallery_name);
        if (want_mdeg) std::cout << to_string(mdeg(f)) << "\n";
        else if (g_json) std::cout << map_to_json(f).dump(2) << "\n";
        else print_map(f);
      }
    } else if (*sample2) {
      std::cout << map_to_json(sample_plane(seed, max_product)).dump(2) << "\n";
    }
  } catch (const MissingFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error at column " << e.position() << ": " << e.what() << "\n";
    return kExitData;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return exit_code;
}
