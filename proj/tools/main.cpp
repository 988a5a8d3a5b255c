#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/degree.hpp"
#include "padic/json_io.hpp"
#include "padic/qubit.hpp"

using nlohmann::json;
using namespace padic;

namespace {

struct RunConfig {
  uint32_t p = 3;
  uint32_t k = 1;
  std::string format = "pretty";
  Budget budget;
  uint64_t seed = 0;
};

std::string validate(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) return "p must be prime";
  if (cfg.k < 1) return "k must be at least 1";
  try {
    Modulus::make(cfg.p, cfg.k);
  } catch (const DomainError& e) {
    return e.what();
  }
  return {};
}

FiniteMatrixGroup build_group(const RunConfig& cfg, const std::string& method) {
  if (method == "solve") return solve_defining_system(cfg.p, cfg.k, cfg.budget);
  if (method == "closure") {
    const FormSpec f = make_form(cfg.p, cfg.k);
    return generate_closure(axis_group_generators(f), f.mod, cfg.budget);
  }
  if (method == "parametrize") {
    if (cfg.p == 2 || cfg.k != 1)
      throw DomainError("parametrize covers odd p at level k = 1");
    const FormSpec f = make_form(cfg.p, 1);
    FiniteMatrixGroup G(f.mod);
    for (const ParamElement& e : parameterize_mod_p(cfg.p)) G.add(e.to_matrix(*f.v));
    return G;
  }
  throw DomainError("unknown method " + method);
}

int cmd_group(const RunConfig& cfg, const std::string& method, const std::string& out_path) {
  const FiniteMatrixGroup G = build_group(cfg, method);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot open output file " + out_path);
    dump_group(out, G);
  }
  if (cfg.format == "json") {
    json j{{"p", cfg.p}, {"k", cfg.k}, {"method", method}, {"order", G.size()}};
    std::cout << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "order," << G.size() << "\n";
  } else {
    std::cout << "|G_{" << cfg.p << "^" << cfg.k << "}| = " << G.size() << "  (" << method << ")\n";
  }
  return 0;
}

json degree_pipeline_json(uint32_t p, const FiniteMatrixGroup& G, uint64_t one_irreps,
                          size_t class_count, uint64_t ito_index) {
  DegreeProblem prob;
  prob.residual_sum = G.size() - one_irreps;
  prob.slot_count = static_cast<uint32_t>(class_count - one_irreps);
  prob.allowed_degrees = proper_divisors_above_one(G.size());
  const auto unconstrained = solve_degrees(prob);
  const auto after_ito = constrain_by_ito(unconstrained, ito_index);
  const auto final_set = constrain_by_min_two_count(after_ito, variant_count(p));
  json out;
  out["unconstrained_count"] = unconstrained.size();
  out["ito_index"] = ito_index;
  out["after_ito"] = after_ito;
  out["min_two_irreps"] = variant_count(p);
  out["candidates"] = final_set;
  json spectra = json::array();
  for (const auto& ms : final_set) {
    std::vector<uint32_t> full(one_irreps, 1);
    full.insert(full.end(), ms.begin(), ms.end());
    spectra.push_back(full);
  }
  out["full_spectra"] = spectra;
  return out;
}

int cmd_report(const RunConfig& cfg) {
  const FiniteMatrixGroup G = solve_defining_system(cfg.p, 1, cfg.budget);
  const FiniteMatrixGroup comm = commutator_subgroup(G);
  const Abelianization ab = abelianization(G, comm);
  const auto classes = conjugacy_classes(G);
  const FiniteMatrixGroup normal = maximal_abelian_normal_subgroup(G, classes);
  const uint64_t ito_index = G.size() / normal.size();

  json rep;
  rep["group"] = "G_" + std::to_string(cfg.p);
  rep["p"] = cfg.p;
  rep["order"] = G.size();
  rep["commutator_order"] = comm.size();
  rep["abelianization"] = ab.iso_type;
  rep["one_irrep_count"] = ab.order;
  std::vector<size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  rep["class_count"] = classes.size();
  rep["class_sizes"] = sizes;
  rep["maximal_abelian_normal_order"] = normal.size();
  json table = json::array();
  if (cfg.p != 2) {
    OneDimCharacters chars(cfg.p);
    for (const auto& cls : classes) {
      const auto vals = chars.values(G.at(cls.rep_id));
      table.push_back({{"size", cls.size()},
                       {"det", vals[0]},
                       {"s", vals[1]},
                       {"t", vals[2]},
                       {"st", vals[3]}});
    }
  } else {
    for (const auto& cls : classes)
      table.push_back({{"size", cls.size()},
                       {"trivial", 1},
                       {"sign", s3_sign(s3_from_matrix_mod2(G.at(cls.rep_id)))}});
  }
  rep["one_characters_by_class"] = table;
  rep["degrees"] = degree_pipeline_json(cfg.p, G, ab.order, classes.size(), ito_index);

  if (cfg.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "order," << G.size() << "\n";
    std::cout << "commutator_order," << comm.size() << "\n";
    std::cout << "abelianization," << ab.iso_type << "\n";
    std::cout << "class_sizes";
    for (auto s : sizes) std::cout << "," << s;
    std::cout << "\n";
    std::cout << "candidate_spectra," << rep["degrees"]["candidates"].size() << "\n";
  } else {
    std::cout << "G_" << cfg.p << ": order " << G.size() << ", [G,G] of order " << comm.size()
              << ", abelianization " << ab.iso_type << "\n";
    std::cout << "conjugacy classes (" << classes.size() << "): ";
    for (size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? "," : "") << sizes[i];
    std::cout << "\nmaximal abelian normal subgroup: order " << normal.size() << " (index "
              << ito_index << ")\n";
    std::cout << "degree candidates (after index + qubit-count constraints):\n";
    for (const auto& spec : rep["degrees"]["full_spectra"]) std::cout << "  " << spec.dump() << "\n";
  }
  return 0;
}

int cmd_hensel(const RunConfig& cfg) {
  const HenselReport r = hensel_compare(cfg.p, cfg.k, cfg.budget);
  if (cfg.format == "json") {
    json j{{"p", cfg.p},
           {"k", cfg.k},
           {"closure_order", r.closure_order},
           {"solver_order", r.solver_order},
           {"equal", r.equal},
           {"contained", r.contained}};
    std::cout << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "closure,solver,equal,contained\n"
              << r.closure_order << "," << r.solver_order << "," << (r.equal ? 1 : 0) << ","
              << (r.contained ? 1 : 0) << "\n";
  } else {
    std::cout << r.closure_order << " " << r.solver_order << " "
              << (r.equal ? "equal" : "different")
              << (r.contained ? " contained" : " NOT-CONTAINED") << "\n";
  }
  if (!r.contained) throw DomainError("closure escaped the solver set; containment must hold");
  return 0;
}

Mat3 generator_matrix(const RunConfig& cfg, const std::string& name) {
  const Modulus mod = Modulus::make(cfg.p, 1);
  if (name == "identity") return Mat3::identity(mod);
  if (cfg.p == 2) {
    if (name == "(12)") return Mat3::from_rows(mod, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
    if (name == "(23)") return Mat3::from_rows(mod, {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}});
    throw DomainError("unknown generator for p = 2: " + name + " (use \"(12)\", \"(23)\")");
  }
  const FormSpec f = make_form(cfg.p, 1);
  if (name == "C") {
    const NormOnePair g = find_generator(cfg.p);
    ParamElement e{g.a, g.b, ModInt(0, f.mod), ModInt(0, f.mod), 1};
    return e.to_matrix(*f.v);
  }
  if (name == "Z") {
    ParamElement e{ModInt(1, f.mod), ModInt(0, f.mod), ModInt(0, f.mod), ModInt(0, f.mod), -1};
    return e.to_matrix(*f.v);
  }
  throw DomainError("unknown generator " + name + " (use C, Z or identity)");
}

int run_qubit_checks(const RunConfig& cfg, uint32_t variant) {
  std::cout << "running exhaustive suites for p = " << cfg.p << ", variant " << variant << "\n";
  const double dev = homomorphism_check(cfg.p, variant);
  std::cout << "  homomorphism deviation over all pairs: " << dev << "\n";
  const bool irr = irreducibility_check(cfg.p, variant);
  std::cout << "  irreducible (trivial commutant): " << (irr ? "yes" : "no") << "\n";
  const FiniteMatrixGroup G = solve_defining_system(cfg.p, 1, cfg.budget);
  const QubitRep rep(cfg.p, variant);
  std::vector<ComplexMat2> images;
  for (const Mat3& g : G.elements()) images.push_back(rep.eval_modp(g));
  const Unitarized u = unitarize(images);
  std::cout << "  max non-unitarity after basis change: " << u.max_nonunitarity << "\n";
  const KernelReport kr = faithfulness_check(cfg.p, variant);
  std::cout << "  kernel sizes: group " << kr.group_kernel << ", image " << kr.image_kernel << "\n";

  // sampled lift-independence: deeper coherent tails must not change the value
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(G.size() - 1));
  double lift_dev = 0;
  for (int trial = 0; trial < 32; ++trial) {
    const Mat3& base = G.at(pick(rng));
    std::array<std::vector<uint64_t>, 9> seqs;
    for (int e = 0; e < 9; ++e) {
      uint64_t val = base.raw()[e], scale = cfg.p;
      seqs[e].push_back(val);
      for (int depth = 1; depth < 3; ++depth) {
        val += (rng() % cfg.p) * scale;
        scale *= cfg.p;
        seqs[e].push_back(val);
      }
    }
    const PadicMat3 lifted(cfg.p, 3, seqs);
    lift_dev = std::max(lift_dev, distance(rep.eval(lifted), rep.eval_modp(base)));
  }
  std::cout << "  lift independence over sampled tails: " << lift_dev << "\n";
  const bool ok = dev < 1e-9 && irr && u.max_nonunitarity < 1e-9 && lift_dev == 0.0;
  std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return ok ? 0 : 4;
}

int cmd_qubit(const RunConfig& cfg, uint32_t variant, const std::string& gen,
              const std::string& file, bool unitary, bool check) {
  if (check) {
    const int rc = run_qubit_checks(cfg, variant);
    if (rc != 0) return rc;
  }
  PadicMat3 input = [&] {
    if (!gen.empty()) return PadicMat3::constant_lift(generator_matrix(cfg, gen), 1);
    if (file.empty()) throw DomainError("provide a matrix file or --gen NAME");
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open " + file);
    json j = json::parse(in);
    return padic_matrix_from_json(j, cfg.p);
  }();
  const QubitRep rep(cfg.p, variant, unitary);
  const ComplexMat2 image = rep.eval(input);
  if (cfg.format == "json") {
    json out{{"p", cfg.p},
             {"variant", variant},
             {"input", matrix_json(input.project_pi1())},
             {"image", cmat2_json(image)}};
    std::cout << out.dump() << "\n";
  } else if (cfg.format == "csv") {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        std::cout << image.at(r, c).real() << "," << image.at(r, c).imag()
                  << (r * 2 + c < 3 ? "," : "\n");
  } else {
    auto fmt = [](complex_t z) {
      const double re = z.real() + 0.0;  // clear negative zero
      std::string s = std::to_string(re);
      if (std::abs(z.imag()) > 1e-12) s += (z.imag() > 0 ? "+" : "") + std::to_string(z.imag()) + "i";
      return s;
    };
    std::cout << "[[" << fmt(image.at(0, 0)) << ", " << fmt(image.at(0, 1)) << "],\n [";
    std::cout << fmt(image.at(1, 0)) << ", " << fmt(image.at(1, 1)) << "]]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quotients of p-adic rotation groups: structure reports and qubit maps"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string method = "solve", out_path, gen_name, matrix_file;
  uint32_t variant = 1;
  bool unitary = false, check = false;

  auto add_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("-p,--prime", cfg.p, "prime p")->required();
    if (with_k) sub->add_option("-k,--level", cfg.k, "truncation level k (modulus p^k)");
    sub->add_option("--format", cfg.format, "output format: json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--budget-elems", cfg.budget.max_elements, "cap on stored elements");
    sub->add_option("--budget-visits", cfg.budget.max_visits, "cap on candidate visits");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  };

  CLI::App* group = app.add_subcommand("group", "enumerate the quotient group and print its order");
  add_common(group, true);
  group->add_option("--method", method, "solve | closure | parametrize")
      ->check(CLI::IsMember({"solve", "closure", "parametrize"}));
  group->add_option("--out", out_path, "write the group as JSON lines");

  CLI::App* report = app.add_subcommand("report", "structural report of the mod-p group");
  add_common(report, false);

  CLI::App* qubit = app.add_subcommand("qubit", "evaluate a two-dimensional representation");
  add_common(qubit, false);
  qubit->add_option("-v,--variant", variant, "irrep variant index (1-based)");
  qubit->add_option("--gen", gen_name, "named input: C, Z, identity, \"(12)\", \"(23)\"");
  qubit->add_option("matrix", matrix_file, "JSON matrix file (plain 3x3 or digit sequences)");
  qubit->add_flag("--unitary", unitary, "answer in the unitarized basis");
  qubit->add_flag("--check", check, "run the exhaustive verification suites first");

  CLI::App* hensel = app.add_subcommand("hensel", "compare closure and solver enumerations");
  add_common(hensel, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const std::string err = validate(cfg); !err.empty()) {
    std::cerr << "usage error: " << err << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(group)) return cmd_group(cfg, method, out_path);
    if (app.got_subcommand(report)) return cmd_report(cfg);
    if (app.got_subcommand(qubit)) return cmd_qubit(cfg, variant, gen_name, matrix_file, unitary, check);
    if (app.got_subcommand(hensel)) return cmd_hensel(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
