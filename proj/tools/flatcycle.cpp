// flatcycle: certified flat-norm transport, grid quantization, and counting
// for atomic 0-cycles on the cube. Subcommand batch tool; JSON in, JSON/CSV
// out. Exit codes: 0 ok, 1 invariant violation, 2 input error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatcycle/generators.hpp"
#include "flatcycle/json_io.hpp"
#include "flatcycle/suites.hpp"

namespace fc = flatcycle;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw fc::ParseError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fc::ZeroCycle load_cycle(const std::string& path) {
  fc::Json j;
  try {
    j = fc::Json::parse(read_input(path));
  } catch (const std::exception& e) {
    throw fc::ParseError(std::string("malformed JSON: ") + e.what());
  }
  return fc::cycle_from_json(j);
}

fc::Rat parse_rat_arg(const std::string& s) {
  try {
    return fc::rat_of_string(s);
  } catch (const fc::ParseError&) {
    return fc::rat_of_double(std::stod(s));
  }
}

int cmd_gnorm(const std::string& file, double tol) {
  fc::ZeroCycle t = load_cycle(file);
  fc::TransportSolution sol = fc::gnorm(t, tol);
  fc::CertifyReport cert = fc::certify(t, sol);
  std::cout << fc::transport_to_json(sol, t.mode()).dump(2) << "\n";
  if (!cert.all_pass()) {
    for (const fc::CertifyCheck& c : cert.checks)
      if (!c.pass)
        std::cerr << "certification failed: " << c.name << " residual "
                  << c.residual << " > " << c.bound << "\n";
    return 1;
  }
  return 0;
}

int cmd_gen(const std::string& family, int count, int n, int terms, long k,
            int atoms, uint64_t seed, const std::string& mode_name) {
  fc::Mode mode =
      mode_name == "float" ? fc::Mode::Float : fc::Mode::Rational;
  fc::Rng rng(seed);
  if (family == "dipoles") {
    for (int i = 0; i < count; ++i)
      std::cout << fc::cycle_to_json(fc::gen_dipoles(n, 1, rng, mode)).dump()
                << "\n";
  } else if (family == "harmonic") {
    std::cout << fc::cycle_to_json(fc::gen_harmonic(n, terms, mode)).dump()
              << "\n";
  } else if (family == "grid-random") {
    for (int i = 0; i < count; ++i) {
      fc::GridCycle g = fc::gen_grid_random(fc::GridSpec{n, k}, atoms, 3, rng);
      std::cout << fc::cycle_to_json(g.to_cycle(mode)).dump() << "\n";
    }
  } else {
    throw fc::BadParams("unknown family: " + family);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const fc::SuiteParams& params) {
  auto t0 = std::chrono::steady_clock::now();
  fc::RunReport rep = fc::run_suite(suite, params);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << fc::report_to_json(rep).dump(2) << "\n";
  std::cerr << "suite " << suite << ": " << rep.checks.size() << " checks, "
            << rep.failures() << " failures, "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << " ms\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_bound(int n, double gamma, double kappa_const, double eps) {
  fc::CoveringBound b = fc::covering_bound(
      n, fc::BoundednessCertificate::constant(gamma, kappa_const), eps);
  fc::Json j;
  j["k"] = b.k;
  j["ln_N"] = b.ln_n;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_kappa(const std::string& file, double eps, long grid_k, double tol) {
  fc::ZeroCycle t = load_cycle(file);
  fc::SupportPolicy policy;
  if (grid_k > 0) policy = fc::SupportPolicy::with_grid(grid_k);
  fc::KappaEstimate est = fc::kappa(t, eps, policy, tol);
  std::cout << fc::kappa_to_json(est).dump(2) << "\n";
  return 0;
}

int cmd_deform(const std::string& file, long k, const std::string& eps_str,
               double tol) {
  fc::ZeroCycle t = load_cycle(file);
  fc::Rat eps = parse_rat_arg(eps_str);
  fc::DeformResult res = fc::deform(t, k, eps, tol);
  fc::Json j;
  j["P"] = fc::quantized_to_json(res.P);
  j["error"] = res.error;
  j["stage_reduce"] = res.stage_reduce;
  j["stage_snap"] = res.stage_snap;
  j["stage_round"] = res.stage_round;
  j["gnorm_T"] = res.gnorm_t;
  j["kappa"] = res.kappa_value;
  j["condition_A"] = res.condition_a;
  j["membership"] = res.membership;
  std::cout << j.dump(2) << "\n";
  return res.membership ? 0 : 1;
}

int cmd_count(long p, long q, long sweep, const std::string& out, double cap,
              bool brute) {
  if (sweep > 0) {
    if (out == "csv") std::cout << fc::count_sweep_csv_header() << "\n";
    fc::Json rows = fc::Json::array();
    for (long pp = 1; pp <= sweep; ++pp)
      for (long qq = 1; qq <= pp; ++qq) {
        fc::CountInstance inst{pp, qq};
        fc::UpperBounds ub = fc::count_upper(inst);
        double ln_exact = fc::ln_of_int(ub.exact);
        bool pass = ub.holds_f && ub.holds_g;
        if (out == "csv") {
          std::cout << fc::count_sweep_csv_row(inst, ub.exact, ln_exact,
                                               ub.bound_f, ub.bound_g_ln, pass)
                    << "\n";
        } else {
          fc::Json row;
          row["p"] = pp;
          row["q"] = qq;
          row["exact"] = ub.exact.get_str();
          row["ln_exact"] = ln_exact;
          row["bound_F"] = ub.bound_f;
          row["bound_G_ln"] = ub.bound_g_ln;
          row["pass"] = pass;
          rows.push_back(row);
        }
      }
    if (out != "csv") std::cout << rows.dump(2) << "\n";
    return 0;
  }
  fc::CountResult res = brute
                            ? fc::count_bruteforce(fc::CountInstance{p, q}, cap)
                            : fc::count_exact(fc::CountInstance{p, q});
  std::cout << res.exact.get_str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified transport norms, grid quantization, and entropy "
               "counting for atomic 0-cycles on [-1,1]^n"};
  app.require_subcommand(1);

  std::string file = "-";
  double tol = 1e-9;
  uint64_t seed = 20250809;
  std::string mode_name = "rational";
  std::string out = "json";

  auto* sc_gnorm = app.add_subcommand("gnorm", "certified flat norm of a cycle");
  sc_gnorm->add_option("file", file, "cycle JSON file or - for stdin");
  sc_gnorm->add_option("--tol", tol, "duality gap tolerance");

  auto* sc_gen = app.add_subcommand("gen", "generate cycle instances");
  std::string family = "dipoles";
  int count = 1, gen_n = 1, terms = 3, gen_atoms = 6;
  long gen_k = 2;
  sc_gen->add_option("--family", family, "dipoles|harmonic|grid-random");
  sc_gen->add_option("--count", count, "number of cycles");
  sc_gen->add_option("--n", gen_n, "ambient dimension");
  sc_gen->add_option("--j", terms, "harmonic truncation length");
  sc_gen->add_option("--k", gen_k, "grid subdivisions");
  sc_gen->add_option("--atoms", gen_atoms, "atoms per grid cycle");
  sc_gen->add_option("--seed", seed, "rng seed");
  sc_gen->add_option("--mode", mode_name, "rational|float");

  auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "gnorm";
  fc::SuiteParams params;
  sc_verify->add_option("--suite", suite,
                        "gnorm|grid92|quant94|deform95|kappa80|count10|oned|"
                        "beckmann|separation|entropy");
  sc_verify->add_option("--samples", params.samples, "sample count override");
  sc_verify->add_option("--n", params.n, "max dimension");
  sc_verify->add_option("--k", params.k, "max subdivisions");
  sc_verify->add_option("--eps", params.eps, "scale parameter");
  sc_verify->add_option("--seed", params.seed, "rng seed");
  sc_verify->add_option("--tol", params.tol, "tolerance");
  sc_verify->add_flag("--inject-fault", params.inject_fault,
                      "self-test: corrupt one instance and expect failure");

  auto* sc_bound = app.add_subcommand("bound", "covering-number bound");
  int bn = 1;
  double gamma = 1.0, kappa_const = 0.0, beps = 1.0;
  sc_bound->add_option("--n", bn, "dimension")->required();
  sc_bound->add_option("--gamma", gamma, "norm bound")->required();
  sc_bound->add_option("--kappa", kappa_const, "constant kappa bound");
  sc_bound->add_option("--eps", beps, "net separation in (0,1]")->required();

  auto* sc_kappa = app.add_subcommand("kappa", "mass at scale eps");
  double keps = 1.0;
  long kappa_grid_k = 0;
  sc_kappa->add_option("file", file, "cycle JSON file or - for stdin");
  sc_kappa->add_option("--eps", keps, "scale")->required();
  sc_kappa->add_option("--grid-k", kappa_grid_k,
                       "extend the candidate support by the k-grid");
  sc_kappa->add_option("--tol", tol, "solver tolerance");

  auto* sc_deform = app.add_subcommand("deform", "quantize onto the class");
  long dk = 1;
  std::string deps = "1";
  sc_deform->add_option("file", file, "cycle JSON file or - for stdin");
  sc_deform->add_option("--k", dk, "grid subdivisions")->required();
  sc_deform->add_option("--eps", deps, "scale in (0,1], rational ok")
      ->required();
  sc_deform->add_option("--tol", tol, "solver tolerance");

  auto* sc_count = app.add_subcommand("count", "cardinality of E(p,q)");
  long cp = 1, cq = 1, csweep = 0;
  double ccap = 1e10;
  bool cbrute = false;
  sc_count->add_option("p", cp, "l1 budget");
  sc_count->add_option("q", cq, "domain size");
  sc_count->add_option("--sweep", csweep, "run the full sweep up to p");
  sc_count->add_option("--out", out, "json|csv");
  sc_count->add_option("--cap", ccap, "brute-force box cap");
  sc_count->add_flag("--brute", cbrute, "use the exhaustive oracle instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_gnorm->parsed()) return cmd_gnorm(file, tol);
    if (sc_gen->parsed())
      return cmd_gen(family, count, gen_n, terms, gen_k, gen_atoms, seed,
                     mode_name);
    if (sc_verify->parsed()) return cmd_verify(suite, params);
    if (sc_bound->parsed()) return cmd_bound(bn, gamma, kappa_const, beps);
    if (sc_kappa->parsed()) return cmd_kappa(file, keps, kappa_grid_k, tol);
    if (sc_deform->parsed()) return cmd_deform(file, dk, deps, tol);
    if (sc_count->parsed()) return cmd_count(cp, cq, csweep, out, ccap, cbrute);
  } catch (const fc::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::ChiNonZero& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::OutOfCube& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::BadEps& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::BadParams& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::SizeOverflow& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fc::SolverStall& e) {
    std::cerr << "solver stall: " << e.what() << " (primal " << e.best_primal
              << ", dual " << e.best_dual << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
