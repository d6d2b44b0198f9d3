// Command-line front end: NAQC reports for state files, family sweeps,
// threshold location, entanglement witnesses, MUB export and state
// sampling. All JSON/CSV numbers carry 17 significant digits.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "naqc/jsonio.hpp"
#include "naqc/scan.hpp"
#include "naqc/state_io.hpp"

namespace {

using namespace naqc;

CoherenceMeasure parse_measure(const std::string& name) {
  if (name == "l1") {
    return CoherenceMeasure::L1;
  }
  if (name == "re") {
    return CoherenceMeasure::RelativeEntropy;
  }
  throw InvalidArgument("unknown measure: " + name + " (expected l1 or re)");
}

Framework parse_framework(const std::string& name) {
  if (name == "averaged") {
    return Framework::Averaged;
  }
  if (name == "optimized") {
    return Framework::Optimized;
  }
  if (name == "perm") {
    return Framework::FixedPermutation;
  }
  throw InvalidArgument("unknown framework: " + name);
}

Permutation parse_permutation(const std::string& text) {
  Permutation perm;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      perm.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InvalidArgument("--perm expects comma-separated integers");
    }
  }
  return perm;
}

/// Load, shape-check and invariant-check a bipartite state file.
/// Malformed content maps to InvalidArgument (exit 2); a well-formed file
/// of unusable shape maps to UnsupportedDimension (exit 3).
BipartiteState load_square_prime_state(const std::string& path) {
  StateFile sf = read_state_file(path);
  if (!sf.bipartite() || sf.dims[0] != sf.dims[1]) {
    throw UnsupportedDimension("state must be bipartite with dimA = dimB");
  }
  if (!is_prime(sf.dims[0])) {
    throw UnsupportedDimension("subsystem dimension " + std::to_string(sf.dims[0]) +
                               " is not prime");
  }
  try {
    return sf.as_bipartite();
  } catch (const UnsupportedDimension&) {
    throw;
  } catch (const Error& e) {
    throw InvalidArgument(std::string("state file rejected: ") + e.what());
  }
}

int env_threads() {
  if (const char* env = std::getenv("NAQC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) {
      return n;
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit_report_json(const NAQCReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("measure").value(std::string(measure_name(report.measure)));
  w.key("framework").value(std::string(framework_name(report.framework)));
  w.key("value").value(report.value);
  w.key("bound").value(report.bound);
  w.key("achieved").value(report.achieved);
  if (report.best_permutation) {
    w.key("best_permutation").value_array(*report.best_permutation);
  }
  w.end_object();
  std::cout << w.str() << '\n';
}

void emit_witness_json(const WitnessReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("e_t").value(report.e_t);
  w.key("e_m").value(report.e_m);
  w.key("e_f").value(report.e_f);
  w.key("log_inv_c").value(report.log_inv_c);
  w.key("p_r").value(report.p_r);
  w.key("p_s").value(report.p_s);
  w.key("h_a_given_b").value(report.h_a_given_b);
  w.key("verdict_t").value(report.verdict_t);
  w.key("verdict_m").value(report.verdict_m);
  w.key("verdict_f").value(report.verdict_f);
  if (report.naqc_verdict) {
    w.key("naqc_measure").value(std::string(measure_name(*report.naqc_measure)));
    w.key("naqc_value").value(*report.naqc_value);
    w.key("naqc_bound").value(*report.naqc_bound);
    w.key("naqc_verdict").value(*report.naqc_verdict);
  }
  w.end_object();
  std::cout << w.str() << '\n';
}

int cmd_mub(int d, bool validate, double tol) {
  const MUBSet set = generate_mubs(d);
  if (validate) {
    const MubValidation report = validate_mubs(set, tol);
    JsonWriter w;
    w.begin_object();
    w.key("d").value(d);
    w.key("max_orthonormality_error").value(report.max_orthonormality_error);
    w.key("max_unbiasedness_error").value(report.max_unbiasedness_error);
    w.key("tol").value(report.tol);
    w.key("pass").value(report.pass);
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
  }
  JsonWriter w;
  w.begin_object();
  w.key("d").value(d);
  w.key("bases").begin_array();
  for (const Basis& basis : set.bases) {
    w.begin_array();
    for (const ComplexVector& v : basis.vectors) {
      w.begin_array();
      for (Eigen::Index n = 0; n < v.size(); ++n) {
        w.begin_array();
        w.value(v(n).real());
        w.value(v(n).imag());
        w.end_array();
      }
      w.end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  std::cout << w.str() << '\n';
  return 0;
}

int cmd_compute(const std::string& state_path, const std::string& measure_name_arg,
                const std::string& framework_name_arg, const std::string& perm_text,
                bool derangements_only) {
  const BipartiteState state = load_square_prime_state(state_path);
  const CoherenceMeasure measure = parse_measure(measure_name_arg);
  const Framework framework = parse_framework(framework_name_arg);
  const MUBSet mubs = generate_mubs(state.dim_a());
  NAQCReport report;
  switch (framework) {
    case Framework::Averaged:
      report = naqc_averaged(state, mubs, measure);
      break;
    case Framework::Optimized:
      report = naqc_optimized(state, mubs, measure, derangements_only);
      break;
    case Framework::FixedPermutation: {
      if (perm_text.empty()) {
        throw InvalidArgument("--framework perm requires --perm");
      }
      report = naqc_fixed_permutation(state, mubs, parse_permutation(perm_text), measure);
      break;
    }
  }
  emit_report_json(report);
  return 0;
}

int cmd_sweep(const std::string& family_arg, int d, const std::string& measure_arg, int steps,
              double x_min, double x_max, const std::string& out_path) {
  const StateFamily family = parse_family(family_arg);
  const CoherenceMeasure measure = parse_measure(measure_arg);
  const std::vector<SweepRow> rows =
      sweep_family(family, d, measure, steps, x_min, x_max, env_threads());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw InvalidArgument("cannot open output file: " + out_path);
  }
  out << "x,c_na,c_na_tilde,bound,e_t,e_m,e_f,log_inv_c\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.x) << ',' << format_double(row.c_na) << ','
        << format_double(row.c_na_tilde) << ',' << format_double(row.bound) << ','
        << format_double(row.e_t) << ',' << format_double(row.e_m) << ','
        << format_double(row.e_f) << ',' << format_double(row.log_inv_c) << '\n';
  }
  return 0;
}

int cmd_threshold(const std::string& family_arg, int d, const std::string& measure_arg,
                  const std::string& framework_arg, const std::string& estimate_arg, double tol) {
  if (tol < 1e-8) {
    throw InvalidArgument("--tol must be >= 1e-8");
  }
  ThresholdQuery query;
  query.family = parse_family(family_arg);
  query.d = d;
  query.x_tol = tol;
  const bool eur = !estimate_arg.empty();
  if (eur) {
    if (estimate_arg == "e_t") {
      query.curve = ThresholdCurve::EstimateT;
    } else if (estimate_arg == "e_m") {
      query.curve = ThresholdCurve::EstimateM;
    } else if (estimate_arg == "e_f") {
      query.curve = ThresholdCurve::EstimateF;
    } else {
      throw InvalidArgument("unknown estimate: " + estimate_arg);
    }
  } else {
    query.curve = ThresholdCurve::NaqcValue;
    query.measure = parse_measure(measure_arg);
    query.framework = parse_framework(framework_arg);
    if (query.framework == Framework::FixedPermutation) {
      throw InvalidArgument("threshold supports frameworks averaged and optimized");
    }
  }
  const ThresholdResult result = find_thresholds(query);
  JsonWriter w;
  w.begin_object();
  w.key("family").value(std::string(family_name(query.family)));
  w.key("d").value(query.d);
  if (eur) {
    w.key("criterion").value(std::string("eur"));
    w.key("estimate").value(estimate_arg);
  } else {
    w.key("criterion").value(std::string("naqc"));
    w.key("measure").value(std::string(measure_name(query.measure)));
    w.key("framework").value(std::string(framework_name(query.framework)));
  }
  w.key("tolerance").value(tol);
  w.key("crossings").value_array(result.crossings);
  w.end_object();
  std::cout << w.str() << '\n';
  return 0;
}

int cmd_witness(const std::string& state_path, int r_basis, int s_basis,
                const std::string& naqc_measure_arg) {
  const BipartiteState state = load_square_prime_state(state_path);
  const MUBSet mubs = generate_mubs(state.dim_a());
  WitnessReport report = eur_witness(state, mubs, r_basis, s_basis);
  if (!naqc_measure_arg.empty()) {
    const CoherenceMeasure measure = parse_measure(naqc_measure_arg);
    const NAQCReport naqc = naqc_optimized(state, mubs, measure);
    report.naqc_measure = measure;
    report.naqc_value = naqc.value;
    report.naqc_bound = naqc.bound;
    report.naqc_verdict = naqc.achieved;
  }
  emit_witness_json(report);
  return 0;
}

int cmd_random(const std::string& kind, const std::string& dims_text, int terms,
               std::uint64_t seed, const std::string& out_path) {
  std::vector<int> dims;
  std::stringstream ss(dims_text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      dims.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InvalidArgument("--dims expects comma-separated integers");
    }
  }
  if (dims.empty() || dims.size() > 2) {
    throw InvalidArgument("--dims expects one or two entries");
  }
  StateFile sf;
  if (kind == "density") {
    if (dims.size() == 1) {
      sf = to_state_file(random_density(dims[0], seed));
    } else {
      const DensityMatrix rho = random_density(dims[0] * dims[1], seed);
      sf = StateFile{{dims[0], dims[1]}, rho.mat()};
    }
  } else if (kind == "separable") {
    if (dims.size() != 2) {
      throw InvalidArgument("--kind separable requires two dims");
    }
    sf = to_state_file(random_separable(dims[0], dims[1], terms, seed).state);
  } else {
    throw InvalidArgument("unknown kind: " + kind + " (expected density or separable)");
  }
  write_state_file(out_path, sf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "naqc: nonlocal-advantage-of-quantum-coherence criteria, bounds and "
      "entanglement witnesses for d x d states (prime d). Basis and "
      "permutation indices are 0-based; basis 0 is the computational basis."};
  app.require_subcommand(1);

  auto* mub_cmd = app.add_subcommand("mub", "Print the d+1 mutually unbiased bases as JSON");
  int mub_d = 2;
  bool mub_validate = false;
  double mub_tol = 1e-10;
  mub_cmd->add_option("--d", mub_d, "Dimension (prime)")->required();
  mub_cmd->add_flag("--validate", mub_validate, "Print a validation report instead of the bases");
  mub_cmd->add_option("--tol", mub_tol, "Validation tolerance");

  auto* compute_cmd = app.add_subcommand("compute", "NAQC report for a state file");
  std::string compute_state, compute_measure, compute_framework = "optimized", compute_perm;
  bool compute_derangements = false;
  compute_cmd->add_option("--state", compute_state, "State file (JSON)")->required();
  compute_cmd->add_option("--measure", compute_measure, "l1 or re")->required();
  compute_cmd->add_option("--framework", compute_framework, "averaged, optimized or perm");
  compute_cmd->add_option("--perm", compute_perm, "Comma-separated basis permutation (0-based)");
  compute_cmd->add_flag("--derangements-only", compute_derangements,
                        "Restrict the optimized search to permutations without fixed points");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep over a state family");
  std::string sweep_family_arg, sweep_measure, sweep_out;
  int sweep_d = 2;
  int sweep_steps = 101;
  double sweep_x_min = 0.0;
  double sweep_x_max = 1.0;
  sweep_cmd->add_option("--family", sweep_family_arg, "isotropic or rho1")->required();
  sweep_cmd->add_option("--d", sweep_d, "Dimension (prime)")->required();
  sweep_cmd->add_option("--measure", sweep_measure, "l1 or re")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "Grid points (>= 2)");
  sweep_cmd->add_option("--x-min", sweep_x_min, "Lower end of the x grid");
  sweep_cmd->add_option("--x-max", sweep_x_max, "Upper end of the x grid");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

  auto* threshold_cmd =
      app.add_subcommand("threshold", "Locate criterion crossings by scan + bisection");
  std::string th_family, th_measure = "l1", th_framework = "optimized", th_estimate;
  int th_d = 2;
  double th_tol = 1e-6;
  threshold_cmd->add_option("--family", th_family, "isotropic or rho1")->required();
  threshold_cmd->add_option("--d", th_d, "Dimension (prime)")->required();
  threshold_cmd->add_option("--measure", th_measure, "l1 or re (NAQC criterion)");
  threshold_cmd->add_option("--framework", th_framework, "averaged or optimized");
  threshold_cmd->add_option("--estimate", th_estimate,
                            "e_t, e_m or e_f (EUR criterion instead of NAQC)");
  threshold_cmd->add_option("--tol", th_tol, "Bisection tolerance on x (>= 1e-8)");

  auto* witness_cmd = app.add_subcommand("witness", "Entanglement-witness report for a state file");
  std::string witness_state, witness_naqc;
  int witness_r = 0;
  int witness_s = 1;
  witness_cmd->add_option("--state", witness_state, "State file (JSON)")->required();
  witness_cmd->add_option("--r-basis", witness_r, "First measured basis (0-based)");
  witness_cmd->add_option("--s-basis", witness_s, "Second measured basis (0-based)");
  witness_cmd->add_option("--naqc", witness_naqc, "Also run the NAQC witness with measure l1 or re");

  auto* random_cmd = app.add_subcommand("random", "Write a seeded random state file");
  std::string random_kind, random_dims, random_out;
  int random_terms = 4;
  std::uint64_t random_seed = 0;
  random_cmd->add_option("--kind", random_kind, "density or separable")->required();
  random_cmd->add_option("--dims", random_dims, "d or dA,dB")->required();
  random_cmd->add_option("--terms", random_terms, "Mixture terms for --kind separable");
  random_cmd->add_option("--seed", random_seed, "RNG seed")->required();
  random_cmd->add_option("--out", random_out, "Output state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(mub_cmd)) {
      return cmd_mub(mub_d, mub_validate, mub_tol);
    }
    if (app.got_subcommand(compute_cmd)) {
      return cmd_compute(compute_state, compute_measure, compute_framework, compute_perm,
                         compute_derangements);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return cmd_sweep(sweep_family_arg, sweep_d, sweep_measure, sweep_steps, sweep_x_min,
                       sweep_x_max, sweep_out);
    }
    if (app.got_subcommand(threshold_cmd)) {
      return cmd_threshold(th_family, th_d, th_measure, th_framework, th_estimate, th_tol);
    }
    if (app.got_subcommand(witness_cmd)) {
      return cmd_witness(witness_state, witness_r, witness_s, witness_naqc);
    }
    if (app.got_subcommand(random_cmd)) {
      return cmd_random(random_kind, random_dims, random_terms, random_seed, random_out);
    }
  } catch (const naqc::UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const naqc::NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const naqc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}
