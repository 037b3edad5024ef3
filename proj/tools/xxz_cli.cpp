// Command-line front end: solve single configurations, scan system sizes,
// cross-check against exact diagonalization, print character tables, and run
// the self-verification checks. Emits JSON documents and CSV tables.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xxz/characters.hpp"
#include "xxz/cft.hpp"
#include "xxz/ed.hpp"
#include "xxz/io.hpp"
#include "xxz/kernel.hpp"
#include "xxz/observables.hpp"
#include "xxz/scaling.hpp"
#include "xxz/solver.hpp"
#include "xxz/states.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct StateOpts {
  std::string gamma_text;
  double phi = 0.0;
  int L = 0;
  int M = -1;  // -1: derive from the state spec
  bool ground = false;
  std::vector<std::int64_t> numbers;  // doubled
  int n_plus = -1;
  int n_minus = -1;
  int level_plus = 0;
  int level_minus = 0;
};

// Fills options the command line left untouched from a JSON --config file.
struct ConfigBinder {
  CLI::App* cmd = nullptr;
  std::map<std::string, std::function<void(const nlohmann::json&)>> setters;

  template <typename T>
  void bind(const std::string& key, T& target) {
    setters[key] = [&target](const nlohmann::json& v) { target = v.get<T>(); };
  }

  void bind_gamma(std::string& target) {
    setters["gamma"] = [&target](const nlohmann::json& v) {
      target = v.is_string() ? v.get<std::string>() : xxz::format_double(v.get<double>());
    };
  }

  void apply(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json cfg = nlohmann::json::parse(in);
    if (!cfg.is_object()) throw std::invalid_argument("config root must be an object");
    for (const auto& [key, value] : cfg.items()) {
      const auto it = setters.find(key);
      if (it == setters.end()) throw std::invalid_argument("unknown config key: " + key);
      const auto* opt = cmd->get_option_no_throw("--" + key);
      if (opt != nullptr && opt->count() > 0) continue;  // flags win over config
      it->second(value);
    }
  }
};

void add_state_options(CLI::App* cmd, StateOpts& o, ConfigBinder& binder, bool with_size) {
  cmd->add_option("--gamma", o.gamma_text, "anisotropy (radians, '0.55pi', '3/7pi', 'pi/5')");
  cmd->add_option("--phi", o.phi, "boundary twist");
  if (with_size) cmd->add_option("--L", o.L, "number of sites");
  cmd->add_option("--M", o.M, "number of roots (default: from state spec)");
  cmd->add_flag("--ground", o.ground, "packed ground-state numbers");
  cmd->add_option("--numbers", o.numbers, "explicit doubled Bethe numbers, comma separated")
      ->delimiter(',');
  cmd->add_option("--n-plus", o.n_plus, "positive-side vacancies of a template state");
  cmd->add_option("--n-minus", o.n_minus, "negative-side vacancies of a template state");
  cmd->add_option("--level-plus", o.level_plus, "outward steps of the outermost positive number");
  cmd->add_option("--level-minus", o.level_minus, "outward steps of the outermost negative number");

  binder.cmd = cmd;
  binder.bind_gamma(o.gamma_text);
  binder.bind("phi", o.phi);
  if (with_size) binder.bind("L", o.L);
  binder.bind("M", o.M);
  binder.bind("ground", o.ground);
  binder.bind("numbers", o.numbers);
  binder.bind("n-plus", o.n_plus);
  binder.bind("n-minus", o.n_minus);
  binder.bind("level-plus", o.level_plus);
  binder.bind("level-minus", o.level_minus);
}

enum class StateKind { Ground, Explicit, Template };

StateKind state_kind(const StateOpts& o) {
  const bool has_template = o.n_plus >= 0 || o.n_minus >= 0;
  const int chosen = (o.ground ? 1 : 0) + (o.numbers.empty() ? 0 : 1) + (has_template ? 1 : 0);
  if (chosen > 1) throw std::invalid_argument("choose one of --ground, --numbers, --n-plus/--n-minus");
  if (!o.numbers.empty()) return StateKind::Explicit;
  if (has_template) return StateKind::Template;
  return StateKind::Ground;
}

xxz::BetheNumberSet numbers_for_size(const StateOpts& o, StateKind kind, int L) {
  switch (kind) {
    case StateKind::Explicit:
      return xxz::BetheNumberSet::from_doubled(o.numbers);
    case StateKind::Template:
      return xxz::template_numbers(L, std::max(o.n_plus, 0), std::max(o.n_minus, 0),
                                   o.level_plus, o.level_minus);
    case StateKind::Ground:
    default:
      return xxz::ground_state_numbers(L, o.M > 0 ? o.M : L / 2);
  }
}

struct ResolvedState {
  xxz::ModelParams params;
  xxz::BetheNumberSet numbers;
};

ResolvedState resolve_state(const StateOpts& o) {
  if (o.gamma_text.empty()) throw std::invalid_argument("missing --gamma");
  if (o.L <= 0) throw std::invalid_argument("missing --L");
  const StateKind kind = state_kind(o);
  xxz::BetheNumberSet numbers = numbers_for_size(o, kind, o.L);
  if (o.M > 0 && o.M != numbers.size() && kind != StateKind::Ground) {
    throw std::invalid_argument("--M contradicts the state spec");
  }
  xxz::ModelParams params{xxz::parse_gamma(o.gamma_text), o.phi, o.L, numbers.size()};
  params.validate();
  return ResolvedState{params, std::move(numbers)};
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
  out << text;
}

nlohmann::json solve_document(const ResolvedState& rs) {
  const xxz::BetheState state = xxz::solve(rs.params, rs.numbers);
  const xxz::Prediction pred = xxz::predict(rs.params, rs.numbers);
  nlohmann::json doc = state;
  doc["observables"] = {{"e_L", xxz::energy(state)}, {"P_L", xxz::momentum(state)}};
  doc["prediction"] = pred;
  doc["deltas"] = {{"e", xxz::energy(state) - pred.energy},
                   {"P", xxz::momentum(state) - pred.momentum}};
  return doc;
}

int run_solve(const StateOpts& o, const std::string& output_path) {
  const ResolvedState rs = resolve_state(o);
  emit(solve_document(rs).dump(2) + "\n", output_path);
  return 0;
}

int run_predict(const StateOpts& o, const std::string& output_path) {
  const ResolvedState rs = resolve_state(o);
  nlohmann::json doc = xxz::predict(rs.params, rs.numbers);
  doc["params"] = rs.params;
  doc["numbers"] = rs.numbers;
  emit(doc.dump(2) + "\n", output_path);
  return 0;
}

int run_scan(const StateOpts& o, const std::vector<int>& sizes, bool predict_only,
             const std::string& output_path, const std::string& csv_path,
             const std::string& plot_path) {
  if (o.gamma_text.empty()) throw std::invalid_argument("missing --gamma");
  if (sizes.empty()) throw std::invalid_argument("missing --sizes");
  const StateKind kind = state_kind(o);
  if (kind == StateKind::Explicit) {
    throw std::invalid_argument("scan needs a size-generic state spec (--ground or a template)");
  }
  for (int L : sizes) {
    if (L % 4 != 0) {
      throw std::invalid_argument("scan size L=" + std::to_string(L) +
                                  " is not a multiple of 4");
    }
  }
  const double gamma = xxz::parse_gamma(o.gamma_text);

  xxz::ScanResult result;
  if (predict_only) {
    result.gamma = gamma;
    result.phi = o.phi;
    result.e_inf = xxz::e_infinity(gamma);
    for (int L : sizes) {
      const xxz::BetheNumberSet numbers = numbers_for_size(o, kind, L);
      xxz::ModelParams params{gamma, o.phi, L, numbers.size()};
      const xxz::Prediction pred = xxz::predict(params, numbers);
      xxz::ScanRow row;
      row.L = L;
      row.e_L = row.a_L = row.P_L = std::nan("");
      row.e_pred = pred.energy;
      row.P_pred = pred.momentum;
      result.rows.push_back(row);
    }
  } else {
    result = xxz::scan(gamma, o.phi, sizes,
                       [&](int L) { return numbers_for_size(o, kind, L); });
  }

  nlohmann::json doc = result;
  if (!predict_only && result.rows.size() >= 3) {
    const xxz::Extrapolation fit = xxz::extract_amplitude(result);
    doc["fit"] = {{"x_eff", fit.value}, {"rate", fit.rate}, {"error", fit.error}};
  }
  emit(doc.dump(2) + "\n", output_path);
  if (!csv_path.empty()) emit(xxz::scan_csv(result), csv_path);
  if (!plot_path.empty()) {
    std::string plot;
    for (const auto& row : result.rows) {
      plot += std::to_string(row.L) + " " + xxz::format_double(row.a_L) + "\n";
    }
    emit(plot, plot_path);
  }
  return 0;
}

int run_ed(const StateOpts& o, bool match, const std::string& output_path) {
  if (o.gamma_text.empty()) throw std::invalid_argument("missing --gamma");
  if (o.L <= 0) throw std::invalid_argument("missing --L");
  const int M = o.M > 0 ? o.M : o.L / 2;
  xxz::ModelParams params{xxz::parse_gamma(o.gamma_text), o.phi, o.L, M};
  params.validate();
  const std::vector<double> spectrum = xxz::sector_spectrum(params);

  nlohmann::json doc;
  doc["params"] = params;
  doc["dimension"] = spectrum.size();
  doc["eigenvalues"] = spectrum;
  if (match) {
    StateOpts so = o;
    so.M = M;
    const ResolvedState rs = resolve_state(so);
    if (rs.numbers.size() != M) throw std::invalid_argument("match state has wrong M");
    const xxz::BetheState state = xxz::solve(rs.params, rs.numbers);
    const double total = params.L * xxz::energy(state);
    doc["match"] = {{"numbers", rs.numbers},
                    {"bethe_energy", total},
                    {"gap_nearest", xxz::nearest_gap(spectrum, total)},
                    {"gap_lowest", std::abs(spectrum.front() - total)}};
  }
  emit(doc.dump(2) + "\n", output_path);
  return 0;
}

int run_char(int m, int kmax, const StateOpts& o, int check_L, const std::string& output_path) {
  if (m < 0) {
    if (o.n_plus < 0 || o.n_minus < 0 || o.gamma_text.empty()) {
      throw std::invalid_argument("need --m, or --n-plus/--n-minus with --gamma");
    }
    m = xxz::movable_count(o.n_plus, o.n_minus, xxz::parse_gamma(o.gamma_text));
  }
  const auto counts = xxz::partition_counts(m, kmax);
  std::string table = "k,p_m\n";
  for (int k = 0; k <= kmax; ++k) {
    table += std::to_string(k) + "," + std::to_string(counts[k]) + "\n";
  }
  emit(table, output_path);

  if (check_L > 0) {
    const int mismatch = xxz::verify_degeneracy(check_L, std::max(o.n_plus, 0),
                                                std::max(o.n_minus, 0),
                                                xxz::parse_gamma(o.gamma_text), kmax);
    if (mismatch >= 0) {
      std::cerr << "degeneracy mismatch at level " << mismatch << "\n";
      return 1;
    }
  }
  return 0;
}

int run_verify(const StateOpts& o, bool gaussian, bool degeneracy, bool all, int L) {
  if (!gaussian && !degeneracy) all = true;
  if (all) gaussian = degeneracy = true;
  const double gamma = o.gamma_text.empty() ? 0.55 * M_PI : xxz::parse_gamma(o.gamma_text);
  bool ok = true;

  if (gaussian) {
    xxz::ModelParams params{gamma, o.phi, L, L / 2};
    const xxz::BetheNumberSet numbers = xxz::ground_state_numbers(L, L / 2);
    const xxz::BetheState state = xxz::solve(params, numbers);
    const auto gauss = [](double x) { return std::exp(-0.5 * x * x); };
    const double measured = xxz::functional_deviation(state, gauss);
    const xxz::Prediction pred = xxz::predict(params, numbers);
    const double v_f = xxz::KernelConstants::for_gamma(gamma).v_f;
    const double hat = std::sqrt(2.0 * M_PI) * std::exp(0.5 * v_f * v_f);
    const double predicted = (pred.amplitudes.a_plus + pred.amplitudes.a_minus) * hat;
    const double ratio = measured / predicted;
    const bool pass = pred.amplitudes.defined && ratio > 0.95 && ratio < 1.05;
    std::cout << "gaussian deviation: L=" << L << " ratio=" << xxz::format_double(ratio)
              << (pass ? " PASS" : " FAIL") << "\n";
    ok = ok && pass;
  }

  if (degeneracy) {
    const int mismatch = xxz::verify_degeneracy(40, 1, 1, M_PI / 5.0, 5);
    const bool pass = mismatch < 0;
    std::cout << "excitation degeneracy: levels 0..5"
              << (pass ? " PASS" : " FAIL at level " + std::to_string(mismatch)) << "\n";
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bethe-root laboratory for the twisted XXZ chain"};
  app.require_subcommand(1);

  StateOpts solve_opts, predict_opts, scan_opts, ed_opts, char_opts, verify_opts;
  ConfigBinder solve_cfg, predict_cfg, scan_cfg, ed_cfg, char_cfg, verify_cfg;
  std::string solve_config, predict_config, scan_config, ed_config, char_config;
  std::string solve_out, predict_out, scan_out, ed_out, char_out;

  auto* solve_cmd = app.add_subcommand("solve", "solve one root configuration");
  add_state_options(solve_cmd, solve_opts, solve_cfg, true);
  solve_cmd->add_option("--config", solve_config, "JSON config file");
  solve_cmd->add_option("--output", solve_out, "write the JSON document here");

  auto* predict_cmd = app.add_subcommand("predict", "finite-size predictions only");
  add_state_options(predict_cmd, predict_opts, predict_cfg, true);
  predict_cmd->add_option("--config", predict_config, "JSON config file");
  predict_cmd->add_option("--output", predict_out, "write the JSON document here");

  auto* scan_cmd = app.add_subcommand("scan", "sweep system sizes");
  std::vector<int> scan_sizes;
  bool scan_predict_only = false;
  std::string scan_csv_path, scan_plot_path;
  add_state_options(scan_cmd, scan_opts, scan_cfg, false);
  scan_cmd->add_option("--sizes", scan_sizes, "system sizes, comma separated")->delimiter(',');
  scan_cmd->add_flag("--predict-only", scan_predict_only, "skip solving, emit predictions");
  scan_cmd->add_option("--config", scan_config, "JSON config file");
  scan_cmd->add_option("--output", scan_out, "write the JSON document here");
  scan_cmd->add_option("--csv", scan_csv_path, "write the CSV table here");
  scan_cmd->add_option("--plot-data", scan_plot_path, "write two-column L vs a(L) data here");
  scan_cfg.bind("sizes", scan_sizes);
  scan_cfg.bind("predict-only", scan_predict_only);

  auto* ed_cmd = app.add_subcommand("ed", "dense sector diagonalization");
  bool ed_match = false;
  add_state_options(ed_cmd, ed_opts, ed_cfg, true);
  ed_cmd->add_flag("--match", ed_match, "solve the configured state and report the gap");
  ed_cmd->add_option("--config", ed_config, "JSON config file");
  ed_cmd->add_option("--output", ed_out, "write the JSON document here");

  auto* char_cmd = app.add_subcommand("char", "restricted partition table");
  int char_m = -1, char_kmax = 5, char_check_L = 0;
  add_state_options(char_cmd, char_opts, char_cfg, false);
  char_cmd->add_option("--m", char_m, "largest allowed part");
  char_cmd->add_option("--kmax", char_kmax, "largest level");
  char_cmd->add_option("--check-L", char_check_L, "verify against enumeration at this L");
  char_cmd->add_option("--config", char_config, "JSON config file");
  char_cmd->add_option("--output", char_out, "write the CSV table here");
  char_cfg.bind("m", char_m);
  char_cfg.bind("kmax", char_kmax);
  char_cfg.bind("check-L", char_check_L);

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in consistency checks");
  bool v_gauss = false, v_degen = false, v_all = false;
  int verify_L = 1024;
  std::string verify_config;
  add_state_options(verify_cmd, verify_opts, verify_cfg, false);
  verify_cmd->add_flag("--gaussian", v_gauss, "deviation-functional check");
  verify_cmd->add_flag("--degeneracy", v_degen, "excitation-count check");
  verify_cmd->add_flag("--all", v_all, "every check");
  verify_cmd->add_option("--L", verify_L, "system size for the gaussian check");
  verify_cmd->add_option("--config", verify_config, "JSON config file");
  verify_cfg.bind("L", verify_L);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*solve_cmd) {
      if (!solve_config.empty()) solve_cfg.apply(solve_config);
      return run_solve(solve_opts, solve_out);
    }
    if (*predict_cmd) {
      if (!predict_config.empty()) predict_cfg.apply(predict_config);
      return run_predict(predict_opts, predict_out);
    }
    if (*scan_cmd) {
      if (!scan_config.empty()) scan_cfg.apply(scan_config);
      return run_scan(scan_opts, scan_sizes, scan_predict_only, scan_out, scan_csv_path,
                      scan_plot_path);
    }
    if (*ed_cmd) {
      if (!ed_config.empty()) ed_cfg.apply(ed_config);
      return run_ed(ed_opts, ed_match, ed_out);
    }
    if (*char_cmd) {
      if (!char_config.empty()) char_cfg.apply(char_config);
      return run_char(char_m, char_kmax, char_opts, char_check_L, char_out);
    }
    if (*verify_cmd) {
      if (!verify_config.empty()) verify_cfg.apply(verify_config);
      return run_verify(verify_opts, v_gauss, v_degen, v_all, verify_L);
    }
  } catch (const xxz::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
