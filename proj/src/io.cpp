#include "xxz/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace xxz {

namespace {

double parse_number(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + s + "'");
  }
  if (pos != s.size()) {
    throw std::invalid_argument(std::string("trailing characters in ") + what + ": '" + s + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  const auto b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return {};
  return s.substr(a, b - a + 1);
}

// JSON has no NaN; predict-only scan rows leave measured columns as null.
double number_or_nan(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  return v.is_null() ? std::nan("") : v.get<double>();
}

}  // namespace

double parse_gamma(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty gamma");
  if (t == "pi") return M_PI;
  if (t.rfind("pi/", 0) == 0) {
    const double q = parse_number(t.substr(3), "gamma denominator");
    if (q == 0.0) throw std::invalid_argument("gamma denominator is zero");
    return M_PI / q;
  }
  if (t.size() > 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    const std::string head = t.substr(0, t.size() - 2);
    const auto slash = head.find('/');
    if (slash != std::string::npos) {
      const double p = parse_number(head.substr(0, slash), "gamma numerator");
      const double q = parse_number(head.substr(slash + 1), "gamma denominator");
      if (q == 0.0) throw std::invalid_argument("gamma denominator is zero");
      return M_PI * p / q;
    }
    return M_PI * parse_number(head, "gamma multiplier");
  }
  return parse_number(t, "gamma");
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void to_json(nlohmann::json& j, const ModelParams& p) {
  j = nlohmann::json{{"gamma", p.gamma}, {"phi", p.phi}, {"L", p.L}, {"M", p.M}};
}

void from_json(const nlohmann::json& j, ModelParams& p) {
  j.at("gamma").get_to(p.gamma);
  j.at("phi").get_to(p.phi);
  j.at("L").get_to(p.L);
  j.at("M").get_to(p.M);
}

void to_json(nlohmann::json& j, const BetheNumberSet& s) {
  j = nlohmann::json{{"doubled", s.doubled}};
}

void from_json(const nlohmann::json& j, BetheNumberSet& s) {
  j.at("doubled").get_to(s.doubled);
}

void to_json(nlohmann::json& j, const BetheState& s) {
  j = nlohmann::json{{"params", s.params},
                     {"numbers", s.numbers},
                     {"roots", s.roots},
                     {"phi_eff", s.phi_eff},
                     {"residual_norm", s.residual_norm},
                     {"iterations", s.iterations}};
}

void from_json(const nlohmann::json& j, BetheState& s) {
  j.at("params").get_to(s.params);
  j.at("numbers").get_to(s.numbers);
  j.at("roots").get_to(s.roots);
  j.at("phi_eff").get_to(s.phi_eff);
  j.at("residual_norm").get_to(s.residual_norm);
  j.at("iterations").get_to(s.iterations);
}

void to_json(nlohmann::json& j, const Prediction& p) {
  j = nlohmann::json{{"e_inf", p.e_inf},
                     {"z0", p.z0},
                     {"h", p.weights.h},
                     {"h_bar", p.weights.h_bar},
                     {"central_charge", p.central_charge},
                     {"energy_coefficient", p.energy_coefficient},
                     {"energy", p.energy},
                     {"momentum", p.momentum},
                     {"amplitude_plus", p.amplitudes.a_plus},
                     {"amplitude_minus", p.amplitudes.a_minus},
                     {"double_zero", p.amplitudes.double_zero},
                     {"amplitudes_defined", p.amplitudes.defined}};
}

void from_json(const nlohmann::json& j, Prediction& p) {
  j.at("e_inf").get_to(p.e_inf);
  j.at("z0").get_to(p.z0);
  j.at("h").get_to(p.weights.h);
  j.at("h_bar").get_to(p.weights.h_bar);
  j.at("central_charge").get_to(p.central_charge);
  j.at("energy_coefficient").get_to(p.energy_coefficient);
  j.at("energy").get_to(p.energy);
  j.at("momentum").get_to(p.momentum);
  j.at("amplitude_plus").get_to(p.amplitudes.a_plus);
  j.at("amplitude_minus").get_to(p.amplitudes.a_minus);
  j.at("double_zero").get_to(p.amplitudes.double_zero);
  j.at("amplitudes_defined").get_to(p.amplitudes.defined);
}

void to_json(nlohmann::json& j, const ScanRow& r) {
  j = nlohmann::json{{"L", r.L},         {"e_L", r.e_L},
                     {"e_pred", r.e_pred}, {"a_L", r.a_L},
                     {"P_L", r.P_L},     {"P_pred", r.P_pred},
                     {"residual", r.residual}, {"iterations", r.iterations}};
}

void from_json(const nlohmann::json& j, ScanRow& r) {
  j.at("L").get_to(r.L);
  r.e_L = number_or_nan(j, "e_L");
  j.at("e_pred").get_to(r.e_pred);
  r.a_L = number_or_nan(j, "a_L");
  r.P_L = number_or_nan(j, "P_L");
  j.at("P_pred").get_to(r.P_pred);
  j.at("residual").get_to(r.residual);
  j.at("iterations").get_to(r.iterations);
}

void to_json(nlohmann::json& j, const ScanResult& r) {
  j = nlohmann::json{
      {"gamma", r.gamma}, {"phi", r.phi}, {"e_inf", r.e_inf}, {"rows", r.rows}};
}

void from_json(const nlohmann::json& j, ScanResult& r) {
  j.at("gamma").get_to(r.gamma);
  j.at("phi").get_to(r.phi);
  j.at("e_inf").get_to(r.e_inf);
  j.at("rows").get_to(r.rows);
}

std::string scan_csv(const ScanResult& result) {
  std::string out = "L,e_L,e_pred,a_L,P_L,P_pred\n";
  for (const ScanRow& r : result.rows) {
    out += std::to_string(r.L);
    out += ',';
    out += format_double(r.e_L);
    out += ',';
    out += format_double(r.e_pred);
    out += ',';
    out += format_double(r.a_L);
    out += ',';
    out += format_double(r.P_L);
    out += ',';
    out += format_double(r.P_pred);
    out += '\n';
  }
  return out;
}

}  // namespace xxz
