#pragma once

#include <string>

#include "json.hpp"

#include "xxz/cft.hpp"
#include "xxz/model.hpp"
#include "xxz/scaling.hpp"
#include "xxz/solver.hpp"
#include "xxz/states.hpp"

namespace xxz {

// Anisotropy parser. Accepts plain radians ("1.7279"), decimal multiples of
// pi ("0.55pi"), and exact rationals ("3/7pi", "pi/5", "pi"), so the
// gamma = pi/n points are representable without rounding the ratio twice.
double parse_gamma(const std::string& text);

// 17 significant digits, enough to reproduce any double exactly.
std::string format_double(double value);

void to_json(nlohmann::json& j, const ModelParams& p);
void from_json(const nlohmann::json& j, ModelParams& p);

void to_json(nlohmann::json& j, const BetheNumberSet& s);
void from_json(const nlohmann::json& j, BetheNumberSet& s);

void to_json(nlohmann::json& j, const BetheState& s);
void from_json(const nlohmann::json& j, BetheState& s);

void to_json(nlohmann::json& j, const Prediction& p);
void from_json(const nlohmann::json& j, Prediction& p);

void to_json(nlohmann::json& j, const ScanRow& r);
void from_json(const nlohmann::json& j, ScanRow& r);

void to_json(nlohmann::json& j, const ScanResult& r);
void from_json(const nlohmann::json& j, ScanResult& r);

// CSV table of a scan, header "L,e_L,e_pred,a_L,P_L,P_pred".
std::string scan_csv(const ScanResult& result);

}  // namespace xxz
