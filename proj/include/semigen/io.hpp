#pragma once

#include <string>

#include "semigen/membership.hpp"
#include "semigen/radius.hpp"
#include "semigen/semiflow.hpp"
#include "semigen/series.hpp"

namespace semigen {

// {"order": N, "coeffs": [[re, im], ...]} with exactly N+1 pairs.
// Serialization and parsing round-trip coefficients bit-exactly.
std::string series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const std::string& text);
PowerSeries series_from_json_file(const std::string& path);

std::string report_to_json(const MembershipReport& rep);
MembershipReport report_from_json(const std::string& text);

std::string radius_to_json(const RadiusResult& res);
RadiusResult radius_from_json(const std::string& text);

const char* branch_name(RadiusBranch b);

// CSV cell with 10 significant digits; stable across runs.
std::string csv_number(double x);

// CSV line for one trajectory sample: t, Re u, Im u, |u|, |z0| e^{-rate t}.
std::string trajectory_csv(const Trajectory& traj, double rate);

}  // namespace semigen
