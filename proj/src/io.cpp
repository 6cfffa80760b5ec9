#include "semigen/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semigen/errors.hpp"

namespace semigen {

using nlohmann::json;

std::string series_to_json(const PowerSeries& f) {
  json coeffs = json::array();
  for (const cdouble& c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return json{{"order", f.order()}, {"coeffs", std::move(coeffs)}}.dump();
}

static PowerSeries series_from_parsed(const json& j) {
  if (!j.contains("order") || !j.contains("coeffs"))
    throw BadParams("series JSON needs \"order\" and \"coeffs\"");
  const auto order = j.at("order").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != order + 1)
    throw BadParams("series JSON needs exactly order+1 coefficient pairs");
  std::vector<cdouble> c;
  c.reserve(coeffs.size());
  for (const auto& pair : coeffs) {
    if (!pair.is_array() || pair.size() != 2)
      throw BadParams("each coefficient must be a [re, im] pair");
    const double re = pair[0].get<double>(), im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw BadParams("coefficients must be finite");
    c.emplace_back(re, im);
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_from_json(const std::string& text) {
  try {
    return series_from_parsed(json::parse(text));
  } catch (const json::exception& e) {
    throw BadParams(std::string("series JSON: ") + e.what());
  }
}

PowerSeries series_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open series file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return series_from_json(ss.str());
}

std::string report_to_json(const MembershipReport& rep) {
  return json{{"member", rep.member},
              {"witness_min", rep.witness_min},
              {"witness_point", {rep.witness_point.real(), rep.witness_point.imag()}},
              {"functional", rep.functional}}
      .dump();
}

MembershipReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    MembershipReport rep;
    rep.member = j.at("member").get<bool>();
    rep.witness_min = j.at("witness_min").get<double>();
    rep.witness_point = {j.at("witness_point")[0].get<double>(),
                         j.at("witness_point")[1].get<double>()};
    rep.functional = j.at("functional").get<std::string>();
    return rep;
  } catch (const json::exception& e) {
    throw BadParams(std::string("report JSON: ") + e.what());
  }
}

const char* branch_name(RadiusBranch b) {
  switch (b) {
    case RadiusBranch::Case1: return "Case1";
    case RadiusBranch::Case2: return "Case2";
    case RadiusBranch::Case3Degenerate: return "Case3Degenerate";
  }
  return "?";
}

static RadiusBranch branch_from_name(const std::string& name) {
  if (name == "Case1") return RadiusBranch::Case1;
  if (name == "Case2") return RadiusBranch::Case2;
  if (name == "Case3Degenerate") return RadiusBranch::Case3Degenerate;
  throw BadParams("unknown branch name: " + name);
}

std::string radius_to_json(const RadiusResult& res) {
  json j{{"r", res.r},        {"branch", branch_name(res.branch)},
         {"k", res.k},        {"m", res.m},
         {"k0", res.k0},      {"k1", res.k1},
         {"clamped", res.clamped}};
  if (res.beta_star)
    j["beta_star"] = *res.beta_star;
  else
    j["beta_star"] = nullptr;
  return j.dump();
}

RadiusResult radius_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RadiusResult res;
    res.r = j.at("r").get<double>();
    res.branch = branch_from_name(j.at("branch").get<std::string>());
    res.k = j.at("k").get<double>();
    res.m = j.at("m").get<double>();
    res.k0 = j.at("k0").get<double>();
    res.k1 = j.at("k1").get<double>();
    res.clamped = j.at("clamped").get<bool>();
    if (!j.at("beta_star").is_null()) res.beta_star = j.at("beta_star").get<double>();
    return res;
  } catch (const json::exception& e) {
    throw BadParams(std::string("radius JSON: ") + e.what());
  }
}

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string trajectory_csv(const Trajectory& traj, double rate) {
  std::string out = "t,re_u,im_u,abs_u,bound\n";
  const double mod0 = std::abs(traj.z0);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out += csv_number(traj.times[i]) + ',' + csv_number(traj.points[i].real()) + ',' +
           csv_number(traj.points[i].imag()) + ',' + csv_number(std::abs(traj.points[i])) +
           ',' + csv_number(mod0 * std::exp(-rate * traj.times[i])) + '\n';
  }
  return out;
}

}  // namespace semigen
