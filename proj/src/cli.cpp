#include "semigen/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semigen/errors.hpp"
#include "semigen/functions.hpp"
#include "semigen/io.hpp"
#include "semigen/membership.hpp"
#include "semigen/radius.hpp"
#include "semigen/semiflow.hpp"
#include "semigen/series.hpp"

namespace semigen {
namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BadParams("cannot parse " + what + " value: " + s);
  }
}

// Complex literals: "1.5", "-2i", "i", "0.3+0.4i", "1-2i".
cdouble parse_complex(const std::string& s) {
  if (s.empty()) throw BadParams("empty complex literal");
  if (s.back() != 'i') return {parse_double(s, "complex"), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  if (cut == std::string::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_double(body, "imaginary part")};
  }
  const double re = parse_double(body.substr(0, cut), "real part");
  std::string im = body.substr(cut);
  if (im == "+") return {re, 1.0};
  if (im == "-") return {re, -1.0};
  return {re, parse_double(im, "imaginary part")};
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadParams("expected key=value, got: " + tok);
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

// "name" or "name:key=value,key=value" from the stable registry.
PowerSeries make_function(const std::string& spec, std::size_t order) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto kv =
      parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1));
  FunctionParams p;
  if (auto it = kv.find("beta"); it != kv.end()) p.beta = parse_double(it->second, "beta");
  if (auto it = kv.find("lambda"); it != kv.end())
    p.lambda = parse_double(it->second, "lambda");
  if (auto it = kv.find("gamma"); it != kv.end()) p.gamma = parse_complex(it->second);
  if (auto it = kv.find("x"); it != kv.end()) p.x = parse_complex(it->second);
  if (auto it = kv.find("A"); it != kv.end()) p.A = parse_double(it->second, "A");
  if (auto it = kv.find("B"); it != kv.end()) p.B = parse_double(it->second, "B");
  if (auto it = kv.find("theta"); it != kv.end())
    p.theta = parse_double(it->second, "theta");

  static const std::map<std::string, NamedFunction> registry = {
      {"halfplane", NamedFunction::HalfPlaneExtremal},
      {"starlike_non_generator", NamedFunction::StarlikeNonGenerator},
      {"koebe", NamedFunction::Koebe},
      {"ulambda", NamedFunction::ULambdaExtremal},
      {"hyper", NamedFunction::HypergeometricExtremal},
      {"bernardi", NamedFunction::BernardiKernel},
      {"log", NamedFunction::LogKernel},
      {"xlog", NamedFunction::XLogKernel},
      {"maminda", NamedFunction::MaMindaExtremal},
      {"twopoint", NamedFunction::TwoPointHerglotz},
  };
  if (name == "identity") {
    PowerSeries f(order);
    f[1] = 1.0;
    return f;
  }
  const auto it = registry.find(name);
  if (it == registry.end()) throw BadParams("unknown function name: " + name);
  return make_named(it->second, p, order);
}

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  for (const auto& [key, value] : parse_kv(s)) {
    if (key == "rings") {
      const int K = static_cast<int>(parse_double(value, "rings"));
      if (K < 1) throw BadParams("rings must be >= 1");
      g.radii.clear();
      for (int j = 1; j <= K; ++j)
        g.radii.push_back(static_cast<double>(j) / (K + 1.0));
    } else if (key == "angles") {
      g.angular_samples = static_cast<std::size_t>(parse_double(value, "angles"));
    } else {
      throw BadParams("unknown grid key: " + key);
    }
  }
  return g;
}

PhiTarget parse_target(const std::string& s, std::size_t order) {
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (name == "sg") return PhiTarget::sg();
  if (name == "parabolic") return PhiTarget::parabolic();
  if (name == "rhoexp") return PhiTarget::rho_exp();
  if (name == "janowski") {
    const auto parts = split(rest, ',');
    if (parts.size() != 2) throw BadParams("janowski target needs A,B");
    return PhiTarget::janowski(parse_double(parts[0], "A"), parse_double(parts[1], "B"));
  }
  if (name == "custom") {
    if (rest.empty()) throw BadParams("custom target needs a series file");
    PowerSeries phi = series_from_json_file(rest);
    return PhiTarget::custom(pad(phi, std::max(order, phi.order())));
  }
  throw BadParams("unknown target: " + s);
}

cdouble parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_double(parts[0], "z0"), 0.0};
  if (parts.size() == 2)
    return {parse_double(parts[0], "z0 real part"), parse_double(parts[1], "z0 imag part")};
  throw BadParams("point must be re or re,im");
}

struct SweepRange {
  double lo, hi, step;
};

SweepRange parse_sweep(const std::string& s) {
  const auto kv = parse_kv(s);
  const auto it = kv.find("beta");
  if (kv.size() != 1 || it == kv.end()) throw BadParams("sweep grammar: beta=lo:hi:step");
  const auto parts = split(it->second, ':');
  if (parts.size() != 3) throw BadParams("sweep grammar: beta=lo:hi:step");
  SweepRange r{parse_double(parts[0], "sweep lo"), parse_double(parts[1], "sweep hi"),
               parse_double(parts[2], "sweep step")};
  if (!(r.step > 0.0) || r.hi < r.lo) throw BadParams("sweep needs lo <= hi and step > 0");
  return r;
}

std::string radius_csv_rows(const PhiTarget& target, const SweepRange& sweep, int samples) {
  const double m = phi_inf_re(target, samples);
  std::string out = "beta,kappa,m,r,branch\n";
  for (int i = 0;; ++i) {
    const double beta = sweep.lo + i * sweep.step;
    if (beta > sweep.hi + 1e-12) break;
    const RadiusResult res = radius_km({kappa(std::min(beta, 1.0)), m});
    out += csv_number(beta) + ',' + csv_number(res.k) + ',' + csv_number(res.m) + ',' +
           csv_number(res.r) + ',' + branch_name(res.branch) + std::string("\n");
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParams("cannot write " + path.string());
  out << content;
}

void emit_tables(const std::string& dir, int samples) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::string kappa_csv = "beta,kappa\n";
  for (int i = 0; i <= 20; ++i) {
    const double beta = i / 20.0;
    kappa_csv += csv_number(beta) + ',' + csv_number(kappa(beta)) + '\n';
  }
  write_file(fs::path(dir) / "kappa.csv", kappa_csv);

  const SweepRange full{0.0, 1.0, 0.05};
  const std::map<std::string, PhiTarget> targets = {
      {"janowski", PhiTarget::janowski(1.0, -1.0)},
      {"sg", PhiTarget::sg()},
      {"parabolic", PhiTarget::parabolic()},
      {"rhoexp", PhiTarget::rho_exp()},
  };
  for (const auto& [name, target] : targets)
    write_file(fs::path(dir) / ("radius_" + name + ".csv"),
               radius_csv_rows(target, full, samples));

  std::string rates = "class,params,rate\n";
  rates += "janowski,A=0;B=-1," + csv_number(decay_rate_janowski(0.0, -1.0)) + '\n';
  rates += "janowski,A=-0.5;B=-1," + csv_number(decay_rate_janowski(-0.5, -1.0)) + '\n';
  const double alpha_max = 3.0 - 2.0 * std::sqrt(2.0);
  rates += "bs,alpha=" + csv_number(alpha_max) + ',' + csv_number(decay_rate_bs(alpha_max)) + '\n';
  rates += "u,lambda=0.25," + csv_number(decay_rate_u(0.25)) + '\n';
  rates += "u,lambda=" + csv_number(1.0 / 3.0) + ',' + csv_number(decay_rate_u(1.0 / 3.0)) + '\n';
  write_file(fs::path(dir) / "decay_rates.csv", rates);
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"numerical toolkit for disk semigroup generators and starlike classes"};
  app.require_subcommand(1);

  std::size_t order = 16384;
  if (const char* env = std::getenv("SEMIGEN_ORDER")) {
    try {
      order = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "bad SEMIGEN_ORDER value: " << env << "\n";
      return 2;
    }
  }
  app.add_option("--order", order, "series truncation order")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 22));
  long seed = 0;
  app.add_option("--seed", seed, "seed for sampled reports (reserved)");

  // member
  auto* member = app.add_subcommand("member", "class membership check on a sampling grid");
  std::string mem_class, mem_param, mem_function, mem_series, mem_grid;
  double mem_margin = 1e-9;
  member->add_option("--class", mem_class, "a_beta | g0 | u | bs")->required();
  member->add_option("--param", mem_param, "key=value,... (beta / lambda / alpha)");
  member->add_option("--function", mem_function, "named function, name:key=value,...");
  member->add_option("--series", mem_series, "series JSON file");
  member->add_option("--grid", mem_grid, "rings=K,angles=M");
  member->add_option("--margin", mem_margin, "strictness margin");

  // radius
  auto* radius = app.add_subcommand("radius", "starlikeness radius for a target");
  double rad_beta = 1.0;
  int rad_samples = 2048;
  std::string rad_target = "janowski:1,-1", rad_sweep;
  radius->add_option("--beta", rad_beta, "class parameter in [0,1]");
  radius->add_option("--target", rad_target, "janowski:A,B | sg | parabolic | rhoexp | custom:file");
  radius->add_option("--samples", rad_samples, "boundary samples for numeric targets");
  radius->add_option("--sweep", rad_sweep, "beta=lo:hi:step emits CSV");

  // flow
  auto* flow = app.add_subcommand("flow", "integrate u' = -f(u) and emit CSV");
  std::string flow_function, flow_z0 = "0.5,0";
  double flow_T = 2.0, flow_rate = 0.0, flow_tol = 1e-9;
  std::size_t flow_samples = 64;
  flow->add_option("--function", flow_function, "generator, name:key=value,...")->required();
  flow->add_option("--z0", flow_z0, "start point re,im");
  flow->add_option("--T", flow_T, "horizon");
  flow->add_option("--samples", flow_samples, "sample count");
  flow->add_option("--rate", flow_rate, "decay rate for the bound column");
  flow->add_option("--step-tol", flow_tol, "local error tolerance");

  // convolve
  auto* convolve = app.add_subcommand("convolve", "Hadamard product plus membership check");
  std::string conv_f, conv_g, conv_check = "g0", conv_grid;
  convolve->add_option("--f", conv_f, "first factor, name:key=value,...")->required();
  convolve->add_option("--g", conv_g, "second factor")->required();
  convolve->add_option("--check", conv_check, "a_beta:beta=b | g0 | u:lambda=l | bs:alpha=a");
  convolve->add_option("--grid", conv_grid, "rings=K,angles=M");

  // kappa
  auto* kap = app.add_subcommand("kappa", "sharp lower bound of Re(f/z)");
  double kap_beta = 0.0;
  kap->add_option("--beta", kap_beta, "class parameter in [0,1]")->required();

  // table
  auto* table = app.add_subcommand("table", "emit the radius/rate reference tables");
  std::string table_dir;
  int table_samples = 2048;
  table->add_option("--out", table_dir, "output directory")->required();
  table->add_option("--samples", table_samples, "boundary samples for numeric targets");

  try {
    app.parse(argc, argv);

    if (member->parsed()) {
      if (mem_function.empty() == mem_series.empty())
        throw BadParams("need exactly one of --function / --series");
      GridSpec grid = parse_grid(mem_grid);
      grid.margin = mem_margin;
      const PowerSeries f = mem_function.empty() ? series_from_json_file(mem_series)
                                                 : make_function(mem_function, order);
      std::map<std::string, double> params;
      for (const auto& [key, value] : parse_kv(mem_param))
        params[key] = parse_double(value, key);
      const auto need = [&](const char* key) {
        const auto it = params.find(key);
        if (it == params.end())
          throw BadParams("class needs --param " + std::string(key) + "=...");
        return it->second;
      };
      MembershipReport rep;
      if (mem_class == "a_beta")
        rep = check_a_beta(f, need("beta"), grid);
      else if (mem_class == "g0")
        rep = check_a_beta(f, 1.0, grid);
      else if (mem_class == "u")
        rep = check_u_lambda(f, need("lambda"), grid);
      else if (mem_class == "bs")
        rep = check_bs_subordination(f, need("alpha"), grid);
      else
        throw BadParams("unknown class: " + mem_class);
      std::cout << report_to_json(rep) << "\n";
    } else if (radius->parsed()) {
      const PhiTarget target = parse_target(rad_target, order);
      if (!rad_sweep.empty()) {
        std::cout << radius_csv_rows(target, parse_sweep(rad_sweep), rad_samples);
      } else {
        std::cout << radius_to_json(radius_a_beta(rad_beta, target, rad_samples)) << "\n";
      }
    } else if (flow->parsed()) {
      const PowerSeries f = make_function(flow_function, order);
      const Trajectory traj =
          integrate(f, parse_point(flow_z0), flow_T, flow_tol, flow_samples);
      std::cout << trajectory_csv(traj, flow_rate);
      if (traj.escaped)
        std::cout << "# not a generator at this truncation: escaped at t="
                  << csv_number(traj.escape_time) << "\n";
    } else if (convolve->parsed()) {
      const PowerSeries h =
          hadamard(make_function(conv_f, order), make_function(conv_g, order));
      const GridSpec grid = parse_grid(conv_grid);
      const auto colon = conv_check.find(':');
      const std::string cls = conv_check.substr(0, colon);
      const auto kv =
          parse_kv(colon == std::string::npos ? "" : conv_check.substr(colon + 1));
      const auto need = [&](const char* key) {
        const auto it = kv.find(key);
        if (it == kv.end())
          throw BadParams("check needs " + std::string(key) + "=...");
        return parse_double(it->second, key);
      };
      MembershipReport rep;
      if (cls == "a_beta")
        rep = check_a_beta(h, need("beta"), grid);
      else if (cls == "g0")
        rep = check_a_beta(h, 1.0, grid);
      else if (cls == "u")
        rep = check_u_lambda(h, need("lambda"), grid);
      else if (cls == "bs")
        rep = check_bs_subordination(h, need("alpha"), grid);
      else
        throw BadParams("unknown check: " + conv_check);
      std::cout << report_to_json(rep) << "\n";
    } else if (kap->parsed()) {
      std::cout << json{{"beta", kap_beta}, {"kappa", kappa(kap_beta)}}.dump() << "\n";
    } else if (table->parsed()) {
      emit_tables(table_dir, table_samples);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    const bool validation = dynamic_cast<const BadParams*>(&e) ||
                            dynamic_cast<const BadRadius*>(&e) ||
                            dynamic_cast<const BadWeights*>(&e) ||
                            dynamic_cast<const BadNormalization*>(&e);
    if (validation) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cout << json{{"error", true}, {"what", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace semigen
