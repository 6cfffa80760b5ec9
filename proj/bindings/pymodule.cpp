#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semigen/functions.hpp"
#include "semigen/io.hpp"
#include "semigen/membership.hpp"
#include "semigen/radius.hpp"
#include "semigen/semiflow.hpp"
#include "semigen/series.hpp"

namespace py = pybind11;
using namespace semigen;

namespace {

PowerSeries series_from_coeffs(const std::vector<cdouble>& coeffs) {
  if (coeffs.empty()) throw BadParams("need at least one coefficient");
  PowerSeries f(coeffs.size() - 1);
  for (std::size_t n = 0; n < coeffs.size(); ++n) f[n] = coeffs[n];
  return f;
}

py::dict report_dict(const MembershipReport& rep) {
  py::dict d;
  d["member"] = rep.member;
  d["witness_min"] = rep.witness_min;
  d["witness_point"] = rep.witness_point;
  d["functional"] = rep.functional;
  return d;
}

py::dict radius_dict(const RadiusResult& res) {
  py::dict d;
  d["r"] = res.r;
  d["branch"] = std::string(branch_name(res.branch));
  d["k"] = res.k;
  d["m"] = res.m;
  d["k0"] = res.k0;
  d["k1"] = res.k1;
  d["clamped"] = res.clamped;
  if (res.beta_star)
    d["beta_star"] = *res.beta_star;
  else
    d["beta_star"] = py::none();
  return d;
}

PhiTarget target_from_name(const std::string& name, double A, double B) {
  if (name == "janowski") return PhiTarget::janowski(A, B);
  if (name == "sg") return PhiTarget::sg();
  if (name == "parabolic") return PhiTarget::parabolic();
  if (name == "rhoexp") return PhiTarget::rho_exp();
  throw BadParams("unknown target: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "disk semigroup generators and starlike classes";

  py::class_<PowerSeries>(m, "PowerSeries")
      .def(py::init(&series_from_coeffs), py::arg("coeffs"))
      .def("order", &PowerSeries::order)
      .def("coeffs", [](const PowerSeries& f) { return f.coeffs(); })
      .def("__call__", [](const PowerSeries& f, cdouble z) { return eval(f, z); });

  m.def(
      "named_function",
      [](const std::string& name, py::kwargs kwargs) {
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
        const auto it = registry.find(name);
        if (it == registry.end()) throw BadParams("unknown function name: " + name);
        FunctionParams p;
        std::size_t order = PowerSeries::kDefaultOrder;
        for (auto item : kwargs) {
          const std::string key = py::cast<std::string>(item.first);
          if (key == "beta")
            p.beta = py::cast<double>(item.second);
          else if (key == "lambda_")
            p.lambda = py::cast<double>(item.second);
          else if (key == "gamma")
            p.gamma = py::cast<cdouble>(item.second);
          else if (key == "x")
            p.x = py::cast<cdouble>(item.second);
          else if (key == "A")
            p.A = py::cast<double>(item.second);
          else if (key == "B")
            p.B = py::cast<double>(item.second);
          else if (key == "theta")
            p.theta = py::cast<double>(item.second);
          else if (key == "order")
            order = py::cast<std::size_t>(item.second);
          else
            throw BadParams("unknown parameter: " + key);
        }
        return make_named(it->second, p, order);
      },
      py::arg("name"), "build a named function from the registry");

  m.def(
      "hadamard",
      [](const PowerSeries& f, const PowerSeries& g) { return hadamard(f, g); },
      py::arg("f"), py::arg("g"), "coefficientwise product");

  m.def(
      "check_a_beta",
      [](const PowerSeries& f, double beta) { return report_dict(check_a_beta(f, beta)); },
      py::arg("f"), py::arg("beta"),
      "grid test of Re(beta f/z + (1-beta) f') > 0");

  m.def(
      "check_u_lambda",
      [](const PowerSeries& f, double lambda) {
        return report_dict(check_u_lambda(f, lambda));
      },
      py::arg("f"), py::arg("lambda_"), "grid test of |f'(z)(z/f)^2 - 1| < lambda");

  m.def(
      "check_bs",
      [](const PowerSeries& f, double alpha) {
        return report_dict(check_bs_subordination(f, alpha));
      },
      py::arg("f"), py::arg("alpha"),
      "grid test of zf'/f - 1 lying in the open Booth region");

  m.def("kappa", &kappa, py::arg("beta"), "sharp lower bound of Re(f/z) on the class");

  m.def(
      "radius",
      [](double beta, const std::string& target, double A, double B) {
        return radius_dict(radius_a_beta(beta, target_from_name(target, A, B)));
      },
      py::arg("beta"), py::arg("target"), py::arg("A") = 1.0, py::arg("B") = -1.0,
      "largest r with beta f/z + (1-beta) f' subordinate to the target on |z| < r");

  m.def(
      "integrate",
      [](const PowerSeries& f, cdouble z0, double T, std::size_t samples) {
        const Trajectory traj = integrate(f, z0, T, 1e-9, samples);
        py::dict d;
        d["times"] = traj.times;
        d["points"] = traj.points;
        d["escaped"] = traj.escaped;
        d["escape_time"] = traj.escape_time;
        return d;
      },
      py::arg("f"), py::arg("z0"), py::arg("T"), py::arg("samples") = 64,
      "solve u' = -f(u), u(0) = z0 on [0, T]");

  m.def("decay_rate_janowski", &decay_rate_janowski, py::arg("A"), py::arg("B"));
  m.def("decay_rate_bs", &decay_rate_bs, py::arg("alpha"));
  m.def("decay_rate_u", &decay_rate_u, py::arg("lambda_"));
}
