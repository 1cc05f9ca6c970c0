#include <memory>
#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itsdeal/config.hpp"
#include "itsdeal/envelope.hpp"
#include "itsdeal/prox.hpp"
#include "itsdeal/runner.hpp"
#include "itsdeal/trace.hpp"
#include "itsdeal/verify.hpp"

namespace py = pybind11;
using namespace itsdeal;

namespace {

using InstancePtr = std::shared_ptr<SparseRecoveryInstance>;

std::string to_config_string(const py::handle& v) {
  if (py::isinstance<py::bool_>(v)) return v.cast<bool>() ? "on" : "off";
  if (py::isinstance<py::float_>(v)) return fmt17(v.cast<double>());
  if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
    std::string s;
    for (auto item : v) s += (s.empty() ? "" : ",") + to_config_string(item);
    return s;
  }
  return py::str(v).cast<std::string>();
}

Config config_from(const py::dict& d) {
  Config cfg;
  for (auto [k, v] : d) cfg.set(py::str(k).cast<std::string>(), to_config_string(v));
  return cfg;
}

py::dict trace_dict(const HeaderEntries& header, const std::vector<TraceRow>& rows) {
  py::dict h;
  for (const auto& [k, v] : header) h[py::str(k)] = v;
  const std::size_t n = rows.size();
  auto col = [&](auto get) {
    Vec c(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) c[static_cast<Eigen::Index>(i)] = get(rows[i]);
    return c;
  };
  py::dict c;
  c["iter"] = col([](const TraceRow& r) { return static_cast<double>(r.iter); });
  c["wall_time_s"] = col([](const TraceRow& r) { return r.wall_time_s; });
  c["value_eps"] = col([](const TraceRow& r) { return r.value_eps; });
  c["grad_eps_norm"] = col([](const TraceRow& r) { return r.grad_eps_norm; });
  c["eps"] = col([](const TraceRow& r) { return r.eps; });
  c["objective"] = col([](const TraceRow& r) { return r.objective; });
  c["step_alpha"] = col([](const TraceRow& r) { return r.step_alpha; });
  c["Lbar"] = col([](const TraceRow& r) { return r.Lbar; });
  c["inner_iters"] = col([](const TraceRow& r) { return static_cast<double>(r.inner_iters); });
  c["backtracks"] = col([](const TraceRow& r) { return static_cast<double>(r.backtracks); });
  c["relative_error"] = col([](const TraceRow& r) { return r.relative_error; });
  c["g_dot_d"] = col([](const TraceRow& r) { return r.g_dot_d; });
  c["direction_norm"] = col([](const TraceRow& r) { return r.direction_norm; });
  c["decrease_coef"] = col([](const TraceRow& r) { return r.decrease_coef; });
  c["decrease_ok"] = col([](const TraceRow& r) { return static_cast<double>(r.decrease_ok); });
  py::dict out;
  out["header"] = h;
  out["columns"] = c;
  return out;
}

WeaklyConvexFn builtin(const std::string& name, int dim, double sigma) {
  if (name == "quadratic") return half_squared_norm(dim);
  if (name == "quartic") return quartic_well();
  if (name == "l1") return l1_norm(dim);
  if (name == "clipped") return clipped_quadratic_sum(dim, sigma);
  if (name == "zero") return zero_function(dim);
  throw ConfigError("unknown built-in function '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inexact high-order Moreau envelope descent (C++ core)";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("build_describe", [] { return std::string(build_describe()); });

  m.def("kappa", &kappa, py::arg("t"));
  m.def("solve_t_hat", &solve_t_hat);
  m.def("tau_lower_bounded", &tau_lower_bounded, py::arg("p"), py::arg("gamma"),
        py::arg("gamma_max"), py::arg("r"), py::arg("phi0"), py::arg("ell0"));
  m.def("tau_prox_bounded", &tau_prox_bounded, py::arg("p"), py::arg("gamma"),
        py::arg("gamma_hat"), py::arg("r"), py::arg("phi0"), py::arg("ell0_shifted"));
  m.def(
      "smoothness_constants",
      [](double p, double gamma, double rho, double r, double tau_bar, double gamma_max) {
        const SmoothnessBounds b = smoothness_constants(p, gamma, rho, r, tau_bar, gamma_max);
        py::dict d;
        d["r"] = b.r;
        d["tau"] = b.tau;
        d["L_p"] = b.L_p;
        d["calL_p"] = b.calL_p;
        d["gamma_max"] = b.gamma_max;
        d["sigma"] = b.sigma;
        return d;
      },
      py::arg("p"), py::arg("gamma"), py::arg("rho"), py::arg("r"), py::arg("tau_bar"),
      py::arg("gamma_max") = kInf);

  m.def("clipped_quadratic", &clipped_quadratic, py::arg("t"), py::arg("sigma") = 1.0);
  m.def("clipped_quadratic_subgrad", &clipped_quadratic_subgrad, py::arg("t"),
        py::arg("sigma") = 1.0);

  py::class_<SparseRecoveryInstance, InstancePtr>(m, "SparseRecoveryInstance")
      .def_property_readonly("A", [](const SparseRecoveryInstance& s) { return s.A; })
      .def_property_readonly("y", [](const SparseRecoveryInstance& s) { return s.y; })
      .def_property_readonly("x_true", [](const SparseRecoveryInstance& s) { return s.x_true; })
      .def_property_readonly("e", [](const SparseRecoveryInstance& s) { return s.e; })
      .def_property_readonly("lambda_bar",
                             [](const SparseRecoveryInstance& s) { return s.params.lambda_bar; })
      .def_property_readonly("sigma", [](const SparseRecoveryInstance& s) { return s.params.sigma; })
      .def_property_readonly("seed", [](const SparseRecoveryInstance& s) { return s.params.seed; })
      .def("to_text", [](const SparseRecoveryInstance& s) {
        std::ostringstream os;
        write_instance(os, s);
        return os.str();
      });
  m.def("instance_from_text", [](const std::string& text) {
    std::istringstream is(text);
    return std::make_shared<SparseRecoveryInstance>(read_instance(is));
  });

  m.def(
      "generate_instance",
      [](int n, int mm, int k1, int k2, double sigma, double lambda_bar, std::uint64_t seed) {
        InstanceParams p;
        p.n = n;
        p.m = mm;
        p.k1 = k1;
        p.k2 = k2;
        p.sigma = sigma;
        p.lambda_bar = lambda_bar;
        p.seed = seed;
        return std::make_shared<SparseRecoveryInstance>(generate_instance(p));
      },
      py::arg("n") = 1000, py::arg("m") = 500, py::arg("k1") = 50, py::arg("k2") = 30,
      py::arg("sigma") = 1.0, py::arg("lambda_bar") = InstanceParams{}.lambda_bar,
      py::arg("seed") = 0);
  m.def("rsr_value", [](const InstancePtr& s, const Vec& x) { return rsr_value(*s, x); });
  m.def("rsr_subgrad", [](const InstancePtr& s, const Vec& x) { return rsr_subgrad(*s, x); });
  m.def("relative_error", &relative_error);

  m.def(
      "inexact_oracle",
      [](const std::string& function, const Vec& x, double p, double gamma,
         const std::string& inner, int max_iters, double move_tol, double sigma) {
        const WeaklyConvexFn f = builtin(function, static_cast<int>(x.size()), sigma);
        InnerSolverConfig cfg;
        cfg.kind = inner_solver_kind_from_string(inner);
        cfg.max_iters = max_iters;
        cfg.move_tol = move_tol;
        const InexactOracle o = inexact_oracle(f, p, gamma, x, cfg, default_mu(p), 0.0);
        py::dict d;
        d["value_eps"] = o.value_eps;
        d["grad_eps"] = o.grad_eps;
        d["y_eps"] = o.cert.y_eps;
        d["delta"] = o.cert.delta_k;
        d["certified"] = o.cert.certified;
        d["inner_iters"] = o.cert.inner_iters;
        return d;
      },
      py::arg("function"), py::arg("x"), py::arg("p") = 1.25, py::arg("gamma") = 0.9,
      py::arg("inner") = "decaying", py::arg("max_iters") = 200, py::arg("move_tol") = 1e-3,
      py::arg("sigma") = 1.0);

  m.def("config_defaults", [] {
    py::dict d;
    for (const auto& e : Config::schema()) d[py::str(e.key)] = e.default_value;
    return d;
  });

  m.def(
      "solve",
      [](const py::dict& overrides) {
        const Config cfg = config_from(overrides);
        RunTrace trace;
        Problem prob;
        {
          py::gil_scoped_release release;
          prob = make_problem(cfg);
          trace = run_algorithm(cfg, prob);
        }
        py::dict out = trace_dict(output_header(cfg), trace.rows);
        py::dict run;
        for (const auto& [k, v] : trace.header) run[py::str(k)] = v;
        out["run"] = run;
        out["status"] = to_string(trace.status);
        out["message"] = trace.message;
        out["x_final"] = trace.x_final;
        std::ostringstream csv;
        write_trace_csv(csv, output_header(cfg), trace);
        out["csv"] = csv.str();
        return out;
      },
      py::arg("config") = py::dict());

  m.def("read_trace", [](const std::string& path) {
    const TraceFile t = read_trace_csv(path);
    return trace_dict(t.header, t.rows);
  });

  m.def(
      "verify",
      [](const std::string& fixture) {
        VerifyOptions o;
        o.fixture = fixture;
        return verify_report_json(run_verify(o));
      },
      py::arg("fixture") = "");
}
