#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "nahopf/attractor.hpp"
#include "nahopf/cocycle.hpp"
#include "nahopf/ctime.hpp"
#include "nahopf/errors.hpp"
#include "nahopf/model.hpp"

namespace py = pybind11;
using namespace nahopf;

namespace {

using Matrix = std::array<std::array<double, 2>, 2>;

Mat2 to_mat(const Matrix& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }

/// A float angle for a rotation base, an integer index for a random shift.
BasePoint point(const BaseSystem& base, double x) {
  return base.is_rotation() ? base.at_angle(x) : base.at_index(static_cast<std::int64_t>(x));
}

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> to_array(const std::vector<Vec2>& v) {
  py::array_t<double> out({static_cast<py::ssize_t>(v.size()), py::ssize_t{2}});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t k = 0; k < v.size(); ++k) {
    w(k, 0) = v[k].x;
    w(k, 1) = v[k].y;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(nahopf, m) {
  m.doc() = "Nonautonomous Hopf bifurcation simulator for forced SL(2,R) skew products";
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<WindowError>(m, "WindowError", PyExc_IndexError);

  m.attr("GOLDEN_ROTATION") = kGoldenRotation;
  m.attr("GOLDEN_ARCTAN_KAPPA") = kGoldenArctanKappa;

  py::class_<BaseSystem>(m, "BaseSystem")
      .def_static("rotation", &BaseSystem::rotation, py::arg("rho") = kGoldenRotation)
      .def_static("random_shift", &BaseSystem::random_shift, py::arg("seed"), py::arg("alphabet_size"),
                  py::arg("window") = kDefaultWindow)
      .def_property_readonly("is_rotation", &BaseSystem::is_rotation)
      .def("symbol", [](const BaseSystem& b, std::int64_t i) { return b.symbol(b.at_index(i)); });

  py::class_<CocycleSpec>(m, "CocycleSpec")
      .def_static("scaled_rotation", &CocycleSpec::scaled_rotation, py::arg("c") = 0.5)
      .def_static("rotation", &CocycleSpec::rotation, py::arg("angle"))
      .def_static("constant", [](const Matrix& a) { return CocycleSpec::constant(to_mat(a)); })
      .def_static("matrix_list",
                  [](const std::vector<Matrix>& ms) {
                    std::vector<Mat2> out;
                    for (const auto& a : ms) out.push_back(to_mat(a));
                    return CocycleSpec::matrix_list(std::move(out));
                  })
      .def_property_readonly("max_norm", &CocycleSpec::max_norm);

  py::class_<HFunction>(m, "HFunction")
      .def_static("arctan", &HFunction::arctan, py::arg("kappa") = kGoldenArctanKappa)
      .def("__call__", [](const HFunction& h, double x) { return h(x); })
      .def_property_readonly("sup", &HFunction::sup)
      .def_property_readonly("slope_at_zero", &HFunction::slope_at_zero);

  py::class_<ModelSystem>(m, "ModelSystem")
      .def(py::init([](BaseSystem base, CocycleSpec cocycle, HFunction h, double beta) {
             ModelSystem sys{std::move(base), std::move(cocycle), std::move(h), beta};
             sys.validate();
             return sys;
           }),
           py::arg("base"), py::arg("cocycle"), py::arg("h"), py::arg("beta"))
      .def_readonly("beta", &ModelSystem::beta)
      .def_property_readonly("r_top", [](const ModelSystem& s) { return r_top(s); })
      .def("fibre_map",
           [](const ModelSystem& s, double theta, std::array<double, 2> v) {
             const Vec2 out = fibre_map(s, point(s.base, theta), {v[0], v[1]});
             return std::array<double, 2>{out.x, out.y};
           });

  m.def(
      "golden_arctan_system",
      [](double beta) {
        ModelSystem sys = golden_arctan_system(beta);
        sys.validate();
        return sys;
      },
      py::arg("beta"));

  m.def(
      "lyapunov_max",
      [](const CocycleSpec& c, const BaseSystem& b, double theta0, std::int64_t n) {
        return lyapunov_max(c, b, point(b, theta0), n);
      },
      py::arg("cocycle"), py::arg("base"), py::arg("theta0"), py::arg("n"));

  m.def(
      "critical_betas",
      [](const HFunction& h, double lambda) {
        const CriticalBetas cb = critical_betas(h, lambda);
        return py::make_tuple(cb.beta1, cb.beta2);
      },
      py::arg("h"), py::arg("lambda_max"));

  m.def(
      "unstable_direction",
      [](const CocycleSpec& c, const BaseSystem& b, double theta, std::int64_t depth) {
        const DirectionEstimate d = unstable_direction(c, b, point(b, theta), depth);
        return py::make_tuple(d.angle.value, d.exponent_estimate, d.reliable);
      },
      py::arg("cocycle"), py::arg("base"), py::arg("theta"), py::arg("depth"));

  py::class_<PsiField>(m, "PsiField")
      .def_readonly("beta", &PsiField::beta)
      .def_readonly("depth", &PsiField::depth)
      .def_readonly("r_start", &PsiField::r_start)
      .def_property_readonly("shape", [](const PsiField& f) {
        return py::make_tuple(f.grid.theta_res, f.grid.alpha_res);
      })
      .def_property_readonly("values",
                             [](const PsiField& f) {
                               return to_array(f.values).reshape({f.grid.theta_res, f.grid.alpha_res});
                             })
      .def_property_readonly("ridge_alpha", [](const PsiField& f) { return to_array(f.ridge_alpha); })
      .def_property_readonly("ridge_value", [](const PsiField& f) { return to_array(f.ridge_value); })
      .def("cell_value", &PsiField::cell_value);

  m.def(
      "psi_field",
      [](const ModelSystem& s, int theta_res, int alpha_res, std::int64_t depth, unsigned threads) {
        py::gil_scoped_release release;
        return psi_field(s.polar(), Grid{theta_res, alpha_res}, depth, threads);
      },
      py::arg("model"), py::arg("theta_res") = kDefaultGridResolution,
      py::arg("alpha_res") = kDefaultGridResolution, py::arg("depth") = kDefaultPullbackDepth,
      py::arg("threads") = 0);

  m.def(
      "classify",
      [](const PsiField& f, double eps_zero, double eps_pos, double segment_fraction) {
        const RegimeReport r = classify(f, ClassifyParams{eps_zero, eps_pos, segment_fraction});
        py::dict d;
        d["regime"] = std::string(to_string(r.regime));
        d["max_psi"] = r.max_psi;
        d["min_psi"] = r.min_psi;
        d["positive_fraction_mean"] = r.positive_fraction.mean;
        d["positive_fraction_min"] = r.positive_fraction.min;
        d["positive_fraction_max"] = r.positive_fraction.max;
        return d;
      },
      py::arg("field"), py::arg("eps_zero") = 1e-6, py::arg("eps_pos") = 1e-4,
      py::arg("segment_fraction") = 0.02);

  m.def(
      "invariance_residual",
      [](const PsiField& f, const ModelSystem& s) { return invariance_residual(f, s.polar()).max_residual; },
      py::arg("field"), py::arg("model"));

  m.def(
      "two_point_forward",
      [](const ModelSystem& s, double theta0, std::array<double, 2> v0, std::int64_t n, std::int64_t burn_in,
         std::int64_t depth) {
        const ForwardReport r = two_point_forward(s, point(s.base, theta0), {v0[0], v0[1]}, n, burn_in, depth);
        py::dict d;
        d["trajectory"] = to_array(r.trajectory);
        d["norms"] = to_array(r.norms);
        d["endpoint"] = to_array(r.endpoint);
        d["endpoint_radius"] = to_array(r.endpoint_radius);
        d["distance"] = to_array(r.distance);
        d["max_distance_after_burn_in"] = r.max_distance_after_burn_in;
        return d;
      },
      py::arg("model"), py::arg("theta0"), py::arg("v0"), py::arg("n"), py::arg("burn_in"),
      py::arg("depth") = kDefaultPullbackDepth);

  m.def(
      "cesaro_average",
      [](const ModelSystem& s, double theta, std::array<double, 2> v, std::int64_t n) {
        return cesaro_average(s, point(s.base, theta), {v[0], v[1]}, n);
      },
      py::arg("model"), py::arg("theta"), py::arg("v"), py::arg("n"));

  m.def(
      "time_one_checks",
      [](double lambda, double omega, double beta, int samples, double step, std::uint64_t seed) {
        ctime::LinearFieldSpec spec;
        spec.field = ctime::ForcedField{lambda, omega};
        const ctime::PropertyReport rep =
            ctime::time_one_checks(spec, ctime::EtaSpec::negative_identity(), beta, samples, step, seed);
        py::list out;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["value"] = c.value;
          d["threshold"] = c.threshold;
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("lambda_") = 0.5, py::arg("omega") = 1.0, py::arg("beta") = 0.5, py::arg("samples") = 100,
      py::arg("step") = ctime::kDefaultStep, py::arg("seed") = 1);
}
