#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gls/boundary.hpp"
#include "gls/conditions.hpp"
#include "gls/model.hpp"
#include "gls/sweep.hpp"
#include "gls/version.hpp"

namespace py = pybind11;
using namespace gls;

namespace {

py::array_t<double> grid(const std::vector<double>& v, std::size_t rows, std::size_t cols)
{
    py::array_t<double> a({rows, cols});
    std::copy(v.begin(), v.end(), a.mutable_data());
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Closed-form scattering amplitudes, linear-solve oracle and sweeps";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<SingularPointError>(m, "SingularPointError", PyExc_ValueError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double gamma1, double gamma2, double phi1, double phi2, double gamma_loss) {
                 ModelParams p{gamma1, gamma2, phi1, phi2, gamma_loss};
                 p.validate();
                 return p;
             }),
             py::arg("gamma1") = 1.0, py::arg("gamma2") = 1.0, py::arg("phi1") = 0.0, py::arg("phi2") = 0.0,
             py::arg("gamma_loss") = 0.0)
        .def_static("from_ratio", &ModelParams::from_ratio, py::arg("gamma1"), py::arg("eta"), py::arg("phi1"),
                    py::arg("dphi"), py::arg("gamma_loss") = 0.0)
        .def_readwrite("gamma1", &ModelParams::gamma1)
        .def_readwrite("gamma2", &ModelParams::gamma2)
        .def_readwrite("phi1", &ModelParams::phi1)
        .def_readwrite("phi2", &ModelParams::phi2)
        .def_readwrite("gamma_loss", &ModelParams::gamma_loss)
        .def_property_readonly("eta", &ModelParams::eta)
        .def_property_readonly("dphi", &ModelParams::dphi)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(gamma1=" + std::to_string(p.gamma1) + ", gamma2=" + std::to_string(p.gamma2) +
                   ", phi1=" + std::to_string(p.phi1) + ", phi2=" + std::to_string(p.phi2) +
                   ", gamma_loss=" + std::to_string(p.gamma_loss) + ")";
        });

    py::class_<ScatteringAmplitudes>(m, "ScatteringAmplitudes")
        .def_readonly("t1", &ScatteringAmplitudes::t1)
        .def_readonly("r1", &ScatteringAmplitudes::r1)
        .def_readonly("t2", &ScatteringAmplitudes::t2)
        .def_readonly("r2", &ScatteringAmplitudes::r2)
        .def_readonly("T1", &ScatteringAmplitudes::T1)
        .def_readonly("R1", &ScatteringAmplitudes::R1)
        .def_readonly("Tc", &ScatteringAmplitudes::Tc)
        .def_readonly("loss", &ScatteringAmplitudes::loss);

    py::class_<SagnacAmplitudes>(m, "SagnacAmplitudes")
        .def_readonly("t1_tilde", &SagnacAmplitudes::t1_tilde)
        .def_readonly("t2_tilde", &SagnacAmplitudes::t2_tilde)
        .def_readonly("T1_tilde", &SagnacAmplitudes::T1_tilde)
        .def_readonly("Tc_tilde", &SagnacAmplitudes::Tc_tilde)
        .def_readonly("loss", &SagnacAmplitudes::loss);

    m.def("giant_lambda_amplitudes", &giant_lambda_amplitudes, py::arg("params"), py::arg("delta"));
    m.def("sagnac_amplitudes", &sagnac_amplitudes, py::arg("params"), py::arg("delta"));

    m.def(
        "solve_giant",
        [](const ModelParams& p, double delta) {
            const auto s = solve_giant(p, delta);
            const auto mapped = reference_plane_map(s, p);
            py::dict d;
            d["t1"] = mapped[0];
            d["r1"] = mapped[1];
            d["t2"] = mapped[2];
            d["r2"] = mapped[3];
            d["max_residual"] = s.max_residual;
            return d;
        },
        py::arg("params"), py::arg("delta"),
        "Linear-solve amplitudes in the closed-form reference convention.");

    m.def(
        "effective_params",
        [](const ModelParams& p) {
            const auto e = effective_params(p);
            py::dict d;
            d["delta_shift"] = e.delta_shift;
            d["gamma1_eff"] = e.gamma1_eff;
            d["gamma2_eff"] = e.gamma2_eff;
            d["gamma_eff"] = e.gamma_eff;
            d["eta_eff"] = e.eta_eff ? py::object(py::float_(*e.eta_eff)) : py::object(py::none());
            return d;
        },
        py::arg("params"));

    m.def(
        "analyze",
        [](double phi1, double dphi, double gamma1, double eta, double tol) {
            const auto r = analyze(phi1, dphi, gamma1, eta, tol);
            py::dict d;
            d["fipt"] = r.fipt;
            d["fipt_multiple"] = r.fipt ? py::object(py::int_(r.fipt_multiple)) : py::object(py::none());
            d["total_reflection"] = r.total_reflection ? py::object(py::float_(r.total_reflection->delta_star))
                                                       : py::object(py::none());
            if (r.optimal_conversion) {
                d["optimal_conversion"] =
                    py::make_tuple(r.optimal_conversion->eta_star, r.optimal_conversion->delta_star);
            } else {
                d["optimal_conversion"] = py::none();
            }
            d["tolerance_used"] = r.tolerance_used;
            return d;
        },
        py::arg("phi1"), py::arg("dphi"), py::arg("gamma1") = 1.0, py::arg("eta") = 1.0,
        py::arg("tol") = kDefaultManifoldTol);

    m.def(
        "sweep",
        [](const std::string& mode, double phi1, double fixed, double gamma1, double gamma_loss, bool sagnac,
           std::tuple<double, double, std::size_t> delta_axis, std::tuple<double, double, std::size_t> scan_axis,
           unsigned threads) {
            SweepSpec spec;
            const auto parsed = parse_sweep_mode(mode);
            if (!parsed) throw std::invalid_argument("mode must be delta-dphi or delta-eta");
            spec.mode = *parsed;
            spec.phi1 = phi1;
            if (spec.mode == SweepMode::DeltaDphi) spec.eta = fixed;
            else spec.dphi = fixed;
            spec.gamma1 = gamma1;
            spec.gamma_loss = gamma_loss;
            spec.sagnac = sagnac;
            spec.delta_axis = {std::get<0>(delta_axis), std::get<1>(delta_axis), std::get<2>(delta_axis)};
            spec.scan_axis = {std::get<0>(scan_axis), std::get<1>(scan_axis), std::get<2>(scan_axis)};
            SweepResult r;
            {
                py::gil_scoped_release release;
                r = run_sweep(spec, threads);
            }
            py::dict d;
            for (Quantity q : {Quantity::T1, Quantity::R1, Quantity::Tc, Quantity::Loss}) {
                d[py::str(std::string(quantity_name(q)))] = grid(r.values(q), r.rows(), r.cols());
            }
            if (sagnac) {
                for (Quantity q : {Quantity::T1Tilde, Quantity::TcTilde, Quantity::LossTilde}) {
                    d[py::str(std::string(quantity_name(q)))] = grid(r.values(q), r.rows(), r.cols());
                }
            }
            d["undefined_cells"] = r.undefined_cells;
            return d;
        },
        py::arg("mode"), py::arg("phi1"), py::arg("fixed"), py::arg("gamma1") = 1.0, py::arg("gamma_loss") = 0.0,
        py::arg("sagnac") = false, py::arg("delta_axis") = std::make_tuple(-8.0, 8.0, std::size_t{321}),
        py::arg("scan_axis") = std::make_tuple(0.0, 12.566370614359172, std::size_t{321}), py::arg("threads") = 1,
        "Grid of probabilities; fixed is eta in delta-dphi mode and dphi in delta-eta mode.");
}
