#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "cmclab/families.hpp"
#include "cmclab/geodesics.hpp"
#include "cmclab/partial_fractions.hpp"
#include "cmclab/quadrature.hpp"
#include "cmclab/spectrum.hpp"
#include "cmclab/support.hpp"

namespace py = pybind11;
using namespace cmclab;

namespace {

using SurfacePtr = std::shared_ptr<Hypersurface>;

Vec to_vec(const std::vector<double>& v) {
    return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_list(const Vec& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

ChartPoint chart_point(const std::vector<double>& u) { return {0, to_vec(u)}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "verification lab for constant mean curvature hypersurfaces of spheres";

    // translators run newest-first: register the base before the leaves
    py::register_exception<Error>(m, "CmclabError");
    py::register_exception<BadSpec>(m, "BadSpecError");
    py::register_exception<CurvatureOutOfBounds>(m, "CurvatureOutOfBoundsError");

    py::class_<Hypersurface, SurfacePtr>(m, "Surface")
        .def_property_readonly("dim", [](const Hypersurface& s) { return s.dim; })
        .def_property_readonly("ambient", [](const Hypersurface& s) { return s.ambient; })
        .def_property_readonly("family", [](const Hypersurface& s) { return s.family; })
        .def_property_readonly("metadata", [](const Hypersurface& s) { return s.metadata; })
        .def("__repr__", [](const Hypersurface& s) {
            return "<Surface " + s.family + " dim=" + std::to_string(s.dim) + ">";
        });

    m.def("make_clifford", [](int n, int k, double r) {
        return std::make_shared<Hypersurface>(make_clifford({n, k, r}));
    }, py::arg("n"), py::arg("k"), py::arg("r"));

    m.def("make_umbilical", [](int n, double c) {
        UmbilicalSpec spec;
        spec.dim = n;
        spec.height = c;
        return std::make_shared<Hypersurface>(make_umbilical(spec));
    }, py::arg("n"), py::arg("c"));

    m.def("make_base_surface", [](int n, double rho0, double eps, int freq) {
        return std::make_shared<Hypersurface>(make_base_surface({n, rho0, eps, freq}));
    }, py::arg("n"), py::arg("rho0"), py::arg("eps"), py::arg("freq"));

    m.def("make_counterexample", [](int n, double rho0, double eps, int freq) {
        CounterexampleSpec spec;
        spec.base = {n, rho0, eps, freq};
        return std::make_shared<Hypersurface>(make_counterexample(spec));
    }, py::arg("n"), py::arg("rho0"), py::arg("eps"), py::arg("freq"));

    m.def("point", [](const SurfacePtr& s, const std::vector<double>& u) {
        return to_list(immersion_jet(*s, chart_point(u)).value);
    });

    m.def("normal", [](const SurfacePtr& s, const std::vector<double>& u) {
        return to_list(unit_normal(*s, chart_point(u)).value);
    });

    m.def("curvature", [](const SurfacePtr& s, const std::vector<double>& u) {
        CurvatureData cd = shape_operator(*s, chart_point(u));
        py::dict out;
        out["kappas"] = to_list(cd.kappas);
        out["mean_h"] = cd.mean_h;
        out["norm_a_sq"] = cd.norm_a_sq;
        return out;
    });

    m.def("support_sample",
          [](const SurfacePtr& s, const std::vector<double>& u, const std::vector<double>& v) {
              SupportSample sm = support_sample(*s, chart_point(u), to_vec(v));
              py::dict out;
              out["height"] = sm.height;
              out["normal_component"] = sm.normal_component;
              out["tangential"] = to_list(sm.tangential);
              return out;
          });

    m.def("proportionality",
          [](const SurfacePtr& s, const std::vector<double>& v, int samples,
             std::uint64_t seed) {
              Lcg rng(seed);
              auto pts = sample_points(*s, samples, rng);
              ProportionalityResult res = proportionality_scan(*s, to_vec(v), pts);
              py::dict out;
              out["ratio"] = res.ratio;
              out["max_residual"] = res.max_residual;
              out["holds"] = res.holds;
              return out;
          },
          py::arg("surface"), py::arg("v"), py::arg("samples") = 200,
          py::arg("seed") = 20240601ULL);

    m.def("gram_dimensions", [](const SurfacePtr& s) {
        QuadratureGrid grid = build_quadrature(*s);
        return py::make_tuple(gram_dimension(*s, SupportFamily::Height, grid),
                              gram_dimension(*s, SupportFamily::NormalComponent, grid));
    });

    m.def("clifford_spectrum", [](int n, int k, double r, int j_max) {
        CliffordSpec spec{n, k, r};
        if (j_max < 0) j_max = default_j_max(spec);
        CliffordSpectrum sp = clifford_spectrum(spec, j_max);
        py::list lines;
        for (const auto& line : sp.lines)
            lines.append(py::make_tuple(line.p, line.q, line.mu, line.mult));
        return lines;
    }, py::arg("n"), py::arg("k"), py::arg("r"), py::arg("j_max") = -1);

    m.def("index_counts", [](int n, int k, double r) {
        IndexReport idx = index_counts(CliffordSpec{n, k, r});
        py::dict out;
        out["weak"] = idx.weak;
        out["strong"] = idx.strong;
        out["threshold"] = idx.threshold;
        py::list kernel;
        for (const auto& line : idx.kernel)
            kernel.append(py::make_tuple(line.p, line.q, line.mu));
        out["kernel"] = kernel;
        return out;
    }, py::arg("n"), py::arg("k"), py::arg("r"));

    m.def("index_test_constants", [](double mean_h, double norm_a_sq, int n) {
        IndexTestConstants c = index_test_constants(mean_h, norm_a_sq, n);
        py::dict out;
        out["alpha_plus"] = c.alpha_plus;
        out["alpha_minus"] = c.alpha_minus;
        out["mu_plus"] = c.mu_plus;
        out["mu_minus"] = c.mu_minus;
        out["jac_plus"] = c.jac_plus;
        out["jac_minus"] = c.jac_minus;
        out["disc"] = c.disc;
        return out;
    });

    m.def("circle_point",
          [](const SurfacePtr& s, const std::vector<double>& anchor,
             const std::vector<double>& v, double ratio, double arc) {
              CircleParams params = circle_params(*s, chart_point(anchor), to_vec(v), ratio);
              CirclePoint cp = circle_point(params, arc);
              return py::make_tuple(to_list(cp.point), to_list(cp.normal));
          });

    m.def("transport_curvature", &transport_curvature, py::arg("kappa"), py::arg("ratio"),
          py::arg("s"));

    m.def("partition_obstruction",
          [](const std::vector<double>& kappas, double ratio, double mean_h) {
              ObstructionVerdict v = partition_obstruction(kappas, ratio, mean_h);
              py::dict out;
              out["consistent"] = v.consistent;
              out["d"] = v.partition.d;
              out["n2"] = v.partition.n2;
              out["reason"] = v.reason;
              py::list groups;
              for (const auto& g : v.partition.groups)
                  groups.append(py::make_tuple(g.value, g.multiplicity));
              out["groups"] = groups;
              return out;
          });

    m.def("partial_fraction_rejects",
          [](const std::vector<std::pair<long long, long long>>& ps,
             const std::vector<long long>& as, long long d) {
              std::vector<LinearPoly> lps;
              for (const auto& [slope, offset] : ps)
                  lps.push_back({Rational(slope), Rational(offset)});
              std::vector<Rational> ras;
              for (long long a : as) ras.emplace_back(a);
              FractionVerdict v = partial_fraction_verdict(lps, ras, Rational(d));
              return !v.identity_holds;
          },
          "True when the instance is rejected (only the all-zero instance holds)");

    m.def("mesh_crosscheck", [](double r, int grid) {
        MeshComparison cmp = mesh_laplacian_crosscheck(CliffordSpec{2, 1, r}, grid);
        py::list rows;
        for (const auto& row : cmp.rows)
            rows.append(py::make_tuple(row.mu, row.mult, row.rel_err));
        return rows;
    }, py::arg("r"), py::arg("grid") = 64);

    m.def("sample_params", [](const SurfacePtr& s, int count, std::uint64_t seed) {
        Lcg rng(seed);
        py::list out;
        for (const auto& p : sample_points(*s, count, rng)) out.append(to_list(p.u));
        return out;
    }, py::arg("surface"), py::arg("count"), py::arg("seed") = 20240601ULL);
}
