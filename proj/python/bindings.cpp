#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polysum/constancy.hpp"
#include "polysum/extrema.hpp"
#include "polysum/moments.hpp"
#include "polysum/oracle.hpp"

namespace py = pybind11;
using namespace polysum;

namespace {

VertexSet make_vs(const std::string& family, int param, double circumradius) {
    return generate(parse_family(family, param), circumradius);
}

py::dict grid_to_dict(const GridReport& rep) {
    py::dict d;
    d["minValue"] = rep.minValue;
    d["maxValue"] = rep.maxValue;
    d["argmin"] = rep.argmin;
    d["argmax"] = rep.argmax;
    d["gridSize"] = rep.gridSize;
    d["seed"] = rep.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(polysum, m) {
    m.doc() = "Powered distance sums over regular polytope vertex sets: generation, "
              "constancy scans, extremum search, planar moment tools.";

    py::register_exception<SingularEvaluation>(m, "SingularEvaluation");

    m.def(
        "generate",
        [](const std::string& family, int param, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            py::dict d;
            d["family"] = vs.family.name();
            d["param"] = vs.family.param;
            d["dim"] = vs.dim();
            d["circumradius"] = vs.circumradius;
            d["vertices"] = vs.vertices;
            return d;
        },
        py::arg("family"), py::arg("param") = 3, py::arg("circumradius") = 1.0);

    m.def(
        "distance_spectrum",
        [](const std::string& family, int param, const PointN& point, double circumradius) {
            const DistanceSpectrum s =
                distance_spectrum(make_vs(family, param, circumradius), point);
            std::vector<std::pair<double, int>> out;
            for (const auto& e : s.entries) out.emplace_back(e.distance, e.multiplicity);
            return out;
        },
        py::arg("family"), py::arg("param"), py::arg("point"), py::arg("circumradius") = 1.0);

    m.def(
        "evaluate",
        [](const std::string& family, int param, const PointN& point, double lam, double h,
           double circumradius) {
            return evaluate(make_vs(family, param, circumradius), point, {lam, h});
        },
        py::arg("family"), py::arg("param"), py::arg("point"), py::arg("lam"),
        py::arg("h") = 0.0, py::arg("circumradius") = 1.0);

    m.def("closed_form_even", &closed_form_even, py::arg("n"), py::arg("R"), py::arg("r"),
          py::arg("k"));

    m.def(
        "tangential_gradient",
        [](const std::string& family, int param, const PointN& point, double lam, double h,
           double sphere_radius, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            return tangential_gradient(vs, point, SphereSpec{vs.center, sphere_radius},
                                       {lam, h});
        },
        py::arg("family"), py::arg("param"), py::arg("point"), py::arg("lam"),
        py::arg("h") = 0.0, py::arg("sphere_radius") = 1.0, py::arg("circumradius") = 1.0);

    m.def(
        "spread_on_sphere",
        [](const std::string& family, int param, double lam, double h, double sphere_radius,
           int probes, std::uint64_t seed, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            const ConstancyReport rep = spread_on_sphere(
                vs, SphereSpec{vs.center, sphere_radius}, {lam, h}, probes, seed);
            py::dict d;
            d["lambda"] = rep.lambda;
            d["spreadAbs"] = rep.spreadAbs;
            d["spreadRel"] = rep.spreadRel;
            d["isConstant"] = rep.isConstant;
            d["probeCount"] = rep.probeCount;
            d["seed"] = rep.seed;
            return d;
        },
        py::arg("family"), py::arg("param"), py::arg("lam"), py::arg("h") = 0.0,
        py::arg("sphere_radius") = 1.0, py::arg("probes") = 10000, py::arg("seed") = 0,
        py::arg("circumradius") = 1.0);

    m.def(
        "constancy_set_even",
        [](const std::string& family, int param, int lambda_max, double sphere_radius,
           double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            return constancy_set_even(vs, SphereSpec{vs.center, sphere_radius}, lambda_max);
        },
        py::arg("family"), py::arg("param"), py::arg("lambda_max"),
        py::arg("sphere_radius") = 1.0, py::arg("circumradius") = 1.0);

    m.def(
        "max_constancy_bound",
        [](const std::string& family, int param, double sphere_radius, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            return max_constancy_bound(vs, SphereSpec{vs.center, sphere_radius});
        },
        py::arg("family"), py::arg("param"), py::arg("sphere_radius") = 1.0,
        py::arg("circumradius") = 1.0);

    m.def(
        "find_extrema",
        [](const std::string& family, int param, double lam, double h, double sphere_radius,
           int starts, std::uint64_t seed, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            const ExtremumReport rep = find_extrema(vs, SphereSpec{vs.center, sphere_radius},
                                                    {lam, h}, starts, seed);
            py::dict d;
            d["lambda"] = rep.lambda;
            d["h"] = rep.hOffset;
            d["argmax"] = rep.argmax;
            d["argmin"] = rep.argmin;
            d["maxValue"] = rep.maxValue;
            d["minValue"] = rep.minValue;
            d["maxLabel"] = rep.maxLabel;
            d["minLabel"] = rep.minLabel;
            d["converged"] = rep.converged;
            d["unboundedMax"] = rep.unboundedMax;
            return d;
        },
        py::arg("family"), py::arg("param"), py::arg("lam"), py::arg("h") = 0.0,
        py::arg("sphere_radius") = 1.0, py::arg("starts") = 8, py::arg("seed") = 0,
        py::arg("circumradius") = 1.0);

    m.def(
        "predict_regime",
        [](const std::string& family, int param, double lam) {
            const RegimePrediction pred = predict_regime(parse_family(family, param), lam);
            py::dict d;
            d["lambda"] = pred.lambda;
            d["intervalLo"] = pred.intervalLo;
            d["intervalHi"] = pred.intervalHi;
            d["predictedMaxOrbit"] = pred.predictedMaxOrbit;
            d["predictedMinOrbit"] = pred.predictedMinOrbit;
            d["unboundedOnCircumsphere"] = pred.unboundedOnCircumsphere;
            return d;
        },
        py::arg("family"), py::arg("param"), py::arg("lam"));

    m.def(
        "verify_duality",
        [](const std::string& family, int param, double lam, double sphere_radius,
           double circumradius) {
            const VertexSet primal = make_vs(family, param, circumradius);
            const VertexSet dual = polar_dual(primal);
            return verify_duality(primal, dual, SphereSpec{primal.center, sphere_radius}, lam);
        },
        py::arg("family"), py::arg("param"), py::arg("lam"), py::arg("sphere_radius") = 1.3,
        py::arg("circumradius") = 1.0);

    m.def(
        "grid_extrema",
        [](const std::string& family, int param, double lam, double h, double sphere_radius,
           std::size_t grid_size, std::uint64_t seed, double circumradius) {
            const VertexSet vs = make_vs(family, param, circumradius);
            const SphereSpec sphere{vs.center, sphere_radius};
            const PowerSumParams p{lam, h};
            return grid_to_dict(vs.dim() == 2
                                    ? grid_extrema_circle(vs, sphere, p, grid_size)
                                    : grid_extrema_sphere(vs, sphere, p, grid_size, seed));
        },
        py::arg("family"), py::arg("param"), py::arg("lam"), py::arg("h") = 0.0,
        py::arg("sphere_radius") = 1.0, py::arg("grid_size") = 100000, py::arg("seed") = 0,
        py::arg("circumradius") = 1.0);

    m.def(
        "power_sums",
        [](const std::vector<std::complex<double>>& points, int kmax) {
            PlanarConfig cfg;
            cfg.points = points;
            const MomentReport rep = power_sums(cfg, kmax);
            py::dict d;
            d["powerSums"] = rep.powerSums;
            d["elementarySymmetric"] = rep.elementarySymmetric;
            d["powerSumsVanish"] = rep.powerSumsVanish;
            d["equalModuli"] = rep.equalModuli;
            d["isRegular"] = rep.isRegular;
            d["residual"] = rep.residual;
            return d;
        },
        py::arg("points"), py::arg("kmax"));

    m.def(
        "regularity_from_constancy",
        [](const std::vector<std::complex<double>>& points, const std::vector<int>& kset,
           double circle_radius, std::pair<double, double> circle_center) {
            PlanarConfig cfg;
            cfg.points = points;
            cfg.circle =
                SphereSpec{{circle_center.first, circle_center.second}, circle_radius};
            const RegularityCheck rc = regularity_from_constancy(cfg, kset);
            return std::make_pair(rc.hypothesisConstant, rc.conclusionRegular);
        },
        py::arg("points"), py::arg("kset"), py::arg("circle_radius") = 1.0,
        py::arg("circle_center") = std::make_pair(0.0, 0.0));

    m.def(
        "conjecture_search",
        [](int n, long iterations, std::uint64_t seed, bool regularity_penalty) {
            const ConjectureSearchResult res =
                conjecture_search(n, iterations, seed, regularity_penalty);
            py::dict d;
            d["bestSpread"] = res.bestSpread;
            d["bestConfig"] = res.bestConfig.points;
            d["iterations"] = res.iterations;
            d["seed"] = res.seed;
            return d;
        },
        py::arg("n"), py::arg("iterations") = 100000, py::arg("seed") = 0,
        py::arg("regularity_penalty") = true);

    m.def(
        "count_sign_changes",
        [](const std::vector<std::pair<double, double>>& terms, double lo, double hi,
           int grid) {
            ExponentialSum es;
            for (const auto& [a, b] : terms) es.terms.push_back({a, b});
            return count_sign_changes(es, lo, hi, grid);
        },
        py::arg("terms"), py::arg("lo"), py::arg("hi"), py::arg("grid") = 10000);
}
