// polysum: powered distance sums over regular polytope vertex sets.
// Subcommands: gen, eval, constancy, extrema, oracle, moments, conjecture,
// verify-theorems. JSON on stdout (CSV for the verification matrix);
// exit 0 = success, 1 = usage/domain error, 2 = indeterminate result or a
// failed verification.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polysum/constancy.hpp"
#include "polysum/extrema.hpp"
#include "polysum/moments.hpp"
#include "polysum/oracle.hpp"
#include "polysum/parallel.hpp"
#include "polysum/verification.hpp"

using json = nlohmann::json;
using namespace polysum;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

json manifest(const std::string& command, const json& flags, const Timer& timer) {
    return json{{"command", command},
                {"flags", flags},
                {"version", kVersion},
                {"durationMs", timer.elapsed_ms()}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct FamilyArgs {
    std::string family;
    int param = 3;
    double circumradius = 1.0;

    void attach(CLI::App* cmd, bool with_radius = true) {
        cmd->add_option("--family", family, "polytope family")->required();
        cmd->add_option("--n,--dim", param, "polygon order / ambient dimension");
        if (with_radius)
            cmd->add_option("--circumradius", circumradius, "circumradius of the polytope");
    }

    VertexSet make() const { return generate(parse_family(family, param), circumradius); }

    json flags() const {
        return json{{"family", family}, {"param", param}, {"circumradius", circumradius}};
    }
};

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

json point_json(const PointN& p) {
    json arr = json::array();
    for (double x : p) arr.push_back(x);
    return arr;
}

const char* verdict_name(ConstancyVerdict v) {
    switch (v) {
        case ConstancyVerdict::Constant: return "constant";
        case ConstancyVerdict::NonConstant: return "nonconstant";
        case ConstancyVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

json constancy_report_json(const ConstancyReport& rep) {
    return json{{"lambda", rep.lambda},
                {"spreadAbs", rep.spreadAbs},
                {"spreadRel", rep.spreadRel},
                {"isConstant", rep.isConstant},
                {"verdict", verdict_name(rep.verdict)},
                {"probeCount", rep.probeCount},
                {"seed", rep.seed}};
}

json extremum_report_json(const ExtremumReport& rep) {
    json j{{"lambda", rep.lambda},
           {"h", rep.hOffset},
           {"argmax", point_json(rep.argmax)},
           {"argmin", point_json(rep.argmin)},
           {"minValue", rep.minValue},
           {"maxLabel", rep.maxLabel},
           {"minLabel", rep.minLabel},
           {"maxAngularError", rep.maxAngularError},
           {"minAngularError", rep.minAngularError},
           {"converged", rep.converged},
           {"unboundedMax", rep.unboundedMax},
           {"seed", rep.seed},
           {"starts", rep.starts}};
    if (rep.unboundedMax)
        j["maxValue"] = "unbounded";
    else
        j["maxValue"] = rep.maxValue;
    return j;
}

json complex_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::vector<std::complex<double>> parse_points_inline(const std::string& text) {
    std::vector<std::complex<double>> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto xy = parse_csv_doubles(item);
        if (xy.size() != 2) throw InvalidParameter("each point must be re,im");
        pts.emplace_back(xy[0], xy[1]);
    }
    return pts;
}

std::vector<std::complex<double>> parse_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open points file: " + path);
    json doc = json::parse(in);
    std::vector<std::complex<double>> pts;
    for (const auto& item : doc)
        pts.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
    return pts;
}

std::string csv_header() {
    return "suite,family,param,lambda,h,sphereRadius,predictedMax,predictedMin,"
           "foundMax,foundMin,oracleMax,oracleMin,valuesAgree,status";
}

std::string csv_row(const std::string& suite, const MatrixRow& r) {
    std::ostringstream os;
    os << suite << ',' << r.family << ',' << r.param << ',' << r.lambda << ',' << r.hOffset
       << ',' << r.sphereRadius << ',' << r.predictedMax << ',' << r.predictedMin << ','
       << r.foundMax << ',' << r.foundMin << ',' << r.oracleMax << ',' << r.oracleMin << ','
       << (r.valuesAgree ? "yes" : "no") << ',' << (r.pass ? "PASS" : "FAIL");
    return os.str();
}

std::string csv_row(const DualityRow& r) {
    std::ostringstream os;
    os << "duality," << r.pair << ',' << r.param << ',' << r.lambda << ",0,1.3,-,-,-,-,-,-,-,"
       << (r.pass ? "PASS" : "FAIL");
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"powered distance sums over regular polytope vertex sets"};
    app.require_subcommand(1);
    app.fallthrough();
    // -h is taken by the offset flag of eval/extrema/oracle.
    app.set_help_flag("--help", "print help and exit");
    app.set_version_flag("--version", kVersion);

    // The cap has to be in place before any subcommand callback fires, so it
    // is read ahead of CLI11 parsing. POWERSUM_THREADS is the fallback.
    int threads = 0;
    if (const char* env = std::getenv("POWERSUM_THREADS")) threads = std::atoi(env);
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg(argv[i]);
        if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[i + 1]);
        else if (arg.rfind("--threads=", 0) == 0) threads = std::atoi(argv[i] + 10);
    }
    thread_cap().store(threads);
    app.add_option("--threads", threads, "worker thread cap, 0 = hardware");

    int exit_code = 0;
    Timer timer;

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "emit vertex coordinates as JSON");
    gen_cmd->set_help_flag("--help", "print help and exit");
    FamilyArgs gen_args;
    gen_args.attach(gen_cmd);
    gen_cmd->callback([&] {
        const VertexSet vs = gen_args.make();
        json verts = json::array();
        for (const auto& v : vs.vertices) verts.push_back(point_json(v));
        emit(json{{"manifest", manifest("gen", gen_args.flags(), timer)},
                  {"family", vs.family.name()},
                  {"param", vs.family.param},
                  {"dim", vs.dim()},
                  {"circumradius", vs.circumradius},
                  {"vertices", verts}});
    });

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the powered sum at a point");
    eval_cmd->set_help_flag("--help", "print help and exit");
    FamilyArgs eval_args;
    eval_args.attach(eval_cmd);
    double eval_lambda = 2.0, eval_h = 0.0;
    std::string eval_point;
    eval_cmd->add_option("--lambda", eval_lambda, "exponent")->required();
    eval_cmd->add_option("--h", eval_h, "squared offset h >= 0");
    eval_cmd->add_option("--point", eval_point, "comma-separated coordinates")->required();
    eval_cmd->callback([&] {
        const VertexSet vs = eval_args.make();
        const PointN m = parse_csv_doubles(eval_point);
        const double value = evaluate(vs, m, {eval_lambda, eval_h});
        json flags = eval_args.flags();
        flags["lambda"] = eval_lambda;
        flags["h"] = eval_h;
        flags["point"] = eval_point;
        emit(json{{"manifest", manifest("eval", flags, timer)}, {"value", value}});
    });

    // ---- constancy ----
    auto* con_cmd = app.add_subcommand("constancy", "scan even exponents for constancy");
    con_cmd->set_help_flag("--help", "print help and exit");
    FamilyArgs con_args;
    con_args.attach(con_cmd);
    double con_sphere_r = 1.0;
    int con_lambda_max = 12, con_probes = 10000;
    std::uint64_t con_seed = 0;
    bool con_curve = false;
    con_cmd->add_option("--sphere-radius", con_sphere_r, "radius of the probe sphere");
    con_cmd->add_option("--lambda-max", con_lambda_max, "largest even exponent scanned");
    con_cmd->add_option("--probes", con_probes, "sampled probe count per exponent");
    con_cmd->add_option("--seed", con_seed, "probe seed");
    con_cmd->add_flag("--emit-curve", con_curve, "append (lambda, spreadRel) pairs");
    con_cmd->callback([&] {
        const VertexSet vs = con_args.make();
        const SphereSpec sphere{vs.center, con_sphere_r};

        const std::vector<int> detected = constancy_set_even(vs, sphere, con_lambda_max);
        const std::vector<int> proven = proven_constancy_set(vs.family);

        json reports = json::array();
        json curve = json::array();
        bool indeterminate = false;
        for (int lam = 2; lam <= con_lambda_max; lam += 2) {
            const ConstancyReport rep =
                spread_on_sphere(vs, sphere, {static_cast<double>(lam), 0.0}, con_probes,
                                 con_seed);
            indeterminate = indeterminate || rep.verdict == ConstancyVerdict::Indeterminate;
            reports.push_back(constancy_report_json(rep));
            curve.push_back(json::array({rep.lambda, rep.spreadRel}));
        }

        json unproven = json::array();
        for (int lam : detected)
            if (std::find(proven.begin(), proven.end(), lam) == proven.end())
                unproven.push_back(lam);

        json flags = con_args.flags();
        flags["sphereRadius"] = con_sphere_r;
        flags["lambdaMax"] = con_lambda_max;
        flags["probes"] = con_probes;
        flags["seed"] = con_seed;
        json doc{{"manifest", manifest("constancy", flags, timer)},
                 {"family", vs.family.name()},
                 {"param", vs.family.param},
                 {"sphereRadius", con_sphere_r},
                 {"reports", reports},
                 {"detectedSet", detected},
                 {"provenSet", proven},
                 {"numericallyConstantUnproven", unproven}};
        if (con_curve) doc["curve"] = curve;
        emit(doc);
        if (indeterminate) exit_code = 2;
    });

    // ---- extrema ----
    auto* ext_cmd = app.add_subcommand("extrema", "multistart extremum search on the sphere");
    ext_cmd->set_help_flag("--help", "print help and exit");
    FamilyArgs ext_args;
    ext_args.attach(ext_cmd);
    double ext_sphere_r = 1.0, ext_lambda = 2.0, ext_h = 0.0;
    int ext_starts = 8;
    std::uint64_t ext_seed = 0;
    ext_cmd->add_option("--sphere-radius", ext_sphere_r, "radius of the search sphere");
    ext_cmd->add_option("--lambda", ext_lambda, "exponent")->required();
    ext_cmd->add_option("--h", ext_h, "squared offset h >= 0");
    ext_cmd->add_option("--starts", ext_starts, "random multistart count");
    ext_cmd->add_option("--seed", ext_seed, "start seed");
    ext_cmd->callback([&] {
        const VertexSet vs = ext_args.make();
        const ExtremumReport rep = find_extrema(vs, SphereSpec{vs.center, ext_sphere_r},
                                                {ext_lambda, ext_h}, ext_starts, ext_seed);
        json flags = ext_args.flags();
        flags["sphereRadius"] = ext_sphere_r;
        flags["lambda"] = ext_lambda;
        flags["h"] = ext_h;
        flags["starts"] = ext_starts;
        flags["seed"] = ext_seed;
        json doc = extremum_report_json(rep);
        doc["manifest"] = manifest("extrema", flags, timer);
        doc["family"] = vs.family.name();
        doc["param"] = vs.family.param;
        emit(doc);
        if (!rep.converged) exit_code = 2;
    });

    // ---- oracle ----
    auto* ora_cmd = app.add_subcommand("oracle", "dense-grid extrema (brute force)");
    ora_cmd->set_help_flag("--help", "print help and exit");
    FamilyArgs ora_args;
    ora_args.attach(ora_cmd);
    double ora_sphere_r = 1.0, ora_lambda = 2.0, ora_h = 0.0;
    std::size_t ora_grid = 100000;
    std::uint64_t ora_seed = 0;
    ora_cmd->add_option("--sphere-radius", ora_sphere_r, "radius of the probe sphere");
    ora_cmd->add_option("--lambda", ora_lambda, "exponent")->required();
    ora_cmd->add_option("--h", ora_h, "squared offset h >= 0");
    ora_cmd->add_option("--grid-size", ora_grid, "number of grid points");
    ora_cmd->add_option("--seed", ora_seed, "sampling seed (dim > 3)");
    ora_cmd->callback([&] {
        const VertexSet vs = ora_args.make();
        const SphereSpec sphere{vs.center, ora_sphere_r};
        const PowerSumParams p{ora_lambda, ora_h};
        const GridReport rep = vs.dim() == 2
                                   ? grid_extrema_circle(vs, sphere, p, ora_grid)
                                   : grid_extrema_sphere(vs, sphere, p, ora_grid, ora_seed);
        json flags = ora_args.flags();
        flags["sphereRadius"] = ora_sphere_r;
        flags["lambda"] = ora_lambda;
        flags["h"] = ora_h;
        flags["gridSize"] = ora_grid;
        flags["seed"] = ora_seed;
        emit(json{{"manifest", manifest("oracle", flags, timer)},
                  {"family", vs.family.name()},
                  {"param", vs.family.param},
                  {"minValue", rep.minValue},
                  {"maxValue", rep.maxValue},
                  {"argmin", point_json(rep.argmin)},
                  {"argmax", point_json(rep.argmax)},
                  {"gridSize", rep.gridSize},
                  {"seed", rep.seed}});
    });

    // ---- moments ----
    auto* mom_cmd = app.add_subcommand("moments", "planar power sums and regularity");
    mom_cmd->set_help_flag("--help", "print help and exit");
    std::string mom_points, mom_points_file;
    int mom_kmax = 0;
    double mom_circle_r = 1.0;
    std::vector<int> mom_kset;
    mom_cmd->add_option("--points", mom_points, "inline points re,im;re,im;...");
    mom_cmd->add_option("--points-file", mom_points_file, "JSON file [[re,im],...]");
    mom_cmd->add_option("--kmax", mom_kmax, "power sums up to k (default n)");
    mom_cmd->add_option("--circle-radius", mom_circle_r, "radius of the probe circle");
    mom_cmd->add_option("--kset", mom_kset,
                        "also run the constancy->regularity check for these k");
    mom_cmd->callback([&] {
        PlanarConfig cfg;
        if (!mom_points.empty())
            cfg.points = parse_points_inline(mom_points);
        else if (!mom_points_file.empty())
            cfg.points = parse_points_file(mom_points_file);
        else
            throw InvalidParameter("moments requires --points or --points-file");
        cfg.circle = SphereSpec{{0.0, 0.0}, mom_circle_r};
        const int kmax = mom_kmax > 0 ? mom_kmax : static_cast<int>(cfg.points.size());
        const MomentReport rep = power_sums(cfg, kmax);

        json ps = json::array(), es = json::array();
        for (const auto& z : rep.powerSums) ps.push_back(complex_json(z));
        for (const auto& z : rep.elementarySymmetric) es.push_back(complex_json(z));
        json flags{{"points", mom_points.empty() ? mom_points_file : mom_points},
                   {"kmax", kmax},
                   {"circleRadius", mom_circle_r}};
        json doc{{"manifest", manifest("moments", flags, timer)},
                 {"powerSums", ps},
                 {"elementarySymmetric", es},
                 {"powerSumsVanish", rep.powerSumsVanish},
                 {"equalModuli", rep.equalModuli},
                 {"isRegular", rep.isRegular},
                 {"residual", rep.residual}};
        if (!mom_kset.empty()) {
            const RegularityCheck rc = regularity_from_constancy(cfg, mom_kset);
            doc["regularityFromConstancy"] = json{{"hypothesisConstant", rc.hypothesisConstant},
                                                  {"conclusionRegular", rc.conclusionRegular}};
        }
        emit(doc);
    });

    // ---- conjecture ----
    auto* conj_cmd = app.add_subcommand("conjecture", "search for constancy counterexamples");
    conj_cmd->set_help_flag("--help", "print help and exit");
    int conj_n = 3;
    long conj_iters = 100000;
    std::uint64_t conj_seed = 0;
    bool conj_no_penalty = false;
    conj_cmd->add_option("--n", conj_n, "number of points")->required();
    conj_cmd->add_option("--iterations", conj_iters, "total annealing steps");
    conj_cmd->add_option("--seed", conj_seed, "restart seed");
    conj_cmd->add_flag("--no-regularity-penalty", conj_no_penalty,
                       "allow the regular polygon (sanity mode)");
    conj_cmd->callback([&] {
        const ConjectureSearchResult res =
            conjecture_search(conj_n, conj_iters, conj_seed, !conj_no_penalty);
        json cfg = json::array();
        for (const auto& z : res.bestConfig.points) cfg.push_back(complex_json(z));
        json flags{{"n", conj_n},
                   {"iterations", conj_iters},
                   {"seed", conj_seed},
                   {"regularityPenalty", !conj_no_penalty}};
        emit(json{{"manifest", manifest("conjecture", flags, timer)},
                  {"n", conj_n},
                  {"bestSpread", res.bestSpread},
                  {"bestConfig", cfg},
                  {"schedule",
                   json{{"cooling", 0.995},
                        {"moveScale", "0.05 * diameter * temperature"},
                        {"restartEvery", 10000}}}});
    });

    // ---- verify-theorems ----
    auto* ver_cmd = app.add_subcommand("verify-theorems",
                                       "run the prediction/search/oracle matrix (CSV)");
    ver_cmd->set_help_flag("--help", "print help and exit");
    std::string ver_suite = "all";
    std::size_t ver_grid = 100000;
    std::uint64_t ver_seed = 0;
    ver_cmd->add_option("--suite", ver_suite,
                        "planar|simplex|crosspolytope|hypercube|duality|all");
    ver_cmd->add_option("--grid-size", ver_grid, "oracle grid size");
    ver_cmd->add_option("--seed", ver_seed, "seed for searches and sampling");
    ver_cmd->callback([&] {
        std::cout << csv_header() << "\n";
        int failures = 0;
        int total = 0;
        auto run_suite = [&](const std::string& name) {
            if (name == "duality") {
                for (const auto& row : run_duality_suite(ver_seed)) {
                    std::cout << csv_row(row) << "\n";
                    ++total;
                    if (!row.pass) ++failures;
                }
                return;
            }
            std::vector<MatrixRow> rows;
            if (name == "planar") rows = run_planar_suite(ver_grid, ver_seed);
            else if (name == "simplex") rows = run_simplex_suite(ver_grid, ver_seed);
            else if (name == "crosspolytope") rows = run_crosspolytope_suite(ver_grid, ver_seed);
            else if (name == "hypercube") rows = run_hypercube_suite(ver_grid, ver_seed);
            else throw InvalidParameter("unknown suite: " + name);
            for (const auto& row : rows) {
                std::cout << csv_row(name, row) << "\n";
                ++total;
                if (!row.pass) ++failures;
            }
        };
        if (ver_suite == "all")
            for (const char* s : {"planar", "simplex", "crosspolytope", "hypercube", "duality"})
                run_suite(s);
        else
            run_suite(ver_suite);
        std::cerr << total - failures << "/" << total << " cases passed\n";
        if (failures > 0) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return exit_code;
}
