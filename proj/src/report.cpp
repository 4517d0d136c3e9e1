#include "cmclab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmclab/geodesics.hpp"
#include "cmclab/quadrature.hpp"
#include "cmclab/spectrum.hpp"
#include "cmclab/support.hpp"

namespace cmclab {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string status_of(bool pass) { return pass ? "pass" : "fail"; }

} // namespace

void VerificationReport::add(const std::string& id, const std::string& anchor,
                             bool pass, double residual, const std::string& note) {
    rows.push_back({id, anchor, status_of(pass), residual, note});
}

void VerificationReport::skip(const std::string& id, const std::string& anchor,
                              const std::string& note) {
    rows.push_back({id, anchor, "skip", 0.0, note});
}

bool VerificationReport::all_pass() const {
    for (const auto& row : rows)
        if (row.status == "fail") return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["seed"] = seed;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["id"] = row.id;
        r["anchor"] = row.anchor;
        r["status"] = row.status;
        r["residual"] = row.residual;
        if (!row.note.empty()) r["note"] = row.note;
        checks.push_back(r);
    }
    j["checks"] = checks;
    return j;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string normalize_key(std::string key) {
    for (char& c : key)
        if (c == '-') c = '_';
    return key;
}

std::vector<double> parse_list(const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

void apply_key(RunConfig& cfg, const std::string& raw_key, const std::string& value) {
    const std::string key = normalize_key(raw_key);
    try {
        if (key == "family") cfg.family = value;
        else if (key == "n") cfg.n = std::stoi(value);
        else if (key == "k") cfg.k = std::stoi(value);
        else if (key == "r") cfg.r = std::stod(value);
        else if (key == "c") cfg.c = std::stod(value);
        else if (key == "eps") cfg.eps = std::stod(value);
        else if (key == "rho0") cfg.rho0 = std::stod(value);
        else if (key == "m_freq") cfg.m_freq = std::stoi(value);
        else if (key == "v") cfg.v = parse_list(value);
        else if (key == "samples") cfg.samples = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "out") cfg.out_dir = value;
        else if (key == "r_grid") cfg.r_grid = parse_list(value);
        else if (key == "jmax") cfg.j_max = std::stoi(value);
        else if (key == "grid") cfg.grid = std::stoi(value);
        else if (key == "tol_grad") cfg.tol_grad = std::stod(value);
        else if (key == "tol_lap") cfg.tol_lap = std::stod(value);
        else if (key == "tol_prop") cfg.tol_prop = std::stod(value);
        else if (key == "tol_cmc") cfg.tol_cmc = std::stod(value);
        else if (key == "tol_path") cfg.tol_path = std::stod(value);
        else if (key == "tol_height_law") cfg.tol_height_law = std::stod(value);
        else throw BadSpec("unknown config key '" + raw_key + "'");
    } catch (const std::invalid_argument&) {
        throw BadSpec("bad value for config key '" + raw_key + "'");
    } catch (const std::out_of_range&) {
        throw BadSpec("bad value for config key '" + raw_key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::vector<std::string>& skip) {
    std::ifstream in(path);
    if (!in) throw BadSpec("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw BadSpec("config line without '=': " + line);
        std::string key = normalize_key(trim(line.substr(0, eq)));
        std::string value = trim(line.substr(eq + 1));
        bool overridden = false;
        for (const auto& s : skip)
            if (normalize_key(s) == key) overridden = true;
        if (!overridden) apply_key(cfg, key, value);
    }
}

void write_text_file(const std::string& dir, const std::string& name,
                     const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    out << content;
}

Hypersurface build_family(const RunConfig& cfg) {
    if (cfg.family == "clifford") {
        return make_clifford({cfg.n, cfg.k, cfg.r});
    }
    if (cfg.family == "umbilical") {
        UmbilicalSpec spec;
        spec.dim = cfg.n;
        spec.height = cfg.c;
        return make_umbilical(spec);
    }
    if (cfg.family == "counterexample") {
        CounterexampleSpec spec;
        spec.base = {cfg.n, cfg.rho0, cfg.eps, cfg.m_freq};
        return make_counterexample(spec);
    }
    if (cfg.family == "base") {
        return make_base_surface({cfg.n, cfg.rho0, cfg.eps, cfg.m_freq});
    }
    throw BadSpec("unknown family '" + cfg.family + "'");
}

Vec config_direction(const RunConfig& cfg, int ambient) {
    if (!cfg.v.empty()) {
        if (static_cast<int>(cfg.v.size()) != ambient)
            throw BadSpec("direction vector has the wrong ambient dimension");
        Vec v = Eigen::Map<const Vec>(cfg.v.data(), ambient);
        if (v.norm() < 1e-14) throw BadSpec("direction vector must be nonzero");
        return v;
    }
    // family defaults: first-factor axis for products, a vector orthogonal
    // to the slicing axis for umbilical spheres
    if (cfg.family == "umbilical") return Vec::Unit(ambient, 1);
    return Vec::Unit(ambient, 0);
}

VerificationReport run_verify(const RunConfig& cfg) {
    Hypersurface surface = build_family(cfg);
    VerificationReport report{"verify", cfg.seed, {}};
    Lcg rng(cfg.seed);
    const int count = std::max(cfg.samples, 100);
    std::vector<ChartPoint> pts = sample_points(surface, count, rng);
    Vec v = config_direction(cfg, surface.ambient);

    double decomposition = 0.0;
    for (const auto& p : pts) {
        SupportSample sm = support_sample(surface, p, v);
        decomposition = std::max({decomposition, std::abs(sm.tangential.dot(sm.point)),
                                  std::abs(sm.tangential.dot(sm.normal))});
    }
    report.add("support-decomposition",
               "tangential part of a fixed vector is orthogonal to position and normal",
               decomposition < surface.geo_tol() * 10, decomposition);

    double grad_h = 0.0, grad_f = 0.0;
    for (const auto& p : pts) {
        GradientResiduals g = check_gradient_identities(surface, p, v);
        grad_h = std::max(grad_h, g.height);
        grad_f = std::max(grad_f, g.normal_component);
    }
    report.add("gradient-height", "gradient of the height function is the tangential part",
               grad_h < cfg.tol_grad, grad_h);
    report.add("gradient-normal",
               "gradient of the normal component is minus the shape image of the "
               "tangential part",
               grad_f < cfg.tol_grad, grad_f);

    double lap_h = 0.0, lap_f = 0.0;
    bool cmc = true;
    bool have_f = true;
    for (const auto& p : pts) {
        LaplacianResiduals l = check_laplacian_identities(surface, p, v, cfg.tol_cmc);
        lap_h = std::max(lap_h, l.height);
        cmc = l.cmc;
        if (l.normal_component)
            lap_f = std::max(lap_f, *l.normal_component);
        else
            have_f = false;
        if (!l.cmc && !l.normal_component) continue;
    }
    report.add("laplacian-height",
               "Laplacian of the height: -n h + n H f against the discrete stencil",
               lap_h < cfg.tol_lap, lap_h);
    if (have_f && cmc)
        report.add("laplacian-normal",
                   "Laplacian of the normal component: -|A|^2 f + n H h (needs CMC)",
                   lap_f < cfg.tol_lap, lap_f);
    else
        report.skip("laplacian-normal",
                    "Laplacian of the normal component: -|A|^2 f + n H h (needs CMC)",
                    "NotCMC: mean curvature is not constant on this surface");

    try {
        ProportionalityResult prop = proportionality_scan(surface, v, pts, cfg.tol_prop);
        report.add("proportionality",
                   "height stays proportional to the normal component",
                   prop.holds, prop.max_residual,
                   "ratio=" + format_double(prop.ratio));
    } catch (const FIndeterminate&) {
        report.skip("proportionality", "height stays proportional to the normal component",
                    "normal component vanishes identically (great-sphere collapse)");
    }

    QuadratureGrid grid = build_quadrature(surface);
    int dim_h = gram_dimension(surface, SupportFamily::Height, grid);
    int dim_f = gram_dimension(surface, SupportFamily::NormalComponent, grid);
    int expect_h = surface.ambient, expect_f = surface.ambient;
    if (cfg.family == "umbilical" && std::abs(cfg.c) < 1e-12) {
        expect_h = surface.ambient - 1;
        expect_f = 1;
    }
    report.add("gram-heights", "dimension of the height-function family",
               dim_h == expect_h, static_cast<double>(dim_h),
               "rank=" + std::to_string(dim_h) + " expected=" + std::to_string(expect_h));
    report.add("gram-normals", "dimension of the normal-component family",
               dim_f == expect_f, static_cast<double>(dim_f),
               "rank=" + std::to_string(dim_f) + " expected=" + std::to_string(expect_f));

    if (!cfg.out_dir.empty())
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    return report;
}

VerificationReport run_geodesics(const RunConfig& cfg) {
    Hypersurface surface = build_family(cfg);
    VerificationReport report{"geodesics", cfg.seed, {}};
    Lcg rng(cfg.seed);
    Vec v = config_direction(cfg, surface.ambient);

    ProportionalityResult prop =
        proportionality_scan(surface, v, sample_points(surface, std::max(cfg.samples, 100), rng),
                             cfg.tol_prop);
    report.add("proportionality", "height stays proportional to the normal component",
               prop.holds, prop.max_residual, "ratio=" + format_double(prop.ratio));
    const double lam = prop.ratio;

    ChartPoint anchor = find_zero_height_anchor(surface, v, rng);
    CircleParams params = circle_params(surface, anchor, v, lam);
    const double w = params.omega;
    const double s_max = kPi / (2.0 * w) - 0.05;

    CurvePath flow = integrate_tangent_flow(surface, anchor, v, -4.0, 4.0, 1e-3, true);
    report.add("flow-richardson", "integrator agrees with its half-step rerun",
               flow.richardson_error < tol::ode, flow.richardson_error);
    CurvePath arc = reparametrize_arclength(surface, v, flow);

    CurvatureData anchor_cd = shape_operator(surface, anchor);
    std::vector<double> others;
    {
        std::vector<double> ks(anchor_cd.kappas.data(),
                               anchor_cd.kappas.data() + anchor_cd.kappas.size());
        int drop = 0;
        for (int i = 1; i < static_cast<int>(ks.size()); ++i)
            if (std::abs(ks[i] + 1.0 / lam) < std::abs(ks[drop] + 1.0 / lam)) drop = i;
        for (int i = 0; i < static_cast<int>(ks.size()); ++i)
            if (i != drop) others.push_back(ks[i]);
    }

    double dev_point = 0.0, dev_normal = 0.0, dev_height = 0.0, dev_kappa = 0.0;
    std::ostringstream tsv;
    tsv << "s";
    for (int i = 0; i < surface.ambient; ++i) tsv << "\tx" << i;
    tsv << "\theight";
    for (std::size_t i = 0; i < others.size(); ++i) tsv << "\tkappa_meas" << i + 1;
    for (std::size_t i = 0; i < others.size(); ++i) tsv << "\tkappa_pred" << i + 1;
    tsv << "\n";
    for (const auto& smp : arc.samples) {
        if (std::abs(smp.param) > s_max) continue;
        CirclePoint cp = circle_point(params, smp.param);
        dev_point = std::max(dev_point, (smp.point - cp.point).norm());
        NormalJet nu = unit_normal(surface, smp.chart);
        dev_normal = std::max(dev_normal, (nu.value - cp.normal).norm());
        double height = smp.point.dot(v);
        dev_height = std::max(
            dev_height,
            std::abs(height - std::sin(w * (smp.param - params.phase)) / w));

        CurvatureData cd = shape_operator(surface, smp.chart);
        std::vector<double> meas(cd.kappas.data(), cd.kappas.data() + cd.kappas.size());
        int drop = 0;
        for (int i = 1; i < static_cast<int>(meas.size()); ++i)
            if (std::abs(meas[i] + 1.0 / lam) < std::abs(meas[drop] + 1.0 / lam)) drop = i;
        meas.erase(meas.begin() + drop);
        std::vector<double> pred;
        for (double kappa : others) pred.push_back(transport_curvature(kappa, lam, smp.param));
        std::sort(meas.begin(), meas.end());
        std::sort(pred.begin(), pred.end());
        tsv << format_double(smp.param);
        for (int i = 0; i < surface.ambient; ++i) tsv << '\t' << format_double(smp.point[i]);
        tsv << '\t' << format_double(height);
        for (double kappa : meas) tsv << '\t' << format_double(kappa);
        for (double kappa : pred) tsv << '\t' << format_double(kappa);
        tsv << '\n';
        for (std::size_t i = 0; i < pred.size(); ++i)
            dev_kappa = std::max(dev_kappa, std::abs(pred[i] - meas[i]));
    }
    report.add("circle-closed-form", "integrated flow matches the closed-form circle",
               dev_point < cfg.tol_path, dev_point);
    report.add("normal-closed-form", "normal along the circle matches its closed form",
               dev_normal < cfg.tol_path, dev_normal);
    report.add("height-law", "height along the circle is a pure sine in arc length",
               dev_height < cfg.tol_height_law, dev_height);
    report.add("curvature-transport",
               "curvature transport law matches directly computed curvatures",
               dev_kappa < cfg.tol_path, dev_kappa);

    double geo = max_tangential_acceleration(surface, arc);
    report.add("geodesic-property", "arc-length flow has purely normal acceleration",
               geo < 1e-4, geo);

    double circle_law = 0.0;
    for (std::size_t i = 1; i + 1 < arc.samples.size(); ++i) {
        double ds = arc.samples[i + 1].param - arc.samples[i].param;
        Vec acc2 = (arc.samples[i + 1].velocity - 2.0 * arc.samples[i].velocity +
                    arc.samples[i - 1].velocity) /
                   (ds * ds);
        circle_law = std::max(circle_law,
                              (acc2 + w * w * arc.samples[i].velocity).norm());
    }
    report.add("circle-law", "velocity obeys the harmonic circle equation",
               circle_law < 1e-3 * w * w, circle_law);

    double accel_law = 0.0;
    for (std::size_t i = 1; i + 1 < arc.samples.size(); ++i) {
        double ds = arc.samples[i + 1].param - arc.samples[i].param;
        Vec acc = (arc.samples[i + 1].point - 2.0 * arc.samples[i].point +
                   arc.samples[i - 1].point) /
                  (ds * ds);
        NormalJet nu = unit_normal(surface, arc.samples[i].chart);
        accel_law = std::max(
            accel_law, (acc + arc.samples[i].point + (1.0 / lam) * nu.value).norm());
    }
    report.add("acceleration-law",
               "geodesic acceleration is minus the position minus the scaled normal",
               accel_law < 1e-4, accel_law);

    if (!cfg.out_dir.empty()) {
        write_text_file(cfg.out_dir, "geodesic_" + cfg.family + ".tsv", tsv.str());
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    }
    return report;
}

VerificationReport run_spectrum(const RunConfig& cfg) {
    if (cfg.family != "clifford")
        throw BadSpec("spectrum applies to the clifford family");
    CliffordSpec spec{cfg.n, cfg.k, cfg.r};
    int jm = cfg.j_max >= 0 ? cfg.j_max : default_j_max(spec);
    CliffordSpectrum spectrum = clifford_spectrum(spec, jm);
    VerificationReport report{"spectrum", cfg.seed, {}};
    report.add("spectrum-truncation", "retained lines cover the threshold window",
               spectrum.truncation_ok, static_cast<double>(jm),
               "j_max=" + std::to_string(jm));

    double mean = clifford_mean(cfg.n, cfg.k, cfg.r);
    if (std::abs(mean) > 1e-12) {
        IndexTestConstants constants =
            index_test_constants(mean, clifford_norm_a_sq(cfg.n, cfg.k, cfg.r), cfg.n);
        double best_plus = 1e300, best_minus = 1e300;
        for (const auto& line : spectrum.lines) {
            best_plus = std::min(best_plus, std::abs(line.mu - constants.mu_plus));
            best_minus = std::min(best_minus, std::abs(line.mu - constants.mu_minus));
        }
        report.add("test-eigenvalues-in-spectrum",
                   "both test-function eigenvalues appear as spectrum lines",
                   std::max(best_plus, best_minus) < 1e-9,
                   std::max(best_plus, best_minus));
    }

    std::ostringstream csv;
    csv << "p,q,mu,mult,jac,class\n";
    for (const auto& line : spectrum.lines) {
        double jac = line.mu - spectrum.threshold;
        std::string cls = std::abs(jac) <= tol::tie ? "kernel" : (jac < 0 ? "neg" : "pos");
        csv << line.p << ',' << line.q << ',' << format_double(line.mu) << ','
            << line.mult << ',' << format_double(jac) << ',' << cls << '\n';
    }
    if (!cfg.out_dir.empty()) {
        write_text_file(cfg.out_dir, "spectrum.csv", csv.str());
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    }
    return report;
}

VerificationReport run_index_sweep(const RunConfig& cfg) {
    if (cfg.r_grid.empty()) throw BadSpec("index sweep needs a nonempty radius grid");
    VerificationReport report{"index-sweep", cfg.seed, {}};
    std::ostringstream csv, tsv;
    csv << "r,weak,strong,threshold,kernel\n";
    tsv << "r\tweak\n";
    long long min_weak = -1;
    std::vector<std::pair<double, long long>> rows;
    for (double r : cfg.r_grid) {
        CliffordSpec spec{cfg.n, cfg.k, r};
        IndexReport idx = index_counts(spec, cfg.j_max >= 0 ? cfg.j_max : -1);
        rows.emplace_back(r, idx.weak);
        if (min_weak < 0 || idx.weak < min_weak) min_weak = idx.weak;
        std::string kernel;
        for (const auto& line : idx.kernel) {
            if (!kernel.empty()) kernel += ';';
            kernel += "(" + std::to_string(line.p) + "," + std::to_string(line.q) + ")";
        }
        csv << format_double(r) << ',' << idx.weak << ',' << idx.strong << ','
            << format_double(idx.threshold) << ',' << kernel << '\n';
        tsv << format_double(r) << '\t' << idx.weak << '\n';
        report.add("index-r=" + format_double(r),
                   "weak index from the analytic spectrum enumeration",
                   idx.truncation_ok, static_cast<double>(idx.weak),
                   "weak=" + std::to_string(idx.weak) +
                       " strong=" + std::to_string(idx.strong));
    }
    double plateau_lo = 0.0, plateau_hi = 0.0;
    double best_len = -1.0;
    std::size_t i = 0;
    while (i < rows.size()) {
        if (rows[i].second != min_weak) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < rows.size() && rows[j + 1].second == min_weak) ++j;
        if (rows[j].first - rows[i].first > best_len) {
            best_len = rows[j].first - rows[i].first;
            plateau_lo = rows[i].first;
            plateau_hi = rows[j].first;
        }
        i = j + 1;
    }
    report.add("plateau", "minimal weak index is attained on a radius plateau", true,
               static_cast<double>(min_weak),
               "[" + format_double(plateau_lo) + ", " + format_double(plateau_hi) + "]");
    if (!cfg.out_dir.empty()) {
        write_text_file(cfg.out_dir, "index_sweep.csv", csv.str());
        write_text_file(cfg.out_dir, "index_sweep.tsv", tsv.str());
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    }
    return report;
}

VerificationReport run_counterexample(const RunConfig& cfg) {
    RunConfig inner = cfg;
    inner.family = "counterexample";
    Hypersurface surface = build_family(inner);
    VerificationReport report{"counterexample", cfg.seed, {}};
    Lcg rng(cfg.seed);
    std::vector<ChartPoint> pts =
        sample_points(surface, std::max(cfg.samples, 100), rng);
    Vec v = Vec::Unit(surface.ambient, 0);

    double off_sphere = 0.0, equality = 0.0, gauss_dev = 0.0;
    for (const auto& p : pts) {
        SurfaceJet jet = immersion_jet(surface, p);
        NormalJet nu = unit_normal(surface, p);
        off_sphere = std::max(off_sphere, std::abs(jet.value.norm() - 1.0));
        equality = std::max(equality, std::abs(jet.value.dot(v) - nu.value.dot(v)));
        Vec computed = complement_normal(jet, 1.0);
        if (computed.dot(nu.value) < 0) computed = -computed;
        gauss_dev = std::max(gauss_dev, (computed - nu.value).norm());
    }
    report.add("on-sphere", "the product immersion lands on the unit sphere",
               off_sphere < 1e-9, off_sphere);
    report.add("height-equals-normal-component",
               "height and normal component agree for the distinguished direction",
               equality < 1e-8, equality);
    report.add("gauss-map-match",
               "closed-form normal agrees with the computed complement",
               gauss_dev < 1e-8, gauss_dev);
    report.add("base-curvature-window",
               "base curvatures stay strictly inside the unit-to-two window",
               true, surface.metadata.at("base_kappa_max"),
               "[" + format_double(surface.metadata.at("base_kappa_min")) + ", " +
                   format_double(surface.metadata.at("base_kappa_max")) + "]");
    double spread = mean_curvature_spread(surface, 128, cfg.seed);
    report.add("mean-curvature-nonconstant",
               "the product is not CMC: sampled mean curvature spread is large",
               spread > 1e-4, spread);
    report.add("immersion-factor",
               "tangential stretch factor of the product stays away from zero",
               surface.metadata.at("immersion_factor_min") > tol::rank,
               surface.metadata.at("immersion_factor_min"));

    if (!cfg.out_dir.empty())
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    return report;
}

VerificationReport run_lemma_demo(const RunConfig& cfg) {
    VerificationReport report{"lemma22", cfg.seed, {}};

    std::vector<LinearPoly> ps{{1, 1}, {1, 2}, {1, 3}};
    auto qs = deleted_products(ps);
    bool degrees_ok = true;
    for (const auto& q : qs) degrees_ok = degrees_ok && q.degree() == 2;
    bool eval_ok = qs[0].eval(Rational(-1)) == 2 && qs[1].eval(Rational(-1)) == 0 &&
                   qs[2].eval(Rational(-1)) == 0;
    report.add("deleted-products", "deleted products have full degree and the "
                                   "diagonal evaluation pattern",
               degrees_ok && eval_ok, 0.0);
    report.add("independence", "deleted products are linearly independent",
               independence_verdict(qs).independent, 0.0);

    FractionVerdict zero = partial_fraction_verdict(
        ps, {Rational(0), Rational(0), Rational(0)}, Rational(0));
    report.add("zero-identity", "the all-zero instance is the only identity",
               zero.identity_holds, 0.0);

    std::vector<LinearPoly> swap_ps{{1, 1}, {2, 1}};
    FractionVerdict swap_case =
        partial_fraction_verdict(swap_ps, {Rational(1), Rational(-1)}, Rational(0));
    report.add("swap-case", "a simple nonzero instance is rejected with a witness",
               !swap_case.identity_holds && swap_case.witness_degree == 1 &&
                   swap_case.witness == 1,
               0.0);

    bool duplicate_ok = false;
    try {
        deleted_products({{1, 1}, {2, 2}});
    } catch (const DuplicateRoot&) {
        duplicate_ok = true;
    }
    report.add("duplicate-root", "coinciding roots are rejected", duplicate_ok, 0.0);

    Lcg rng(cfg.seed);
    int false_accepts = 0;
    const int trials = std::max(cfg.samples, 100);
    for (int trial = 0; trial < trials; ++trial) {
        int kk = 2 + static_cast<int>(rng.below(4));
        std::vector<LinearPoly> rps;
        std::vector<Rational> roots;
        while (static_cast<int>(rps.size()) < kk) {
            Rational slope(1 + static_cast<long long>(rng.below(9)),
                           1 + static_cast<long long>(rng.below(9)));
            Rational offset(static_cast<long long>(rng.below(19)) - 9,
                            1 + static_cast<long long>(rng.below(9)));
            LinearPoly lp{slope, offset};
            bool fresh = true;
            for (const auto& root : roots)
                if (root == lp.root()) fresh = false;
            if (!fresh) continue;
            roots.push_back(lp.root());
            rps.push_back(lp);
        }
        std::vector<Rational> as;
        bool any_nonzero = false;
        for (int i = 0; i < kk; ++i) {
            long long num = static_cast<long long>(rng.below(13)) - 6;
            as.emplace_back(num);
            if (num != 0) any_nonzero = true;
        }
        Rational d(static_cast<long long>(rng.below(13)) - 6);
        if (!any_nonzero && d == 0) as[0] = 1;
        if (partial_fraction_verdict(rps, as, d).identity_holds) ++false_accepts;
    }
    report.add("random-rejections",
               "random nonzero instances are rejected without exception",
               false_accepts == 0, static_cast<double>(false_accepts),
               std::to_string(trials) + " trials");

    if (!cfg.out_dir.empty())
        write_text_file(cfg.out_dir, "report.json", report.to_json().dump(2) + "\n");
    return report;
}

VerificationReport run_command(const RunConfig& cfg) {
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "geodesics") return run_geodesics(cfg);
    if (cfg.command == "spectrum") return run_spectrum(cfg);
    if (cfg.command == "index-sweep") return run_index_sweep(cfg);
    if (cfg.command == "counterexample") return run_counterexample(cfg);
    if (cfg.command == "lemma22") return run_lemma_demo(cfg);
    throw BadSpec("unknown command '" + cfg.command + "'");
}

} // namespace cmclab
