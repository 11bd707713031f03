// fockop: numerical front end for Toeplitz operators on generalized Fock
// spaces. Every subcommand emits {config, results, diagnostics} as JSON (or
// the flattened results as CSV). Exit codes: 0 success, 1 validation error,
// 2 numerical failure.

#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockop/gamma.hpp"
#include "fockop/mellin.hpp"
#include "fockop/mittag_leffler.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"
#include "fockop/symbol.hpp"
#include "fockop/toeplitz.hpp"

using json = nlohmann::ordered_json;
using namespace fockop;

namespace {

struct RunConfig {
    int d = 1;
    double m = 1.0;
    double alpha = 1.0;
    double s = 0.0;
    int degree = 10;
    int n_r = 60;
    int n_theta = 64;
    double tol = 1e-8;
    std::string format = "json";
    std::string output;

    SpaceParams space() const { return SpaceParams(d, m, alpha, s); }
    QuadSpec quad() const { return QuadSpec{n_r, n_theta, DEOptions{}}; }

    json to_json() const {
        return json{{"d", d},       {"m", m},           {"alpha", alpha}, {"s", s},
                    {"degree", degree}, {"n_r", n_r},   {"n_theta", n_theta},
                    {"tol", tol},   {"format", format}, {"output", output}};
    }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--d", cfg.d, "complex dimension");
    cmd->add_option("--m", cfg.m, "weight exponent (>= 1)");
    cmd->add_option("--alpha", cfg.alpha, "scale parameter (> 0)");
    cmd->add_option("--s", cfg.s, "power weight (>= 0)");
    cmd->add_option("--degree,-D", cfg.degree, "truncation degree");
    cmd->add_option("--nr", cfg.n_r, "radial quadrature size");
    cmd->add_option("--ntheta", cfg.n_theta, "angular quadrature size");
    cmd->add_option("--tol", cfg.tol, "tolerance used by pass/fail fields");
    cmd->add_option("--format", cfg.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", cfg.output, "output path (default: stdout)");
}

Complex parse_complex_arg(const std::string& text) {
    const Symbol s = parse_symbol(text, 1);
    if (!s.is_constant()) {
        throw std::invalid_argument("expected a constant expression, got '" + text + "'");
    }
    return *s.constant_value();
}

std::vector<Complex> parse_point(const std::string& text, int d) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex_arg(item));
    if (static_cast<int>(out.size()) != d) {
        throw std::invalid_argument("point '" + text + "' does not have " + std::to_string(d) +
                                    " coordinates");
    }
    return out;
}

MultiIndex parse_multiindex(const std::string& text, int d) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (static_cast<int>(out.size()) != d) {
        throw std::invalid_argument("multi-index '" + text + "' does not have " +
                                    std::to_string(d) + " entries");
    }
    return MultiIndex(out);
}

json report_json(const ResidualReport& r) {
    json bands = json::object();
    for (const auto& [band, mass] : r.band_mass) bands[std::to_string(band)] = mass;
    return json{{"frobenius_residual", r.frobenius_residual},
                {"max_entry_residual", r.max_entry_residual},
                {"raw_frobenius", r.raw_frobenius},
                {"raw_max_entry", r.raw_max_entry},
                {"normalizer", r.normalizer},
                {"degree", r.degree},
                {"interior_degree", r.interior_degree},
                {"window_capped", r.window_capped},
                {"band_mass", bands}};
}

void emit(const RunConfig& cfg, const json& doc) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) throw std::invalid_argument("cannot open output path " + cfg.output);
        out = &file;
    }
    if (cfg.format == "json") {
        *out << doc.dump(2) << "\n";
        return;
    }
    // CSV: flatten the results array; header from the first row
    const auto& results = doc.at("results");
    if (!results.is_array() || results.empty()) {
        *out << "\n";
        return;
    }
    std::vector<std::string> cols;
    for (auto it = results[0].begin(); it != results[0].end(); ++it) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        *out << (i ? "," : "") << cols[i];
    }
    *out << "\n";
    for (const auto& row : results) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) *out << ",";
            const auto& v = row.contains(cols[i]) ? row.at(cols[i]) : json();
            if (v.is_string()) {
                *out << '"' << v.get<std::string>() << '"';
            } else {
                *out << v.dump();
            }
        }
        *out << "\n";
    }
}

// quadrature route for the moment of nu, independent of the closed form
double moment_by_quadrature(const SpaceParams& p, const MultiIndex& nu, int n_r) {
    const double c = normalization_constant(p);
    const double two_pi = 2.0 * std::numbers::pi;
    if (p.d == 1) {
        const RadialRule rule = build_radial_rule(p, n_r);
        double acc = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
            acc += rule.weights[static_cast<std::size_t>(i)] *
                   std::pow(rule.nodes[static_cast<std::size_t>(i)], 2 * nu[0]);
        }
        return c * two_pi * acc;
    }
    if (p.d == 2) {
        const SpaceParams axis(1, p.m, p.alpha, 0.0);
        const RadialRule rule = build_radial_rule(axis, n_r);
        double acc = 0.0;
        for (int i1 = 0; i1 < rule.size(); ++i1) {
            const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
            for (int i2 = 0; i2 < rule.size(); ++i2) {
                const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
                const double rho = r1 * r1 + r2 * r2;
                const double corr =
                    (p.s == 0.0 ? 1.0 : std::pow(rho, p.s)) *
                    std::exp(-p.alpha * (std::pow(rho, p.m) - std::pow(r1, 2.0 * p.m) -
                                         std::pow(r2, 2.0 * p.m)));
                acc += rule.weights[static_cast<std::size_t>(i1)] *
                       rule.weights[static_cast<std::size_t>(i2)] * corr *
                       std::pow(r1, 2 * nu[0]) * std::pow(r2, 2 * nu[1]);
            }
        }
        return c * two_pi * two_pi * acc;
    }
    throw std::invalid_argument("moments: quadrature route supports d <= 2");
}

// ---------------------------------------------------------------------------

int cmd_moments(const RunConfig& cfg, int max_degree) {
    const SpaceParams p = cfg.space();
    if (p.d > 2) throw std::invalid_argument("moments: d <= 2");
    json results = json::array();
    double worst = 0.0;
    for (const MultiIndex& nu : graded_basis(p, max_degree)) {
        const double closed = moment(p, nu);
        const double quad = moment_by_quadrature(p, nu, cfg.n_r);
        const double rel = std::abs(closed - quad) / closed;
        worst = std::max(worst, rel);
        results.push_back(json{{"nu", nu.to_string()},
                               {"total_degree", nu.total_degree()},
                               {"moment_closed", closed},
                               {"moment_quadrature", quad},
                               {"rel_err", rel},
                               {"pass", rel <= cfg.tol}});
    }
    json doc{{"config", cfg.to_json()},
             {"results", results},
             {"diagnostics", json{{"worst_rel_err", worst}, {"max_degree", max_degree}}}};
    emit(cfg, doc);
    return 0;
}

int cmd_kernel(const RunConfig& cfg, const std::string& xi_s, const std::string& zeta_s,
               const std::vector<double>& ts) {
    const SpaceParams p = cfg.space();
    json results = json::array();
    if (!xi_s.empty()) {
        const auto xi = parse_point(xi_s, p.d);
        const auto zt = parse_point(zeta_s.empty() ? xi_s : zeta_s, p.d);
        const Complex k = kernel_eval(p, xi, zt);
        results.push_back(json{{"xi", xi_s},
                               {"zeta", zeta_s.empty() ? xi_s : zeta_s},
                               {"kernel_re", k.real()},
                               {"kernel_im", k.imag()}});
    }
    for (double t : ts) {
        const double ratio = kernel_asymptotic_ratio(p, t);
        results.push_back(json{{"t", t},
                               {"t_pow_m", std::pow(t, p.m)},
                               {"asymptotic_ratio", ratio},
                               {"deviation", std::abs(ratio - 1.0)}});
    }
    if (results.empty()) {
        throw std::invalid_argument("kernel: provide --xi (with optional --zeta-pt) or --t");
    }
    emit(cfg,
         json{{"config", cfg.to_json()}, {"results", results}, {"diagnostics", json::object()}});
    return 0;
}

int cmd_eigenvalues(const RunConfig& cfg, const std::string& f_s, int max_degree) {
    const SpaceParams p = cfg.space();
    const Symbol f = parse_symbol(f_s, p.d);
    if (!f.is_radial()) throw std::invalid_argument("eigenvalues: symbol must be radial");
    json results = json::array();
    for (int n = 0; n <= max_degree; ++n) {
        const Complex zeta(static_cast<double>(n), 0.0);
        const Complex by_quad = omega_quadrature(f, zeta, p);
        json row{{"degree", n}, {"omega_re", by_quad.real()}, {"omega_im", by_quad.imag()}};
        if (auto closed = omega_closed_form(f, zeta, p)) {
            row["closed_re"] = closed->real();
            row["closed_im"] = closed->imag();
            row["rel_diff"] = std::abs(by_quad - *closed) / std::max(std::abs(*closed), 1e-300);
        }
        results.push_back(row);
    }
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", results},
                   {"diagnostics", json{{"symbol", f.description()}}}});
    return 0;
}

int cmd_matrix(const RunConfig& cfg, const std::string& g_s) {
    const SpaceParams p = cfg.space();
    const Symbol g = parse_symbol(g_s, p.d);
    const TruncatedOperator op = build_matrix(g, p, cfg.degree, cfg.quad());
    json results = json::array();
    for (int i = 0; i < op.size(); ++i) {
        for (int jcol = 0; jcol < op.size(); ++jcol) {
            const Complex v = op.matrix(i, jcol);
            if (std::abs(v) < 1e-15) continue;
            results.push_back(json{{"nu", op.basis[static_cast<std::size_t>(i)].to_string()},
                                   {"kappa", op.basis[static_cast<std::size_t>(jcol)].to_string()},
                                   {"re", v.real()},
                                   {"im", v.imag()}});
        }
    }
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", results},
                   {"diagnostics", json{{"basis_size", op.size()}, {"symbol", g.description()}}}});
    return 0;
}

int cmd_commute(const RunConfig& cfg, const std::string& f_s, const std::string& g_s) {
    const SpaceParams p = cfg.space();
    const Symbol f = parse_symbol(f_s, p.d);
    const Symbol g = parse_symbol(g_s, p.d);
    const ResidualReport rep = commutator_residual(f, g, p, cfg.degree, cfg.quad());
    const double off = offblock_mass(g, p, cfg.degree, cfg.quad());
    json result = report_json(rep);
    result["offblock_mass"] = off;
    result["commutes"] = rep.frobenius_residual <= cfg.tol;
    result["rotation_invariant_numeric"] = off <= cfg.tol;
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", json::array({result})},
                   {"diagnostics", json{{"f", f.description()}, {"g", g.description()}}}});
    return 0;
}

int cmd_zero_product(const RunConfig& cfg, const std::string& f_s, const std::string& g_s) {
    const SpaceParams p = cfg.space();
    const Symbol f = parse_symbol(f_s, p.d);
    const Symbol g = parse_symbol(g_s, p.d);
    const auto [fg, gf] = zero_product_residual(f, g, p, cfg.degree, cfg.quad());
    json a = report_json(fg);
    a["product"] = "T_f T_g";
    json b = report_json(gf);
    b["product"] = "T_g T_f";
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", json::array({a, b})},
                   {"diagnostics", json{{"f", f.description()}, {"g", g.description()}}}});
    return 0;
}

int cmd_equation(const RunConfig& cfg, const std::string& f1_s, const std::string& f2_s,
                 const std::string& g_s, const std::string& k_s, const std::string& n_s, int dl) {
    const SpaceParams p = cfg.space();
    const Symbol f1 = parse_symbol(f1_s, p.d);
    const Symbol f2 = parse_symbol(f2_s, p.d);
    const Symbol g = parse_symbol(g_s, p.d);
    const MultiIndex k = parse_multiindex(k_s, p.d);
    const MultiIndex n = parse_multiindex(n_s, p.d);
    const ResidualReport rep = equation_residual(f1, f2, g, k, n, p, dl, cfg.quad());
    json result = report_json(rep);
    result["max_obstruction"] = rep.max_entry_residual;
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", json::array({result})},
                   {"diagnostics", json{{"f1", f1.description()},
                                        {"f2", f2.description()},
                                        {"g", g.description()},
                                        {"k", k.to_string()},
                                        {"n", n.to_string()},
                                        {"D_l", dl}}}});
    return 0;
}

int cmd_period_scan(const RunConfig& cfg, const std::string& f1_s, const std::string& f2_s,
                    int n_lo, int n_hi, const PeriodScanSpec& spec) {
    const SpaceParams p = cfg.space();
    const Symbol f1 = parse_symbol(f1_s, p.d);
    const Symbol f2 = parse_symbol(f2_s, p.d);
    const auto rep = period_scan(f1, f2, p, n_lo, n_hi, spec);
    json results = json::array();
    for (const auto& [n, dev] : rep.max_rel_deviation) {
        results.push_back(
            json{{"shift", n}, {"max_rel_deviation", dev}, {"match", rep.matches.count(n) > 0}});
    }
    std::string shape = "empty";
    if (rep.matches.size() == static_cast<std::size_t>(n_hi - n_lo + 1)) shape = "full_range";
    else if (rep.matches.size() == 1) shape = "singleton";
    else if (!rep.matches.empty()) shape = "other";
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", results},
                   {"diagnostics", json{{"match_count", rep.matches.size()}, {"shape", shape}}}});
    return 0;
}

int cmd_mellin_check(const RunConfig& cfg) {
    json results = json::array();
    // Gamma-quotient identity on the reference triples
    const std::vector<std::tuple<double, double, double>> triples{
        {1.0, 2.0, 1.0}, {1.0, 3.0, 2.0}, {2.0, 5.0, 1.5}};
    for (auto [a, b, mm] : triples) {
        for (double z : {0.5, 1.0, 2.0, 4.0}) {
            const Complex numeric = gamma_quotient_mellin(a, b, mm, Complex(z, 0.0));
            const double expect = gamma_ratio((a + z) / mm, (b + z) / mm);
            const double rel = std::abs(numeric.real() - expect) / std::abs(expect);
            results.push_back(json{{"check", "gamma_quotient"},
                                   {"a", a},
                                   {"b", b},
                                   {"m", mm},
                                   {"z", z},
                                   {"numeric", numeric.real()},
                                   {"reference", expect},
                                   {"rel_err", rel},
                                   {"pass", rel <= cfg.tol}});
        }
    }
    // convolution identities
    auto ind = [](double) { return Complex(1.0, 0.0); };
    const SupportHint unit{0.0, 1.0};
    const double conv_half = mellin_convolve(ind, ind, 0.5, unit, unit).real();
    results.push_back(json{{"check", "indicator_convolution"},
                           {"a", 0.0},
                           {"b", 0.0},
                           {"m", 0.0},
                           {"z", 0.5},
                           {"numeric", conv_half},
                           {"reference", std::numbers::ln2},
                           {"rel_err", std::abs(conv_half - std::numbers::ln2) / std::numbers::ln2},
                           {"pass", std::abs(conv_half - std::numbers::ln2) <= cfg.tol}});
    auto expdecay = [](double x) { return Complex(std::exp(-x), 0.0); };
    auto conv = [&](double x) { return mellin_convolve(expdecay, expdecay, x); };
    const double mult = mellin_transform(conv, Complex(2.0, 0.0)).real();
    results.push_back(json{{"check", "multiplicativity"},
                           {"a", 0.0},
                           {"b", 0.0},
                           {"m", 0.0},
                           {"z", 2.0},
                           {"numeric", mult},
                           {"reference", 1.0},
                           {"rel_err", std::abs(mult - 1.0)},
                           {"pass", std::abs(mult - 1.0) <= cfg.tol}});
    emit(cfg,
         json{{"config", cfg.to_json()}, {"results", results}, {"diagnostics", json::object()}});
    return 0;
}

int cmd_scaling_check(const RunConfig& cfg, const std::string& g_s,
                      const std::vector<double>& ts) {
    const SpaceParams p = cfg.space();
    const Symbol g = parse_symbol(g_s, p.d);
    std::vector<std::vector<Complex>> zs;
    if (p.d == 1) {
        zs = {{Complex(0.5, 0.0)}, {Complex(1.0, 0.3)}, {Complex(2.0, 0.0)}};
    } else {
        zs = {std::vector<Complex>(static_cast<std::size_t>(p.d), Complex(0.5, 0.0)),
              std::vector<Complex>(static_cast<std::size_t>(p.d), Complex(1.0, 0.0)),
              std::vector<Complex>(static_cast<std::size_t>(p.d), Complex(0.3, 0.2))};
        zs[1][0] = Complex(2.0, 0.0);
    }
    json results = json::array();
    for (double t : ts) {
        const Symbol vt = v_transform(g, t, p);
        for (const auto& z : zs) {
            Complex sz(0.0, 0.0);
            std::string zstr;
            for (const auto& c : z) {
                sz += c;
                zstr += (zstr.empty() ? "" : ";") + std::to_string(c.real()) + "+" +
                        std::to_string(c.imag()) + "i";
            }
            const Complex lhs = g_transform(vt, z, p, cfg.quad());
            const Complex scale = std::exp(-(2.0 * (p.s + p.d) + 2.0 * sz) * std::log(t));
            const Complex rhs = scale * g_transform(g, z, p, cfg.quad());
            const double rel = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
            results.push_back(json{{"t", t},
                                   {"z", zstr},
                                   {"lhs_re", lhs.real()},
                                   {"lhs_im", lhs.imag()},
                                   {"rhs_re", rhs.real()},
                                   {"rhs_im", rhs.imag()},
                                   {"rel_dev", rel},
                                   {"pass", rel <= cfg.tol}});
        }
    }
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", results},
                   {"diagnostics", json{{"g", g.description()}}}});
    return 0;
}

int cmd_counterexample(const RunConfig& cfg, int N) {
    const SpaceParams p = cfg.space();
    const ResidualReport rep = counterexample_check(N, p, cfg.degree, cfg.quad());
    const Symbol g = catalog::direction_power(1, N, p.d);
    const double off = offblock_mass(g, p, cfg.degree, cfg.quad());
    const double phi = 2.0 * std::numbers::pi * p.m / N;
    const Complex lambda = 1.0 - std::polar(1.0, -phi);
    json result = report_json(rep);
    result["offblock_mass"] = off;
    result["commutes"] = rep.frobenius_residual <= cfg.tol;
    result["lambda_re"] = lambda.real();
    result["lambda_im"] = lambda.imag();
    emit(cfg, json{{"config", cfg.to_json()},
                   {"results", json::array({result})},
                   {"diagnostics", json{{"N", N},
                                        {"f", "exp(lambda*r^" + std::to_string(2.0 * p.m) + ")"},
                                        {"g", g.description()}}}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz operators on generalized Fock spaces"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* moments = app.add_subcommand("moments", "monomial norms: closed form vs quadrature");
    int max_degree = 10;
    moments->add_option("--max-degree", max_degree, "largest total degree");
    add_common(moments, cfg);

    auto* kernel = app.add_subcommand("kernel", "reproducing kernel values and asymptotics");
    std::string xi_s, zeta_pt_s;
    std::vector<double> kernel_ts;
    kernel->add_option("--xi", xi_s, "point, comma-separated coordinates (e.g. '1+0.5*i,0')");
    kernel->add_option("--zeta-pt", zeta_pt_s, "second point (defaults to --xi)");
    kernel->add_option("--t", kernel_ts, "asymptotic-ratio arguments (t^m >= 5)");
    add_common(kernel, cfg);

    auto* eig = app.add_subcommand("eigenvalues", "radial eigenvalue table Omega(f, n)");
    std::string f_s = "r^2", g_s = "z1";
    eig->add_option("--f", f_s, "radial symbol");
    eig->add_option("--max-degree", max_degree, "largest degree");
    add_common(eig, cfg);

    auto* matrix = app.add_subcommand("matrix", "truncated Toeplitz matrix entries");
    matrix->add_option("--g", g_s, "symbol")->required();
    add_common(matrix, cfg);

    auto* commute = app.add_subcommand("commute", "commutator residual of T_f and T_g");
    std::string cf_s = "r^2", cg_s;
    commute->add_option("--f", cf_s, "first symbol (typically radial)");
    commute->add_option("--g", cg_s, "second symbol")->required();
    add_common(commute, cfg);

    auto* zp = app.add_subcommand("zero-product", "residuals of T_f T_g and T_g T_f");
    std::string zf_s = "r^2", zg_s;
    zp->add_option("--f", zf_s, "radial symbol");
    zp->add_option("--g", zg_s, "second symbol")->required();
    add_common(zp, cfg);

    auto* eq = app.add_subcommand("equation", "obstruction family of T_g T_f1 = T_f2 T_g");
    std::string f1_s = "r^2", f2_s = "r^2", eg_s = "1", k_s = "0", n_s = "0";
    int dl = 6;
    eq->add_option("--f1", f1_s, "first radial symbol");
    eq->add_option("--f2", f2_s, "second radial symbol");
    eq->add_option("--g", eg_s, "test symbol");
    eq->add_option("--k", k_s, "multi-index k (comma-separated)");
    eq->add_option("--n", n_s, "multi-index n (comma-separated)");
    eq->add_option("--dl", dl, "largest |l| scanned");
    add_common(eq, cfg);

    auto* ps = app.add_subcommand("period-scan", "integer shifts with Omega(f1,.) = Omega(f2,.+n)");
    std::string p1_s = "1", p2_s = "1";
    int n_lo = -5, n_hi = 5;
    PeriodScanSpec ps_spec;
    ps->add_option("--f1", p1_s, "first radial symbol");
    ps->add_option("--f2", p2_s, "second radial symbol");
    ps->add_option("--nmin", n_lo, "smallest shift");
    ps->add_option("--nmax", n_hi, "largest shift");
    ps->add_option("--re-lo", ps_spec.re_lo, "smallest Re zeta on the grid");
    ps->add_option("--re-hi", ps_spec.re_hi, "largest Re zeta on the grid");
    ps->add_option("--npoints", ps_spec.n_points, "grid size");
    add_common(ps, cfg);

    auto* mc = app.add_subcommand("mellin-check", "Gamma-quotient and convolution identities");
    add_common(mc, cfg);

    auto* sc = app.add_subcommand("scaling-check", "scaling law of the G transform under V_t");
    std::string sg_s = "1";
    std::vector<double> sc_ts{0.5, 2.0};
    sc->add_option("--g", sg_s, "symbol");
    sc->add_option("--t", sc_ts, "scaling factors");
    add_common(sc, cfg);

    auto* cx =
        app.add_subcommand("counterexample", "commutant membership without rotation invariance");
    int N = 8;
    cx->add_option("--N", N, "root-of-unity order (N > 6m)");
    add_common(cx, cfg);

    CLI11_PARSE(app, argc, argv);

    // counterexample wants headroom above N by default
    if (*cx && cx->get_option("--degree")->count() == 0) cfg.degree = 14;

    try {
        if (*moments) return cmd_moments(cfg, max_degree);
        if (*kernel) return cmd_kernel(cfg, xi_s, zeta_pt_s, kernel_ts);
        if (*eig) return cmd_eigenvalues(cfg, f_s, max_degree);
        if (*matrix) return cmd_matrix(cfg, g_s);
        if (*commute) return cmd_commute(cfg, cf_s, cg_s);
        if (*zp) return cmd_zero_product(cfg, zf_s, zg_s);
        if (*eq) return cmd_equation(cfg, f1_s, f2_s, eg_s, k_s, n_s, dl);
        if (*ps) {
            ps_spec.tol = cfg.tol;
            return cmd_period_scan(cfg, p1_s, p2_s, n_lo, n_hi, ps_spec);
        }
        if (*mc) return cmd_mellin_check(cfg);
        if (*sc) return cmd_scaling_check(cfg, sg_s, sc_ts);
        if (*cx) return cmd_counterexample(cfg, N);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
