#include "fockop/quadrature.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fockop/symbol.hpp"

namespace fockop {

namespace {

constexpr double kSinhScale = 1.5707963267948966;  // pi/2

struct DENode {
    double u;
    Complex fw;  // f(x(u)) * dx/du
};

[[noreturn]] void throw_de_failure(const char* which, int level, Complex last, Complex prev) {
    std::ostringstream os;
    os << which << ": refinement did not stabilize after level " << level << " (last="
       << last.real() << "+" << last.imag() << "i, prev=" << prev.real() << "+" << prev.imag()
       << "i)";
    throw NumericalError(os.str());
}

// Shared trapezoid-with-halving driver over the transformed axis. The first
// three levels always cover the full u-range: integrands routinely have a
// dead zone around u = 0 with all their mass further out (scaled symbols,
// shifted convolutions), and an early stop there would silently drop the
// integral. Later levels stop one unit past the live horizon seen so far.
Complex de_trapezoid(const std::function<Complex(double)>& term, const char* name,
                     const DEOptions& opt) {
    // wide enough that integrands cut off at the e^{-700} underflow scale
    // (exponent kSinhScale*sinh(u) ~ 745 at u ~ 6.86) sit inside the range
    constexpr double kRange = 8.0;
    double h = 0.5;
    double live_horizon = 0.0;
    double abs_sum = 0.0;

    Complex integral = term(0.0);
    abs_sum = std::abs(integral);

    auto sweep = [&](double u0, double dir, double spacing, bool full) -> Complex {
        Complex acc(0.0, 0.0);
        for (double u = u0; std::abs(u) <= kRange; u += dir * spacing) {
            const Complex t = term(u);
            acc += t;
            const double mag = std::abs(t);
            abs_sum += mag;
            if (mag > 1e-17 * (std::abs(acc) + std::abs(integral)) + 1e-305) {
                live_horizon = std::max(live_horizon, std::abs(u));
            } else if (!full && std::abs(u) > std::max(1.0, live_horizon + 1.0)) {
                break;
            }
        }
        return acc;
    };

    integral += sweep(h, +1.0, h, true) + sweep(-h, -1.0, h, true);
    Complex prev = integral;
    integral *= h;

    for (int level = 1; level <= opt.max_level; ++level) {
        prev = integral;
        h *= 0.5;
        abs_sum = 0.0;
        const bool full = level <= 2;
        const Complex added = sweep(h, +2.0, h, full) + sweep(-h, -2.0, h, full);
        integral = 0.5 * prev + h * added;
        // the attainable accuracy floor scales with the L1 mass of the nodes
        const double floor_ = 1e-15 * h * abs_sum + 5e-308;
        if (level >= 2 &&
            std::abs(integral - prev) <= opt.rel_tol * std::abs(integral) + floor_) {
            return integral;
        }
    }
    throw_de_failure(name, opt.max_level, integral, prev);
}

}  // namespace

Complex tanh_sinh(const EndpointAwareFn& f, double a, double b, const DEOptions& opt) {
    if (!(a < b)) throw std::invalid_argument("tanh_sinh: need a < b");
    const double half = 0.5 * (b - a);

    // term at trapezoid abscissa u
    auto term = [&](double u) -> Complex {
        const double v = kSinhScale * std::sinh(u);
        // distances to the endpoints, stable when x rounds to a or b
        const double dist_a = 2.0 * half / (1.0 + std::exp(-2.0 * v));
        const double dist_b = 2.0 * half / (1.0 + std::exp(2.0 * v));
        const double x = (v >= 0.0) ? b - dist_b : a + dist_a;
        const double ch = std::cosh(v);
        const double w = half * kSinhScale * std::cosh(u) / (ch * ch);
        if (w == 0.0 || !std::isfinite(w) || dist_a == 0.0 || dist_b == 0.0) {
            return Complex(0.0, 0.0);
        }
        const Complex fv = f(x, dist_a, dist_b);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
            // non-finite right at an endpoint is an underflow artifact of the
            // integrand (0 * inf); anywhere else it is a real error
            if (std::abs(u) > 3.0) return Complex(0.0, 0.0);
            throw NumericalError("tanh_sinh: integrand not finite at x=" + std::to_string(x));
        }
        return fv * w;
    };

    return de_trapezoid(term, "tanh_sinh", opt);
}

Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  const DEOptions& opt) {
    return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b, opt);
}

Complex exp_sinh(const std::function<Complex(double)>& f, const DEOptions& opt) {
    auto term = [&](double u) -> Complex {
        const double x = std::exp(kSinhScale * std::sinh(u));
        if (x == 0.0 || std::isinf(x)) return Complex(0.0, 0.0);
        const double w = x * kSinhScale * std::cosh(u);
        if (!std::isfinite(w)) return Complex(0.0, 0.0);
        const Complex fv = f(x);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
            if (std::abs(u) > 3.0) return Complex(0.0, 0.0);
            throw NumericalError("exp_sinh: integrand not finite at x=" + std::to_string(x));
        }
        return fv * w;
    };

    return de_trapezoid(term, "exp_sinh", opt);
}

double radial_moment(const SpaceParams& p, double k) {
    if (!(p.d + p.s + k > 0.0)) {
        throw std::domain_error("radial_moment: divergent, need k > -d-s");
    }
    const double a = p.gamma_arg(k);
    return std::exp(std::lgamma(a) - a * std::log(p.alpha)) / (2.0 * p.m);
}

RadialRule build_radial_rule(const SpaceParams& p, int n) {
    if (n < 1) throw std::invalid_argument("build_radial_rule: n must be >= 1");

    // Discretize the weight on a double-exponential grid in log scale. The
    // grid must resolve products p_i p_j of the orthogonal polynomials (about
    // 2n oscillations across the bulk), so the density scales with n.
    const double h = 1.0 / (48.0 + 2.5 * n);
    const double pw = 2.0 * p.d + 2.0 * p.s - 1.0;
    const int klim = static_cast<int>(6.0 / h);

    std::vector<double> xs, ws;
    xs.reserve(1024);
    ws.reserve(1024);
    double max_logw = -1e300;
    std::vector<double> logw_all(static_cast<std::size_t>(2 * klim + 1));
    std::vector<double> x_all(logw_all.size());
    for (int k = -klim; k <= klim; ++k) {
        const double u = k * h;
        const double lx = kSinhScale * std::sinh(u);
        const double x = std::exp(lx);
        double logw = -1e300;
        if (std::isfinite(x) && x > 0.0) {
            logw = pw * lx - p.alpha * std::pow(x, 2.0 * p.m) +
                   std::log(kSinhScale * std::cosh(u)) + lx + std::log(h);
        }
        logw_all[static_cast<std::size_t>(k + klim)] = logw;
        x_all[static_cast<std::size_t>(k + klim)] = x;
        max_logw = std::max(max_logw, logw);
    }
    const double deg = 2.0 * n + 1.0;
    for (std::size_t i = 0; i < logw_all.size(); ++i) {
        const double x = x_all[i];
        const double logw = logw_all[i];
        if (logw < -700.0 + max_logw && logw + deg * std::max(0.0, std::log(x)) < max_logw - 320.0)
            continue;
        const double w = std::exp(logw);
        if (w <= 0.0 || !std::isfinite(w)) continue;
        xs.push_back(x);
        ws.push_back(w);
    }
    const std::size_t N = xs.size();
    if (N < static_cast<std::size_t>(3 * n)) {
        throw NumericalError("build_radial_rule: discretization too coarse for n=" +
                             std::to_string(n) + " at " + p.describe());
    }

    // Stieltjes on the discrete measure, with full reorthogonalization.
    const double mu0 = [&] {
        double t = 0.0;
        for (double w : ws) t += w;
        return t;
    }();

    std::vector<std::vector<double>> basis;
    basis.reserve(static_cast<std::size_t>(n));
    std::vector<double> alpha(static_cast<std::size_t>(n), 0.0);
    std::vector<double> beta(static_cast<std::size_t>(n), 0.0);  // beta[k] couples k-1,k

    auto dot = [&](const std::vector<double>& f, const std::vector<double>& g) {
        double t = 0.0;
        for (std::size_t q = 0; q < N; ++q) t += ws[q] * f[q] * g[q];
        return t;
    };

    std::vector<double> phi(N, 1.0 / std::sqrt(mu0));
    basis.push_back(phi);
    for (int k = 0; k < n; ++k) {
        const auto& pk = basis[static_cast<std::size_t>(k)];
        std::vector<double> xp(N);
        for (std::size_t q = 0; q < N; ++q) xp[q] = xs[q] * pk[q];
        alpha[static_cast<std::size_t>(k)] = dot(xp, pk);
        if (k == n - 1) break;
        std::vector<double> w = xp;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& pj : basis) {
                const double c = dot(w, pj);
                for (std::size_t q = 0; q < N; ++q) w[q] -= c * pj[q];
            }
        }
        const double nb = std::sqrt(dot(w, w));
        if (!(nb > 0.0) || !std::isfinite(nb)) {
            throw NumericalError("build_radial_rule: recurrence breakdown at step " +
                                 std::to_string(k) + " (n=" + std::to_string(n) + ", " +
                                 p.describe() + ")");
        }
        beta[static_cast<std::size_t>(k + 1)] = nb;
        for (std::size_t q = 0; q < N; ++q) w[q] /= nb;
        basis.push_back(std::move(w));
    }

    // Golub-Welsch for the nodes only
    Eigen::VectorXd diag(n), subdiag(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag(k) = alpha[static_cast<std::size_t>(k)];
    for (int k = 0; k + 1 < n; ++k) subdiag(k) = beta[static_cast<std::size_t>(k + 1)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("build_radial_rule: eigensolver failed for n=" + std::to_string(n) +
                             " at " + p.describe());
    }

    RadialRule rule{p, {}, {}};
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    }
    // Weights through the Christoffel function: w_i = 1 / sum_k p_k(x_i)^2
    // with orthonormal p_k from the recurrence. Unlike eigenvector first
    // components, this keeps full relative accuracy for the tiny weights at
    // extreme nodes, which high-degree moments amplify.
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[static_cast<std::size_t>(i)];
        double pkm1 = 0.0;
        double pk = 1.0 / std::sqrt(mu0);
        double sum = pk * pk;
        for (int k = 0; k + 1 < n; ++k) {
            const double pk1 = ((x - alpha[static_cast<std::size_t>(k)]) * pk -
                                (k > 0 ? beta[static_cast<std::size_t>(k)] : 0.0) * pkm1) /
                               beta[static_cast<std::size_t>(k + 1)];
            pkm1 = pk;
            pk = pk1;
            sum += pk * pk;
            if (!std::isfinite(sum)) break;  // weight underflows double range
        }
        rule.weights[static_cast<std::size_t>(i)] = std::isfinite(sum) ? 1.0 / sum : 0.0;
    }
    return rule;
}

double integrate_radial(const RadialRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

Complex integrate_radial_complex(const RadialRule& rule,
                                 const std::function<Complex(double)>& f) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

AngularRule::AngularRule(int n) : n_angles(n), weight(0.0) {
    if (n < 1) throw std::invalid_argument("AngularRule: need n >= 1");
    nodes.resize(static_cast<std::size_t>(n));
    const double step = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) nodes[static_cast<std::size_t>(j)] = step * j;
    weight = step;
}

namespace {

[[noreturn]] void throw_nan_node(double r1, double t1, double r2, double t2, bool two) {
    std::ostringstream os;
    os << "integrand NaN at node r1=" << r1 << " theta1=" << t1;
    if (two) os << " r2=" << r2 << " theta2=" << t2;
    throw NumericalError(os.str());
}

}  // namespace

Complex integrate_c1(const SpaceParams& p, const Symbol& g, int n_r, int n_theta) {
    if (p.d != 1) throw std::invalid_argument("integrate_c1: requires d = 1");
    const RadialRule rule = build_radial_rule(p, n_r);
    const double c = normalization_constant(p);
    const double two_pi = 2.0 * std::numbers::pi;

    if (g.polar_radial()) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i < rule.size(); ++i) {
            const Complex z(rule.nodes[static_cast<std::size_t>(i)], 0.0);
            const Complex v = g.eval(&z);
            if (std::isnan(v.real()) || std::isnan(v.imag()))
                throw_nan_node(z.real(), 0.0, 0.0, 0.0, false);
            acc += rule.weights[static_cast<std::size_t>(i)] * v;
        }
        return c * two_pi * acc;
    }

    const AngularRule ang(n_theta);
    Complex acc(0.0, 0.0);
    for (int i = 0; i < rule.size(); ++i) {
        const double r = rule.nodes[static_cast<std::size_t>(i)];
        Complex row(0.0, 0.0);
        for (double theta : ang.nodes) {
            const Complex z = std::polar(r, theta);
            const Complex v = g.eval(&z);
            if (std::isnan(v.real()) || std::isnan(v.imag()))
                throw_nan_node(r, theta, 0.0, 0.0, false);
            row += v;
        }
        acc += rule.weights[static_cast<std::size_t>(i)] * row;
    }
    return c * ang.weight * acc;
}

Complex integrate_c2(const SpaceParams& p, const Symbol& g, int n_r, int n_theta) {
    if (p.d != 2) throw std::invalid_argument("integrate_c2: requires d = 2");
    const SpaceParams axis(1, p.m, p.alpha, 0.0);
    const RadialRule rule = build_radial_rule(axis, n_r);
    const double c = normalization_constant(p);
    const double two_pi = 2.0 * std::numbers::pi;

    // joint weight over the product of per-axis weights
    auto corr = [&](double r1, double r2) {
        const double rho = r1 * r1 + r2 * r2;
        const double expo =
            -p.alpha * (std::pow(rho, p.m) - std::pow(r1, 2.0 * p.m) - std::pow(r2, 2.0 * p.m));
        const double amp = (p.s == 0.0) ? 1.0 : std::pow(rho, p.s);
        return amp * std::exp(expo);
    };

    const bool skip_angular = g.polar_radial();
    const AngularRule ang(n_theta);
    Complex acc(0.0, 0.0);
    for (int i1 = 0; i1 < rule.size(); ++i1) {
        const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
        const double w1 = rule.weights[static_cast<std::size_t>(i1)];
        for (int i2 = 0; i2 < rule.size(); ++i2) {
            const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
            const double w2 = rule.weights[static_cast<std::size_t>(i2)];
            const double jw = w1 * w2 * corr(r1, r2);
            if (jw == 0.0) continue;
            Complex cell(0.0, 0.0);
            if (skip_angular) {
                const Complex z[2] = {Complex(r1, 0.0), Complex(r2, 0.0)};
                cell = g.eval(z) * (two_pi * two_pi);
            } else {
                for (double t1 : ang.nodes) {
                    const Complex z1 = std::polar(r1, t1);
                    for (double t2 : ang.nodes) {
                        const Complex z[2] = {z1, std::polar(r2, t2)};
                        const Complex v = g.eval(z);
                        if (std::isnan(v.real()) || std::isnan(v.imag()))
                            throw_nan_node(r1, t1, r2, t2, true);
                        cell += v;
                    }
                }
                cell *= ang.weight * ang.weight;
            }
            acc += jw * cell;
        }
    }
    return c * acc;
}

}  // namespace fockop
