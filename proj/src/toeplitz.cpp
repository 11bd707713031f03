#include "fockop/toeplitz.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fockop/gamma.hpp"
#include "fockop/mittag_leffler.hpp"

namespace fockop {

namespace {

[[noreturn]] void throw_nan(const char* where, double r1, double t1, double r2, double t2,
                            bool two) {
    std::ostringstream os;
    os << where << ": symbol evaluated to NaN at r1=" << r1 << " theta1=" << t1;
    if (two) os << " r2=" << r2 << " theta2=" << t2;
    throw NumericalError(os.str());
}

TruncatedOperator build_matrix_c1(const Symbol& g, const SpaceParams& p, int D,
                                  const QuadSpec& quad) {
    TruncatedOperator op{p, D, graded_basis(p, D), {}, g.description(), g.degree_window()};
    const int B = op.size();
    op.matrix = Eigen::MatrixXcd::Zero(B, B);

    const RadialRule rule = build_radial_rule(p, quad.n_r);
    const AngularRule ang(quad.n_theta);
    const double c = normalization_constant(p);
    const int nr = rule.size();

    // angular modes of g at each radial node: modes[i][q + D]
    std::vector<std::vector<Complex>> modes(static_cast<std::size_t>(nr),
                                            std::vector<Complex>(2 * D + 1));
    parallel_for(static_cast<std::size_t>(nr), [&](std::size_t i) {
        const double r = rule.nodes[i];
        std::vector<Complex> gv(static_cast<std::size_t>(ang.n_angles));
        for (int j = 0; j < ang.n_angles; ++j) {
            const Complex z = std::polar(r, ang.nodes[static_cast<std::size_t>(j)]);
            gv[static_cast<std::size_t>(j)] = g.eval(&z);
            if (std::isnan(gv[static_cast<std::size_t>(j)].real()) ||
                std::isnan(gv[static_cast<std::size_t>(j)].imag()))
                throw_nan("build_matrix", r, ang.nodes[static_cast<std::size_t>(j)], 0, 0, false);
        }
        for (int q = -D; q <= D; ++q) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < ang.n_angles; ++j) {
                acc += gv[static_cast<std::size_t>(j)] *
                       std::polar(1.0, q * ang.nodes[static_cast<std::size_t>(j)]);
            }
            modes[i][static_cast<std::size_t>(q + D)] = acc * ang.weight;
        }
    });

    // power table r^k, k <= 2D
    std::vector<std::vector<double>> pw(static_cast<std::size_t>(nr),
                                        std::vector<double>(2 * D + 1, 1.0));
    for (int i = 0; i < nr; ++i) {
        for (int k = 1; k <= 2 * D; ++k) {
            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] * rule.nodes[static_cast<std::size_t>(i)];
        }
    }

    std::vector<double> oc(static_cast<std::size_t>(B));
    for (int i = 0; i < B; ++i) {
        oc[static_cast<std::size_t>(i)] = orthonormal_coefficient(p, op.basis[static_cast<std::size_t>(i)]);
    }

    parallel_for(static_cast<std::size_t>(B), [&](std::size_t row) {
        const int nu = op.basis[row][0];
        for (int col = 0; col < B; ++col) {
            const int kappa = op.basis[static_cast<std::size_t>(col)][0];
            Complex acc(0.0, 0.0);
            for (int i = 0; i < nr; ++i) {
                acc += rule.weights[static_cast<std::size_t>(i)] *
                       pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(kappa + nu)] *
                       modes[static_cast<std::size_t>(i)][static_cast<std::size_t>(kappa - nu + D)];
            }
            op.matrix(static_cast<Eigen::Index>(row), col) =
                c * oc[row] * oc[static_cast<std::size_t>(col)] * acc;
        }
    });
    return op;
}

TruncatedOperator build_matrix_c2(const Symbol& g, const SpaceParams& p, int D,
                                  const QuadSpec& quad) {
    TruncatedOperator op{p, D, graded_basis(p, D), {}, g.description(), g.degree_window()};
    const int B = op.size();
    op.matrix = Eigen::MatrixXcd::Zero(B, B);

    const SpaceParams axis(1, p.m, p.alpha, 0.0);
    const RadialRule rule = build_radial_rule(axis, quad.n_r);
    const AngularRule ang(quad.n_theta);
    const double c = normalization_constant(p);
    const int nr = rule.size();
    const int nm = 2 * D + 1;

    // joint radial weight (per-axis Gauss weights times the non-separable correction)
    std::vector<double> jw(static_cast<std::size_t>(nr * nr));
    for (int i1 = 0; i1 < nr; ++i1) {
        const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
        for (int i2 = 0; i2 < nr; ++i2) {
            const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
            const double rho = r1 * r1 + r2 * r2;
            const double corr = (p.s == 0.0 ? 1.0 : std::pow(rho, p.s)) *
                                std::exp(-p.alpha * (std::pow(rho, p.m) -
                                                     std::pow(r1, 2.0 * p.m) -
                                                     std::pow(r2, 2.0 * p.m)));
            jw[static_cast<std::size_t>(i1 * nr + i2)] =
                rule.weights[static_cast<std::size_t>(i1)] *
                rule.weights[static_cast<std::size_t>(i2)] * corr;
        }
    }

    // twiddle table e^{i q theta_j}
    std::vector<Complex> tw(static_cast<std::size_t>(nm * ang.n_angles));
    for (int q = -D; q <= D; ++q) {
        for (int j = 0; j < ang.n_angles; ++j) {
            tw[static_cast<std::size_t>((q + D) * ang.n_angles + j)] =
                std::polar(1.0, q * ang.nodes[static_cast<std::size_t>(j)]);
        }
    }

    const bool polar = g.polar_radial();
    // angular mode transform per radial pair: hat[(i1*nr+i2)*nm*nm + (q1+D)*nm + (q2+D)]
    std::vector<Complex> hat(static_cast<std::size_t>(nr) * nr * nm * nm, Complex(0.0, 0.0));
    parallel_for(static_cast<std::size_t>(nr) * nr, [&](std::size_t pair) {
        const int i1 = static_cast<int>(pair) / nr;
        const int i2 = static_cast<int>(pair) % nr;
        if (jw[pair] == 0.0) return;
        const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
        const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
        Complex* out = hat.data() + pair * static_cast<std::size_t>(nm) * nm;
        if (polar) {
            const Complex z[2] = {Complex(r1, 0.0), Complex(r2, 0.0)};
            const Complex v = g.eval(z);
            // only the (0,0) mode survives; 2pi factors from both angles
            out[static_cast<std::size_t>(D * nm + D)] =
                v * (2.0 * std::numbers::pi) * (2.0 * std::numbers::pi);
            return;
        }
        const int na = ang.n_angles;
        std::vector<Complex> gv(static_cast<std::size_t>(na) * na);
        for (int j1 = 0; j1 < na; ++j1) {
            const Complex z1 = std::polar(r1, ang.nodes[static_cast<std::size_t>(j1)]);
            for (int j2 = 0; j2 < na; ++j2) {
                const Complex z[2] = {z1, std::polar(r2, ang.nodes[static_cast<std::size_t>(j2)])};
                const Complex v = g.eval(z);
                if (std::isnan(v.real()) || std::isnan(v.imag()))
                    throw_nan("build_matrix", r1, ang.nodes[static_cast<std::size_t>(j1)], r2,
                              ang.nodes[static_cast<std::size_t>(j2)], true);
                gv[static_cast<std::size_t>(j1 * na + j2)] = v;
            }
        }
        // first axis
        std::vector<Complex> tmp(static_cast<std::size_t>(nm) * na, Complex(0.0, 0.0));
        for (int q1 = 0; q1 < nm; ++q1) {
            const Complex* t1 = tw.data() + static_cast<std::size_t>(q1) * na;
            for (int j2 = 0; j2 < na; ++j2) {
                Complex acc(0.0, 0.0);
                for (int j1 = 0; j1 < na; ++j1) {
                    acc += gv[static_cast<std::size_t>(j1 * na + j2)] * t1[j1];
                }
                tmp[static_cast<std::size_t>(q1 * na + j2)] = acc;
            }
        }
        // second axis
        const double scale = ang.weight * ang.weight;
        for (int q1 = 0; q1 < nm; ++q1) {
            for (int q2 = 0; q2 < nm; ++q2) {
                const Complex* t2 = tw.data() + static_cast<std::size_t>(q2) * na;
                Complex acc(0.0, 0.0);
                for (int j2 = 0; j2 < na; ++j2) {
                    acc += tmp[static_cast<std::size_t>(q1 * na + j2)] * t2[j2];
                }
                out[static_cast<std::size_t>(q1 * nm + q2)] = acc * scale;
            }
        }
    });

    std::vector<std::vector<double>> pwt(static_cast<std::size_t>(nr),
                                         std::vector<double>(2 * D + 1, 1.0));
    for (int i = 0; i < nr; ++i) {
        for (int k = 1; k <= 2 * D; ++k) {
            pwt[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                pwt[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] *
                rule.nodes[static_cast<std::size_t>(i)];
        }
    }
    std::vector<double> oc(static_cast<std::size_t>(B));
    for (int i = 0; i < B; ++i) {
        oc[static_cast<std::size_t>(i)] = orthonormal_coefficient(p, op.basis[static_cast<std::size_t>(i)]);
    }

    parallel_for(static_cast<std::size_t>(B), [&](std::size_t row) {
        const MultiIndex& nu = op.basis[row];
        for (int col = 0; col < B; ++col) {
            const MultiIndex& kappa = op.basis[static_cast<std::size_t>(col)];
            const int q1 = kappa[0] - nu[0] + D;
            const int q2 = kappa[1] - nu[1] + D;
            const int e1 = kappa[0] + nu[0];
            const int e2 = kappa[1] + nu[1];
            Complex acc(0.0, 0.0);
            for (int i1 = 0; i1 < nr; ++i1) {
                const double p1 = pwt[static_cast<std::size_t>(i1)][static_cast<std::size_t>(e1)];
                const Complex* slab =
                    hat.data() + (static_cast<std::size_t>(i1) * nr) * static_cast<std::size_t>(nm) * nm;
                for (int i2 = 0; i2 < nr; ++i2) {
                    const double wj = jw[static_cast<std::size_t>(i1 * nr + i2)];
                    if (wj == 0.0) continue;
                    acc += wj * p1 *
                           pwt[static_cast<std::size_t>(i2)][static_cast<std::size_t>(e2)] *
                           slab[static_cast<std::size_t>(i2) * static_cast<std::size_t>(nm) * nm +
                                static_cast<std::size_t>(q1 * nm + q2)];
                }
            }
            op.matrix(static_cast<Eigen::Index>(row), col) =
                c * oc[row] * oc[static_cast<std::size_t>(col)] * acc;
        }
    });
    return op;
}

}  // namespace

TruncatedOperator build_matrix_quadrature(const Symbol& g, const SpaceParams& p, int D,
                                          const QuadSpec& quad) {
    if (g.dimension() != p.d) throw std::invalid_argument("build_matrix: dimension mismatch");
    if (D < 0) throw std::invalid_argument("build_matrix: D must be >= 0");
    if (p.d == 1) return build_matrix_c1(g, p, D, quad);
    if (p.d == 2) return build_matrix_c2(g, p, D, quad);
    throw std::invalid_argument("build_matrix: general symbols supported only for d <= 2");
}

TruncatedOperator build_matrix(const Symbol& g, const SpaceParams& p, int D,
                               const QuadSpec& quad) {
    if (g.is_radial() && p.alpha == 1.0) return diagonal_radial(g, p, D);
    return build_matrix_quadrature(g, p, D, quad);
}

TruncatedOperator diagonal_radial(const Symbol& f, const SpaceParams& p, int D) {
    if (!f.is_radial()) throw std::invalid_argument("diagonal_radial: symbol is not radial");
    TruncatedOperator op{p, D, graded_basis(p, D), {}, f.description(), f.degree_window()};
    const int B = op.size();
    op.matrix = Eigen::MatrixXcd::Zero(B, B);
    std::vector<Complex> eig(static_cast<std::size_t>(D + 1));
    for (int k = 0; k <= D; ++k) {
        eig[static_cast<std::size_t>(k)] = omega(f, Complex(static_cast<double>(k), 0.0), p);
    }
    for (int i = 0; i < B; ++i) {
        op.matrix(i, i) = eig[static_cast<std::size_t>(op.basis[static_cast<std::size_t>(i)].total_degree())];
    }
    return op;
}

Complex project_pointwise(const Symbol& u, const std::vector<Complex>& z, const SpaceParams& p,
                          const QuadSpec& quad) {
    if (static_cast<int>(z.size()) != p.d || u.dimension() != p.d) {
        throw std::invalid_argument("project_pointwise: dimension mismatch");
    }
    const double c = normalization_constant(p);
    const AngularRule ang(quad.n_theta);
    const MLParams prm = MLParams::for_space(p);
    const double cs = gamma_ratio(p.gamma_arg(0.0), static_cast<double>(p.d));
    const double al = std::pow(p.alpha, 1.0 / p.m);

    if (p.d == 1) {
        const RadialRule rule = build_radial_rule(p, quad.n_r);
        Complex acc(0.0, 0.0);
        for (int i = 0; i < rule.size(); ++i) {
            const double r = rule.nodes[static_cast<std::size_t>(i)];
            Complex row(0.0, 0.0);
            for (double theta : ang.nodes) {
                const Complex xi = std::polar(r, theta);
                // K(z, xi) = C_s E^{(d-1)}(alpha^{1/m} z conj(xi))
                const Complex kz = cs * ml_eval(prm, al * z[0] * std::conj(xi));
                row += kz * u.eval(&xi);
            }
            acc += rule.weights[static_cast<std::size_t>(i)] * row;
        }
        return c * ang.weight * acc;
    }
    if (p.d == 2) {
        const SpaceParams axis(1, p.m, p.alpha, 0.0);
        const RadialRule rule = build_radial_rule(axis, quad.n_r);
        Complex acc(0.0, 0.0);
        for (int i1 = 0; i1 < rule.size(); ++i1) {
            const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
            for (int i2 = 0; i2 < rule.size(); ++i2) {
                const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
                const double rho = r1 * r1 + r2 * r2;
                const double corr = (p.s == 0.0 ? 1.0 : std::pow(rho, p.s)) *
                                    std::exp(-p.alpha * (std::pow(rho, p.m) -
                                                         std::pow(r1, 2.0 * p.m) -
                                                         std::pow(r2, 2.0 * p.m)));
                const double wj = rule.weights[static_cast<std::size_t>(i1)] *
                                  rule.weights[static_cast<std::size_t>(i2)] * corr;
                if (wj == 0.0) continue;
                Complex cell(0.0, 0.0);
                for (double t1 : ang.nodes) {
                    const Complex x1 = std::polar(r1, t1);
                    for (double t2 : ang.nodes) {
                        const Complex xi[2] = {x1, std::polar(r2, t2)};
                        const Complex inner = z[0] * std::conj(xi[0]) + z[1] * std::conj(xi[1]);
                        cell += cs * ml_eval(prm, al * inner) * u.eval(xi);
                    }
                }
                acc += wj * cell * ang.weight * ang.weight;
            }
        }
        return c * acc;
    }
    throw std::invalid_argument("project_pointwise: d <= 2 only");
}

namespace {

// A product entry (AB)[nu][kappa] computed from degree-D truncations is exact
// as long as every contributing middle index fits below D; the middle indices
// reach at most min(|nu| + w_A, |kappa| + w_B), so the trusted block is
// |nu|, |kappa| <= D - min(w_A, w_B). A radial factor (window 0) therefore
// keeps the whole block trustworthy.
int product_interior(const Symbol& f, const Symbol& g, int D, bool& capped) {
    auto window = [&](const Symbol& s) -> std::optional<int> {
        if (s.is_radial()) return 0;
        return s.degree_window();
    };
    const auto wf = window(f);
    const auto wg = window(g);
    int w;
    if (wf && wg) {
        w = std::min(*wf, *wg);
    } else if (wf) {
        w = *wf;
    } else if (wg) {
        w = *wg;
    } else {
        w = std::max(1, D / 4);
        capped = true;
    }
    return D - w;
}

struct BlockStats {
    double frob = 0.0;
    double max_entry = 0.0;
    std::map<int, double> band_mass2;
};

BlockStats block_stats(const Eigen::MatrixXcd& M, const std::vector<MultiIndex>& basis,
                       int interior) {
    BlockStats st;
    double frob2 = 0.0;
    for (int i = 0; i < M.rows(); ++i) {
        const int di = basis[static_cast<std::size_t>(i)].total_degree();
        if (di > interior) continue;
        for (int j = 0; j < M.cols(); ++j) {
            const int dj = basis[static_cast<std::size_t>(j)].total_degree();
            if (dj > interior) continue;
            const double a2 = std::norm(M(i, j));
            frob2 += a2;
            st.max_entry = std::max(st.max_entry, std::sqrt(a2));
            st.band_mass2[di - dj] += a2;
        }
    }
    st.frob = std::sqrt(frob2);
    return st;
}

Eigen::MatrixXcd interior_block(const Eigen::MatrixXcd& M, const std::vector<MultiIndex>& basis,
                                int interior) {
    std::vector<int> keep;
    for (int i = 0; i < M.rows(); ++i) {
        if (basis[static_cast<std::size_t>(i)].total_degree() <= interior) keep.push_back(i);
    }
    Eigen::MatrixXcd out(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) {
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                M(keep[a], keep[b]);
        }
    }
    return out;
}

double op_norm(const Eigen::MatrixXcd& M) {
    if (M.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

ResidualReport product_residual_report(const Eigen::MatrixXcd& R, const TruncatedOperator& A,
                                       const TruncatedOperator& B, int D, int interior,
                                       bool capped, const QuadSpec& quad) {
    ResidualReport rep;
    rep.degree = D;
    rep.interior_degree = interior;
    rep.n_r = quad.n_r;
    rep.n_theta = quad.n_theta;
    rep.window_capped = capped;
    const BlockStats st = block_stats(R, A.basis, interior);
    rep.raw_frobenius = st.frob;
    rep.raw_max_entry = st.max_entry;
    for (const auto& [band, mass2] : st.band_mass2) rep.band_mass[band] = std::sqrt(mass2);
    rep.normalizer = op_norm(interior_block(A.matrix, A.basis, interior)) *
                     op_norm(interior_block(B.matrix, B.basis, interior));
    if (rep.normalizer > 0.0) {
        rep.frobenius_residual = rep.raw_frobenius / rep.normalizer;
        rep.max_entry_residual = rep.raw_max_entry / rep.normalizer;
    }
    return rep;
}

ResidualReport exact_zero_report(int D, const QuadSpec& quad) {
    ResidualReport rep;
    rep.degree = D;
    rep.interior_degree = D;
    rep.n_r = quad.n_r;
    rep.n_theta = quad.n_theta;
    rep.normalizer = 1.0;
    return rep;
}

}  // namespace

ResidualReport commutator_residual(const Symbol& f, const Symbol& g, const SpaceParams& p,
                                   int D, const QuadSpec& quad) {
    if (f.is_constant() || g.is_constant()) {
        return exact_zero_report(D, quad);  // a scalar commutes with everything
    }
    bool capped = false;
    const int interior = product_interior(f, g, D, capped);
    if (interior < 0) {
        throw std::invalid_argument("commutator_residual: D too small for the degree windows");
    }
    const TruncatedOperator A = build_matrix(f, p, D, quad);
    const TruncatedOperator B = build_matrix(g, p, D, quad);
    const Eigen::MatrixXcd R = A.matrix * B.matrix - B.matrix * A.matrix;
    return product_residual_report(R, A, B, D, interior, capped, quad);
}

double offblock_mass(const Symbol& g, const SpaceParams& p, int D, const QuadSpec& quad) {
    const TruncatedOperator T = build_matrix_quadrature(g, p, D, quad);
    double mass2 = 0.0;
    for (int i = 0; i < T.size(); ++i) {
        const int di = T.basis[static_cast<std::size_t>(i)].total_degree();
        for (int j = 0; j < T.size(); ++j) {
            if (T.basis[static_cast<std::size_t>(j)].total_degree() != di) {
                mass2 += std::norm(T.matrix(i, j));
            }
        }
    }
    return std::sqrt(mass2);
}

std::pair<ResidualReport, ResidualReport> zero_product_residual(const Symbol& f,
                                                                const Symbol& g,
                                                                const SpaceParams& p, int D,
                                                                const QuadSpec& quad) {
    if (!f.is_radial()) throw std::invalid_argument("zero_product_residual: f must be radial");
    if (f.is_zero() || g.is_zero()) {
        return {exact_zero_report(D, quad), exact_zero_report(D, quad)};
    }
    bool capped = false;
    const int interior = product_interior(f, g, D, capped);
    if (interior < 0) {
        throw std::invalid_argument("zero_product_residual: D too small for the degree window");
    }
    const TruncatedOperator A = build_matrix(f, p, D, quad);
    const TruncatedOperator B = build_matrix(g, p, D, quad);
    const Eigen::MatrixXcd P1 = A.matrix * B.matrix;
    const Eigen::MatrixXcd P2 = B.matrix * A.matrix;
    return {product_residual_report(P1, A, B, D, interior, capped, quad),
            product_residual_report(P2, A, B, D, interior, capped, quad)};
}

ResidualReport equation_residual(const Symbol& f1, const Symbol& f2, const Symbol& g,
                                 const MultiIndex& k, const MultiIndex& n, const SpaceParams& p,
                                 int D_l, const QuadSpec& quad) {
    if (!f1.is_radial() || !f2.is_radial()) {
        throw std::invalid_argument("equation_residual: f1, f2 must be radial");
    }
    if (k.size() != p.d || n.size() != p.d) {
        throw std::invalid_argument("equation_residual: multi-index dimension mismatch");
    }
    ResidualReport rep;
    rep.degree = D_l;
    rep.interior_degree = D_l;
    rep.n_r = quad.n_r;
    rep.n_theta = quad.n_theta;
    if (f1.is_constant() && f2.is_constant() &&
        *f1.constant_value() == *f2.constant_value()) {
        return rep;  // the bracket vanishes identically
    }

    const Symbol g1 = multiply_monomial(g, k, n);
    OmegaFunction o1(f1, p), o2(f2, p);
    const double sk = k.total_degree(), sn = n.total_degree();

    double frob2 = 0.0;
    for (const MultiIndex& l : graded_basis(p, D_l)) {
        const double sl = l.total_degree();
        const Complex bracket = o1(Complex(sk + sl, 0.0)) - o2(Complex(sn + sl, 0.0));
        std::vector<Complex> zl;
        zl.reserve(static_cast<std::size_t>(p.d));
        for (int j = 0; j < p.d; ++j) zl.emplace_back(static_cast<double>(l[j]), 0.0);
        const Complex gl = g_transform(g1, zl, p, quad);
        const double value = std::abs(bracket * gl);
        frob2 += value * value;
        rep.max_entry_residual = std::max(rep.max_entry_residual, value);
        auto& slot = rep.band_mass[l.total_degree()];
        slot = std::max(slot, value);
    }
    rep.frobenius_residual = std::sqrt(frob2);
    rep.raw_frobenius = rep.frobenius_residual;
    rep.raw_max_entry = rep.max_entry_residual;
    return rep;
}

ResidualReport counterexample_check(int N, const SpaceParams& p, int D, const QuadSpec& quad) {
    if (!(static_cast<double>(N) > 6.0 * p.m)) {
        throw std::invalid_argument("counterexample_check: requires N > 6m");
    }
    if (D < N) {
        throw std::invalid_argument("counterexample_check: D must be >= N");
    }
    const double phi = 2.0 * std::numbers::pi * p.m / N;
    const Complex lambda = 1.0 - std::polar(1.0, -phi);
    const Symbol f = catalog::exp_radial(lambda, p.m, p.d);
    const Symbol g = catalog::direction_power(1, N, p.d);

    // f is radial, so the truncated products are exact on the full block
    const TruncatedOperator A = diagonal_radial(f, p, D);
    const TruncatedOperator B = build_matrix_quadrature(g, p, D, quad);
    const Eigen::MatrixXcd R = A.matrix * B.matrix - B.matrix * A.matrix;
    return product_residual_report(R, A, B, D, D, false, quad);
}

}  // namespace fockop
