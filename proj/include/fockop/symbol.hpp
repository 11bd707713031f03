#ifndef FOCKOP_SYMBOL_HPP
#define FOCKOP_SYMBOL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fockop/common.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"

namespace fockop {

enum class Radiality { radial, rotation_invariant, general };

enum class GrowthClass {
    polynomial,               // |g(z)| <= C (1+|z|)^c
    sub_double_exponential,   // g e^{-c|z|^{2m}} bounded for every c > 0
    d_c_bounded,              // bounded by C e^{c|z|^{2m}} for one specific c
    unknown,
};

/// Structural form f(z) = coef * |z|^{2p} * exp(lambda |z|^{2 m_ref});
/// radial eigenvalues of such symbols have a Gamma-quotient closed form.
struct PowerExpForm {
    Complex coef{1.0, 0.0};
    double p = 0.0;
    Complex lambda{0.0, 0.0};
    double m_ref = 1.0;
};

/// Evaluable symbol on C^d: an immutable compiled expression plus metadata
/// (radiality, growth class, degree-coupling window). Construct through
/// parse_symbol or the catalog factories. Evaluation is pure and thread-safe.
class Symbol {
public:
    int dimension() const { return d_; }

    Complex eval(const Complex* z) const;
    Complex eval(const std::vector<Complex>& z) const;

    Radiality radiality() const { return radiality_; }
    /// true when the value depends only on (|z_1|, ..., |z_d|)
    bool polar_radial() const { return polar_radial_; }
    bool is_radial() const { return radiality_ == Radiality::radial; }
    bool is_rotation_invariant() const { return radiality_ != Radiality::general; }

    GrowthClass growth() const { return growth_; }
    double growth_c() const { return growth_c_; }

    /// Coefficient of the exp(c |z|^{2m}) wrapper attached by v_transform
    /// (0 when absent). Polynomial-exactness fast paths must bail out when
    /// this is nonzero.
    Complex radial_exp_coefficient() const { return radial_exp_c_; }

    /// Bound on |total degree shift| the Toeplitz operator of this symbol can
    /// induce; nullopt when unbounded (e.g. exp of a non-radial argument).
    std::optional<int> degree_window() const { return degree_window_; }

    /// Closed-form hook for radial eigenvalues; set for catalog items of
    /// power-times-exponential shape and preserved by v_transform.
    const std::optional<PowerExpForm>& power_exp_form() const { return power_exp_; }

    bool is_constant() const { return constant_.has_value(); }
    std::optional<Complex> constant_value() const { return constant_; }
    bool is_zero() const;

    const std::string& description() const { return desc_; }

    Symbol conjugated() const;

    struct RadialMonomialParts;
    /// Set when the symbol was built as radial_part * z^k * conj(z)^n.
    const std::shared_ptr<const RadialMonomialParts>& radial_monomial_parts() const {
        return radial_monomial_;
    }

    struct Instr {
        enum class Op : std::uint8_t {
            push_const,
            push_z,
            push_zconj,
            push_r,
            add,
            sub,
            mul,
            div,
            pow_int,
            pow_real,
            exp_,
            abs_,
            re_,
            im_,
            conj_,
            dir_pow,    // z_a^N / r^N with N = (int)x
            indicator,  // 1 if r <= x
        };
        Op op;
        int a = 0;
        double x = 0.0;
        Complex c{0.0, 0.0};
    };

private:
    friend class SymbolBuilder;
    Symbol() = default;

    std::vector<Instr> program_;
    int d_ = 1;
    double arg_scale_ = 1.0;       // evaluate program at arg_scale * z
    Complex radial_exp_c_{0.0, 0.0};  // then multiply by exp(c |z|^{2 m_ref})
    double radial_exp_m_ = 1.0;

    Radiality radiality_ = Radiality::general;
    bool polar_radial_ = false;
    GrowthClass growth_ = GrowthClass::unknown;
    double growth_c_ = 0.0;
    std::optional<int> degree_window_;
    std::optional<PowerExpForm> power_exp_;
    std::optional<Complex> constant_;
    std::string desc_;
    std::shared_ptr<const RadialMonomialParts> radial_monomial_;
};

struct Symbol::RadialMonomialParts {
    Symbol radial_part;
    std::vector<int> k;
    std::vector<int> n;
};

/// Parse error with 0-based position into the source text.
class SymbolParseError : public std::invalid_argument {
public:
    SymbolParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Parses the CLI expression grammar over variables z1..zd, conj(..), r.
Symbol parse_symbol(const std::string& text, int d);

namespace catalog {

Symbol constant(Complex value, int d);
Symbol zero(int d);
/// |z|^p (p real >= 0)
Symbol radial_power(double p, int d);
/// exp(lambda |z|^{2m}); bounded Toeplitz behavior needs Re lambda < 1/2
Symbol exp_radial(Complex lambda, double m, int d);
/// z^k conj(z)^n
Symbol monomial(const MultiIndex& k, const MultiIndex& n);
/// z_axis^N / |z|^N (value 0 at z = 0); axis is 1-based
Symbol direction_power(int axis, int N, int d);
/// indicator of {|z| <= R}
Symbol radial_indicator(double R, int d);

}  // namespace catalog

/// g * z^k * conj(z)^n, tagging the radial-times-monomial structure when g is
/// radial (enables the any-d reduction of the G transform).
Symbol multiply_monomial(const Symbol& g, const MultiIndex& k, const MultiIndex& n);

/// V_t g(x) = g(t x) exp((1 - t^{2m}) |x|^{2m})
Symbol v_transform(const Symbol& g, double t, const SpaceParams& p);

/// (1/pi) int_0^{2pi} g(r e^{i theta}) d theta by trapezoid; d = 1 only.
/// Note the 1/pi convention: the radialization of 1 is 2.
Complex radialize(const Symbol& g, double r, int n_theta);

/// G g(z) = int g(x) |x_1|^{2 z_1} ... |x_d|^{2 z_d} dmu_{m,1,s}(x) for
/// z in the closed right half-plane power Pi^d. Requires alpha = 1.
/// Integer z uses the Gauss path; general z uses double-exponential radial
/// quadrature; radial-times-monomial symbols reduce to one radial integral in
/// any dimension.
Complex g_transform(const Symbol& g, const std::vector<Complex>& z, const SpaceParams& p,
                    const QuadSpec& quad = {});

/// d=1 consistency route: radialization followed by a Mellin transform.
Complex g_transform_via_radialization(const Symbol& g, Complex z, const SpaceParams& p,
                                      const QuadSpec& quad = {});

/// Deterministic sampling grid for dc_norm_estimate.
struct SamplingSpec {
    double r_max = 25.0;
    int n_r = 4000;
    int n_dirs = 8;
};

/// Lower bound for ||g||_{D_c} = ess sup |g(z)| e^{-c|z|^{2m}}, taken over a
/// deterministic grid of directions and radii.
double dc_norm_estimate(const Symbol& g, double c, const SpaceParams& p,
                        const SamplingSpec& grid = {});

/// The scale c_j = 1/2 - 1/(2j+2) indexing the nested D_{c_j} spaces.
struct ScaleIndex {
    int j;
    double c() const { return 0.5 - 1.0 / (2.0 * j + 2.0); }
    ScaleIndex next() const { return ScaleIndex{j + 1}; }
};

}  // namespace fockop

#endif
