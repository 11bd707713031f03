#include "fockop/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "fockop/gamma.hpp"

namespace fockop {

namespace {
constexpr int kMaxStack = 64;
constexpr int kMaxDim = 8;
}

namespace {

using Op = Symbol::Instr::Op;

Complex cpow_int(Complex base, int n) {
    if (n == 0) return Complex(1.0, 0.0);
    bool inv = n < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-(long)n) : static_cast<unsigned long>(n);
    Complex acc(1.0, 0.0), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return inv ? 1.0 / acc : acc;
}

}  // namespace

Complex Symbol::eval(const Complex* z) const {
    Complex zbuf[kMaxDim];
    const Complex* zz = z;
    if (arg_scale_ != 1.0) {
        for (int j = 0; j < d_; ++j) zbuf[j] = arg_scale_ * z[j];
        zz = zbuf;
    }
    double r2 = -1.0;
    auto modulus = [&]() {
        if (r2 < 0.0) {
            r2 = 0.0;
            for (int j = 0; j < d_; ++j) r2 += std::norm(zz[j]);
        }
        return std::sqrt(r2);
    };

    Complex stack[kMaxStack];
    int sp = 0;
    for (const auto& ins : program_) {
        switch (ins.op) {
            case Op::push_const: stack[sp++] = ins.c; break;
            case Op::push_z: stack[sp++] = zz[ins.a]; break;
            case Op::push_zconj: stack[sp++] = std::conj(zz[ins.a]); break;
            case Op::push_r: stack[sp++] = Complex(modulus(), 0.0); break;
            case Op::add: --sp; stack[sp - 1] += stack[sp]; break;
            case Op::sub: --sp; stack[sp - 1] -= stack[sp]; break;
            case Op::mul: --sp; stack[sp - 1] *= stack[sp]; break;
            case Op::div: --sp; stack[sp - 1] /= stack[sp]; break;
            case Op::pow_int: stack[sp - 1] = cpow_int(stack[sp - 1], ins.a); break;
            case Op::pow_real: stack[sp - 1] = std::pow(stack[sp - 1], ins.x); break;
            case Op::exp_: stack[sp - 1] = std::exp(stack[sp - 1]); break;
            case Op::abs_: stack[sp - 1] = Complex(std::abs(stack[sp - 1]), 0.0); break;
            case Op::re_: stack[sp - 1] = Complex(stack[sp - 1].real(), 0.0); break;
            case Op::im_: stack[sp - 1] = Complex(stack[sp - 1].imag(), 0.0); break;
            case Op::conj_: stack[sp - 1] = std::conj(stack[sp - 1]); break;
            case Op::dir_pow: {
                const double r = modulus();
                const Complex u = (r == 0.0) ? Complex(0.0, 0.0) : zz[ins.a] / r;
                stack[sp++] = cpow_int(u, static_cast<int>(ins.x));
                break;
            }
            case Op::indicator:
                stack[sp++] = Complex(modulus() <= ins.x ? 1.0 : 0.0, 0.0);
                break;
        }
    }
    Complex v = stack[0];
    if (radial_exp_c_ != Complex(0.0, 0.0)) {
        double rr = 0.0;
        for (int j = 0; j < d_; ++j) rr += std::norm(z[j]);
        v *= std::exp(radial_exp_c_ * std::pow(rr, radial_exp_m_));
    }
    return v;
}

Complex Symbol::eval(const std::vector<Complex>& z) const {
    if (static_cast<int>(z.size()) != d_) {
        throw std::invalid_argument("Symbol::eval: point dimension mismatch");
    }
    return eval(z.data());
}

bool Symbol::is_zero() const {
    return constant_.has_value() && *constant_ == Complex(0.0, 0.0);
}

// ---------------------------------------------------------------------------
// construction and metadata inference

class SymbolBuilder {
public:
    struct Overrides {
        std::optional<GrowthClass> growth;
        double growth_c = 0.0;
        std::optional<PowerExpForm> power_exp;
        std::shared_ptr<const Symbol::RadialMonomialParts> radial_monomial;
    };

    static Symbol build(std::vector<Symbol::Instr> prog, int d, std::string desc, Overrides ov);
    static Symbol build(std::vector<Symbol::Instr> prog, int d, std::string desc) {
        return build(std::move(prog), d, std::move(desc), Overrides());
    }
    static Symbol& mutate(Symbol& s) { return s; }  // friend access for transforms

    static std::vector<Symbol::Instr>& program(Symbol& s) { return s.program_; }
    static const std::vector<Symbol::Instr>& program(const Symbol& s) { return s.program_; }
    static void set_wrappers(Symbol& s, double arg_scale, Complex rc, double rm) {
        s.arg_scale_ = arg_scale;
        s.radial_exp_c_ = rc;
        s.radial_exp_m_ = rm;
    }
    static void get_wrappers(const Symbol& s, double& arg_scale, Complex& rc, double& rm) {
        arg_scale = s.arg_scale_;
        rc = s.radial_exp_c_;
        rm = s.radial_exp_m_;
    }
    static void set_growth(Symbol& s, GrowthClass g, double c) {
        s.growth_ = g;
        s.growth_c_ = c;
    }
    static void set_power_exp(Symbol& s, std::optional<PowerExpForm> pef) {
        s.power_exp_ = std::move(pef);
    }
    static void set_constant(Symbol& s, std::optional<Complex> c) { s.constant_ = c; }
    static void set_desc(Symbol& s, std::string d) { s.desc_ = std::move(d); }
    static void set_radial_monomial(Symbol& s,
                                    std::shared_ptr<const Symbol::RadialMonomialParts> rm) {
        s.radial_monomial_ = std::move(rm);
    }

private:
    static void validate(const std::vector<Symbol::Instr>& prog, int d);
    static std::optional<int> degree_window(const std::vector<Symbol::Instr>& prog);
    static void infer_radiality(Symbol& s);
    static GrowthClass syntactic_growth(const std::vector<Symbol::Instr>& prog);
};

void SymbolBuilder::validate(const std::vector<Symbol::Instr>& prog, int d) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("Symbol: dimension must be in [1,8]");
    int sp = 0, max_sp = 0;
    for (const auto& ins : prog) {
        switch (ins.op) {
            case Op::push_const:
            case Op::push_r:
            case Op::indicator: ++sp; break;
            case Op::push_z:
            case Op::push_zconj:
            case Op::dir_pow:
                if (ins.a < 0 || ins.a >= d) {
                    throw std::invalid_argument("Symbol: variable z" + std::to_string(ins.a + 1) +
                                                " exceeds dimension " + std::to_string(d));
                }
                ++sp;
                break;
            case Op::add:
            case Op::sub:
            case Op::mul:
            case Op::div:
                if (sp < 2) throw std::invalid_argument("Symbol: malformed program");
                --sp;
                break;
            default:
                if (sp < 1) throw std::invalid_argument("Symbol: malformed program");
                break;
        }
        max_sp = std::max(max_sp, sp);
    }
    if (sp != 1 || max_sp > kMaxStack) throw std::invalid_argument("Symbol: malformed program");
}

std::optional<int> SymbolBuilder::degree_window(const std::vector<Symbol::Instr>& prog) {
    // abstract interpretation of the holomorphic-minus-antiholomorphic degree
    struct Rng {
        long lo = 0, hi = 0;
        bool unb = false;
    };
    std::vector<Rng> st;
    auto pop = [&] {
        Rng r = st.back();
        st.pop_back();
        return r;
    };
    for (const auto& ins : prog) {
        switch (ins.op) {
            case Op::push_const:
            case Op::push_r:
            case Op::indicator: st.push_back({0, 0, false}); break;
            case Op::push_z: st.push_back({1, 1, false}); break;
            case Op::push_zconj: st.push_back({-1, -1, false}); break;
            case Op::dir_pow: {
                const long N = static_cast<long>(ins.x);
                st.push_back({N, N, false});
                break;
            }
            case Op::add:
            case Op::sub: {
                Rng b = pop(), a = pop();
                st.push_back({std::min(a.lo, b.lo), std::max(a.hi, b.hi), a.unb || b.unb});
                break;
            }
            case Op::mul: {
                Rng b = pop(), a = pop();
                st.push_back({a.lo + b.lo, a.hi + b.hi, a.unb || b.unb});
                break;
            }
            case Op::div: {
                Rng b = pop(), a = pop();
                st.push_back({a.lo - b.hi, a.hi - b.lo, a.unb || b.unb});
                break;
            }
            case Op::pow_int: {
                Rng a = pop();
                const long k = ins.a;
                long lo = k * a.lo, hi = k * a.hi;
                if (k < 0) std::swap(lo, hi);
                st.push_back({lo, hi, a.unb});
                break;
            }
            case Op::pow_real: {
                Rng a = pop();
                if (a.lo == 0 && a.hi == 0) {
                    st.push_back({0, 0, a.unb});
                } else {
                    st.push_back({0, 0, true});
                }
                break;
            }
            case Op::exp_: {
                Rng a = pop();
                st.push_back({0, 0, a.unb || a.lo != 0 || a.hi != 0});
                break;
            }
            case Op::abs_: {
                Rng a = pop();
                st.push_back({0, 0, a.unb});
                break;
            }
            case Op::re_:
            case Op::im_: {
                Rng a = pop();
                const long M = std::max(std::labs(a.lo), std::labs(a.hi));
                st.push_back({-M, M, a.unb});
                break;
            }
            case Op::conj_: {
                Rng a = pop();
                st.push_back({-a.hi, -a.lo, a.unb});
                break;
            }
        }
    }
    const auto r = st.back();
    if (r.unb) return std::nullopt;
    return static_cast<int>(std::max(std::labs(r.lo), std::labs(r.hi)));
}

GrowthClass SymbolBuilder::syntactic_growth(const std::vector<Symbol::Instr>& prog) {
    bool poly = true;
    for (const auto& ins : prog) {
        switch (ins.op) {
            case Op::div:
            case Op::exp_: poly = false; break;
            case Op::pow_int:
                if (ins.a < 0) poly = false;
                break;
            case Op::pow_real:
                if (ins.x < 0.0) poly = false;
                break;
            default: break;
        }
    }
    return poly ? GrowthClass::polynomial : GrowthClass::unknown;
}

void SymbolBuilder::infer_radiality(Symbol& s) {
    // syntactic: a program that never touches the coordinates is exactly radial
    bool touches_coords = false;
    for (const auto& ins : s.program_) {
        if (ins.op == Op::push_z || ins.op == Op::push_zconj || ins.op == Op::dir_pow) {
            touches_coords = true;
            break;
        }
    }
    if (!touches_coords) {
        s.radiality_ = Radiality::radial;
        s.polar_radial_ = true;
        return;
    }

    // numeric spot checks on a fixed, seeded sample
    const int d = s.d_;
    SplitMix64 rng(0x5eedf0cca11ULL);
    auto sample_point = [&](std::vector<Complex>& z) {
        z.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            z[static_cast<std::size_t>(j)] =
                Complex(rng.uniform(-1.7, 1.7), rng.uniform(-1.7, 1.7));
        }
    };
    auto close = [](Complex a, Complex b) {
        return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a) + std::abs(b));
    };

    bool rot_inv = true, polar = true, radial = true;
    std::vector<Complex> z, w;
    for (int trial = 0; trial < 6; ++trial) {
        sample_point(z);
        const Complex v = s.eval(z.data());
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            rot_inv = polar = radial = false;
            break;
        }
        // common phase
        const double theta = rng.uniform(0.1, 6.2);
        w = z;
        for (auto& c : w) c *= std::polar(1.0, theta);
        if (!close(v, s.eval(w.data()))) rot_inv = false;
        // independent per-coordinate phases
        w = z;
        for (auto& c : w) c *= std::polar(1.0, rng.uniform(0.1, 6.2));
        if (!close(v, s.eval(w.data()))) polar = false;
        // norm-preserving mixing (complex Givens rotations), d >= 2
        if (d >= 2) {
            w = z;
            for (int g = 0; g < 3; ++g) {
                const int a = static_cast<int>(rng.next() % static_cast<unsigned>(d));
                int b = static_cast<int>(rng.next() % static_cast<unsigned>(d));
                if (a == b) b = (b + 1) % d;
                const double phi = rng.uniform(0.0, 6.2831853);
                const Complex cs = std::polar(std::cos(phi), rng.uniform(0.0, 6.2831853));
                const Complex sn = std::polar(std::sin(phi), rng.uniform(0.0, 6.2831853));
                const Complex za = w[static_cast<std::size_t>(a)], zb = w[static_cast<std::size_t>(b)];
                w[static_cast<std::size_t>(a)] = cs * za + sn * zb;
                w[static_cast<std::size_t>(b)] = -std::conj(sn) * za + std::conj(cs) * zb;
            }
            if (!close(v, s.eval(w.data()))) radial = false;
        } else {
            radial = rot_inv;
        }
    }
    if (d >= 2) radial = radial && polar && rot_inv;

    s.polar_radial_ = polar || radial;
    if (radial) {
        s.radiality_ = Radiality::radial;
    } else if (rot_inv) {
        s.radiality_ = Radiality::rotation_invariant;
    } else {
        s.radiality_ = Radiality::general;
    }
}

Symbol SymbolBuilder::build(std::vector<Symbol::Instr> prog, int d, std::string desc,
                            Overrides ov) {
    validate(prog, d);
    Symbol s;
    s.program_ = std::move(prog);
    s.d_ = d;
    s.desc_ = std::move(desc);
    s.degree_window_ = degree_window(s.program_);
    bool coordinate_free = true;
    for (const auto& ins : s.program_) {
        if (ins.op == Op::push_z || ins.op == Op::push_zconj || ins.op == Op::push_r ||
            ins.op == Op::dir_pow || ins.op == Op::indicator) {
            coordinate_free = false;
            break;
        }
    }
    if (coordinate_free) {
        std::vector<Complex> origin(static_cast<std::size_t>(d), Complex(0.0, 0.0));
        s.constant_ = s.eval(origin.data());
    }
    infer_radiality(s);
    if (ov.growth) {
        s.growth_ = *ov.growth;
        s.growth_c_ = ov.growth_c;
    } else {
        s.growth_ = syntactic_growth(s.program_);
    }
    s.power_exp_ = std::move(ov.power_exp);
    s.radial_monomial_ = std::move(ov.radial_monomial);
    return s;
}

Symbol Symbol::conjugated() const {
    Symbol s = *this;
    s.program_.push_back(Instr{Op::conj_, 0, 0.0, Complex(0.0, 0.0)});
    s.radial_exp_c_ = std::conj(s.radial_exp_c_);
    if (s.power_exp_) {
        s.power_exp_->coef = std::conj(s.power_exp_->coef);
        s.power_exp_->lambda = std::conj(s.power_exp_->lambda);
    }
    if (s.constant_) s.constant_ = std::conj(*s.constant_);
    if (s.radial_monomial_) {
        auto rm = std::make_shared<RadialMonomialParts>();
        rm->radial_part = s.radial_monomial_->radial_part.conjugated();
        rm->k = s.radial_monomial_->n;
        rm->n = s.radial_monomial_->k;
        s.radial_monomial_ = std::move(rm);
    }
    s.desc_ = "conj(" + desc_ + ")";
    return s;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(const std::string& text, int d) : text_(text), d_(d) {}

    std::vector<Symbol::Instr> run() {
        parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return std::move(prog_);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw SymbolParseError(msg, pos_); }

    void parse_expr() {
        skip_ws();
        bool neg = false;
        if (consume('-')) {
            neg = true;
        } else {
            consume('+');
        }
        parse_term();
        if (neg) {
            prog_.push_back({Op::push_const, 0, 0.0, Complex(-1.0, 0.0)});
            prog_.push_back({Op::mul});
        }
        for (;;) {
            if (consume('+')) {
                parse_term();
                prog_.push_back({Op::add});
            } else if (consume('-')) {
                parse_term();
                prog_.push_back({Op::sub});
            } else {
                break;
            }
        }
    }

    void parse_term() {
        parse_factor();
        for (;;) {
            if (consume('*')) {
                parse_factor();
                prog_.push_back({Op::mul});
            } else if (consume('/')) {
                parse_factor();
                prog_.push_back({Op::div});
            } else {
                break;
            }
        }
    }

    void parse_factor() {
        parse_atom();
        if (consume('^')) {
            skip_ws();
            int sign = 1;
            if (consume('-')) sign = -1;
            else consume('+');
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected integer exponent");
            long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 1000000) fail("exponent too large");
                ++pos_;
            }
            prog_.push_back({Op::pow_int, static_cast<int>(sign * v)});
        }
    }

    bool try_keyword(const char* kw) {
        skip_ws();
        const std::size_t len = std::strlen(kw);
        if (text_.compare(pos_, len, kw) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    void parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            parse_number();
            return;
        }
        for (const char* kw : {"conj(", "exp(", "abs(", "re(", "im("}) {
            if (try_keyword(kw)) {
                parse_expr();
                if (!consume(')')) fail("expected ')'");
                if (kw[0] == 'c') prog_.push_back({Op::conj_});
                else if (kw[0] == 'e' && kw[1] == 'x') prog_.push_back({Op::exp_});
                else if (kw[0] == 'a') prog_.push_back({Op::abs_});
                else if (kw[0] == 'r') prog_.push_back({Op::re_});
                else prog_.push_back({Op::im_});
                return;
            }
        }
        if (c == 'i' && !(pos_ + 1 < text_.size() &&
                          std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            prog_.push_back({Op::push_const, 0, 0.0, Complex(0.0, 1.0)});
            return;
        }
        if (c == 'r' && !(pos_ + 1 < text_.size() &&
                          std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            prog_.push_back({Op::push_r});
            return;
        }
        if (c == 'z') {
            std::size_t q = pos_ + 1;
            if (q >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[q]))) {
                fail("expected coordinate index after 'z'");
            }
            long idx = 0;
            while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                idx = idx * 10 + (text_[q] - '0');
                if (idx > 64) fail("coordinate index too large");
                ++q;
            }
            if (idx < 1 || idx > d_) {
                fail("variable z" + std::to_string(idx) + " exceeds dimension " +
                     std::to_string(d_));
            }
            pos_ = q;
            prog_.push_back({Op::push_z, static_cast<int>(idx - 1)});
            return;
        }
        if (consume('(')) {
            parse_expr();
            if (!consume(')')) fail("expected ')'");
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                ++q;
                while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
                pos_ = q;
            }
        }
        const std::string tok = text_.substr(start, pos_ - start);
        try {
            const double v = std::stod(tok);
            prog_.push_back({Op::push_const, 0, 0.0, Complex(v, 0.0)});
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number '" + tok + "'");
        }
    }

    const std::string& text_;
    int d_;
    std::size_t pos_ = 0;
    std::vector<Symbol::Instr> prog_;
};

}  // namespace

Symbol parse_symbol(const std::string& text, int d) {
    Parser p(text, d);
    return SymbolBuilder::build(p.run(), d, text);
}

// ---------------------------------------------------------------------------
// catalog

namespace catalog {

Symbol constant(Complex value, int d) {
    std::ostringstream os;
    os << value.real();
    if (value.imag() != 0.0) os << (value.imag() < 0 ? "" : "+") << value.imag() << "i";
    std::vector<Symbol::Instr> prog{{Op::push_const, 0, 0.0, value}};
    SymbolBuilder::Overrides ov;
    ov.power_exp = PowerExpForm{value, 0.0, Complex(0.0, 0.0), 1.0};
    return SymbolBuilder::build(std::move(prog), d, os.str(), std::move(ov));
}

Symbol zero(int d) { return constant(Complex(0.0, 0.0), d); }

Symbol radial_power(double p, int d) {
    if (p < 0.0) throw std::invalid_argument("radial_power: exponent must be >= 0");
    std::vector<Symbol::Instr> prog{{Op::push_r}, {Op::pow_real, 0, p}};
    SymbolBuilder::Overrides ov;
    ov.power_exp = PowerExpForm{Complex(1.0, 0.0), p / 2.0, Complex(0.0, 0.0), 1.0};
    std::ostringstream os;
    os << "r^" << p;
    return SymbolBuilder::build(std::move(prog), d, os.str(), std::move(ov));
}

Symbol exp_radial(Complex lambda, double m, int d) {
    std::vector<Symbol::Instr> prog{{Op::push_r},
                                    {Op::pow_real, 0, 2.0 * m},
                                    {Op::push_const, 0, 0.0, lambda},
                                    {Op::mul},
                                    {Op::exp_}};
    SymbolBuilder::Overrides ov;
    if (lambda.real() > 0.0) {
        ov.growth = GrowthClass::d_c_bounded;
        ov.growth_c = lambda.real();
    } else {
        ov.growth = GrowthClass::polynomial;  // bounded
    }
    ov.power_exp = PowerExpForm{Complex(1.0, 0.0), 0.0, lambda, m};
    std::ostringstream os;
    os << "exp((" << lambda.real() << (lambda.imag() < 0 ? "" : "+") << lambda.imag()
       << "i)*r^" << 2.0 * m << ")";
    return SymbolBuilder::build(std::move(prog), d, os.str(), std::move(ov));
}

Symbol monomial(const MultiIndex& k, const MultiIndex& n) {
    if (k.size() != n.size()) throw std::invalid_argument("monomial: index sizes differ");
    const int d = k.size();
    std::vector<Symbol::Instr> prog{{Op::push_const, 0, 0.0, Complex(1.0, 0.0)}};
    for (int j = 0; j < d; ++j) {
        if (k[j] > 0) {
            prog.push_back({Op::push_z, j});
            if (k[j] != 1) prog.push_back({Op::pow_int, k[j]});
            prog.push_back({Op::mul});
        }
        if (n[j] > 0) {
            prog.push_back({Op::push_zconj, j});
            if (n[j] != 1) prog.push_back({Op::pow_int, n[j]});
            prog.push_back({Op::mul});
        }
    }
    return SymbolBuilder::build(std::move(prog), d,
                                "z^" + k.to_string() + "*conj(z)^" + n.to_string());
}

Symbol direction_power(int axis, int N, int d) {
    if (axis < 1 || axis > d) throw std::invalid_argument("direction_power: bad axis");
    if (N < 1) throw std::invalid_argument("direction_power: N must be >= 1");
    std::vector<Symbol::Instr> prog{{Op::dir_pow, axis - 1, static_cast<double>(N)}};
    std::ostringstream os;
    os << "z" << axis << "^" << N << "/r^" << N;
    return SymbolBuilder::build(std::move(prog), d, os.str());
}

Symbol radial_indicator(double R, int d) {
    if (!(R > 0.0)) throw std::invalid_argument("radial_indicator: R must be > 0");
    std::vector<Symbol::Instr> prog{{Op::indicator, 0, R}};
    std::ostringstream os;
    os << "chi(r<=" << R << ")";
    return SymbolBuilder::build(std::move(prog), d, os.str());
}

}  // namespace catalog

// ---------------------------------------------------------------------------
// transforms

Symbol multiply_monomial(const Symbol& g, const MultiIndex& k, const MultiIndex& n) {
    const int d = g.dimension();
    if (k.size() != d || n.size() != d) {
        throw std::invalid_argument("multiply_monomial: index dimension mismatch");
    }
    double arg_scale;
    Complex rc;
    double rm;
    SymbolBuilder::get_wrappers(g, arg_scale, rc, rm);

    std::vector<Symbol::Instr> prog = SymbolBuilder::program(g);
    for (int j = 0; j < d; ++j) {
        if (k[j] > 0) {
            prog.push_back({Op::push_z, j});
            if (k[j] != 1) prog.push_back({Op::pow_int, k[j]});
            prog.push_back({Op::mul});
        }
        if (n[j] > 0) {
            prog.push_back({Op::push_zconj, j});
            if (n[j] != 1) prog.push_back({Op::pow_int, n[j]});
            prog.push_back({Op::mul});
        }
    }
    // the program sees arg_scale * z, so compensate the monomial's scaling
    const int total = k.total_degree() + n.total_degree();
    if (arg_scale != 1.0 && total > 0) {
        prog.push_back({Op::push_const, 0, 0.0, Complex(std::pow(arg_scale, -total), 0.0)});
        prog.push_back({Op::mul});
    }

    SymbolBuilder::Overrides ov;
    if (g.is_radial()) {
        auto parts = std::make_shared<Symbol::RadialMonomialParts>();
        parts->radial_part = g;
        parts->k = k.entries();
        parts->n = n.entries();
        ov.radial_monomial = std::move(parts);
    }
    Symbol out = SymbolBuilder::build(std::move(prog), d,
                                      g.description() + "*z^" + k.to_string() + "*conj(z)^" +
                                          n.to_string(),
                                      std::move(ov));
    SymbolBuilder::set_wrappers(out, arg_scale, rc, rm);
    return out;
}

Symbol v_transform(const Symbol& g, double t, const SpaceParams& p) {
    if (!(t > 0.0)) throw std::invalid_argument("v_transform: t must be > 0");
    if (g.dimension() != p.d) throw std::invalid_argument("v_transform: dimension mismatch");
    if (t == 1.0) return g;

    double arg_scale;
    Complex rc;
    double rm;
    SymbolBuilder::get_wrappers(g, arg_scale, rc, rm);
    if (rc != Complex(0.0, 0.0) && rm != p.m) {
        throw std::invalid_argument("v_transform: mixed radial exponent orders unsupported");
    }
    const double t2m = std::pow(t, 2.0 * p.m);
    Symbol out = g;
    SymbolBuilder::set_wrappers(out, arg_scale * t, rc * t2m + (1.0 - t2m), p.m);

    // growth bookkeeping
    const double extra = 1.0 - t2m;  // coefficient added to the radial exponent
    double base_c = 0.0;
    switch (g.growth()) {
        case GrowthClass::polynomial: base_c = 0.0; break;
        case GrowthClass::d_c_bounded: base_c = g.growth_c(); break;
        case GrowthClass::sub_double_exponential: base_c = 0.0; break;
        case GrowthClass::unknown: base_c = 0.0; break;
    }
    if (g.growth() == GrowthClass::unknown) {
        SymbolBuilder::set_growth(out, GrowthClass::unknown, 0.0);
    } else {
        const double c_eff = base_c * t2m + extra;
        if (c_eff > 0.0) {
            SymbolBuilder::set_growth(out, GrowthClass::d_c_bounded, c_eff);
        } else if (g.growth() == GrowthClass::sub_double_exponential) {
            SymbolBuilder::set_growth(out, GrowthClass::sub_double_exponential, 0.0);
        } else {
            SymbolBuilder::set_growth(out, GrowthClass::polynomial, 0.0);
        }
    }

    if (const auto& pef = g.power_exp_form(); pef && (pef->lambda == Complex(0.0, 0.0) ||
                                                      pef->m_ref == p.m)) {
        PowerExpForm f = *pef;
        f.coef *= std::pow(t, 2.0 * f.p);
        f.lambda = f.lambda * t2m + (1.0 - t2m);
        f.m_ref = p.m;
        SymbolBuilder::set_power_exp(out, f);
    } else {
        SymbolBuilder::set_power_exp(out, std::nullopt);
    }
    SymbolBuilder::set_constant(out, std::nullopt);
    SymbolBuilder::set_radial_monomial(out, nullptr);
    std::ostringstream os;
    os << "V_" << t << "[" << g.description() << "]";
    SymbolBuilder::set_desc(out, os.str());
    return out;
}

Complex radialize(const Symbol& g, double r, int n_theta) {
    if (g.dimension() != 1) throw std::domain_error("radialize: only d = 1 is supported");
    if (n_theta < 1) throw std::invalid_argument("radialize: n_theta must be >= 1");
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n_theta; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n_theta;
        const Complex z = std::polar(r, theta);
        acc += g.eval(&z);
    }
    return acc * (2.0 / n_theta);
}

namespace {

// angular average (1/(2pi)^d factor folded in) of g on the torus of radii r
Complex angular_average(const Symbol& g, const std::vector<double>& r, int n_theta) {
    const int d = g.dimension();
    if (g.polar_radial()) {
        Complex z[kMaxDim];
        for (int j = 0; j < d; ++j) z[j] = Complex(r[static_cast<std::size_t>(j)], 0.0);
        return g.eval(z);
    }
    if (d == 1) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n_theta; ++j) {
            const Complex z = std::polar(r[0], 2.0 * std::numbers::pi * j / n_theta);
            acc += g.eval(&z);
        }
        return acc / static_cast<double>(n_theta);
    }
    if (d == 2) {
        Complex acc(0.0, 0.0);
        for (int j1 = 0; j1 < n_theta; ++j1) {
            const Complex z1 = std::polar(r[0], 2.0 * std::numbers::pi * j1 / n_theta);
            for (int j2 = 0; j2 < n_theta; ++j2) {
                const Complex z[2] = {z1, std::polar(r[1], 2.0 * std::numbers::pi * j2 / n_theta)};
                acc += g.eval(z);
            }
        }
        return acc / static_cast<double>(n_theta * n_theta);
    }
    throw std::invalid_argument("g_transform: general symbols supported only for d <= 2");
}

bool is_nonneg_integer_vector(const std::vector<Complex>& z, std::vector<int>& out) {
    out.clear();
    for (const Complex& c : z) {
        if (std::abs(c.imag()) > 1e-12) return false;
        const double rounded = std::round(c.real());
        if (rounded < -0.5 || std::abs(c.real() - rounded) > 1e-12) return false;
        out.push_back(static_cast<int>(rounded));
    }
    return true;
}

}  // namespace

Complex g_transform(const Symbol& g, const std::vector<Complex>& z, const SpaceParams& p,
                    const QuadSpec& quad) {
    const int d = p.d;
    if (g.dimension() != d || static_cast<int>(z.size()) != d) {
        throw std::invalid_argument("g_transform: dimension mismatch");
    }
    if (p.alpha != 1.0) {
        throw std::invalid_argument("g_transform: defined against the alpha = 1 measure");
    }
    for (const Complex& c : z) {
        if (c.real() < -1e-12) {
            throw std::invalid_argument("g_transform: requires Re z_j >= 0");
        }
    }

    // radial-times-monomial symbols reduce to one radial integral in any d
    if (const auto& rm = g.radial_monomial_parts()) {
        for (int j = 0; j < d; ++j) {
            if (rm->k[static_cast<std::size_t>(j)] != rm->n[static_cast<std::size_t>(j)]) {
                return Complex(0.0, 0.0);  // angular integral vanishes
            }
        }
        Complex sum_a(static_cast<double>(d), 0.0);
        Complex log_gamma_prod(0.0, 0.0);
        for (int j = 0; j < d; ++j) {
            const Complex aj = z[static_cast<std::size_t>(j)] +
                               static_cast<double>(rm->k[static_cast<std::size_t>(j)]) + 1.0;
            log_gamma_prod += lgamma_complex(aj);
            sum_a += z[static_cast<std::size_t>(j)] +
                     static_cast<double>(rm->k[static_cast<std::size_t>(j)]);
        }
        const Symbol& f = rm->radial_part;
        const Complex expo = p.s + sum_a;  // integrand rho^{expo-1} e^{-rho^m} f(sqrt(rho))
        std::vector<Complex> pt(static_cast<std::size_t>(d), Complex(0.0, 0.0));
        const Complex integral = exp_sinh(
            [&](double rho) -> Complex {
                const double lw = (expo.real() - 1.0) * std::log(rho) - std::pow(rho, p.m);
                if (lw < -745.0) return Complex(0.0, 0.0);
                pt[0] = Complex(std::sqrt(rho), 0.0);
                return f.eval(pt.data()) *
                       std::exp(Complex(lw, expo.imag() * std::log(rho)));
            },
            quad.de);
        const double log_c = std::log(normalization_constant(p));
        const Complex pref = std::exp(log_c + d * std::log(std::numbers::pi) + log_gamma_prod -
                                      lgamma_complex(sum_a));
        return pref * integral;
    }

    std::vector<int> l;
    if (is_nonneg_integer_vector(z, l) && g.growth() == GrowthClass::polynomial &&
        g.radial_exp_coefficient() == Complex(0.0, 0.0)) {
        // Gauss path: |x_j|^{2 l_j} g is of polynomial type
        const SpaceParams axis(1, p.m, 1.0, 0.0);
        const RadialRule rule = build_radial_rule(
            axis, std::max(quad.n_r, 8 + *std::max_element(l.begin(), l.end())));
        const double c = normalization_constant(p);
        const double two_pi = 2.0 * std::numbers::pi;
        if (d == 1) {
            Complex acc(0.0, 0.0);
            std::vector<double> rv(1);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double r = rule.nodes[i];
                rv[0] = r;
                const double extra = (l[0] == 0 ? 1.0 : std::pow(r, 2 * l[0])) *
                                     (p.s == 0.0 ? 1.0 : std::pow(r * r, p.s));
                acc += rule.weights[i] * extra * angular_average(g, rv, quad.n_theta);
            }
            return c * two_pi * acc;
        }
        if (d == 2) {
            Complex acc(0.0, 0.0);
            std::vector<double> rv(2);
            for (std::size_t i1 = 0; i1 < rule.nodes.size(); ++i1) {
                const double r1 = rule.nodes[i1];
                for (std::size_t i2 = 0; i2 < rule.nodes.size(); ++i2) {
                    const double r2 = rule.nodes[i2];
                    const double rho = r1 * r1 + r2 * r2;
                    const double corr =
                        (p.s == 0.0 ? 1.0 : std::pow(rho, p.s)) *
                        std::exp(-(std::pow(rho, p.m) - std::pow(r1, 2.0 * p.m) -
                                   std::pow(r2, 2.0 * p.m)));
                    const double jw = rule.weights[i1] * rule.weights[i2] * corr;
                    if (jw == 0.0) continue;
                    rv[0] = r1;
                    rv[1] = r2;
                    const double mono = (l[0] == 0 ? 1.0 : std::pow(r1, 2 * l[0])) *
                                        (l[1] == 0 ? 1.0 : std::pow(r2, 2 * l[1]));
                    acc += jw * mono * angular_average(g, rv, quad.n_theta);
                }
            }
            return c * two_pi * two_pi * acc;
        }
        throw std::invalid_argument("g_transform: general symbols supported only for d <= 2");
    }

    const double c = normalization_constant(p);
    const double two_pi = 2.0 * std::numbers::pi;
    if (d == 1) {
        const Complex z0 = z[0];
        std::vector<double> rv(1);
        const Complex integral = exp_sinh(
            [&](double r) -> Complex {
                const double lr = std::log(r);
                const double lw = (2.0 * z0.real() + 2.0 * p.s + 1.0) * lr -
                                  std::pow(r, 2.0 * p.m);
                if (lw < -745.0) return Complex(0.0, 0.0);
                rv[0] = r;
                const Complex amp = std::exp(Complex(lw, 2.0 * z0.imag() * lr));
                return amp * angular_average(g, rv, quad.n_theta);
            },
            quad.de);
        return c * two_pi * integral;
    }
    if (d == 2) {
        // fixed double-exponential grid per radial axis
        const double h = 1.0 / 32.0;
        struct Node {
            double r, w, lr;
        };
        std::vector<Node> nodes;
        for (double u = -4.5; u <= 4.5; u += h) {
            const double lr = 1.5707963267948966 * std::sinh(u);
            const double r = std::exp(lr);
            if (r == 0.0 || std::isinf(r)) continue;
            const double w = h * r * 1.5707963267948966 * std::cosh(u);
            nodes.push_back({r, w, lr});
        }
        Complex acc(0.0, 0.0);
        std::vector<double> rv(2);
        for (const auto& n1 : nodes) {
            for (const auto& n2 : nodes) {
                const double rho = n1.r * n1.r + n2.r * n2.r;
                const double lw = (2.0 * z[0].real() + 1.0) * n1.lr +
                                  (2.0 * z[1].real() + 1.0) * n2.lr + p.s * std::log(rho) -
                                  std::pow(rho, p.m);
                if (lw < -745.0) continue;
                rv[0] = n1.r;
                rv[1] = n2.r;
                const double phase = 2.0 * z[0].imag() * n1.lr + 2.0 * z[1].imag() * n2.lr;
                acc += n1.w * n2.w * std::exp(Complex(lw, phase)) *
                       angular_average(g, rv, quad.n_theta);
            }
        }
        return c * two_pi * two_pi * acc;
    }
    throw std::invalid_argument("g_transform: general symbols supported only for d <= 2");
}

Complex g_transform_via_radialization(const Symbol& g, Complex z, const SpaceParams& p,
                                      const QuadSpec& quad) {
    if (p.d != 1 || g.dimension() != 1) {
        throw std::invalid_argument("g_transform_via_radialization: d = 1 only");
    }
    if (p.alpha != 1.0) {
        throw std::invalid_argument("g_transform_via_radialization: requires alpha = 1");
    }
    const double pref = p.m / std::tgamma((1.0 + p.s) / p.m);
    const Complex two_z = 2.0 * z;
    return pref * exp_sinh(
                      [&](double r) -> Complex {
                          const double lr = std::log(r);
                          const double lw =
                              (two_z.real() - 1.0 + 2.0 * p.s + 2.0) * lr -
                              std::pow(r, 2.0 * p.m);
                          if (lw < -745.0) return Complex(0.0, 0.0);
                          return radialize(g, r, quad.n_theta) *
                                 std::exp(Complex(lw, two_z.imag() * lr));
                      },
                      quad.de);
}

double dc_norm_estimate(const Symbol& g, double c, const SpaceParams& p,
                        const SamplingSpec& grid) {
    if (c < 0.0) throw std::invalid_argument("dc_norm_estimate: c must be >= 0");
    const int d = g.dimension();
    std::vector<std::vector<Complex>> dirs;
    if (d == 1) {
        for (double th : {0.0, 0.7, 1.9, 3.1, 4.3, 5.5}) {
            dirs.push_back({std::polar(1.0, th)});
        }
    } else {
        SplitMix64 rng(0xd1ce5717ULL);
        for (int j = 0; j < d; ++j) {
            std::vector<Complex> e(static_cast<std::size_t>(d), Complex(0.0, 0.0));
            e[static_cast<std::size_t>(j)] = Complex(1.0, 0.0);
            dirs.push_back(e);
        }
        while (static_cast<int>(dirs.size()) < grid.n_dirs + d) {
            std::vector<Complex> v(static_cast<std::size_t>(d));
            double norm2 = 0.0;
            for (auto& comp : v) {
                comp = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
                norm2 += std::norm(comp);
            }
            if (norm2 < 1e-12) continue;
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& comp : v) comp *= inv;
            dirs.push_back(std::move(v));
        }
    }

    double best = 0.0;
    std::vector<Complex> pt(static_cast<std::size_t>(d));
    for (const auto& dir : dirs) {
        for (int q = 0; q <= grid.n_r; ++q) {
            const double r = grid.r_max * q / grid.n_r;
            for (int j = 0; j < d; ++j) pt[static_cast<std::size_t>(j)] = r * dir[static_cast<std::size_t>(j)];
            const Complex v = g.eval(pt.data());
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
            const double damp = std::exp(-c * std::pow(r, 2.0 * p.m));
            const double val = std::abs(v) * damp;
            if (std::isfinite(val)) best = std::max(best, val);
        }
    }
    return best;
}

}  // namespace fockop
