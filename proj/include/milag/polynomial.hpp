#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "milag/errors.hpp"
#include "milag/rational.hpp"

namespace milag {

template <class C>
class Poly;

template <class C>
bool is_zero(const Poly<C>& p);
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b);
template <class C>
std::string to_string(const Poly<C>& p);

/// Dense univariate polynomial over an exact coefficient ring C.
/// Coefficients are stored ascending in the variable and trailing zeros
/// are trimmed, so the zero polynomial is the empty list and
/// degree() == size - 1 otherwise.
///
/// C must provide ring arithmetic plus the free functions is_zero(c),
/// exact_div(c, c) and to_string(c).  Instantiated with Rational this is
/// the polynomial ring Q[x]; with Poly<Rational> it is Q[g][eta].
template <class C>
class Poly {
public:
    Poly() = default;
    Poly(C constant) { // NOLINT: implicit by design
        coeffs_.push_back(std::move(constant));
        trim();
    }
    Poly(long n) : Poly(C(n)) {} // NOLINT: implicit by design
    Poly(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly monomial(int k, C coeff) {
        std::vector<C> cs(static_cast<size_t>(k) + 1);
        cs.back() = std::move(coeff);
        return Poly(std::move(cs));
    }
    static Poly variable() { return monomial(1, C(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    C coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return C();
        return coeffs_[static_cast<size_t>(k)];
    }
    const C& leading() const {
        if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (milag::is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const C& c) {
        for (auto& x : coeffs_) x = x * c;
        trim();
        return *this;
    }
    friend Poly operator*(const C& c, Poly p) { return p.scale(c); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<C> r(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            r[i - 1] = coeffs_[i] * C(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // Horner evaluation; T must absorb products with C (T = C, double, ...).
    template <class T>
    T evaluate(const T& x) const {
        T acc{};
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + T(coeffs_[i]);
        return acc;
    }

    // p(c * x), i.e. rescale the variable.  With c = -1 this is x -> -x.
    Poly scale_variable(const C& c) const {
        Poly r = *this;
        C pw(1);
        for (size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] = r.coeffs_[i] * pw;
            pw = pw * c;
        }
        r.trim();
        return r;
    }

    // Polynomial composition p(q(x)).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + Poly(coeffs_[i]);
        return acc;
    }

    Poly shifted_up(int k) const { // multiply by x^k
        if (is_zero() || k == 0) return *this;
        std::vector<C> r(static_cast<size_t>(k), C());
        r.insert(r.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(r));
    }

    // Max k with x^k | p (0 for the zero polynomial).
    int low_order() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!milag::is_zero(coeffs_[i])) return static_cast<int>(i);
        return 0;
    }
    Poly shifted_down(int k) const { // exact division by x^k
        if (k == 0) return *this;
        if (low_order() < k)
            throw DivisionError("shifted_down: not divisible by x^k", to_string());
        return Poly(std::vector<C>(coeffs_.begin() + k, coeffs_.end()));
    }

    // Long division; succeeds whenever every step's leading-coefficient
    // division is exact in C (always, over a field; for divisible pairs,
    // over an integral domain).
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        if (d.is_zero()) throw DivisionError("division by zero polynomial", to_string());
        Poly r = *this;
        if (r.degree() < d.degree()) return {Poly(), r};
        std::vector<C> q(static_cast<size_t>(r.degree() - d.degree()) + 1);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            C c = milag::exact_div(r.leading(), d.leading());
            int k = r.degree() - d.degree();
            q[static_cast<size_t>(k)] = c;
            r -= Poly::monomial(k, std::move(c)) * d;
        }
        return {Poly(std::move(q)), r};
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (milag::is_zero(coeffs_[i])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = milag::to_string(coeffs_[i]);
            if (cs.find_first_of("+- ") != std::string::npos && i > 0) cs = "(" + cs + ")";
            if (i == 0) {
                out += cs;
            } else {
                out += (cs == "1" ? "" : cs + "*") + var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && milag::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}

template <class C>
std::string to_string(const Poly<C>& p) {
    return p.to_string();
}

/// Exact division a / b; throws DivisionError (carrying the remainder)
/// unless b divides a in the ring.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw DivisionError("polynomial exact_div: not divisible", r.to_string());
    return q;
}

/// Univariate polynomial over Q (used both for eta-polynomials at a fixed
/// parameter value and for polynomials in the parameter g itself).
using PolyQ = Poly<Rational>;

/// Polynomial in eta whose coefficients are polynomials in g: the ring
/// Q[g][eta].  Numeric parameter values are simply degree-0 coefficients.
using GPoly = Poly<PolyQ>;

inline GPoly to_gpoly(const PolyQ& p) {
    std::vector<PolyQ> cs;
    cs.reserve(static_cast<size_t>(p.degree() + 1));
    for (const auto& c : p.coeffs()) cs.emplace_back(c);
    return GPoly(std::move(cs));
}

/// Collapse a GPoly with only degree-0 coefficients in g back to PolyQ.
inline PolyQ to_polyq(const GPoly& p) {
    std::vector<Rational> cs;
    cs.reserve(static_cast<size_t>(p.degree() + 1));
    for (const auto& c : p.coeffs()) {
        if (c.degree() > 0)
            throw DomainError("to_polyq: coefficient still depends on g: " + c.to_string("g"));
        cs.push_back(c.coeff(0));
    }
    return PolyQ(std::move(cs));
}

inline GPoly substitute_g(const GPoly& p, const Rational& g0) {
    std::vector<PolyQ> cs;
    cs.reserve(static_cast<size_t>(p.degree() + 1));
    for (const auto& c : p.coeffs()) cs.emplace_back(c.template evaluate<Rational>(g0));
    return GPoly(std::move(cs));
}

/// Substitute g -> a + b*g in every coefficient.
inline GPoly substitute_g_linear(const GPoly& p, const Rational& a, const Rational& b) {
    PolyQ lin({a, b});
    std::vector<PolyQ> cs;
    cs.reserve(static_cast<size_t>(p.degree() + 1));
    for (const auto& c : p.coeffs()) cs.push_back(c.compose(lin));
    return GPoly(std::move(cs));
}

// --- gcd and normal forms over the field Q -------------------------------

inline PolyQ monic(const PolyQ& p) {
    if (p.is_zero()) return p;
    PolyQ r = p;
    Rational inv = Rational(1) / p.leading();
    return r.scale(inv);
}

inline PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Scale a rational-coefficient polynomial to integer coefficients with
/// content 1 and positive leading coefficient; returns the scaled
/// polynomial and the constant c with p = c * primitive.
inline std::pair<PolyQ, Rational> integer_primitive(const PolyQ& p) {
    if (p.is_zero()) return {p, Rational(1)};
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class n = c.num() * (den_lcm / c.den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        num_gcd = gg;
    }
    Rational content(mpq_class(num_gcd, den_lcm));
    if (p.leading().sign() < 0) content = -content;
    PolyQ prim = p;
    prim.scale(Rational(1) / content);
    return {prim, content};
}

/// Content of a GPoly over Q[g]: the (monic) gcd of its coefficients.
inline PolyQ gpoly_content(const GPoly& p) {
    PolyQ c;
    for (const auto& coef : p.coeffs()) c = gcd(c, coef);
    return c;
}

/// If a == k * b for a nonzero rational constant k, report (true, k).
inline std::pair<bool, Rational> proportional_constant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {a.is_zero() && b.is_zero(), Rational(1)};
    if (a.degree() != b.degree()) return {false, Rational()};
    Rational k = a.leading() / b.leading();
    PolyQ scaled = b;
    scaled.scale(k);
    return {scaled == a, k};
}

inline std::pair<bool, Rational> proportional_constant(const GPoly& a, const GPoly& b) {
    if (a.is_zero() || b.is_zero()) return {a.is_zero() && b.is_zero(), Rational(1)};
    if (a.degree() != b.degree()) return {false, Rational()};
    const PolyQ& pa = a.leading();
    const PolyQ& pb = b.leading();
    if (pa.degree() != pb.degree()) return {false, Rational()};
    Rational k = pa.leading() / pb.leading();
    GPoly scaled = b;
    scaled.scale(PolyQ(k));
    return {scaled == a, k};
}

} // namespace milag
