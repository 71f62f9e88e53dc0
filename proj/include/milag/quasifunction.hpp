#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milag/polynomial.hpp"

namespace milag {

/// Value of the form a + b*g: powers of x and seed energies are at most
/// linear in the oscillator parameter.
struct LinearG {
    Rational a;
    Rational b;

    LinearG() = default;
    LinearG(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}
    static LinearG g() { return LinearG(Rational(0), Rational(1)); }

    bool is_numeric() const { return b.is_zero(); }
    Rational at(const Rational& g0) const { return a + b * g0; }
    LinearG substitute_linear(const Rational& c0, const Rational& c1) const {
        return LinearG(a + b * c0, b * c1);
    }

    LinearG operator+(const LinearG& o) const { return LinearG(a + o.a, b + o.b); }
    LinearG operator-(const LinearG& o) const { return LinearG(a - o.a, b - o.b); }
    LinearG operator-() const { return LinearG(-a, -b); }
    bool operator==(const LinearG& o) const { return a == o.a && b == o.b; }

    std::string to_string() const;
};

/// Element of the function ring exp(c*x^2/2) * x^p * P(eta), eta = x^2,
/// which is closed under d/dx and multiplication.  P lives in Q[g][eta]
/// so one code path serves symbolic and numeric parameter values.
///
/// Canonical form: P has a nonzero constant term in eta (eta^k factors
/// are absorbed as p -> p + 2k), and the zero function is (0, 0, 0).
class QuasiFunction {
public:
    QuasiFunction() = default;
    QuasiFunction(int expo, LinearG power, GPoly poly)
        : expo_(expo), power_(std::move(power)), poly_(std::move(poly)) {
        canonicalize();
    }

    int expo() const { return expo_; }
    const LinearG& power() const { return power_; }
    const GPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    QuasiFunction derivative() const;
    QuasiFunction operator*(const QuasiFunction& o) const;
    QuasiFunction operator-() const;

    /// Addition is partial: both sides must carry the same exponential
    /// factor and powers differing by an even integer.
    QuasiFunction operator+(const QuasiFunction& o) const;
    QuasiFunction operator-(const QuasiFunction& o) const { return *this + (-o); }

    QuasiFunction scale(const Rational& c) const;
    QuasiFunction scale_g(const PolyQ& c) const; // multiply by an element of Q[g]

    bool operator==(const QuasiFunction& o) const {
        return expo_ == o.expo_ && power_ == o.power_ && poly_ == o.poly_;
    }

    QuasiFunction substitute_g(const Rational& g0) const;
    QuasiFunction substitute_g_linear(const Rational& a, const Rational& b) const;

    /// Numeric value at x > 0 (requires a numeric parameter).
    double evaluate(double x) const;

    std::string to_string() const;

private:
    void canonicalize();

    int expo_ = 0;
    LinearG power_;
    GPoly poly_;
};

/// If a == k * b for a rational k != 0, return k.
std::optional<Rational> proportional(const QuasiFunction& a, const QuasiFunction& b);

/// Wronskian Det(d^{k-1} f_j / dx^{k-1}).  Exact; zero iff the inputs are
/// linearly dependent.  Result power is sum(p_j) - M(M-1)/2 before
/// canonical eta absorption.
QuasiFunction wronskian(const std::vector<QuasiFunction>& fs);

// --- Laguerre polynomials and the model's function families ---------------

/// Degree-n generalized Laguerre polynomial via the three-term recurrence
/// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}, valid for any
/// alpha including negative integers.  Leading coefficient (-1)^n / n!.
template <class C>
Poly<C> laguerre(int n, const C& alpha) {
    if (n < 0) throw DomainError("laguerre: negative degree");
    Poly<C> prev(C(1));
    if (n == 0) return prev;
    Poly<C> cur{C(1) + alpha, C(-1)};
    for (int k = 1; k < n; ++k) {
        Poly<C> rec{alpha + C(2 * k + 1), C(-1)};
        Poly<C> next = rec * cur - Poly<C>(alpha + C(k)) * prev;
        auto [q, r] = next.divrem(Poly<C>(C(k + 1)));
        if (!r.is_zero()) throw DivisionError("laguerre recurrence", r.to_string());
        prev = std::move(cur);
        cur = std::move(q);
    }
    return cur;
}

enum class SeedKind { I, II, III };

const char* to_string(SeedKind k);
SeedKind seed_kind_from_string(const std::string& s);

/// Seed descriptor; g empty means "symbolic g".
struct SeedSpec {
    SeedKind kind = SeedKind::I;
    int v = 1;
    std::optional<Rational> g;

    std::string label() const;
};

/// A seed or eigen solution together with its energy, which is at most
/// linear in g.
struct LabeledSolution {
    QuasiFunction fn;
    PolyQ energy; // element of Q[g], degree <= 1
};

/// Type I :  exp(+x^2/2) x^{g}   L_v^{(g-1/2)}(-eta),  E = -4(g+v+1/2)
/// Type II:  exp(-x^2/2) x^{1-g} L_v^{(1/2-g)}(eta),   E = -4(g-v-1/2)
/// Type III: exp(+x^2/2) x^{1-g} L_v^{(1/2-g)}(-eta),  E = -4(v+1)
LabeledSolution seed_solution(const SeedSpec& s);

/// phi_n(x; g) = exp(-x^2/2) x^g L_n^{(g-1/2)}(eta), E_n = 4n.
LabeledSolution eigenfunction(int n, const std::optional<Rational>& g = std::nullopt);

/// Residual of the base oscillator equation: x^2 * (-f'' + (U(x;g) - E) f)
/// as an exact element of the ring; the zero function iff f solves the
/// equation at energy E (E in Q[g]).
QuasiFunction base_schrodinger_residual(const QuasiFunction& f, const PolyQ& energy);

} // namespace milag
