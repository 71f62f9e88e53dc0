#pragma once

#include <string>

#include "milag/polynomial.hpp"
#include "milag/quasifunction.hpp"

namespace milag {

/// Rational function of eta over Q in canonical reduced form:
/// gcd(num, den) = 1 and den integer-primitive with positive leading
/// coefficient, so equality is plain componentwise equality.
class RationalFunc {
public:
    RationalFunc() : den_(Rational(1)) {}
    RationalFunc(PolyQ num, PolyQ den = PolyQ(Rational(1)))
        : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }
    static RationalFunc variable() { return RationalFunc(PolyQ::variable()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunc operator-() const;
    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;

    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    RationalFunc derivative() const; // formal d/d(eta)

    double evaluate(double eta) const;

    std::string to_string(const std::string& var = "eta") const;

private:
    void reduce();
    PolyQ num_, den_;
};

RationalFunc rf_constant(const Rational& c);

/// Exact ratio f / h of two ring elements whose exponential factors agree
/// and whose powers differ by an even integer (so the quotient is a
/// rational function of eta alone).
RationalFunc ratio_in_eta(const QuasiFunction& f, const QuasiFunction& h);

/// Quotient of a ring element by a polynomial of eta, in reduced form:
/// gcd(num.poly, den) = 1, den integer-primitive with positive leading
/// coefficient, and eta factors of den absorbed into num's power.
/// This is the exact shape of transformed solutions and prepotentials.
struct QuasiQuotient {
    QuasiFunction num;
    PolyQ den = PolyQ(Rational(1));

    QuasiQuotient() = default;
    QuasiQuotient(QuasiFunction n, PolyQ d);

    bool is_zero() const { return num.is_zero(); }
    QuasiQuotient derivative() const;
    double evaluate(double x) const;
    std::string to_string() const;
};

/// Exact ratio of two quotients as a rational function of eta (same
/// structural requirements as ratio_in_eta).
RationalFunc ratio(const QuasiQuotient& a, const QuasiQuotient& b);

} // namespace milag
