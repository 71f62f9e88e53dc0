#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "milag/errors.hpp"

namespace milag {

/// Arbitrary-precision rational number, always kept in canonical form:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1.  Thin value wrapper
/// around GMP's mpq so the rest of the code never touches GMP types.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational parse(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return v_.get_d(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    struct NoCanon {};
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw ParseError("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(str)));
        mpz_class num(str.substr(0, slash));
        mpz_class den(str.substr(slash + 1));
        if (den == 0) bad();
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational(); // unreachable
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Exact division in the field of rationals (throws on zero divisor so the
// generic polynomial code can use one spelling for every coefficient ring).
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionError("Rational exact_div by zero", a.to_string());
    return a / b;
}

inline std::string to_string(const Rational& r) { return r.to_string(); }

// n! as an exact rational (integer).
inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1).
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational p = 1;
    for (unsigned i = 0; i < k; ++i) p *= a + Rational(static_cast<long>(i));
    return p;
}

inline Rational binomial_rational(const Rational& a, unsigned k) {
    return pochhammer(a - Rational(static_cast<long>(k)) + 1, k) / factorial(k);
}

} // namespace milag
