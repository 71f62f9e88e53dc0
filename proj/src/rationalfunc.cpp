#include "milag/rationalfunc.hpp"

namespace milag {

void RationalFunc::reduce() {
    if (den_.is_zero()) throw DomainError("RationalFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = PolyQ(Rational(1));
        return;
    }
    PolyQ g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    auto [prim, content] = integer_primitive(den_);
    den_ = prim;
    num_.scale(Rational(1) / content);
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw DomainError("RationalFunc: division by zero");
    return RationalFunc(num_ * o.den_, den_ * o.num_);
}

RationalFunc RationalFunc::derivative() const {
    return RationalFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

double RationalFunc::evaluate(double eta) const {
    return num_.evaluate<double>(eta) / den_.evaluate<double>(eta);
}

std::string RationalFunc::to_string(const std::string& var) const {
    if (den_ == PolyQ(Rational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunc rf_constant(const Rational& c) { return RationalFunc(PolyQ(c)); }

RationalFunc ratio_in_eta(const QuasiFunction& f, const QuasiFunction& h) {
    if (h.is_zero()) throw DomainError("ratio_in_eta: zero denominator");
    if (f.is_zero()) return RationalFunc();
    if (f.expo() != h.expo())
        throw DomainError("ratio_in_eta: exponential factors do not cancel");
    LinearG diff = f.power() - h.power();
    if (!diff.b.is_zero() || !diff.a.is_integer() || (diff.a.num() % 2) != 0)
        throw DomainError("ratio_in_eta: power mismatch is not an even integer");
    long k = mpz_class(diff.a.num() / 2).get_si();
    PolyQ num = to_polyq(f.poly());
    PolyQ den = to_polyq(h.poly());
    if (k > 0)
        num = num.shifted_up(static_cast<int>(k));
    else if (k < 0)
        den = den.shifted_up(static_cast<int>(-k));
    return RationalFunc(std::move(num), std::move(den));
}

QuasiQuotient::QuasiQuotient(QuasiFunction n, PolyQ d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DomainError("QuasiQuotient: zero denominator");
    if (num.is_zero()) {
        den = PolyQ(Rational(1));
        return;
    }
    PolyQ np = to_polyq(num.poly());
    PolyQ g = gcd(np, den);
    if (g.degree() > 0) {
        np = exact_div(np, g);
        den = exact_div(den, g);
    }
    int k = den.low_order();
    LinearG power = num.power();
    if (k > 0) {
        den = den.shifted_down(k);
        power = power - LinearG(Rational(2 * k));
    }
    auto [prim, content] = integer_primitive(den);
    den = prim;
    np.scale(Rational(1) / content);
    num = QuasiFunction(num.expo(), power, to_gpoly(np));
}

QuasiQuotient QuasiQuotient::derivative() const {
    QuasiFunction den_qf(0, LinearG(Rational(0)), to_gpoly(den));
    QuasiFunction den_dx(0, LinearG(Rational(1)), to_gpoly(Rational(2) * den.derivative()));
    QuasiFunction n = num.derivative() * den_qf - num * den_dx;
    return QuasiQuotient(std::move(n), den * den);
}

double QuasiQuotient::evaluate(double x) const {
    return num.evaluate(x) / den.evaluate<double>(x * x);
}

std::string QuasiQuotient::to_string() const {
    if (den == PolyQ(Rational(1))) return num.to_string();
    return num.to_string() + " / (" + den.to_string("eta") + ")";
}

RationalFunc ratio(const QuasiQuotient& a, const QuasiQuotient& b) {
    RationalFunc base = ratio_in_eta(a.num, b.num);
    return base * RationalFunc(b.den, a.den);
}

} // namespace milag
