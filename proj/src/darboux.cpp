#include "milag/darboux.hpp"

#include "milag/roots.hpp"
#include "milag/verify.hpp"

namespace milag {

RationalFunc base_potential(const Rational& g) {
    RationalFunc eta = RationalFunc::variable();
    return eta + RationalFunc(PolyQ(g * (g - Rational(1))), PolyQ::variable()) +
           rf_constant(-(Rational(1) + Rational(2) * g));
}

RationalFunc DeformedPotential::as_rational_func() const {
    RationalFunc eta = RationalFunc::variable();
    return eta + RationalFunc(PolyQ(inv_eta_coeff), PolyQ::variable()) + rf_constant(constant) +
           RationalFunc(num, den);
}

std::string DeformedPotential::to_string() const {
    std::string s = "x^2";
    if (!inv_eta_coeff.is_zero()) s += " + (" + inv_eta_coeff.to_string() + ")/x^2";
    if (!num.is_zero()) s += " + (" + num.to_string("eta") + ") / (" + den.to_string("eta") + ")";
    if (!constant.is_zero()) s += " + (" + constant.to_string() + ")";
    return s;
}

DeformedPotential potential_from_wronskian(const Rational& base_g, const QuasiFunction& w) {
    if (w.is_zero()) throw DependentSeeds("potential: Wronskian vanishes identically");
    if (!w.power().is_numeric())
        throw DomainError("potential: Wronskian power still depends on g");
    DeformedPotential u;
    u.base_g = base_g;
    u.wronskian = w;
    // -2 (log W)'' splits off the exponential and power factors exactly:
    //   (log e^{c eta/2})'' = c,   (log x^p)'' = -p/x^2,
    //   (log P(eta))'' = 2P'/P + 4 eta (P''P - P'^2)/P^2.
    u.inv_eta_coeff = base_g * (base_g - Rational(1)) + Rational(2) * w.power().a;
    u.constant = -(Rational(1) + Rational(2) * base_g) - Rational(2 * w.expo());
    PolyQ p = to_polyq(w.poly());
    PolyQ dp = p.derivative();
    PolyQ n = Rational(-4) * (dp * p) -
              Rational(8) * (PolyQ::variable() * (p.derivative().derivative() * p - dp * dp));
    RationalFunc corr(n, p * p);
    u.num = corr.num();
    u.den = corr.den();
    return u;
}

DeformedPotential deformed_potential(const Rational& base_g, const std::vector<SeedSpec>& seeds) {
    std::vector<QuasiFunction> fns;
    fns.reserve(seeds.size());
    for (const auto& s : seeds) {
        SeedSpec at = s;
        if (!at.g) at.g = base_g;
        fns.push_back(seed_solution(at).fn);
    }
    return potential_from_wronskian(base_g, wronskian(fns));
}

Exponents exponents_for_multiplicity(int m) {
    Exponents e;
    e.multiplicity = m;
    e.disc = 1 + 8L * m;
    mpz_class d(e.disc), root;
    bool square = mpz_perfect_square_p(d.get_mpz_t()) != 0;
    if (square) {
        mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
        Rational s{Rational(root)};
        e.rational = true;
        e.lo = (Rational(1) - s) / Rational(2);
        e.hi = (Rational(1) + s) / Rational(2);
        // Trivial monodromy needs integer exponents, i.e. 1+8m an odd square.
        e.trivial = e.lo.is_integer();
    }
    return e;
}

Exponents singularity_exponents(const QuasiFunction& w, const Rational& eta0) {
    if (w.is_zero()) throw ZeroPolynomial("singularity_exponents: zero Wronskian");
    return exponents_for_multiplicity(root_multiplicity(to_polyq(w.poly()), eta0));
}

Exponents singularity_exponents(const QuasiFunction& w, const PolyQ& factor) {
    if (w.is_zero()) throw ZeroPolynomial("singularity_exponents: zero Wronskian");
    return exponents_for_multiplicity(factor_multiplicity(to_polyq(w.poly()), factor));
}

double NormPrediction::value_eta() const {
    return rational_part_eta().to_double() * gamma_numeric(gamma_arg.to_double());
}

} // namespace milag
