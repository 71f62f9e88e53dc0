#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milag/rationalfunc.hpp"

namespace milag {

/// Deformed oscillator potential U = U(x; g) - 2 (log W)''.  Stored in
/// the split normal form
///     U(eta) = eta + inv_eta_coeff/eta + constant + num/den
/// (eta = x^2), where num/den is fully reduced; den is the square of the
/// Wronskian's polynomial part divided by whatever cancels.
struct DeformedPotential {
    Rational base_g;
    QuasiFunction wronskian;
    Rational inv_eta_coeff;
    Rational constant;
    PolyQ num;
    PolyQ den;

    RationalFunc as_rational_func() const;
    std::string to_string() const;
};

/// Base radial oscillator potential as a rational function of eta:
/// eta + g(g-1)/eta - (1+2g).
RationalFunc base_potential(const Rational& g);

DeformedPotential potential_from_wronskian(const Rational& base_g, const QuasiFunction& w);

/// Build the M-fold deformed potential from seed specs (all seeds must
/// carry the same numeric g, which is also the base parameter).
DeformedPotential deformed_potential(const Rational& base_g, const std::vector<SeedSpec>& seeds);

/// Characteristic exponents at an apparent singularity of multiplicity m:
/// the roots of rho(rho-1) = 2m.  They are rational iff 1+8m is a perfect
/// square (necessarily odd), which is also the trivial-monodromy test.
struct Exponents {
    int multiplicity = 0;
    bool trivial = false;
    bool rational = false;
    Rational lo, hi;   // set when rational
    long disc = 0;     // 1 + 8m, reported for the surd pair otherwise
};

Exponents exponents_for_multiplicity(int m);
Exponents singularity_exponents(const QuasiFunction& w, const Rational& eta0);
Exponents singularity_exponents(const QuasiFunction& w, const PolyQ& factor);

/// One member of a deformed family: e^{-eta/2} eta^{power/2} L_n / den.
struct GlobalSolution {
    int n = 0;
    Rational energy;
    QuasiQuotient fn;
    Rational quotient_constant; // raw Wronskian quotient = constant * fn

    PolyQ numer() const { return to_polyq(fn.num.poly()); }
    const PolyQ& denom() const { return fn.den; }
    Rational eta_power() const { return fn.num.power().a / 2; }
};

/// Norm bookkeeping from the Darboux product formula
/// (psi, psi) = prod_j (E - E_j) (phi, phi), phi-norm Gamma(n+g+1/2)/(2 n!).
/// The dx inner product carries rational_part_x * Gamma(gamma_arg); the
/// d(eta) polynomial orthogonality carries twice that.
struct NormPrediction {
    int n = 0;
    Rational prod;        // prod_j (4n - E_j)
    Rational gamma_arg;   // n + g + 1/2
    Rational n_factorial; // n!  (1 with formula_valid=false for extras)
    bool formula_valid = true;

    Rational rational_part_eta() const { return prod / n_factorial; }
    Rational rational_part_x() const { return prod / (Rational(2) * n_factorial); }
    double value_eta() const; // rational_part_eta * Gamma(gamma_arg)
};

} // namespace milag
