#pragma once

#include <utility>
#include <vector>

#include "milag/polynomial.hpp"

namespace milag {

/// All rational roots of p with multiplicities, sorted ascending.
/// Complete for rational roots (divisor candidates over the integer-cleared
/// coefficients); says nothing about irrational ones.
std::vector<std::pair<Rational, int>> rational_roots(const PolyQ& p);

/// Largest m with (x - x0)^m | p.  Zero polynomial is rejected.
int root_multiplicity(const PolyQ& p, const Rational& x0);

/// Largest m with q^m | p (used for non-linear factors such as the
/// complex-root quadratic in the three-index case).
int factor_multiplicity(const PolyQ& p, const PolyQ& q);

/// Number of distinct real roots of p in [0, +inf), counted without
/// multiplicity, via a Sturm chain.  Exact.
int count_real_roots_nonneg(const PolyQ& p);

/// Prime factorization (trial division, then Miller-Rabin + Pollard-Brent
/// for what remains).  Factors of 0 or +-1 are the empty list.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/// All positive divisors of |n|, unsorted size-capped by the factorization.
std::vector<mpz_class> divisors(const mpz_class& n);

} // namespace milag
