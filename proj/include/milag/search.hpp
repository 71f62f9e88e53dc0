#pragma once

#include <vector>

#include "milag/quasifunction.hpp"

namespace milag {

struct SearchHit {
    std::vector<SeedSpec> seeds; // degrees and the special g filled in
    Rational g;
    Rational eta0;
    int multiplicity = 0;

    std::string to_string() const;
};

/// Scan all seed tuples of the given kinds with degrees 1..vmax for
/// rational parameter values g at which the seed Wronskian acquires a
/// rational zero of multiplicity >= target_m.  Candidates come from the
/// rational roots of the eta-discriminant of the Wronskian's polynomial
/// part (plus leading-coefficient degenerations); hits are returned in
/// lexicographic order of (degree tuple, g, eta0).
std::vector<SearchHit> search_multiple_zeros(const std::vector<SeedKind>& kinds, int vmax,
                                             int target_m);

} // namespace milag
