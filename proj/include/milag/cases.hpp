#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milag/darboux.hpp"

namespace milag {

struct ExtraMember {
    int n;
    PolyQ poly;
    Rational energy;
};

/// Closed-form recipe for the family polynomials:
/// L_n = (c0 + n*c1) * L_n^{(alpha)} + c2 * d/deta L_n^{(alpha)}.
struct DirectFormula {
    Rational alpha;
    PolyQ c0, c1, c2;
};

/// Polynomial second-order equation a2 L'' + a1 L' + (b0 + n b1) L = 0.
struct PolynomialOde {
    PolyQ a2, a1, b0, b1;
};

/// eta y'' + a1(eta) y' + (q/qden) y + n y = 0 for y = L_n / family_den.
struct EtaOde {
    PolyQ a1, q, qden;
};

/// Groundstate-shaped function G with G''/G + shift = U (equivalently the
/// Riccati identity (w')^2 + w'' + shift = U for w = log G).
struct PrepotentialRecord {
    QuasiQuotient form;
    Rational shift;
};

struct PartnerRecord {
    SeedSpec partner_seed; // one-index system the family maps onto
    Rational shift;        // (w')^2 - w'' + shift equals its potential
    RationalFunc expected_potential;
};

struct WeightInfo {
    bool square_integrable = false;
    Rational eta_exponent;       // weight = extra_factor * e^-eta eta^a / den_base^2
    PolyQ den_base;
    Rational extra_factor = Rational(1);
};

/// Everything the engine knows about one named system.
struct CaseSpec {
    std::string name;
    std::vector<SeedSpec> seeds; // carry the case's g
    Rational g;
    QuasiFunction expected_wronskian;

    /// Prefactor pulled out of the Wronskian polynomial before taking the
    /// discriminant (an element of Q[g]); the remaining "polynomial part"
    /// is what the discriminant refers to.
    PolyQ wronskian_content = PolyQ(Rational(1));

    /// Reference values the verifier checks computed results against.
    PolyQ expected_discriminant;                    // empty = not recorded
    bool discriminant_proportional_only = false;    // (G) is stated up to a constant
    RationalFunc expected_potential;                // zero = not recorded
    std::vector<std::pair<int, PolyQ>> printed_members;
    bool printed_members_proportional = false;      // (H) groundstate is "proportional to"
    std::vector<std::pair<PolyQ, int>> singular_factors; // (factor, multiplicity)

    bool has_family = true;
    int degree_offset = 3; // deg L_n = n + offset
    PolyQ family_den;      // denominator shared by every member
    Rational family_power; // power of x in the prefactor (eta power is half)
    std::vector<int> missing_indices;
    std::vector<ExtraMember> extras;

    std::optional<DirectFormula> direct;
    std::optional<PolynomialOde> poly_ode;
    std::optional<EtaOde> eta_ode;
    std::optional<PrepotentialRecord> prepotential;
    std::optional<PartnerRecord> partner;
    WeightInfo weight;
    std::string note;

    bool index_missing(int n) const;
    const ExtraMember* find_extra(int n) const;
};

const std::vector<CaseSpec>& catalog();
const CaseSpec& get_case(const std::string& name); // throws UnsupportedCase

/// Wronskian of the case's seeds at its g (resp. at symbolic g).
QuasiFunction case_wronskian(const CaseSpec& c);
QuasiFunction case_wronskian_symbolic(const CaseSpec& c);

/// Discriminant in eta of the symbolic Wronskian's polynomial part
/// (Wronskian poly divided by the recorded content), as a polynomial in g.
PolyQ case_discriminant(const CaseSpec& c);

DeformedPotential case_potential(const CaseSpec& c);

/// Seed energies at the case's g, in seed order.
std::vector<Rational> case_seed_energies(const CaseSpec& c);

/// Raw Darboux-Crum quotient W[seeds..., phi_n] / W[seeds...] for n >= 0.
QuasiQuotient wronskian_quotient(const CaseSpec& c, int n);

/// The paper-normalized family member; extra members come from catalog
/// data, regular ones from the quotient with the normalization fixed by
/// the direct formula when one exists (integer-primitive otherwise).
GlobalSolution transformed_solution(const CaseSpec& c, int n);

/// Closed-formula route (cases with a recorded DirectFormula only).
PolyQ direct_polynomial(const CaseSpec& c, int n);

/// Removal construction for the extra member: dropping seed j from the
/// numerator Wronskian produces the state at that seed's energy.
QuasiQuotient extra_member_chain(const CaseSpec& c, size_t seed_index);

NormPrediction predicted_norm(const CaseSpec& c, int n);

} // namespace milag
