#pragma once

#include <string>
#include <vector>

#include "milag/cases.hpp"

namespace milag {

/// Gamma function for z in (0, 60]: argument-shift recurrence into [1, 2]
/// followed by a Lanczos evaluation there.  Relative error well under
/// 1e-12 across the supported range.
double gamma_numeric(double z);

struct ResidualReport {
    std::string identity;
    std::string subject;
    bool exact = false;
    std::string residual = "0"; // printable leftover when not exact
};

/// -phi'' + (U - E) phi as a rational-function identity; exact means the
/// residual is the literal zero polynomial after clearing everything.
ResidualReport check_schrodinger(const DeformedPotential& u, const QuasiQuotient& phi,
                                 const Rational& energy, const std::string& subject = "");

/// Same check against the undeformed oscillator, valid at symbolic g.
ResidualReport check_schrodinger_base(const QuasiFunction& phi, const PolyQ& energy,
                                      const std::string& subject = "");

ResidualReport check_eta_ode(const CaseSpec& c, int n);
ResidualReport check_polynomial_ode(const CaseSpec& c, int n);
ResidualReport check_prepotential(const CaseSpec& c);
ResidualReport check_partner_potential(const CaseSpec& c);

struct QuadratureResult {
    double value = 0;
    double estimated_error = 0;
    int nodes_used = 0;
    double tail_bound = 0;
};

/// Integral over (0, inf) of e^-eta eta^a R(eta) for a rational function R
/// with no poles on [0, inf): 128-node Gauss-Legendre on the transformed
/// integrand over [0, T] plus an explicit coefficient-bound for the tail.
/// 4a must be an integer.
QuadratureResult integrate_exp_weight(const RationalFunc& r, const Rational& a, int nodes = 128);

/// Weighted inner product of members n and m of a square-integrable family.
QuadratureResult orthogonality(const CaseSpec& c, int n, int m, int nodes = 128);

/// Exact positivity of the orthogonality weight on [0, inf): the
/// denominator has no real root there (Sturm count) and is positive at 0.
bool weight_positive_on_halfline(const CaseSpec& c);

struct CheckResult {
    std::string name;
    std::string subject;
    bool pass = false;
    bool exact = false; // exact identity vs numeric tolerance check
    std::string detail;
};

struct VerificationRun {
    bool pass = true;
    std::vector<CheckResult> checks;
};

std::vector<CheckResult> verify_case(const CaseSpec& c, double tol = 1e-8);
std::vector<CheckResult> verify_structural();
std::vector<CheckResult> verify_search();

/// which = "all" or a case name.  "all" prepends the structural and
/// search-reproduction sections.
VerificationRun run_verification(const std::string& which, double tol = 1e-8);

} // namespace milag
