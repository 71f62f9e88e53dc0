#include "milag/cases.hpp"

#include <algorithm>

#include "milag/resultant.hpp"
#include "milag/roots.hpp"

namespace milag {

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

PolyQ P(std::vector<Rational> cs) { return PolyQ(std::move(cs)); }

PolyQ pow(const PolyQ& p, int k) {
    PolyQ r(Rational(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

SeedSpec seed(SeedKind k, int v, const Rational& g) { return SeedSpec{k, v, g}; }

QuasiFunction qf(int expo, Rational power, const PolyQ& poly) {
    return QuasiFunction(expo, LinearG(std::move(power)), to_gpoly(poly));
}

QuasiQuotient prepotential_form(Rational power, const PolyQ& num, const PolyQ& den) {
    return QuasiQuotient(qf(-1, std::move(power), num), den);
}

RationalFunc over(Rational num, const PolyQ& den) { return RationalFunc(PolyQ(std::move(num)), den); }
RationalFunc over(PolyQ num, const PolyQ& den) { return RationalFunc(std::move(num), den); }

std::vector<CaseSpec> build_catalog() {
    std::vector<CaseSpec> cs;

    const PolyQ eta = PolyQ::variable();
    const RationalFunc X = RationalFunc::variable();
    const PolyQ q3p4 = P({3, 4});   // 3 + 4 eta
    const PolyQ qm3p4 = P({-3, 4}); // -3 + 4 eta
    const PolyQ q15p4 = P({15, 4});
    const PolyQ q6 = P({6, 1});
    const PolyQ q14 = P({14, 1});
    const PolyQ qm6 = P({-6, 1});
    const PolyQ qm14 = P({-14, 1});

    { // (A)  W[III_1, I_2] at g = 3/4
        CaseSpec c;
        c.name = "A";
        c.g = q(3, 4);
        c.seeds = {seed(SeedKind::III, 1, c.g), seed(SeedKind::I, 2, c.g)};
        c.expected_wronskian = qf(2, 0, q(5, 256) * pow(q3p4, 3));
        c.wronskian_content = P({q(1, 16), q(1, 8)}); // (2g+1)/16
        c.expected_discriminant =
            q(2048) * (P({-3, 2}) * pow(P({3, 2}), 2) * pow(P({-3, 4}), 2));
        c.expected_potential =
            X + over(q(-3, 16), eta) + over(q(48), q3p4) + over(q(-288), pow(q3p4, 2)) +
            rf_constant(q(-13, 2));
        c.family_den = pow(q3p4, 2);
        c.family_power = q(3, 4);
        c.missing_indices = {-1};
        c.extras = {{-2, q15p4, q(-8)}};
        c.degree_offset = 3;
        c.direct = DirectFormula{q(1, 4), P({-117, 156, 208, 64}), q(-4) * pow(q3p4, 2),
                                 q(-4) * (eta * q3p4 * q15p4)};
        c.printed_members = {
            {0, P({-117, 156, 208, 64})},
            {1, P({q(-765, 4), q(408), q(408), q(0), q(-64)})},
            {2, P({q(-8505, 32), q(6237, 8), q(567), q(-252), q(-168), q(32)})}};
        c.poly_ode = PolynomialOde{q(4) * (eta * q3p4), -(P({-1, 4}) * q15p4),
                                   q(4) * P({5, 12}), q(4) * q3p4};
        c.eta_ode = EtaOde{P({q(5, 4), q(-1)}), P({45, -24, 16}), pow(q3p4, 2)};
        c.prepotential = PrepotentialRecord{prepotential_form(q(3, 4), q15p4, pow(q3p4, 2)), q(-8)};
        c.partner = PartnerRecord{
            seed(SeedKind::I, 2, c.g), q(-8),
            X + over(q(21, 16), eta) + over(q(16), q3p4) + over(q(-96), pow(q3p4, 2)) +
                over(q(16), q15p4) + over(q(-480), pow(q15p4, 2)) + rf_constant(q(-9, 2))};
        c.weight = WeightInfo{true, q(1, 4), pow(q3p4, 2), q(1)};
        c.singular_factors = {{q3p4, 3}};
        cs.push_back(std::move(c));
    }

    { // (B)  W[III_2, I_1] at g = 1/4
        CaseSpec c;
        c.name = "B";
        c.g = q(1, 4);
        c.seeds = {seed(SeedKind::III, 2, c.g), seed(SeedKind::I, 1, c.g)};
        c.expected_wronskian = qf(2, 0, q(-5, 256) * pow(q3p4, 3));
        c.wronskian_content = P({q(-3, 16), q(1, 8)}); // (2g-3)/16
        c.expected_discriminant =
            q(-2048) * (pow(P({-5, 2}), 2) * P({1, 2}) * pow(P({-1, 4}), 2));
        c.expected_potential =
            X + over(q(-3, 16), eta) + over(q(48), q3p4) + over(q(-288), pow(q3p4, 2)) +
            rf_constant(q(-11, 2));
        c.family_den = pow(q3p4, 2);
        c.family_power = q(1, 4);
        c.missing_indices = {-2, -1};
        c.extras = {{-3, PolyQ(Rational(1)), q(-12)}};
        c.degree_offset = 3;
        c.direct = DirectFormula{q(-1, 4), P({-63, 252, 240, 64}), q(-4) * pow(q3p4, 2),
                                 q(-4) * (eta * q3p4 * q15p4)};
        c.printed_members = {
            {0, P({-63, 252, 240, 64})},
            {1, P({q(-297, 4), q(396), q(264), q(-64), q(-64)})},
            {2, P({q(-2835, 32), q(4725, 8), q(225), q(-300), q(-120), q(32)})}};
        c.poly_ode = PolynomialOde{q(4) * (eta * q3p4), -P({-9, 64, 16}), q(12) * q3p4,
                                   q(4) * q3p4};
        c.eta_ode = EtaOde{P({q(3, 4), q(-1)}), P({45, -24, 16}), pow(q3p4, 2)};
        c.prepotential = PrepotentialRecord{
            prepotential_form(q(1, 4), PolyQ(Rational(1)), pow(q3p4, 2)), q(-12)};
        c.partner = PartnerRecord{
            seed(SeedKind::I, 1, c.g), q(-12),
            X + over(q(5, 16), eta) + over(q(16), q3p4) + over(q(-96), pow(q3p4, 2)) +
                rf_constant(q(-7, 2))};
        c.weight = WeightInfo{true, q(-1, 4), pow(q3p4, 2), q(1)};
        c.singular_factors = {{q3p4, 3}};
        cs.push_back(std::move(c));
    }

    { // (C)  W[III_2, II_1] at g = 9/4; the system coincides with (B)
        CaseSpec c;
        c.name = "C";
        c.g = q(9, 4);
        c.seeds = {seed(SeedKind::III, 2, c.g), seed(SeedKind::II, 1, c.g)};
        c.expected_wronskian = qf(0, q(-3, 2), q(1, 64) * pow(q3p4, 3));
        c.wronskian_content = P({q(1, 8)});
        c.expected_discriminant =
            q(-2048) * (pow(P({-9, 2}), 2) * P({-3, 2}) * pow(P({-9, 4}), 2));
        c.expected_potential =
            X + over(q(-3, 16), eta) + over(q(48), q3p4) + over(q(-288), pow(q3p4, 2)) +
            rf_constant(q(-11, 2));
        c.family_den = pow(q3p4, 2);
        c.family_power = q(1, 4);
        c.degree_offset = 3;
        c.weight.square_integrable = false;
        c.singular_factors = {{q3p4, 3}};
        c.note = "solutions coincide with system (B)";
        cs.push_back(std::move(c));
    }

    { // (D)  W[III_1, II_2] at g = 9/4
        CaseSpec c;
        c.name = "D";
        c.g = q(9, 4);
        c.seeds = {seed(SeedKind::III, 1, c.g), seed(SeedKind::II, 2, c.g)};
        c.expected_wronskian = qf(0, q(-3, 2), q(-1, 64) * pow(qm3p4, 3));
        c.wronskian_content = P({q(1, 8)});
        c.expected_discriminant =
            q(-2048) * (pow(P({-9, 2}), 2) * P({-3, 2}) * pow(P({-9, 4}), 2));
        c.expected_potential =
            X + over(q(-3, 16), eta) + over(q(48), qm3p4) + over(q(288), pow(qm3p4, 2)) +
            rf_constant(q(-11, 2));
        c.family_den = pow(qm3p4, 2);
        c.family_power = q(1, 4);
        c.missing_indices = {-1};
        c.extras = {{-2, P({1, 4}), q(-8)}};
        c.degree_offset = 3;
        c.direct = DirectFormula{q(7, 4), q3p4 * P({63, 0, 16}), q(-16) * (eta * pow(qm3p4, 2)),
                                 q(-36) * (eta * qm3p4 * P({1, 4}))};
        c.printed_members = {
            {0, q3p4 * P({63, 0, 16})},
            {1, P({q(2079, 4), q(0), q(792), q(-384), q(192)})},
            {2, P({q(31185, 32), q(-10395, 8), q(3465), q(-2940), q(1512), q(-224)})}};
        c.poly_ode = PolynomialOde{q(4) * (eta * qm3p4), -(P({1, 4}) * P({9, 4})),
                                   q(4) * P({3, 12}), q(4) * qm3p4};
        c.eta_ode = EtaOde{P({q(3, 4), q(-1)}), -P({27, 72, -16}), pow(qm3p4, 2)};
        c.prepotential =
            PrepotentialRecord{prepotential_form(q(1, 4), P({1, 4}), pow(qm3p4, 2)), q(-8)};
        c.weight.square_integrable = false;
        c.singular_factors = {{qm3p4, 3}};
        cs.push_back(std::move(c));
    }

    { // (E)  W[I_2, II_1] at g = 15/2
        CaseSpec c;
        c.name = "E";
        c.g = q(15, 2);
        c.seeds = {seed(SeedKind::I, 2, c.g), seed(SeedKind::II, 1, c.g)};
        c.expected_wronskian = qf(0, 0, pow(q6, 3) * q14);
        c.wronskian_content = P({q(1)});
        c.expected_discriminant = q(-16) * (pow(P({-15, 2}), 2) * P({-3, 2}) * P({1, 2}) *
                                            pow(P({3, 2}), 2));
        c.expected_potential =
            X + over(q(195, 4), eta) + over(q(-144), pow(q6, 2)) + over(q(12), q6) +
            over(q(-112), pow(q14, 2)) + over(q(4), q14) + rf_constant(q(-16));
        c.family_den = pow(q6, 2) * q14;
        c.family_power = q(15, 2);
        c.degree_offset = 3;
        c.direct = DirectFormula{q(7), q(-24) * P({840, 280, 30, 1}),
                                 q(-4) * (pow(q6, 2) * q14), q(-16) * (eta * q6 * P({12, 1}))};
        c.printed_members = {
            {0, q(-24) * P({840, 280, 30, 1})},
            {1, q(28) * P({-6336, -1320, 44, 22, 1})},
            {2, q(-16) * P({54432, 4536, -1944, -180, 12, 1})}};
        c.poly_ode = PolynomialOde{eta * q6 * q14, -P({-672, -8, 18, 1}), P({-224, 18, 3}),
                                   q6 * q14};
        c.eta_ode = EtaOde{P({8, -1}), q(4) * P({1008, 12, -16, -1}), pow(q6, 2) * pow(q14, 2)};
        c.prepotential = PrepotentialRecord{
            prepotential_form(q(15, 2), P({840, 280, 30, 1}), pow(q6, 2) * q14), q(0)};
        c.weight = WeightInfo{true, q(7), pow(q6, 2) * q14, q(1)};
        c.singular_factors = {{q6, 3}, {q14, 1}};
        cs.push_back(std::move(c));
    }

    { // (F)  W[I_1, II_2] at g = -13/2
        CaseSpec c;
        c.name = "F";
        c.g = q(-13, 2);
        c.seeds = {seed(SeedKind::I, 1, c.g), seed(SeedKind::II, 2, c.g)};
        c.expected_wronskian = qf(0, 0, q(-1) * (qm14 * pow(qm6, 3)));
        c.wronskian_content = P({q(1)});
        c.expected_discriminant = q(-16) * (pow(P({-5, 2}), 2) * P({-3, 2}) * P({1, 2}) *
                                            pow(P({13, 2}), 2));
        c.expected_potential =
            X + over(q(195, 4), eta) + over(q(144), pow(qm6, 2)) + over(q(12), qm6) +
            over(q(112), pow(qm14, 2)) + over(q(4), qm14) + rf_constant(q(12));
        c.family_den = pow(qm6, 2) * qm14;
        c.family_power = q(-13, 2);
        c.degree_offset = 3;
        c.direct = DirectFormula{q(-7), q(36) * P({-280, 140, -22, 1}),
                                 q(-4) * (qm14 * pow(qm6, 2)), q(-16) * (eta * qm6 * P({-12, 1}))};
        c.printed_members = {
            {0, q(36) * P({-280, 140, -22, 1})},
            {1, q(-32) * P({-1512, 504, 12, -16, 1})},
            {2, q(14) * P({-6480, 1080, 396, -42, -12, 1})}};
        c.poly_ode = PolynomialOde{eta * qm6 * qm14, -P({504, -104, -8, 1}), P({-252, -8, 3}),
                                   qm6 * qm14};
        c.eta_ode = EtaOde{P({-6, -1}), q(-4) * P({1008, -12, -16, 1}),
                           pow(qm6, 2) * pow(qm14, 2)};
        c.prepotential = PrepotentialRecord{
            prepotential_form(q(-13, 2), P({-280, 140, -22, 1}), pow(qm6, 2) * qm14), q(0)};
        c.weight.square_integrable = false;
        c.singular_factors = {{qm6, 3}, {qm14, 1}};
        cs.push_back(std::move(c));
    }

    { // (G)  W[I_3, II_1] at g = 39/10; no explicit family
        CaseSpec c;
        c.name = "G";
        c.g = q(39, 10);
        c.seeds = {seed(SeedKind::I, 3, c.g), seed(SeedKind::II, 1, c.g)};
        const PolyQ q12p5 = P({12, 5});
        const PolyQ qg = P({2244, 495, 25});
        c.expected_wronskian = qf(0, 0, q(1, 9375) * (pow(q12p5, 3) * qg));
        c.wronskian_content = P({q(1, 96)});
        c.expected_discriminant = P({-3, 2}) * P({1, 2}) * pow(P({3, 2}), 2) *
                                  pow(P({5, 2}), 3) * pow(P({-39, 10}), 2);
        c.discriminant_proportional_only = true;
        c.expected_potential =
            X + over(q(1131, 100), eta) + rf_constant(q(-44, 5)) + over(q(-1440), pow(q12p5, 2)) +
            over(q(60), q12p5) + over(q(165000) * eta, pow(qg, 2)) +
            over(q(20) * P({-99, 10}), qg);
        c.has_family = false;
        c.family_den = PolyQ(Rational(1));
        c.family_power = q(0);
        c.weight.square_integrable = false;
        c.singular_factors = {{q12p5, 3}, {qg, 1}};
        c.note = "seed Wronskian, discriminant and potential only";
        cs.push_back(std::move(c));
    }

    { // (H)  three-index W[I_1, II_1, II_2] at g = 53/2
        CaseSpec c;
        c.name = "H";
        c.g = q(53, 2);
        c.seeds = {seed(SeedKind::I, 1, c.g), seed(SeedKind::II, 1, c.g),
                   seed(SeedKind::II, 2, c.g)};
        const PolyQ q30 = P({30, 1});
        const PolyQ qh = P({390, 39, 1});
        c.expected_wronskian = qf(-1, q(-51, 2), q(-4) * (pow(q30, 3) * qh));
        c.wronskian_content = P({q(1)});
        c.expected_potential =
            X + over(q(2499, 4), eta) + rf_constant(q(-52)) + over(q(-720), pow(q30, 2)) +
            over(q(12), q30) + over(q(-312) * eta, pow(qh, 2)) + over(q(4) * P({-39, 2}), qh);
        c.family_den = pow(q30, 2) * qh;
        c.family_power = q(51, 2);
        c.degree_offset = 4;
        c.printed_members = {{0, P({425880, 67704, 4004, 104, 1})}};
        c.printed_members_proportional = true;
        c.weight = WeightInfo{true, q(25), pow(q30, 2) * qh, q(1, 2)};
        c.singular_factors = {{q30, 3}, {qh, 1}};
        cs.push_back(std::move(c));
    }

    return cs;
}

} // namespace

const std::vector<CaseSpec>& catalog() {
    static const std::vector<CaseSpec> cs = build_catalog();
    return cs;
}

const CaseSpec& get_case(const std::string& name) {
    for (const auto& c : catalog())
        if (c.name == name) return c;
    throw UnsupportedCase("unknown case '" + name + "'");
}

bool CaseSpec::index_missing(int n) const {
    if (std::find(missing_indices.begin(), missing_indices.end(), n) != missing_indices.end())
        return true;
    return n < 0 && find_extra(n) == nullptr;
}

const ExtraMember* CaseSpec::find_extra(int n) const {
    for (const auto& e : extras)
        if (e.n == n) return &e;
    return nullptr;
}

QuasiFunction case_wronskian(const CaseSpec& c) {
    std::vector<QuasiFunction> fns;
    fns.reserve(c.seeds.size());
    for (const auto& s : c.seeds) fns.push_back(seed_solution(s).fn);
    return wronskian(fns);
}

QuasiFunction case_wronskian_symbolic(const CaseSpec& c) {
    std::vector<QuasiFunction> fns;
    fns.reserve(c.seeds.size());
    for (auto s : c.seeds) {
        s.g.reset();
        fns.push_back(seed_solution(s).fn);
    }
    return wronskian(fns);
}

PolyQ case_discriminant(const CaseSpec& c) {
    GPoly w = case_wronskian_symbolic(c).poly();
    std::vector<PolyQ> inner;
    inner.reserve(static_cast<size_t>(w.degree() + 1));
    for (const auto& coef : w.coeffs()) inner.push_back(exact_div(coef, c.wronskian_content));
    return discriminant(GPoly(std::move(inner)));
}

DeformedPotential case_potential(const CaseSpec& c) {
    return potential_from_wronskian(c.g, case_wronskian(c));
}

std::vector<Rational> case_seed_energies(const CaseSpec& c) {
    std::vector<Rational> es;
    es.reserve(c.seeds.size());
    for (const auto& s : c.seeds) es.push_back(seed_solution(s).energy.coeff(0));
    return es;
}

namespace {

QuasiQuotient qf_quotient(const QuasiFunction& num, const QuasiFunction& den) {
    if (den.is_zero()) throw DependentSeeds("quotient: denominator Wronskian vanishes");
    return QuasiQuotient(
        QuasiFunction(num.expo() - den.expo(), num.power() - den.power(), num.poly()),
        to_polyq(den.poly()));
}

} // namespace

QuasiQuotient wronskian_quotient(const CaseSpec& c, int n) {
    if (n < 0) throw IndexMissing("wronskian_quotient: n must be >= 0");
    std::vector<QuasiFunction> fns;
    fns.reserve(c.seeds.size() + 1);
    for (const auto& s : c.seeds) fns.push_back(seed_solution(s).fn);
    QuasiFunction den = wronskian(fns);
    fns.push_back(eigenfunction(n, c.g).fn);
    return qf_quotient(wronskian(fns), den);
}

GlobalSolution transformed_solution(const CaseSpec& c, int n) {
    if (!c.has_family)
        throw UnsupportedCase("case " + c.name + " has no explicit solution family");
    if (c.index_missing(n))
        throw IndexMissing("case " + c.name + ": index n=" + std::to_string(n) + " is missing");

    GlobalSolution sol;
    sol.n = n;
    if (n < 0) {
        const ExtraMember* e = c.find_extra(n);
        sol.energy = e->energy;
        sol.fn = QuasiQuotient(QuasiFunction(-1, LinearG(c.family_power), to_gpoly(e->poly)),
                               c.family_den);
        sol.quotient_constant = Rational(0); // catalog data, not produced by the quotient
        return sol;
    }

    sol.energy = Rational(4 * n);
    QuasiQuotient raw = wronskian_quotient(c, n);
    if (raw.den != c.family_den)
        throw std::logic_error("case " + c.name + ": quotient denominator " +
                               raw.den.to_string("eta") +
                               " does not match the family denominator " +
                               c.family_den.to_string("eta"));

    PolyQ numer = to_polyq(raw.num.poly());
    Rational constant;
    if (c.direct) {
        PolyQ dp = direct_polynomial(c, n);
        auto [ok, k] = proportional_constant(numer, dp);
        if (!ok)
            throw std::logic_error("case " + c.name +
                                   ": quotient and closed formula are not proportional");
        numer = dp;
        constant = k;
    } else {
        auto [prim, content] = integer_primitive(numer);
        numer = prim;
        constant = content;
    }
    if (numer.degree() != n + c.degree_offset)
        throw std::logic_error("case " + c.name + ": member degree law violated");

    sol.fn = QuasiQuotient(QuasiFunction(raw.num.expo(), raw.num.power(), to_gpoly(numer)),
                           raw.den);
    sol.quotient_constant = constant;
    return sol;
}

PolyQ direct_polynomial(const CaseSpec& c, int n) {
    if (!c.direct)
        throw UnsupportedCase("case " + c.name + " has no closed polynomial formula");
    if (n < 0) throw IndexMissing("direct_polynomial: n must be >= 0");
    const DirectFormula& f = *c.direct;
    PolyQ L = laguerre<Rational>(n, f.alpha);
    return (f.c0 + Rational(n) * f.c1) * L + f.c2 * L.derivative();
}

QuasiQuotient extra_member_chain(const CaseSpec& c, size_t seed_index) {
    if (seed_index >= c.seeds.size()) throw DomainError("extra_member_chain: bad seed index");
    std::vector<QuasiFunction> all, reduced;
    for (size_t i = 0; i < c.seeds.size(); ++i) {
        all.push_back(seed_solution(c.seeds[i]).fn);
        if (i != seed_index) reduced.push_back(all.back());
    }
    return qf_quotient(wronskian(reduced), wronskian(all));
}

NormPrediction predicted_norm(const CaseSpec& c, int n) {
    if (!c.weight.square_integrable)
        throw NotSquareIntegrable("case " + c.name + " has no square-integrable family");
    if (c.index_missing(n))
        throw IndexMissing("case " + c.name + ": index n=" + std::to_string(n) + " is missing");

    NormPrediction p;
    p.n = n;
    Rational energy = n >= 0 ? Rational(4 * n) : c.find_extra(n)->energy;
    p.prod = Rational(1);
    for (const auto& e : case_seed_energies(c)) p.prod *= energy - e;
    p.gamma_arg = Rational(n) + c.g + Rational(1, 2);
    if (n >= 0) {
        p.n_factorial = factorial(static_cast<unsigned>(n));
    } else {
        p.n_factorial = Rational(1);
        p.formula_valid = false; // the product formula does not cover extras
    }
    return p;
}

} // namespace milag
