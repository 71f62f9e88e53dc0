#include "milag/io.hpp"

namespace milag {

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

json to_json(const PolyQ& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

PolyQ polyq_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& e : j) cs.push_back(rational_from_json(e));
    return PolyQ(std::move(cs));
}

json to_json(const GPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

GPoly gpoly_from_json(const json& j) {
    std::vector<PolyQ> cs;
    for (const auto& e : j) cs.push_back(polyq_from_json(e));
    return GPoly(std::move(cs));
}

json to_json(const LinearG& p) {
    if (p.is_numeric()) return p.a.to_string();
    return json{{"const", p.a.to_string()}, {"g", p.b.to_string()}};
}

LinearG linearg_from_json(const json& j) {
    if (j.is_object())
        return LinearG(Rational::parse(j.at("const").get<std::string>()),
                       Rational::parse(j.at("g").get<std::string>()));
    return LinearG(rational_from_json(j));
}

json to_json(const QuasiFunction& f) {
    return json{{"expo", f.expo()}, {"power", to_json(f.power())}, {"poly", to_json(f.poly())}};
}

QuasiFunction quasifunction_from_json(const json& j) {
    return QuasiFunction(j.at("expo").get<int>(), linearg_from_json(j.at("power")),
                         gpoly_from_json(j.at("poly")));
}

json to_json(const SeedSpec& s) {
    json j{{"kind", to_string(s.kind)}, {"v", s.v}};
    if (s.g) j["g"] = s.g->to_string();
    return j;
}

json to_json(const SearchHit& h) {
    json seeds = json::array();
    for (const auto& s : h.seeds) seeds.push_back(to_json(s));
    return json{{"seeds", seeds},
                {"g", h.g.to_string()},
                {"eta0", h.eta0.to_string()},
                {"multiplicity", h.multiplicity}};
}

json to_json(const DeformedPotential& u) {
    return json{{"base_g", u.base_g.to_string()},
                {"inv_eta_coeff", u.inv_eta_coeff.to_string()},
                {"constant", u.constant.to_string()},
                {"num", to_json(u.num)},
                {"den", to_json(u.den)},
                {"display", u.to_string()}};
}

json to_json(const GlobalSolution& s) {
    return json{{"n", s.n},
                {"energy", s.energy.to_string()},
                {"eta_power", s.eta_power().to_string()},
                {"numer", to_json(s.numer())},
                {"denom", to_json(s.denom())},
                {"quotient_constant", s.quotient_constant.to_string()}};
}

json to_json(const QuadratureResult& r) {
    return json{{"value", r.value},
                {"estimated_error", r.estimated_error},
                {"nodes_used", r.nodes_used},
                {"tail_bound", r.tail_bound}};
}

json to_json(const CheckResult& r) {
    return json{{"identity", r.name},
                {"subject", r.subject},
                {"kind", r.exact ? "exact" : "numeric"},
                {"pass", r.pass},
                {"detail", r.detail}};
}

json to_json(const VerificationRun& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return json{{"pass", r.pass}, {"checks", checks}};
}

json case_to_json(const CaseSpec& c) {
    json seeds = json::array();
    for (const auto& s : c.seeds) seeds.push_back(to_json(s));
    json extras = json::array();
    for (const auto& e : c.extras)
        extras.push_back(json{
            {"n", e.n}, {"poly", to_json(e.poly)}, {"energy", e.energy.to_string()}});

    json j{{"name", c.name},
           {"g", c.g.to_string()},
           {"seeds", seeds},
           {"wronskian", to_json(case_wronskian(c))},
           {"potential", to_json(case_potential(c))},
           {"has_family", c.has_family},
           {"degree_offset", c.degree_offset},
           {"missing_indices", c.missing_indices},
           {"extras", extras}};
    if (!c.note.empty()) j["note"] = c.note;

    if (c.weight.square_integrable) {
        j["weight"] = json{{"eta_exponent", c.weight.eta_exponent.to_string()},
                           {"den_base", to_json(c.weight.den_base)},
                           {"extra_factor", c.weight.extra_factor.to_string()}};
        json energies = json::array();
        for (const auto& e : case_seed_energies(c)) energies.push_back(e.to_string());
        j["norm"] = json{{"seed_energies", energies},
                         {"gamma_arg", "n + " + (c.g + Rational(1, 2)).to_string()},
                         {"form", "prod_j(4n - E_j) / n! * Gamma(n + g + 1/2)"}};
    } else {
        j["weight"] = nullptr;
    }
    return j;
}

CaseSpec case_fixture_from_json(const json& j) {
    CaseSpec c = get_case(j.at("case").get<std::string>());
    if (j.contains("extras")) {
        c.extras.clear();
        for (const auto& e : j.at("extras"))
            c.extras.push_back(ExtraMember{e.at("n").get<int>(), polyq_from_json(e.at("poly")),
                                           rational_from_json(e.at("energy"))});
    }
    if (j.contains("printed_members")) {
        c.printed_members.clear();
        for (const auto& e : j.at("printed_members"))
            c.printed_members.emplace_back(e.at("n").get<int>(), polyq_from_json(e.at("poly")));
    }
    if (j.contains("expected_discriminant"))
        c.expected_discriminant = polyq_from_json(j.at("expected_discriminant"));
    return c;
}

} // namespace milag
