#include "milag/search.hpp"

#include <algorithm>

#include "milag/resultant.hpp"
#include "milag/roots.hpp"

namespace milag {

std::string SearchHit::to_string() const {
    std::string s = "W[";
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (i) s += ", ";
        s += seeds[i].label();
    }
    s += "]  g=" + g.to_string() + "  eta0=" + eta0.to_string() +
         "  m=" + std::to_string(multiplicity);
    return s;
}

namespace {

void enumerate_tuples(size_t pos, int vmax, const std::vector<SeedKind>& kinds,
                      std::vector<int>& vs, std::vector<std::vector<int>>& out) {
    if (pos == kinds.size()) {
        out.push_back(vs);
        return;
    }
    for (int v = 1; v <= vmax; ++v) {
        bool dup = false;
        for (size_t i = 0; i < pos; ++i) {
            if (kinds[i] != kinds[pos]) continue;
            // Identical seeds give a vanishing Wronskian; a repeated kind
            // with swapped degrees only flips the sign, so keep v ascending.
            if (vs[i] >= v) dup = true;
        }
        if (dup) continue;
        vs[pos] = v;
        enumerate_tuples(pos + 1, vmax, kinds, vs, out);
        vs[pos] = 0;
    }
}

} // namespace

std::vector<SearchHit> search_multiple_zeros(const std::vector<SeedKind>& kinds, int vmax,
                                             int target_m) {
    if (kinds.size() < 2 || kinds.size() > 3)
        throw DomainError("search_multiple_zeros: need a pair or triple of seed kinds");
    if (vmax < 1) throw DomainError("search_multiple_zeros: vmax must be >= 1");
    if (target_m < 1) throw DomainError("search_multiple_zeros: target_m must be >= 1");

    std::vector<std::vector<int>> tuples;
    std::vector<int> vs(kinds.size(), 0);
    enumerate_tuples(0, vmax, kinds, vs, tuples);

    std::vector<SearchHit> hits;
    for (const auto& tuple : tuples) {
        std::vector<SeedSpec> specs;
        std::vector<QuasiFunction> fns;
        for (size_t i = 0; i < kinds.size(); ++i) {
            SeedSpec s{kinds[i], tuple[i], std::nullopt};
            specs.push_back(s);
            fns.push_back(seed_solution(s).fn);
        }
        QuasiFunction w = wronskian(fns);
        if (w.is_zero()) continue;
        GPoly p = w.poly();
        if (p.degree() < 2) continue;

        // Work with the primitive part: at roots of the Q[g]-content the
        // Wronskian vanishes identically (dependent seeds), not a zero of
        // higher multiplicity.
        PolyQ content = gpoly_content(p);
        std::vector<PolyQ> inner;
        inner.reserve(static_cast<size_t>(p.degree() + 1));
        for (const auto& coef : p.coeffs()) inner.push_back(exact_div(coef, content));
        GPoly prim(std::move(inner));

        std::vector<Rational> candidates;
        PolyQ disc = discriminant(prim);
        if (!disc.is_zero())
            for (const auto& [r, mult] : rational_roots(disc)) {
                (void)mult;
                candidates.push_back(r);
            }
        if (prim.leading().degree() > 0)
            for (const auto& [r, mult] : rational_roots(prim.leading())) {
                (void)mult;
                candidates.push_back(r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& g0 : candidates) {
            // At a root of the content the whole Wronskian vanishes
            // (dependent seeds), so there is nothing to report.
            if (content.evaluate<Rational>(g0).is_zero()) continue;
            PolyQ at_g = to_polyq(substitute_g(prim, g0));
            if (at_g.is_zero() || at_g.degree() < target_m) continue;
            for (const auto& [eta0, m] : rational_roots(at_g)) {
                if (m < target_m) continue;
                SearchHit hit;
                hit.seeds = specs;
                for (auto& s : hit.seeds) s.g = g0;
                hit.g = g0;
                hit.eta0 = eta0;
                hit.multiplicity = m;
                hits.push_back(std::move(hit));
            }
        }
    }
    return hits;
}

} // namespace milag
