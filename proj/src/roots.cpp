#include "milag/roots.hpp"

#include <algorithm>
#include <map>

namespace milag {

namespace {

mpz_class pollard_brent(const mpz_class& n) {
    // Brent's cycle variant of Pollard rho; n must be composite and odd.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, ys = y, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class d = x - y;
                    q = (q * abs(d)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // Unlucky constant; retry with fresh randomness.
    }
}

void factor_rec(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
    std::map<mpz_class, unsigned> acc;
    if (n < 0) n = -n;
    if (n <= 1) return {};
    for (mpz_class p : {2, 3, 5, 7, 11, 13}) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    // Wheel-less trial division is plenty here; candidate coefficients are
    // smooth in practice and rho catches stragglers.
    for (unsigned long p = 17; p < 100000 && n > 1; p += 2) {
        if (n % p == 0) {
            mpz_class pz(p);
            while (n % pz == 0) {
                ++acc[pz];
                n /= pz;
            }
        }
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw ZeroPolynomial("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> out;

    PolyQ rem = p;
    int k0 = rem.low_order();
    if (k0 > 0) {
        out.emplace_back(Rational(0), k0);
        rem = rem.shifted_down(k0);
    }
    if (rem.degree() == 0) return out;

    auto [prim, content] = integer_primitive(rem);
    (void)content;
    mpz_class lead = prim.leading().num();
    mpz_class tail = prim.coeff(0).num();

    std::vector<Rational> candidates;
    for (const auto& a : divisors(tail))
        for (const auto& b : divisors(lead)) {
            mpq_class q(a, b);
            q.canonicalize();
            candidates.emplace_back(q);
            candidates.emplace_back(mpq_class(-q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        if (!prim.evaluate<Rational>(r).is_zero()) continue;
        PolyQ lin({-r, Rational(1)});
        int mult = 0;
        while (true) {
            auto [q, rr] = prim.divrem(lin);
            if (!rr.is_zero()) break;
            prim = q;
            ++mult;
        }
        out.emplace_back(r, mult);
        if (prim.degree() == 0) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

int root_multiplicity(const PolyQ& p, const Rational& x0) {
    if (p.is_zero()) throw ZeroPolynomial("root_multiplicity: zero polynomial");
    return factor_multiplicity(p, PolyQ({-x0, Rational(1)}));
}

int factor_multiplicity(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero()) throw ZeroPolynomial("factor_multiplicity: zero polynomial");
    if (q.degree() < 1) throw DegreeTooLow("factor_multiplicity: factor must be non-constant");
    int m = 0;
    PolyQ cur = p;
    while (true) {
        auto [quot, rem] = cur.divrem(q);
        if (!rem.is_zero()) return m;
        cur = quot;
        ++m;
        if (cur.is_zero()) return m; // only if p was zero, guarded above
    }
}

namespace {

int sign_at(const PolyQ& p, const Rational& x) { return p.evaluate<Rational>(x).sign(); }
int sign_at_inf(const PolyQ& p) { return p.is_zero() ? 0 : p.leading().sign(); }

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int count_real_roots_nonneg(const PolyQ& p) {
    if (p.is_zero()) throw ZeroPolynomial("count_real_roots_nonneg: zero polynomial");
    PolyQ square_free = exact_div(p, gcd(p, p.derivative()));
    std::vector<PolyQ> chain{square_free, square_free.derivative()};
    while (!chain.back().is_zero()) {
        auto [q, r] = chain[chain.size() - 2].divrem(chain.back());
        (void)q;
        chain.push_back(-r);
    }
    std::vector<int> at0, atinf;
    for (const auto& f : chain) {
        at0.push_back(sign_at(f, Rational(0)));
        atinf.push_back(sign_at_inf(f));
    }
    int n = variations(at0) - variations(atinf); // roots in (0, inf)
    if (square_free.evaluate<Rational>(Rational(0)).is_zero()) ++n;
    return n;
}

} // namespace milag
