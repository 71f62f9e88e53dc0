#include "milag/quasifunction.hpp"

#include <cmath>

#include "milag/resultant.hpp"

namespace milag {

std::string LinearG::to_string() const {
    if (is_numeric()) return a.to_string();
    std::string s;
    if (!a.is_zero()) s = a.to_string();
    if (!s.empty()) s += b.sign() < 0 ? " - " : " + ";
    else if (b.sign() < 0) s += "-";
    Rational bb = b.abs();
    s += bb.is_one() ? "g" : bb.to_string() + "*g";
    return s;
}

void QuasiFunction::canonicalize() {
    if (poly_.is_zero()) {
        expo_ = 0;
        power_ = LinearG();
        return;
    }
    int k = poly_.low_order();
    if (k > 0) {
        poly_ = poly_.shifted_down(k);
        power_ = power_ + LinearG(Rational(2 * k));
    }
}

namespace {

// Raw derivative: (c, p, P) -> (c, p-1, (c*eta + p)P + 2*eta*P'), with no
// eta absorption so Wronskian rows keep exactly aligned powers.
struct RawQF {
    int expo;
    LinearG power;
    GPoly poly;
};

RawQF raw_derivative(const RawQF& f) {
    GPoly mult({PolyQ({f.power.a, f.power.b}), PolyQ(Rational(f.expo))});
    GPoly p = mult * f.poly + GPoly({PolyQ(), PolyQ(Rational(2))}) * f.poly.derivative();
    return {f.expo, f.power - LinearG(Rational(1)), std::move(p)};
}

} // namespace

QuasiFunction QuasiFunction::derivative() const {
    RawQF d = raw_derivative({expo_, power_, poly_});
    return QuasiFunction(d.expo, d.power, std::move(d.poly));
}

QuasiFunction QuasiFunction::operator*(const QuasiFunction& o) const {
    if (is_zero() || o.is_zero()) return QuasiFunction();
    return QuasiFunction(expo_ + o.expo_, power_ + o.power_, poly_ * o.poly_);
}

QuasiFunction QuasiFunction::operator-() const {
    QuasiFunction r = *this;
    r.poly_ = -r.poly_;
    return r;
}

QuasiFunction QuasiFunction::operator+(const QuasiFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (expo_ != o.expo_ || !(power_.b == o.power_.b))
        throw DomainError("QuasiFunction addition: incompatible structure");
    Rational diff = power_.a - o.power_.a;
    if (!diff.is_integer() || (diff.num() % 2) != 0)
        throw DomainError("QuasiFunction addition: powers differ by a non-even amount");
    long half = mpz_class(diff.num() / 2).get_si();
    GPoly pa = poly_, pb = o.poly_;
    LinearG base = power_;
    if (half > 0) {
        pa = pa.shifted_up(static_cast<int>(half));
        base = o.power_;
    } else if (half < 0) {
        pb = pb.shifted_up(static_cast<int>(-half));
    }
    return QuasiFunction(expo_, base, pa + pb);
}

QuasiFunction QuasiFunction::scale(const Rational& c) const { return scale_g(PolyQ(c)); }

QuasiFunction QuasiFunction::scale_g(const PolyQ& c) const {
    if (c.is_zero()) return QuasiFunction();
    QuasiFunction r = *this;
    r.poly_.scale(c);
    return r;
}

QuasiFunction QuasiFunction::substitute_g(const Rational& g0) const {
    return QuasiFunction(expo_, LinearG(power_.at(g0)), milag::substitute_g(poly_, g0));
}

QuasiFunction QuasiFunction::substitute_g_linear(const Rational& a, const Rational& b) const {
    return QuasiFunction(expo_, power_.substitute_linear(a, b),
                         milag::substitute_g_linear(poly_, a, b));
}

double QuasiFunction::evaluate(double x) const {
    if (!power_.is_numeric())
        throw DomainError("QuasiFunction::evaluate requires a numeric parameter");
    double eta = x * x;
    double acc = 0.0;
    for (int i = poly_.degree(); i >= 0; --i) {
        PolyQ c = poly_.coeff(i);
        if (c.degree() > 0)
            throw DomainError("QuasiFunction::evaluate requires a numeric parameter");
        acc = acc * eta + c.coeff(0).to_double();
    }
    return std::exp(0.5 * expo_ * eta) * std::pow(x, power_.a.to_double()) * acc;
}

std::string QuasiFunction::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (expo_ != 0) s += "exp(" + std::to_string(expo_) + "*x^2/2) * ";
    s += "x^(" + power_.to_string() + ") * (" + poly_.to_string("eta") + ")";
    return s;
}

std::optional<Rational> proportional(const QuasiFunction& a, const QuasiFunction& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return Rational(1);
        return std::nullopt;
    }
    if (a.expo() != b.expo() || !(a.power() == b.power())) return std::nullopt;
    auto [ok, k] = proportional_constant(a.poly(), b.poly());
    if (!ok) return std::nullopt;
    return k;
}

QuasiFunction wronskian(const std::vector<QuasiFunction>& fs) {
    const size_t m = fs.size();
    if (m == 0) throw DomainError("wronskian: empty input");
    if (m == 1) return fs[0];

    int expo = 0;
    LinearG power;
    for (const auto& f : fs) {
        if (f.is_zero()) return QuasiFunction();
        expo += f.expo();
        power = power + f.power();
    }
    power = power - LinearG(Rational(static_cast<long>(m * (m - 1) / 2)));

    // Derivative rows built without eta absorption, so every entry (k, j)
    // sits at power p_j - k and the determinant collects pure polynomials.
    Matrix<GPoly> mat(m, std::vector<GPoly>(m));
    for (size_t j = 0; j < m; ++j) {
        RawQF cur{fs[j].expo(), fs[j].power(), fs[j].poly()};
        mat[0][j] = cur.poly;
        for (size_t k = 1; k < m; ++k) {
            cur = raw_derivative(cur);
            mat[k][j] = cur.poly;
        }
    }
    return QuasiFunction(expo, power, det_cofactor(mat));
}

const char* to_string(SeedKind k) {
    switch (k) {
        case SeedKind::I: return "I";
        case SeedKind::II: return "II";
        case SeedKind::III: return "III";
    }
    return "?";
}

SeedKind seed_kind_from_string(const std::string& s) {
    if (s == "I") return SeedKind::I;
    if (s == "II") return SeedKind::II;
    if (s == "III") return SeedKind::III;
    throw ParseError("unknown seed kind '" + s + "'");
}

std::string SeedSpec::label() const {
    std::string s = std::string(to_string(kind)) + "_" + std::to_string(v);
    if (g) s += "(g=" + g->to_string() + ")";
    return s;
}

namespace {

// alpha as an element of Q[g]; the Laguerre argument sign handles the
// L_v(-eta) variants through a variable flip, not a second code path.
GPoly laguerre_g(int n, const PolyQ& alpha, bool negate_eta) {
    GPoly L = laguerre<PolyQ>(n, alpha);
    if (negate_eta) L = L.scale_variable(PolyQ(Rational(-1)));
    return L;
}

} // namespace

LabeledSolution seed_solution(const SeedSpec& s) {
    if (s.v < 0) throw DomainError("seed_solution: v must be non-negative");
    const PolyQ alpha_I({Rational(-1, 2), Rational(1)});  // g - 1/2
    const PolyQ alpha_II({Rational(1, 2), Rational(-1)}); // 1/2 - g
    LabeledSolution out;
    switch (s.kind) {
        case SeedKind::I:
            out.fn = QuasiFunction(+1, LinearG::g(), laguerre_g(s.v, alpha_I, true));
            out.energy = PolyQ({Rational(-4 * s.v - 2), Rational(-4)});
            break;
        case SeedKind::II:
            out.fn = QuasiFunction(-1, LinearG(Rational(1), Rational(-1)),
                                   laguerre_g(s.v, alpha_II, false));
            out.energy = PolyQ({Rational(4 * s.v + 2), Rational(-4)});
            break;
        case SeedKind::III:
            out.fn = QuasiFunction(+1, LinearG(Rational(1), Rational(-1)),
                                   laguerre_g(s.v, alpha_II, true));
            out.energy = PolyQ(Rational(-4 * s.v - 4));
            break;
    }
    if (s.g) {
        out.fn = out.fn.substitute_g(*s.g);
        out.energy = PolyQ(out.energy.evaluate<Rational>(*s.g));
    }
    return out;
}

LabeledSolution eigenfunction(int n, const std::optional<Rational>& g) {
    if (n < 0) throw DomainError("eigenfunction: n must be non-negative");
    LabeledSolution out;
    out.fn = QuasiFunction(-1, LinearG::g(),
                           laguerre_g(n, PolyQ({Rational(-1, 2), Rational(1)}), false));
    out.energy = PolyQ(Rational(4 * n));
    if (g) out.fn = out.fn.substitute_g(*g);
    return out;
}

QuasiFunction base_schrodinger_residual(const QuasiFunction& f, const PolyQ& energy) {
    // x^2 * (-f'' + (x^2 + g(g-1)/x^2 - (1+2g) - E) f), expanded so every
    // term is a plain ring element at the power of f.
    QuasiFunction f2 = f.derivative().derivative();
    // x^2 f'' has the same structural power as f (|p-2| + 2).
    QuasiFunction x2f2(f2.expo(), f2.power() + LinearG(Rational(2)), f2.poly());
    PolyQ g_sq({Rational(0), Rational(-1), Rational(1)}); // g^2 - g
    PolyQ lin = PolyQ({Rational(-1), Rational(-2)}) - energy; // -(1+2g) - E
    GPoly mult({g_sq, lin, PolyQ(Rational(1))});
    QuasiFunction mf(f.expo(), f.power(), mult * f.poly());
    return mf - x2f2;
}

} // namespace milag
