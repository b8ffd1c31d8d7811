#include "spin.hpp"

#include <algorithm>

namespace reprlab {

Rational spin_p_sharp_explicit(int k, const StrictPartition& lambda) {
    if (k < 1 || k % 2 == 0) throw DomainError("spin characters take odd k");
    if (k > lambda.size()) return 0;
    Rational total = 0;
    int l = lambda.length();
    // When l_i + l_j = k the i-th and j-th pole terms collide: under a joint
    // perturbation the pair's limit is the common value of either term with
    // its matched zero factors cancelled (one zero of l^{down k} against the
    // vanishing denominator), counted once.
    auto term_limit = [&](int i) -> Rational {
        long li = lambda.part(i);
        std::vector<long> num, den;
        for (int t = 0; t < k; ++t) num.push_back(li - t);
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            long lj = lambda.part(j);
            num.push_back(li - lj - k);
            num.push_back(li + lj);
            den.push_back(li - lj);
            den.push_back(li + lj - k);
        }
        long zn = std::count(num.begin(), num.end(), 0L);
        long zd = std::count(den.begin(), den.end(), 0L);
        if (zn > zd) return 0;
        if (zn < zd) throw DomainError("spin_p_sharp_explicit: unexpected pole");
        Rational term = 1;
        for (long v : num)
            if (v != 0) term *= v;
        for (long v : den)
            if (v != 0) term /= v;
        return term;
    };
    for (int i = 0; i < l; ++i) {
        int partner = -1;
        for (int j = 0; j < l; ++j)
            if (j != i && lambda.part(i) + lambda.part(j) == k) partner = j;
        if (partner >= 0 && partner < i) continue; // pair already counted
        Rational t = term_limit(i);
        if (partner >= 0) {
            Rational other = term_limit(partner);
            if (t != other) throw DomainError("spin_p_sharp_explicit: asymmetric pole pair");
        }
        total += t;
    }
    return total;
}

namespace {

// (z + shift)^{down count} accumulated onto a descending series.
template <typename R>
DescSeries<R> mul_falling(DescSeries<R> s, const R& shift, int count, const R& unit,
                          const R& zero) {
    R a = shift;
    for (int t = 0; t < count; ++t) {
        s = s.mul_linear(a, zero);
        a = a - unit;
    }
    return s;
}

} // namespace

Rational spin_p_sharp_series(int k, const StrictPartition& lambda) {
    if (k < 1 || k % 2 == 0) throw DomainError("spin characters take odd k");
    if (k > lambda.size()) return 0;
    const Rational zero(0), unit(1);
    int len = k + 2;
    // psi_k(z) = (2z-k)(z-1)^{down k-1} prod (z+l_i)(z-l_i-k) / prod (z-l_i)(z+l_i-k)
    auto num = DescSeries<Rational>::one(len, unit, zero);
    num = num.mul_linear(Rational(-k, 2), zero);
    for (auto& c : num.c) c *= 2;
    num = mul_falling(num, Rational(-1), k - 1, unit, zero);
    auto den = DescSeries<Rational>::one(len, unit, zero);
    for (int p : lambda.parts()) {
        num = num.mul_linear(Rational(p), zero);
        num = num.mul_linear(Rational(-p - k), zero);
        den = den.mul_linear(Rational(-p), zero);
        den = den.mul_linear(Rational(p - k), zero);
    }
    auto psi = num.mul(den.inverse_monic(unit, zero), zero);
    Rational res = psi.coeff(-1, zero);
    return -res / (4 * k);
}

std::vector<std::string> stanley_variable_names(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back(m == 1 ? "p" : "p" + std::to_string(i));
    for (int i = 1; i <= m; ++i) names.push_back(m == 1 ? "q" : "q" + std::to_string(i));
    return names;
}

namespace {

struct StanleyVars {
    int m;
    int nv;
    MultivarPoly zero, unit;
    StanleyVars(int m_) : m(m_), nv(2 * m_), zero(2 * m_), unit(2 * m_, Rational(1)) {}
    MultivarPoly p(int i) const { return MultivarPoly::variable(nv, i); }
    MultivarPoly q(int i) const { return MultivarPoly::variable(nv, m + i); }
    MultivarPoly constant(const Rational& c) const { return MultivarPoly(nv, c); }
};

} // namespace

MultivarPoly stanley_poly_any(int k, int m) {
    if (k < 1 || m < 1) throw DomainError("stanley_poly: k, m >= 1");
    StanleyVars v(m);
    int len = k + 2;
    auto num = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
    num = num.mul_linear(v.constant(Rational(-k, 2)), v.zero);
    for (auto& c : num.c) c = c * Rational(2);
    num = mul_falling(num, v.constant(-1), k - 1, v.unit, v.zero);
    auto den = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
    for (int i = 0; i < m; ++i) {
        // numerator factors (z - q_i - 1)^{down k} (z + q_i)^{down k}
        num = mul_falling(num, -v.q(i) - v.unit, k, v.unit, v.zero);
        num = mul_falling(num, v.q(i), k, v.unit, v.zero);
        // denominator factors (z - q_i + p_i - 1)^{down k} (z + q_i - p_i)^{down k}
        den = mul_falling(den, v.p(i) - v.q(i) - v.unit, k, v.unit, v.zero);
        den = mul_falling(den, v.q(i) - v.p(i), k, v.unit, v.zero);
    }
    auto psi = num.mul(den.inverse_monic(v.unit, v.zero), v.zero);
    MultivarPoly res = psi.coeff(-1, v.zero);
    return res * Rational(-1, 4 * k);
}

MultivarPoly stanley_poly(int k, int m) {
    if (k % 2 == 0) throw DomainError("stanley_poly: k must be odd");
    return stanley_poly_any(k, m);
}

bool stanley_eval_consistency(int k, const StrictPartition& lambda) {
    MultiRect mr = to_multirect(lambda);
    int m = std::max(mr.blocks(), 1);
    if (mr.blocks() == 0) return spin_p_sharp_explicit(k, lambda) == 0;
    MultivarPoly f = stanley_poly(k, m);
    std::vector<Rational> values;
    for (int i = 0; i < m; ++i) values.emplace_back(mr.p[i]);
    for (int i = 0; i < m; ++i) values.emplace_back(mr.q[i]);
    return f.evaluate(values) == spin_p_sharp_explicit(k, lambda);
}

std::vector<std::pair<MultivarPoly::Monomial, Rational>> sign_flip_positivity(int k, int m) {
    MultivarPoly f = stanley_poly(k, m);
    std::vector<bool> flip(2 * m, false);
    for (int i = 0; i < m; ++i) flip[i] = true;
    return (-(f.negate_vars(flip))).negative_coefficients();
}

MultivarPoly stanley_catalan_specialization(int k) {
    MultivarPoly f = stanley_poly(k, 1); // vars p, q
    MultivarPoly out(1);
    for (const auto& [mon, c] : f.terms())
        out.add_term({mon[0] + mon[1]}, c);
    return out;
}

MultivarPoly stanley_catalan_closed_form(int k) {
    if (k % 2 == 0) throw DomainError("k must be odd");
    int j = (k + 1) / 2;
    MultivarPoly prod(1, Rational(1));
    MultivarPoly p = MultivarPoly::variable(1, 0);
    for (int t = 0; t < 2 * j; ++t) prod = prod * (p + MultivarPoly(1, Rational(j - t)));
    // Sign fixed against direct evaluation (k = 1, p = 1 gives +1): the
    // prefactor is (-1)^{j+1}/2, not (-1)^j/2.
    Rational scale = Rational(catalan(j - 1), 2);
    if (j % 2 == 0) scale = -scale;
    return prod * scale;
}

MultivarPoly leading_term(int k, int m) {
    return stanley_poly(k, m).homogeneous_part(k + 1);
}

MultivarPoly leading_term_inverse(int k, int m) {
    if (k % 2 == 0) throw DomainError("k must be odd");
    StanleyVars v(m);
    int order = k + 2;
    // w(z) = z prod (1 - z^2 (q_i-p_i)^2) / (1 - z^2 q_i^2)
    PowerSeries<MultivarPoly> num, den;
    num.c.assign(order + 1, v.zero);
    num.c[1] = v.unit;
    den.c.assign(order + 1, v.zero);
    den.c[0] = v.unit;
    for (int i = 0; i < m; ++i) {
        MultivarPoly d2 = (v.q(i) - v.p(i)) * (v.q(i) - v.p(i));
        MultivarPoly q2 = v.q(i) * v.q(i);
        PowerSeries<MultivarPoly> fn, fd;
        fn.c.assign(order + 1, v.zero);
        fn.c[0] = v.unit;
        fn.c[2] = -d2;
        fd.c.assign(order + 1, v.zero);
        fd.c[0] = v.unit;
        fd.c[2] = -q2;
        num = num.mul(fn, v.zero);
        den = den.mul(fd, v.zero);
    }
    auto w = num.mul(den.inverse_unit(v.unit, v.zero), v.zero);
    auto g = compositional_inverse(w, v.unit, v.zero);
    // 1/(2 g(z)) = (1/(2z)) (g/z)^{-1}; the z^k coefficient is half the
    // z^{k+1} coefficient of (g/z)^{-1}.
    PowerSeries<MultivarPoly> gz;
    gz.c.assign(order, v.zero);
    for (int t = 0; t + 1 <= g.order(); ++t) gz.c[t] = g.c[t + 1];
    auto h = gz.inverse_unit(v.unit, v.zero);
    return h.c[k + 1] * Rational(1, 2);
}

MultivarPoly leading_term_cumulant(int k, int m) {
    if (k % 2 == 0) throw DomainError("k must be odd");
    StanleyVars v(m);
    int len = k + 2;
    // 1/C(z)^k = z^k prod ((z^2-x_i^2)/(z^2-y_i^2))^k with x = q + 1/2,
    // y = q - p + 1/2; R_{k+1}(lambda) = -(1/2k) [z^{-1}] C^{-k}.
    auto num = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
    auto den = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
    for (int i = 0; i < m; ++i) {
        MultivarPoly x = v.q(i) + v.constant(Rational(1, 2));
        MultivarPoly y = v.q(i) - v.p(i) + v.constant(Rational(1, 2));
        for (int t = 0; t < k; ++t) {
            num = num.mul_linear(x, v.zero);
            num = num.mul_linear(-x, v.zero);
            den = den.mul_linear(y, v.zero);
            den = den.mul_linear(-y, v.zero);
        }
    }
    num.top += k; // the leading z^k factor
    auto ratio = num.mul(den.inverse_monic(v.unit, v.zero), v.zero);
    MultivarPoly r = ratio.coeff(-1, v.zero) * Rational(-1, 2 * k);
    return r.homogeneous_part(k + 1);
}

MultivarPoly leading_term_expansion(int k, int m) {
    if (k % 2 == 0) throw DomainError("k must be odd");
    StanleyVars v(m);
    int len = k + 2;
    // P = (1/2k) [z^{-1-k}] prod_i (1 + (p_i^2 + 2 q_i p_i) sum_j (q_i+p_i)^{2j-2} z^{-2j})^k,
    // then L_k = - P(-p; q).
    DescSeries<MultivarPoly> prod = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
    for (int i = 0; i < m; ++i) {
        DescSeries<MultivarPoly> factor = DescSeries<MultivarPoly>::one(len, v.unit, v.zero);
        MultivarPoly head = v.p(i) * v.p(i) + v.q(i) * v.p(i) * Rational(2);
        MultivarPoly qp = v.q(i) + v.p(i);
        MultivarPoly pw = v.unit;
        for (int j = 1; 2 * j < len; ++j) {
            factor.c[2 * j] += head * pw;
            pw = pw * (qp * qp);
        }
        for (int t = 0; t < k; ++t) prod = prod.mul(factor, v.zero);
    }
    MultivarPoly p = prod.coeff(-1 - k, v.zero) * Rational(1, 2 * k);
    std::vector<bool> flip(2 * m, false);
    for (int i = 0; i < m; ++i) flip[i] = true;
    return -(p.negate_vars(flip));
}

namespace {

// Polynomial in z with MultivarPoly coefficients, ascending in z.
using ZPoly = std::vector<MultivarPoly>;

ZPoly zp_one(const MultivarPoly& unit) { return {unit}; }

// Multiply by (s z + a), s = +-1.
ZPoly zp_mul_linear(const ZPoly& f, int s, const MultivarPoly& a, const MultivarPoly& zero) {
    ZPoly r(f.size() + 1, zero);
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] += f[i] * a;
        r[i + 1] += s > 0 ? f[i] : -(f[i]);
    }
    return r;
}

// (s z + c)^{down count}: product of (s z + c - t).
ZPoly zp_falling(ZPoly f, int s, const MultivarPoly& c, int count, const StanleyVars& v) {
    for (int t = 0; t < count; ++t) f = zp_mul_linear(f, s, c - v.constant(t), v.zero);
    return f;
}

ZPoly zp_mul(const ZPoly& f, const ZPoly& g, const MultivarPoly& zero) {
    ZPoly r(f.size() + g.size() - 1, zero);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    return r;
}

struct PsiParts {
    ZPoly num, den;
};

// Numerator and denominator of psi_k as z-polynomials; substitute builds
// psi_k(-z + k) when mirrored.
PsiParts psi_parts(int k, const StanleyVars& v, bool mirrored) {
    int s = mirrored ? -1 : 1;
    auto shift = [&](const MultivarPoly& a) {
        // (z + a) seen at (-z + k): (-z + k + a)
        return mirrored ? v.constant(k) + a : a;
    };
    PsiParts parts;
    // (2z - k) -> at mirror: (-2z + k)
    ZPoly head = zp_mul_linear(zp_one(v.unit), s, shift(v.constant(Rational(-k, 2))), v.zero);
    for (auto& c : head) c = c * Rational(2);
    head = zp_falling(head, s, shift(v.constant(-1)), k - 1, v);
    parts.num = head;
    parts.den = zp_one(v.unit);
    for (int i = 0; i < v.m; ++i) {
        parts.num = zp_falling(parts.num, s, shift(-v.q(i) - v.unit), k, v);
        parts.num = zp_falling(parts.num, s, shift(v.q(i)), k, v);
        parts.den = zp_falling(parts.den, s, shift(v.p(i) - v.q(i) - v.unit), k, v);
        parts.den = zp_falling(parts.den, s, shift(v.q(i) - v.p(i)), k, v);
    }
    return parts;
}

MultivarPoly eval_pq(const MultivarPoly& f, const std::vector<Rational>& vals) {
    return MultivarPoly(1, f.evaluate(vals));
}

} // namespace

bool psi_functional_equation_holds(int k, int m, bool symbolic_pq) {
    StanleyVars v(m);
    PsiParts plain = psi_parts(k, v, false);
    PsiParts mirror = psi_parts(k, v, true);
    auto check = [&](const PsiParts& a, const PsiParts& b) {
        // (-1)^k num(z) den~(z) == num~(z) den(z)
        ZPoly lhs = zp_mul(a.num, b.den, a.num[0] * Rational(0));
        ZPoly rhs = zp_mul(b.num, a.den, a.num[0] * Rational(0));
        if (k % 2 == 1)
            for (auto& c : lhs) c = -c;
        if (lhs.size() != rhs.size()) return false;
        for (size_t i = 0; i < lhs.size(); ++i)
            if (!(lhs[i] == rhs[i])) return false;
        return true;
    };
    if (symbolic_pq) return check(plain, mirror);
    // Evaluate p, q at seeded rational points, keep z symbolic.
    uint64_t state = 0x9e3779b97f4a7c15ull + 1013 * k + m;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Rational> vals;
        for (int i = 0; i < 2 * m; ++i)
            vals.emplace_back(Rational(static_cast<long>(next() % 4001) - 2000,
                                       static_cast<long>(next() % 97) + 1));
        auto ev = [&](const PsiParts& src) {
            PsiParts out;
            for (const auto& c : src.num) out.num.push_back(eval_pq(c, vals));
            for (const auto& c : src.den) out.den.push_back(eval_pq(c, vals));
            return out;
        };
        PsiParts pe = ev(plain), me = ev(mirror);
        if (!check(pe, me)) return false;
    }
    return true;
}

} // namespace reprlab
