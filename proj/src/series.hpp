#pragma once

#include "numeric.hpp"

#include <vector>

namespace reprlab {

// Truncated expansion in descending powers of z about z = infinity:
// sum_{t=0}^{len-1} c[t] z^{top - t}. The coefficient ring R needs +, -, *,
// construction from int, and is_zero-style comparison against R(0)
// (Rational and MultivarPoly both qualify).
template <typename R>
struct DescSeries {
    long top = 0;
    std::vector<R> c;

    static DescSeries one(int len, const R& unit, const R& zero) {
        DescSeries s;
        s.top = 0;
        s.c.assign(len, zero);
        s.c[0] = unit;
        return s;
    }

    int len() const { return static_cast<int>(c.size()); }

    // Coefficient of z^e, zero outside the window (exponents above the
    // window are an error: the series only knows top downward).
    R coeff(long e, const R& zero) const {
        long t = top - e;
        if (t < 0) throw DomainError("DescSeries: exponent above truncation top");
        if (t >= len()) return zero;
        return c[static_cast<size_t>(t)];
    }

    DescSeries mul(const DescSeries& o, const R& zero) const {
        DescSeries r;
        r.top = top + o.top;
        r.c.assign(c.size(), zero);
        for (int i = 0; i < len(); ++i) {
            if (c[i] == zero) continue;
            int jmax = std::min<int>(o.len(), len() - i);
            for (int j = 0; j < jmax; ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }

    // Multiply by the linear polynomial (z + a).
    DescSeries mul_linear(const R& a, const R& zero) const {
        DescSeries r;
        r.top = top + 1;
        r.c.assign(c.size(), zero);
        for (int i = 0; i < len(); ++i) {
            r.c[i] += c[i]; // z * c[i] z^{top-i}
            if (i + 1 < len()) r.c[i + 1] += a * c[i];
        }
        return r;
    }

    // Inverse of a series with leading coefficient 1 (monic in the window).
    DescSeries inverse_monic(const R& unit, const R& zero) const {
        if (!(c[0] == unit)) throw DomainError("DescSeries: inverse needs unit leading coeff");
        DescSeries r;
        r.top = -top;
        r.c.assign(c.size(), zero);
        r.c[0] = unit;
        for (int t = 1; t < len(); ++t) {
            R acc = zero;
            for (int l = 1; l <= t; ++l) acc += c[l] * r.c[t - l];
            r.c[t] = -acc;
        }
        return r;
    }
};

// Truncated formal power series sum_{t>=0} c[t] z^t used for compositional
// inversion (coefficients up to z^{order}).
template <typename R>
struct PowerSeries {
    std::vector<R> c; // c[t] is the z^t coefficient

    int order() const { return static_cast<int>(c.size()) - 1; }

    PowerSeries mul(const PowerSeries& o, const R& zero) const {
        PowerSeries r;
        r.c.assign(c.size(), zero);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == zero) continue;
            for (size_t j = 0; i + j < c.size() && j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }

    // Inverse of a series with constant term 1.
    PowerSeries inverse_unit(const R& unit, const R& zero) const {
        if (!(c[0] == unit)) throw DomainError("PowerSeries: inverse needs unit constant term");
        PowerSeries r;
        r.c.assign(c.size(), zero);
        r.c[0] = unit;
        for (size_t t = 1; t < c.size(); ++t) {
            R acc = zero;
            for (size_t l = 1; l <= t; ++l) acc += c[l] * r.c[t - l];
            r.c[t] = -acc;
        }
        return r;
    }
};

// Compositional inverse of w(z) = z + a_2 z^2 + ...: returns g with
// w(g(z)) = z + O(z^{order+1}); solved coefficient by coefficient.
template <typename R>
PowerSeries<R> compositional_inverse(const PowerSeries<R>& w, const R& unit, const R& zero) {
    if (!(w.c[0] == zero) || !(w.c[1] == unit))
        throw DomainError("compositional_inverse: series must start with z");
    int order = w.order();
    PowerSeries<R> g;
    g.c.assign(order + 1, zero);
    g.c[1] = unit;
    // powers[s] = g(z)^s truncated; rebuilt as coefficients of g appear.
    for (int t = 2; t <= order; ++t) {
        // coefficient of z^t in sum_s w_s g^s must vanish; g^1 contributes
        // g.c[t], all higher powers involve only g.c[<t].
        std::vector<PowerSeries<R>> pw(order + 1);
        pw[1] = g;
        for (int s = 2; s <= t; ++s) pw[s] = pw[s - 1].mul(g, zero);
        R acc = zero;
        for (int s = 2; s <= t; ++s) acc += w.c[s] * pw[s].c[t];
        g.c[t] = -acc;
    }
    return g;
}

} // namespace reprlab
