#include "profile.hpp"

#include <algorithm>
#include <cmath>

namespace reprlab {

Profile::Profile(const Partition& lambda, bool rescale) : n_(lambda.size()), rescale_(rescale) {
    int l = lambda.length();
    diffs_.reserve(l);
    for (int i = 0; i < l; ++i) diffs_.push_back(lambda.part(i) - (i + 1));
    lo_ = -(l + 1);
    hi_ = lambda.part(0) + 1;
}

BigInt Profile::value_at_integer(long long m) const {
    // lambda(m) = m + 2 #{i >= 1 : lambda_i - i >= m} counting the virtual
    // rows lambda_i = 0 beyond the length; diffs_ strictly decreasing.
    auto it = std::lower_bound(diffs_.begin(), diffs_.end(), m,
                               [](long long d, long long v) { return d >= v; });
    long long cnt = it - diffs_.begin();
    long long l = static_cast<long long>(diffs_.size());
    if (-m > l) cnt += -m - l; // rows l+1 .. -m contribute -i >= m
    return BigInt(m) + 2 * BigInt(cnt);
}

double Profile::operator()(double x) const {
    double scale = rescale_ ? std::sqrt(static_cast<double>(n_)) : 1.0;
    double t = x * scale;
    double lof = static_cast<double>(lo_), hif = static_cast<double>(hi_);
    if (t <= lof || t >= hif) return std::abs(x);
    double m = std::floor(t);
    double v0 = value_at_integer(static_cast<long long>(m)).convert_to<double>();
    double v1 = value_at_integer(static_cast<long long>(m) + 1).convert_to<double>();
    return (v0 + (t - m) * (v1 - v0)) / scale;
}

Rational Profile::area_above_axis() const {
    Rational area = 0;
    for (long long m = lo_; m < hi_; ++m) {
        Rational s0 = Rational(value_at_integer(m)) - (m >= 0 ? m : -m);
        Rational s1 = Rational(value_at_integer(m + 1)) - (m + 1 >= 0 ? m + 1 : -(m + 1));
        area += (s0 + s1) / 2; // trapezoid on unit interval; kink at 0 has s=const anyway
    }
    return area;
}

Profile profile(const Partition& lambda, bool rescale) { return Profile(lambda, rescale); }

Rational moment_pbar(const Partition& lambda, int k) {
    if (k < 2) throw DomainError("moment_pbar: k >= 2");
    Profile pr(lambda);
    // sigma(x) = (lambda(x)-|x|)/2 is piecewise linear between consecutive
    // integers, zero outside [lo, hi]. On [m, m+1] with values s0, s1:
    // sigma(x) = s0 + (s1-s0)(x-m). Integrate x^{k-2} sigma exactly.
    Rational total = 0;
    auto powr = [](Rational b, int e) {
        Rational r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    for (long long m = pr.lo(); m < pr.hi(); ++m) {
        Rational s0 = (Rational(pr.value_at_integer(m)) - (m >= 0 ? m : -m)) / 2;
        Rational s1 = (Rational(pr.value_at_integer(m + 1)) - (m + 1 >= 0 ? m + 1 : -(m + 1))) / 2;
        if (s0 == 0 && s1 == 0) continue;
        Rational a = s1 - s0;              // slope
        Rational b = s0 - a * m;           // intercept: sigma = a x + b
        Rational hi_k = powr(Rational(m + 1), k), lo_k = powr(Rational(m), k);
        Rational hi_k1 = powr(Rational(m + 1), k - 1), lo_k1 = powr(Rational(m), k - 1);
        // Int_m^{m+1} x^{k-2} (a x + b) dx = a (x^k/k) + b (x^{k-1}/(k-1))
        total += a * (hi_k - lo_k) / k + b * (hi_k1 - lo_k1) / (k - 1);
    }
    return Rational(k) * Rational(k - 1) * total;
}

BigInt shifted_power_sum(const Partition& lambda, int k) {
    if (k < 1) throw DomainError("shifted_power_sum: k >= 1");
    auto powz = [](BigInt b, int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    BigInt total = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        total += powz(BigInt(lambda.part(i - 1) - i), k) - powz(BigInt(-i), k);
    return total;
}

Rational generating_function(const Partition& lambda, const Rational& z) {
    Rational value = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        Rational den = z + i - lambda.part(i - 1);
        if (den == 0) throw DomainError("generating_function: pole at z");
        value *= (z + i) / den;
    }
    return value;
}

double limit_shape_omega(double x) {
    if (std::abs(x) >= 2.0) return std::abs(x);
    return (2.0 / M_PI) * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double semicircle_cdf(double v) {
    if (v <= -2.0) return 0.0;
    if (v >= 2.0) return 1.0;
    double f = 0.5 + v * std::sqrt(4.0 - v * v) / (4.0 * M_PI) + std::asin(v / 2.0) / M_PI;
    return std::clamp(f, 0.0, 1.0);
}

DiscreteMeasure transition_measure(const Partition& lambda) {
    CornerData cd = corners(lambda);
    BigInt dl = dimension(lambda);
    int n = lambda.size();
    DiscreteMeasure m;
    for (size_t j = 0; j < cd.inner.size(); ++j)
        m.atoms.emplace_back(Rational(cd.inner[j]),
                             Rational(dimension(cd.added[j]), dl * (n + 1)));
    return m;
}

DiscreteMeasure transition_measure_kerov(const Partition& lambda) {
    CornerData cd = corners(lambda);
    DiscreteMeasure m;
    for (size_t j = 0; j < cd.inner.size(); ++j) {
        Rational w = 1;
        for (int y : cd.outer) w *= Rational(cd.inner[j] - y);
        for (size_t i = 0; i < cd.inner.size(); ++i)
            if (i != j) w /= Rational(cd.inner[j] - cd.inner[i]);
        m.atoms.emplace_back(Rational(cd.inner[j]), w);
    }
    return m;
}

DiscreteMeasure cotransition_measure(const Partition& lambda) {
    if (lambda.size() < 1) throw DomainError("cotransition_measure: |lambda| >= 1");
    CornerData cd = corners(lambda);
    BigInt dl = dimension(lambda);
    DiscreteMeasure m;
    for (size_t j = 0; j < cd.outer.size(); ++j)
        m.atoms.emplace_back(Rational(cd.outer[j]), Rational(dimension(cd.removed[j]), dl));
    return m;
}

DiscreteMeasure cotransition_measure_kerov(const Partition& lambda) {
    if (lambda.size() < 1) throw DomainError("cotransition_measure: |lambda| >= 1");
    CornerData cd = corners(lambda);
    DiscreteMeasure m;
    for (size_t j = 0; j < cd.outer.size(); ++j) {
        Rational w(-1, lambda.size());
        for (int x : cd.inner) w *= Rational(cd.outer[j] - x);
        for (size_t i = 0; i < cd.outer.size(); ++i)
            if (i != j) w /= Rational(cd.outer[j] - cd.outer[i]);
        m.atoms.emplace_back(Rational(cd.outer[j]), w);
    }
    return m;
}

int cotransition_select(const Partition& lambda, const Rational& u) {
    DiscreteMeasure m = cotransition_measure(lambda);
    Rational cum = 0;
    for (size_t j = 0; j < m.atoms.size(); ++j) {
        cum += m.atoms[j].second;
        if (cum > u) return static_cast<int>(j);
    }
    return static_cast<int>(m.atoms.size()) - 1;
}

double cotransition_cdf_inverse(const Partition& lambda, double u) {
    if (u < 0.0 || u > 1.0) throw DomainError("cotransition_cdf_inverse: u in [0,1]");
    DiscreteMeasure m = cotransition_measure(lambda);
    double cum = 0.0;
    size_t jhat = m.atoms.size() - 1;
    for (size_t j = 0; j < m.atoms.size(); ++j) {
        cum += to_double(m.atoms[j].second);
        if (cum > u) { jhat = j; break; }
    }
    return to_double(m.atoms[jhat].first) / std::sqrt(static_cast<double>(lambda.size()));
}

} // namespace reprlab
