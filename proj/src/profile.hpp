#pragma once

#include "partition.hpp"

#include <vector>

namespace reprlab {

// Piecewise linear border of a Young diagram in Russian coordinates.
// lambda(x) = |x| outside [-(l+1), lambda_1 + 1]; vertices at integer
// abscissae; lambda(m) = m + 2 #{i : lambda_i - i >= m} at integers m.
// With this convention the area between lambda(x) and |x| is 2n.
class Profile {
public:
    explicit Profile(const Partition& lambda, bool rescale = false);

    double operator()(double x) const;
    int size() const { return n_; }
    bool rescaled() const { return rescale_; }

    // Exact unscaled values at integer abscissae.
    BigInt value_at_integer(long long m) const;

    // Vertex abscissae (unscaled): all integers in [lo, hi].
    long long lo() const { return lo_; }
    long long hi() const { return hi_; }

    // Exact area between the unscaled profile and |x|; equals 2n.
    Rational area_above_axis() const;

private:
    int n_ = 0;
    bool rescale_ = false;
    std::vector<long long> diffs_; // lambda_i - i, strictly decreasing
    long long lo_ = 0, hi_ = 0;
};

Profile profile(const Partition& lambda, bool rescale = false);

// k(k-1) Int x^{k-2} (lambda(x)-|x|)/2 dx over the unscaled profile, k >= 2.
Rational moment_pbar(const Partition& lambda, int k);

// Sum_i (lambda_i - i)^k - (-i)^k.
BigInt shifted_power_sum(const Partition& lambda, int k);

// phi(z; lambda) = prod_i (z+i) / (z+i-lambda_i); throws on a pole.
Rational generating_function(const Partition& lambda, const Rational& z);

double limit_shape_omega(double x);

// (1/(2 pi)) Int_{-2}^{min(v,2)} sqrt(4-t^2) dt, clamped to [0,1].
double semicircle_cdf(double v);

struct DiscreteMeasure {
    // Atoms sorted by location.
    std::vector<std::pair<Rational, Rational>> atoms; // (location, weight)
    Rational total() const {
        Rational s = 0;
        for (const auto& a : atoms) s += a.second;
        return s;
    }
};

// Atoms at addable-corner contents x_j, weights dim Lambda_j / ((n+1) dim lambda).
DiscreteMeasure transition_measure(const Partition& lambda);
// Same atoms through Kerov's product formula prod(x_j-y_i)/prod_{i!=j}(x_j-x_i).
DiscreteMeasure transition_measure_kerov(const Partition& lambda);

// Atoms at removable-corner contents y_j, weights dim mu_j / dim lambda.
DiscreteMeasure cotransition_measure(const Partition& lambda);
// Kerov's signed product formula -(1/n) prod(y_j-x_i)/prod_{i!=j}(y_j-y_i).
DiscreteMeasure cotransition_measure_kerov(const Partition& lambda);

// Index j_hat (0-based) of the first removable corner whose cumulative
// co-transition weight exceeds u; the last corner when u >= 1.
int cotransition_select(const Partition& lambda, const Rational& u);

// (F_ctr^lambda)^*(u) = y_{j_hat} / sqrt(n).
double cotransition_cdf_inverse(const Partition& lambda, double u);

} // namespace reprlab
