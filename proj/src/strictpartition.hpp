#pragma once

#include "numeric.hpp"
#include "profile.hpp"

#include <vector>

namespace reprlab {

// Strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }
    bool even_parity() const { return (n_ - length()) % 2 == 0; } // DP+ vs DP-

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    bool operator<(const StrictPartition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;
    static StrictPartition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Multirectangular coordinates of a strict partition: staircase blocks
// (q_i, q_i-1, ..., q_i-p_i+1) with q_{i+1} <= q_i - p_i.
struct MultiRect {
    std::vector<int> p;
    std::vector<int> q;
    int blocks() const { return static_cast<int>(p.size()); }
};

MultiRect to_multirect(const StrictPartition& lambda);
StrictPartition from_multirect(const MultiRect& mr);

// Symmetric extrema of the double diagram D(lambda): x_0 = 0 < x_1 < ... < x_m
// and y_1 < ... < y_m, all half-integers; x_{-i} = -x_i, y_{-i} = -y_i.
struct DoubleDiagram {
    std::vector<Rational> x; // x_0 .. x_m, x_0 = 0
    std::vector<Rational> y; // y_1 .. y_m
    int size = 0;            // |lambda|
    double value(double t) const; // D(lambda)(t), unscaled
};

DoubleDiagram double_diagram(const StrictPartition& lambda);

std::vector<StrictPartition> enumerate_strict(int n, const Limits& limits = default_limits());

// Partitions of n into odd parts (for the |OP_n| = |DP_n| check).
long long count_odd_partitions(int n);

// g^lambda by the product formula n!/(prod lambda_i!) prod_{i<j} (l_i-l_j)/(l_i+l_j).
BigInt g_dimension_product(const StrictPartition& lambda);
// g^lambda = n! / (shifted hook product).
BigInt g_dimension_hooks(const StrictPartition& lambda);

// Shifted hook lengths over the shifted diagram, row by row.
std::vector<std::vector<int>> shifted_hooks(const StrictPartition& lambda);

// 2^{n-l} (g^lambda)^2 / n!.
Rational strict_plancherel(const StrictPartition& lambda);

// Transition weight of the strict Plancherel growth process, lambda -> Lambda
// obtained by adding one box: 2^{l(lambda)-l(Lambda)+1} g^Lambda / ((n+1) g^lambda).
// Down transitions are g^lambda / g^Lambda; both cohere with strict_plancherel.
Rational strict_growth_weight(const StrictPartition& lambda, const StrictPartition& grown);

// Strict partitions reachable from lambda by adding one box.
std::vector<StrictPartition> strict_successors(const StrictPartition& lambda);

// Transition measure of D(lambda): symmetric atoms at +-x_i and 0 with
// mu_i = prod_k (x_i^2-y_k^2) / (2 x_i^2 prod_{k != i} (x_i^2-x_k^2)),
// mu_0 = prod_k y_k^2 / x_k^2.
DiscreteMeasure spin_transition_measure(const StrictPartition& lambda);

} // namespace reprlab
