#pragma once

#include "partition.hpp"

#include <vector>

namespace reprlab {

// Permutation of {1..n} in one-line notation. Products compose right to
// left: (s*t)(x) = s(t(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation adjacent(int k, int n); // (k, k+1) in S_n
    // Cycle notation, e.g. "(2,4,3)(5,6)"; "()" or "" is the identity of S_n
    // for the given minimum size.
    static Permutation parse_cycles(const std::string& text, int min_n = 0);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int x) const { return img_[x - 1]; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool is_identity() const;

    Partition cycle_type() const;
    std::vector<int> support() const;                  // non-fixed points
    int weight() const;                                // |support|
    // sigma = s_{w[0]} * s_{w[1]} * ... (adjacent transpositions, 1-based
    // indices); minimal length (= inversion count).
    std::vector<int> reduced_word() const;

    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// All permutations of S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

// Representative permutation of a cycle type: cycles filled left to right.
Permutation representative_of_type(const Partition& rho);

} // namespace reprlab
