#pragma once

#include "numeric.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace reprlab {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond length
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    // Multiplicity of value v among the parts.
    int multiplicity(int v) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const; // "6,4,3,3,2"; empty partition prints "[]"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Contents of the addable (inner) and removable (outer) corners.
// Interlacing: x_1 < y_1 < x_2 < ... < y_d < x_{d+1}.
struct CornerData {
    std::vector<int> inner;  // d+1 addable contents
    std::vector<int> outer;  // d removable contents
    // Partitions obtained by adding at inner[j] / removing at outer[j].
    std::vector<Partition> added;
    std::vector<Partition> removed;
};

// All partitions of n in reverse-lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n, const Limits& limits = default_limits());

// Hook lengths row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

BigInt hook_product(const Partition& lambda);

// n! / H(lambda).
BigInt dimension(const Partition& lambda);

CornerData corners(const Partition& lambda);

// Multiset of contents c(a,b) = b - a, row by row.
std::vector<int> contents_multiset(const Partition& lambda);

// Number of standard Young tableaux of the skew shape lambda/nu by the
// branching recursion (removing n, n-1, ... one box at a time). 0 if nu is
// not contained in lambda.
BigInt skew_dimension_recursive(const Partition& lambda, const Partition& nu);

// A standard Young tableau, stored as the (row, col) position of each entry.
struct StandardTableau {
    Partition shape;
    std::vector<std::pair<int, int>> pos; // pos[e] = (row, col) of entry e+1, 0-based
    int content(int entry) const {        // entry is 1-based
        auto [r, c] = pos[entry - 1];
        return c - r;
    }
    std::string to_string() const;
};

// The SYT of a shape in last letter order, with the restriction structure
// needed for block decompositions of representation matrices.
class TableauSet {
public:
    // Cached per shape; thread safe (read-mostly cache behind a shared mutex).
    static std::shared_ptr<const TableauSet> of(const Partition& shape,
                                                const Limits& limits = default_limits());

    const Partition& shape() const { return shape_; }
    int count() const { return static_cast<int>(tableaux_.size()); }
    const StandardTableau& tableau(int i) const { return tableaux_[i]; }

    // Index of s_k T in last letter order, or -1 when k, k+1 share a row or
    // column of T. k is 1-based, 1 <= k < n.
    int swap_index(int t, int k) const { return swaps_[k - 1][t]; }

    // c_{k+1}(T) - c_k(T).
    int axial_distance(int t, int k) const {
        const auto& T = tableaux_[t];
        return T.content(k + 1) - T.content(k);
    }

    // Tableaux [block_begin[j], block_begin[j+1]) restrict to the j-th
    // subshape (in increasing removed-corner content), matching corners().removed.
    const std::vector<int>& block_begin() const { return block_begin_; }

private:
    Partition shape_;
    std::vector<StandardTableau> tableaux_;
    std::vector<std::vector<int>> swaps_; // [k-1][tableau index]
    std::vector<int> block_begin_;

    void build(const Limits& limits);
};

} // namespace reprlab
