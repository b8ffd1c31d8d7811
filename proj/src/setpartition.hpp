#pragma once

#include "numeric.hpp"

#include <string>
#include <vector>

namespace reprlab {

// Set partition of [n], canonical form: blocks sorted by least element,
// elements ascending within a block.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int n, std::vector<std::vector<int>> blocks);
    static SetPartition singletons(int n);
    static SetPartition from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    // Arcs (i, j): consecutive elements of a block, i < j.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    bool has_arc(int i, int j) const;
    // The arc leaving i, or 0 if none.
    int arc_from(int i) const { return next_[i - 1]; }
    int arc_to(int j) const { return prev_[j - 1]; }

    // Pipe-separated blocks with comma-separated ascending elements.
    std::string to_string() const;
    static SetPartition parse(const std::string& text);

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator<(const SetPartition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return blocks_ < o.blocks_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> next_, prev_;
    void finish();
};

struct ArcStatistics {
    long long d = 0;        // number of arcs
    long long dim = 0;      // sum of arc spans
    long long crs = 0;      // crossings i < k < j < l
    long long nst = 0;      // nestings i < k < l < j
    long long adjacent = 0; // arc pairs sharing j = k
};

ArcStatistics arc_statistics(const SetPartition& pi);

// All pairs i < j split into pi-regular and pi-singular.
struct RegularSingular {
    std::vector<std::pair<int, int>> regular;
    std::vector<std::pair<int, int>> singular;
};
RegularSingular regular_singular(const SetPartition& pi);

// nst_pi(sigma) = sum over arcs (k,l) of sigma of #{(i,j) in D(pi): i<k<l<j}.
long long nestings_of_in(const SetPartition& sigma, const SetPartition& pi);

// All set partitions of [n] (Bell(n) of them).
std::vector<SetPartition> enumerate_set_partitions(int n);

} // namespace reprlab
