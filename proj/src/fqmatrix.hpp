#pragma once

#include "numeric.hpp"
#include "setpartition.hpp"

#include <memory>
#include <vector>

namespace reprlab {

// Arithmetic of a small finite field F_q. Prime q works modularly; prime
// powers (4, 8, 9, ...) through tables built from an irreducible polynomial.
class Fq {
public:
    static std::shared_ptr<const Fq> of(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

private:
    explicit Fq(int q);
    int q_;
    std::vector<int> add_, mul_, neg_;
};

// Upper unitriangular matrix over F_q: implicit unit diagonal, strictly
// upper entries stored row-major.
class FqMatrix {
public:
    FqMatrix(int n, std::shared_ptr<const Fq> field);

    int n() const { return n_; }
    const Fq& field() const { return *field_; }
    std::shared_ptr<const Fq> field_ptr() const { return field_; }
    int get(int i, int j) const; // 1-based; i == j gives 1, i > j gives 0
    void set(int i, int j, int v);

    bool operator==(const FqMatrix& o) const { return a_ == o.a_; }
    bool operator<(const FqMatrix& o) const { return a_ < o.a_; }

    FqMatrix multiply(const FqMatrix& o) const;

    // Encode/decode the strictly upper entries as digits base q (row-major),
    // used for exhaustive enumeration.
    unsigned long long encode() const;
    static FqMatrix decode(int n, std::shared_ptr<const Fq> field, unsigned long long code);
    static unsigned long long group_order(int n, int q); // q^{n(n-1)/2}

    std::string to_string() const;

private:
    int n_;
    std::shared_ptr<const Fq> field_;
    std::vector<int> a_; // strictly upper, row-major
    int index(int i, int j) const;
};

// Diagonal sweep producing the canonical representative of the J_pi fiber
// containing A, plus its set partition label.
struct Canonicalized {
    SetPartition pi;
    FqMatrix canonical;
};
Canonicalized canonicalize(const FqMatrix& a);

// Superclass label of A: rook-pivot normal form of X = A - 1 under the
// two-sided unitriangular action (columns left to right, lowest nonzero row
// as pivot, clear above and to the right).
SetPartition superclass_of(const FqMatrix& a);

// Membership test for the J_pi fiber.
bool in_fiber(const FqMatrix& a, const SetPartition& pi);

} // namespace reprlab
