#pragma once

#include "fqmatrix.hpp"
#include "setpartition.hpp"

#include <map>
#include <vector>

namespace reprlab {

// Polynomial in q with integer coefficients (dense, ascending).
class QPoly {
public:
    QPoly() = default;
    QPoly(long long c) { if (c) c_ = {BigInt(c)}; }
    explicit QPoly(BigInt c) { if (c != 0) c_ = {std::move(c)}; }
    static QPoly q_power(int e, BigInt scale = 1);
    static QPoly q_minus_one();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Exact division; throws when the remainder is nonzero.
    QPoly divide_exact(const QPoly& o) const;

    BigInt evaluate(const BigInt& q) const;
    std::string to_string() const; // in the variable "q"

private:
    std::vector<BigInt> c_;
    void trim();
};

// Formal sum of set partitions with QPoly coefficients.
using QPolyCombo = std::map<SetPartition, QPoly>;

// The five-case recursion pi *_i {k} with symbolic q.
QPolyCombo star_product(const SetPartition& pi, int i, int k);

// SInd_{U_n}^{U_{n+1}}(chi^pi) = (pi u {n+1}) *_1 {n+1} in supercharacters.
QPolyCombo superinduce(const SetPartition& pi);

// Edge multiplicity kappa(pi, sigma) = c^sigma <chi^sigma, chi^sigma> / <chi^pi, chi^pi>.
QPoly edge_multiplicity(const SetPartition& pi, const SetPartition& sigma);

// chi^pi(K_sigma): q^{dim-d-nst_pi(sigma)} (q-1)^d (-1/(q-1))^{|D cap D|}
// when D(sigma) is pi-regular, else 0. Exact integer for integer q >= 2.
BigInt supercharacter_value(const SetPartition& pi, const SetPartition& sigma, int q);
// The same value with q symbolic (the formula clears denominators).
QPoly supercharacter_value_poly(const SetPartition& pi, const SetPartition& sigma);

// chi^pi(1) = (q-1)^d q^{dim-d}.
BigInt supercharacter_degree(const SetPartition& pi, int q);
QPoly supercharacter_degree_poly(const SetPartition& pi);

// <chi^pi, chi^pi> = (q-1)^d q^{crs}.
BigInt supercharacter_norm(const SetPartition& pi, int q);

// SPl_n(pi) = q^{2 dim - 2d} (q-1)^d / (q^{n(n-1)/2} q^{crs}).
Rational superplancherel(const SetPartition& pi, int q);

// Sample SPl_n by canonicalizing a uniform unitriangular matrix; uniform
// bits come from the caller so the sampler stays deterministic.
template <typename Rng>
SetPartition sample_superplancherel(int n, int q, Rng&& uniform_entry) {
    auto field = Fq::of(q);
    FqMatrix a(n, field);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a.set(i, j, uniform_entry(q));
    return canonicalize(a).pi;
}

// Exact cell-measure functionals of mu_pi = (1/n) sum lambda_{A_ij}.
struct CellFunctionals {
    Rational i1;   // Int (y - x) d mu
    Rational i2;   // Int 1[x1<x2<y1<y2] d mu d mu
    Rational entropy; // 1/2 - 2 I1 + I2
};
CellFunctionals cell_functionals(const SetPartition& pi);

// Corner mass F_mu(a, b) = mu([0,a] x [1-b,1]).
double corner_mass(const SetPartition& pi, double a, double b);

// max over an evenly spaced (a,b) grid of [0,1/2]^2 of |F(a,b) - min(a,b)|.
double omega_discrepancy(const SetPartition& pi, int grid);

} // namespace reprlab
