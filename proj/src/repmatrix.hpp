#pragma once

#include "characters.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "profile.hpp"

#include <vector>

namespace reprlab {

enum class Flavor { orthogonal, seminormal };

template <typename T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {}
    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
    int dim() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    T trace() const {
        T t(0);
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

private:
    int n_ = 0;
    std::vector<T> a_;
};

using MatrixQ = Matrix<Rational>;
using MatrixD = Matrix<double>;

// pi^lambda((k, k+1)), tableaux in last letter order. Diagonal entries are
// 1/d with d = c_{k+1}(T) - c_k(T), as in the worked matrices (the sign
// convention where adjacent same-row pairs act as +1).
MatrixD rep_adjacent_orthogonal(const Partition& lambda, int k,
                                const Limits& limits = default_limits());
MatrixQ rep_adjacent_seminormal(const Partition& lambda, int k,
                                const Limits& limits = default_limits());

// Product over a reduced word of sigma; sigma in S_r with r <= |lambda|.
MatrixD rep_matrix_orthogonal(const Partition& lambda, const Permutation& sigma,
                              const Limits& limits = default_limits());
MatrixQ rep_matrix_seminormal(const Partition& lambda, const Permutation& sigma,
                              const Limits& limits = default_limits());

// In-place M <- pi(s_k) * M and M <- M * pi(s_k).
void apply_left(MatrixD& m, const TableauSet& ts, int k);
void apply_left(MatrixQ& m, const TableauSet& ts, int k);
void apply_right(MatrixD& m, const TableauSet& ts, int k);
void apply_right(MatrixQ& m, const TableauSet& ts, int k);

// Number of row/column indices covered by "i <= u dim".
int prefix_count(const Rational& u, int dim);
int prefix_count(double u, int dim);

// Sum_{i <= u dim} M_ii / dim.
template <typename T, typename U>
T partial_trace(const Matrix<T>& m, const U& u) {
    int c = prefix_count(u, m.dim());
    T s(0);
    for (int i = 0; i < c; ++i) s += m.at(i, i);
    return s / T(m.dim());
}

// Sum_{i <= u dim, j <= v dim} M_ij / dim.
template <typename T, typename U>
T partial_sum(const Matrix<T>& m, const U& u, const U& v) {
    int cu = prefix_count(u, m.dim()), cv = prefix_count(v, m.dim());
    T s(0);
    for (int i = 0; i < cu; ++i)
        for (int j = 0; j < cv; ++j) s += m.at(i, j);
    return s / T(m.dim());
}

template <typename T>
T total_sum(const Matrix<T>& m) {
    T one(1);
    return partial_sum(m, one, one);
}

// Convenience wrappers that build the matrix first.
Rational partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u);
double partial_trace_orthogonal(const Partition& lambda, const Permutation& sigma, double u);
Rational partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                     const Rational& v);
double partial_sum_orthogonal(const Partition& lambda, const Permutation& sigma, double u, double v);
Rational total_sum(const Partition& lambda, const Permutation& sigma);
double total_sum_orthogonal(const Partition& lambda, const Permutation& sigma);

template <typename T>
struct Decomposition {
    T main_term{};
    T remainder{};
    int corner_index = 0; // 0-based j_hat into cotransition atoms
    T residual_u{};       // u_bar
    T value() const { return main_term + remainder; }
};

// PT_u = sum_{j < j_hat} (dim mu_j / dim lambda) chi^{mu_j}(sigma)
//        + (dim mu_jhat / dim lambda) PT_{u_bar}^{mu_jhat}(sigma),
// with j_hat from the co-transition pseudo-inverse. Seminormal, exact.
Decomposition<Rational> decompose_partial_trace(const Partition& lambda, const Permutation& sigma,
                                                const Rational& u);
// Same shape for the diagonal partial sum, with total sums as main term.
Decomposition<Rational> decompose_partial_sum(const Partition& lambda, const Permutation& sigma,
                                              const Rational& u);

// m_sigma = E_Pl^r[TS^nu(sigma)], v_sigma = C(r,2) E_Pl^r[chihat_(2,1..) TS^nu(sigma)],
// with orthogonal-flavor total sums; r <= 6.
std::pair<double, double> m_and_v(const Permutation& sigma, int r);

// Entry bound |M_ij| <= 2^{l(sigma)} and the |i-j| > r! zero pattern.
bool entry_bound_check(const Partition& lambda, const Permutation& sigma,
                       const Limits& limits = default_limits());

} // namespace reprlab
