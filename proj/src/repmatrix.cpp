#include "repmatrix.hpp"

#include <cmath>

namespace reprlab {

namespace {

std::shared_ptr<const TableauSet> tableaux_checked(const Partition& lambda, Flavor flavor,
                                                   const Limits& limits) {
    BigInt d = dimension(lambda);
    int cap = flavor == Flavor::orthogonal ? limits.dim_cap_float : limits.dim_cap_rational;
    if (d > cap) throw LimitError("representation dimension exceeds cap");
    return TableauSet::of(lambda, limits);
}

void check_degree(const Partition& lambda, const Permutation& sigma) {
    // sigma in S_r embeds into S_n by fixing r+1..n.
    int r = sigma.degree();
    auto sup = sigma.support();
    int eff = sup.empty() ? 0 : sup.back();
    if (eff > lambda.size())
        throw DomainError("permutation moves points beyond |lambda|");
    (void)r;
}

} // namespace

void apply_left(MatrixD& m, const TableauSet& ts, int k) {
    int n = m.dim();
    for (int t = 0; t < n; ++t) {
        int u = ts.swap_index(t, k);
        double d = ts.axial_distance(t, k);
        if (u < 0) {
            for (int j = 0; j < n; ++j) m.at(t, j) *= 1.0 / d;
        } else if (t < u) {
            double a = 1.0 / d;
            double b = std::sqrt(1.0 - a * a);
            for (int j = 0; j < n; ++j) {
                double rt = m.at(t, j), ru = m.at(u, j);
                m.at(t, j) = a * rt + b * ru;
                m.at(u, j) = b * rt - a * ru;
            }
        }
    }
}

void apply_left(MatrixQ& m, const TableauSet& ts, int k) {
    int n = m.dim();
    for (int t = 0; t < n; ++t) {
        int u = ts.swap_index(t, k);
        int d = ts.axial_distance(t, k);
        if (u < 0) {
            Rational a = Rational(1) / d;
            for (int j = 0; j < n; ++j) m.at(t, j) *= a;
        } else if (t < u) {
            // Seminormal pair action with entries (T, s_k T) = 1 - 1/d(T):
            // row_t <- (1/d) row_t + (1 - 1/d) row_u,
            // row_u <- (1 + 1/d) row_t - (1/d) row_u,  d = d(t) < 0.
            Rational a = Rational(1) / d;
            for (int j = 0; j < n; ++j) {
                Rational rt = m.at(t, j), ru = m.at(u, j);
                m.at(t, j) = a * rt + (1 - a) * ru;
                m.at(u, j) = (1 + a) * rt - a * ru;
            }
        }
    }
}

void apply_right(MatrixD& m, const TableauSet& ts, int k) {
    int n = m.dim();
    for (int t = 0; t < n; ++t) {
        int u = ts.swap_index(t, k);
        double d = ts.axial_distance(t, k);
        if (u < 0) {
            for (int i = 0; i < n; ++i) m.at(i, t) *= 1.0 / d;
        } else if (t < u) {
            double a = 1.0 / d;
            double b = std::sqrt(1.0 - a * a);
            for (int i = 0; i < n; ++i) {
                double ct = m.at(i, t), cu = m.at(i, u);
                m.at(i, t) = a * ct + b * cu;
                m.at(i, u) = b * ct - a * cu;
            }
        }
    }
}

void apply_right(MatrixQ& m, const TableauSet& ts, int k) {
    int n = m.dim();
    for (int t = 0; t < n; ++t) {
        int u = ts.swap_index(t, k);
        int d = ts.axial_distance(t, k);
        if (u < 0) {
            Rational a = Rational(1) / d;
            for (int i = 0; i < n; ++i) m.at(i, t) *= a;
        } else if (t < u) {
            // Column action of the same seminormal matrix:
            // col_t <- (1/d) col_t + (1 + 1/d) col_u,
            // col_u <- (1 - 1/d) col_t - (1/d) col_u,  d = d(t) < 0.
            Rational a = Rational(1) / d;
            for (int i = 0; i < n; ++i) {
                Rational ct = m.at(i, t), cu = m.at(i, u);
                m.at(i, t) = a * ct + (1 + a) * cu;
                m.at(i, u) = (1 - a) * ct - a * cu;
            }
        }
    }
}

MatrixD rep_adjacent_orthogonal(const Partition& lambda, int k, const Limits& limits) {
    if (k < 1 || k >= lambda.size()) throw DomainError("rep_adjacent: k out of range");
    auto ts = tableaux_checked(lambda, Flavor::orthogonal, limits);
    MatrixD m = MatrixD::identity(ts->count());
    apply_left(m, *ts, k);
    return m;
}

MatrixQ rep_adjacent_seminormal(const Partition& lambda, int k, const Limits& limits) {
    if (k < 1 || k >= lambda.size()) throw DomainError("rep_adjacent: k out of range");
    auto ts = tableaux_checked(lambda, Flavor::seminormal, limits);
    MatrixQ m = MatrixQ::identity(ts->count());
    apply_left(m, *ts, k);
    return m;
}

namespace {

template <typename M>
M rep_matrix_impl(const Partition& lambda, const Permutation& sigma, Flavor flavor,
                  const Limits& limits) {
    check_degree(lambda, sigma);
    auto ts = tableaux_checked(lambda, flavor, limits);
    M m = M::identity(ts->count());
    auto word = sigma.reduced_word();
    // pi(sigma) = pi(s_{w0}) pi(s_{w1}) ... : apply right to left.
    for (auto it = word.rbegin(); it != word.rend(); ++it) apply_left(m, *ts, *it);
    return m;
}

} // namespace

MatrixD rep_matrix_orthogonal(const Partition& lambda, const Permutation& sigma,
                              const Limits& limits) {
    return rep_matrix_impl<MatrixD>(lambda, sigma, Flavor::orthogonal, limits);
}

MatrixQ rep_matrix_seminormal(const Partition& lambda, const Permutation& sigma,
                              const Limits& limits) {
    return rep_matrix_impl<MatrixQ>(lambda, sigma, Flavor::seminormal, limits);
}

int prefix_count(const Rational& u, int dim) {
    if (u < 0 || u > 1) throw DomainError("prefix fraction out of [0,1]");
    BigInt num = numerator(u) * dim;
    return static_cast<int>(BigInt(num / denominator(u)).convert_to<long>());
}

int prefix_count(double u, int dim) {
    if (u < 0.0 || u > 1.0) throw DomainError("prefix fraction out of [0,1]");
    return static_cast<int>(std::floor(u * dim + 1e-9));
}

Rational partial_trace(const Partition& lambda, const Permutation& sigma, const Rational& u) {
    return partial_trace(rep_matrix_seminormal(lambda, sigma), u);
}

double partial_trace_orthogonal(const Partition& lambda, const Permutation& sigma, double u) {
    return partial_trace(rep_matrix_orthogonal(lambda, sigma), u);
}

Rational partial_sum(const Partition& lambda, const Permutation& sigma, const Rational& u,
                     const Rational& v) {
    return partial_sum(rep_matrix_seminormal(lambda, sigma), u, v);
}

double partial_sum_orthogonal(const Partition& lambda, const Permutation& sigma, double u,
                              double v) {
    return partial_sum(rep_matrix_orthogonal(lambda, sigma), u, v);
}

Rational total_sum(const Partition& lambda, const Permutation& sigma) {
    return total_sum(rep_matrix_seminormal(lambda, sigma));
}

double total_sum_orthogonal(const Partition& lambda, const Permutation& sigma) {
    return total_sum(rep_matrix_orthogonal(lambda, sigma));
}

namespace {

struct CotransitionSplit {
    int jhat;
    Rational below;      // sum_{j < jhat} dim mu_j / dim lambda
    Rational at;         // dim mu_jhat / dim lambda
    Rational u_bar;      // (u - below) / at
    std::vector<Partition> removed;
};

CotransitionSplit split_at(const Partition& lambda, const Rational& u) {
    CornerData cd = corners(lambda);
    BigInt dl = dimension(lambda);
    CotransitionSplit s;
    s.removed = cd.removed;
    std::vector<Rational> w;
    for (const auto& mu : cd.removed) w.emplace_back(dimension(mu), dl);
    Rational cum = 0;
    s.jhat = static_cast<int>(w.size()) - 1;
    for (size_t j = 0; j < w.size(); ++j) {
        if (cum + w[j] > u) { s.jhat = static_cast<int>(j); break; }
        cum += w[j];
    }
    s.below = 0;
    for (int j = 0; j < s.jhat; ++j) s.below += w[j];
    s.at = w[s.jhat];
    s.u_bar = (u - s.below) / s.at;
    return s;
}

} // namespace

Decomposition<Rational> decompose_partial_trace(const Partition& lambda, const Permutation& sigma,
                                                const Rational& u) {
    auto sup = sigma.support();
    if (!sup.empty() && sup.back() >= lambda.size())
        throw DomainError("decompose_partial_trace needs sigma in S_{n-1}");
    CotransitionSplit s = split_at(lambda, u);
    Decomposition<Rational> d;
    d.corner_index = s.jhat;
    d.residual_u = s.u_bar;
    BigInt dl = dimension(lambda);
    d.main_term = 0;
    for (int j = 0; j < s.jhat; ++j)
        d.main_term += Rational(dimension(s.removed[j]), dl) *
                       normalized_character(s.removed[j], sigma.cycle_type());
    d.remainder = s.at * partial_trace(s.removed[s.jhat], sigma, s.u_bar);
    return d;
}

Decomposition<Rational> decompose_partial_sum(const Partition& lambda, const Permutation& sigma,
                                              const Rational& u) {
    auto sup = sigma.support();
    if (!sup.empty() && sup.back() >= lambda.size())
        throw DomainError("decompose_partial_sum needs sigma in S_{n-1}");
    CotransitionSplit s = split_at(lambda, u);
    Decomposition<Rational> d;
    d.corner_index = s.jhat;
    d.residual_u = s.u_bar;
    BigInt dl = dimension(lambda);
    d.main_term = 0;
    for (int j = 0; j < s.jhat; ++j)
        d.main_term += Rational(dimension(s.removed[j]), dl) * total_sum(s.removed[j], sigma);
    d.remainder = s.at * partial_sum(s.removed[s.jhat], sigma, s.u_bar, s.u_bar);
    return d;
}

std::pair<double, double> m_and_v(const Permutation& sigma, int r) {
    if (r > 6) throw LimitError("m_and_v: r <= 6");
    auto sup = sigma.support();
    if (!sup.empty() && sup.back() > r) throw DomainError("m_and_v: sigma not in S_r");
    // Exact seminormal total sums; the values are rationals.
    Rational m = 0, v = 0;
    std::vector<int> two_type{2};
    for (int i = 0; i < r - 2; ++i) two_type.push_back(1);
    for (const auto& nu : enumerate_partitions(r)) {
        Rational ts = total_sum(nu, sigma);
        Rational weight(dimension(nu) * dimension(nu), factorial(r));
        m += weight * ts;
        if (r >= 2)
            v += weight * Rational(character(nu, Partition(two_type)), dimension(nu)) * ts;
    }
    v *= Rational(binomial(r, 2));
    return {to_double(m), to_double(v)};
}

bool entry_bound_check(const Partition& lambda, const Permutation& sigma, const Limits& limits) {
    MatrixD m = rep_matrix_orthogonal(lambda, sigma, limits);
    double bound = std::pow(2.0, static_cast<double>(sigma.reduced_word().size()));
    auto sup = sigma.support();
    int r = sup.empty() ? 1 : sup.back();
    double band = to_double(factorial(r));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            double e = m.at(i, j);
            if (std::abs(e) > bound + 1e-9) return false;
            if (std::abs(i - j) > band && e != 0.0) return false;
        }
    return true;
}

} // namespace reprlab
