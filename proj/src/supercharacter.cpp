#include "supercharacter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace reprlab {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::q_power(int e, BigInt scale) {
    QPoly p;
    if (scale == 0) return p;
    p.c_.assign(e + 1, BigInt(0));
    p.c_[e] = std::move(scale);
    return p;
}

QPoly QPoly::q_minus_one() {
    QPoly p;
    p.c_ = {BigInt(-1), BigInt(1)};
    return p;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

QPoly QPoly::divide_exact(const QPoly& o) const {
    if (o.is_zero()) throw DomainError("QPoly division by zero");
    QPoly rem = *this, quot;
    if (rem.is_zero()) return quot;
    quot.c_.assign(c_.size(), BigInt(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        int shift = rem.degree() - o.degree();
        BigInt lead = rem.c_.back() / o.c_.back();
        if (lead * o.c_.back() != rem.c_.back())
            throw DomainError("QPoly division is not exact");
        quot.c_[shift] += lead;
        for (size_t i = 0; i < o.c_.size(); ++i) rem.c_[shift + i] -= lead * o.c_[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw DomainError("QPoly division has a remainder");
    quot.trim();
    return quot;
}

BigInt QPoly::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const BigInt& c = c_[e];
        if (c == 0) continue;
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) os << a.str();
        if (e > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

void combo_add(QPolyCombo& combo, const SetPartition& pi, const QPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = combo.emplace(pi, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) combo.erase(it);
    }
}

void combo_add_scaled(QPolyCombo& dst, const QPolyCombo& src, const QPoly& scale) {
    for (const auto& [pi, c] : src) combo_add(dst, pi, c * scale);
}

SetPartition without_arc(const SetPartition& pi, int i, int j) {
    auto arcs = pi.arcs();
    arcs.erase(std::remove(arcs.begin(), arcs.end(), std::make_pair(i, j)), arcs.end());
    return SetPartition::from_arcs(pi.n(), arcs);
}

SetPartition with_arc(const SetPartition& pi, int i, int j) {
    auto arcs = pi.arcs();
    arcs.emplace_back(i, j);
    return SetPartition::from_arcs(pi.n(), arcs);
}

} // namespace

QPolyCombo star_product(const SetPartition& pi, int i, int k) {
    if (i > pi.n() || k > pi.n() || i < 1 || k < 1)
        throw DomainError("star_product: indices must lie in [n]");
    QPolyCombo out;
    if (i == k) {
        combo_add(out, pi, QPoly(1));
        return out;
    }
    int l = pi.arc_from(i);
    if (l > k) {
        combo_add_scaled(out, star_product(pi, i + 1, k), QPoly::q_power(1));
        return out;
    }
    if (l == k) {
        return star_product(without_arc(pi, i, k), i + 1, k);
    }
    if (l != 0) { // l < k: move the arc head from l to k, recurse at {l}
        out = star_product(pi, i + 1, k);
        SetPartition moved = with_arc(without_arc(pi, i, l), i, k);
        combo_add_scaled(out, star_product(moved, i + 1, l), QPoly::q_minus_one());
        return out;
    }
    out = star_product(pi, i + 1, k);
    combo_add(out, with_arc(pi, i, k), QPoly(1));
    return out;
}

QPolyCombo superinduce(const SetPartition& pi) {
    int n = pi.n();
    auto blocks = pi.blocks();
    blocks.push_back({n + 1});
    SetPartition extended(n + 1, std::move(blocks));
    return star_product(extended, 1, n + 1);
}

QPoly edge_multiplicity(const SetPartition& pi, const SetPartition& sigma) {
    QPolyCombo ind = superinduce(pi);
    auto it = ind.find(sigma);
    if (it == ind.end()) return QPoly();
    ArcStatistics sp = arc_statistics(pi), ss = arc_statistics(sigma);
    QPoly num = it->second;
    for (long long t = 0; t < ss.d; ++t) num = num * QPoly::q_minus_one();
    num = num * QPoly::q_power(static_cast<int>(ss.crs));
    QPoly den(1);
    for (long long t = 0; t < sp.d; ++t) den = den * QPoly::q_minus_one();
    den = den * QPoly::q_power(static_cast<int>(sp.crs));
    return num.divide_exact(den);
}

BigInt supercharacter_value(const SetPartition& pi, const SetPartition& sigma, int q) {
    if (pi.n() != sigma.n()) throw DomainError("supercharacter_value: sizes differ");
    RegularSingular rs = regular_singular(pi);
    for (auto [i, j] : sigma.arcs()) {
        bool regular = std::find(rs.regular.begin(), rs.regular.end(), std::make_pair(i, j)) !=
                       rs.regular.end();
        if (!regular) return 0;
    }
    ArcStatistics st = arc_statistics(pi);
    long long common = 0;
    for (auto [i, j] : sigma.arcs())
        if (pi.has_arc(i, j)) ++common;
    long long nst = nestings_of_in(sigma, pi);
    BigInt qb(q);
    BigInt value = 1;
    for (long long t = 0; t < st.dim - st.d - nst; ++t) value *= qb;
    for (long long t = 0; t < st.d - common; ++t) value *= (qb - 1);
    if (common % 2 == 1) value = -value;
    return value;
}

QPoly supercharacter_value_poly(const SetPartition& pi, const SetPartition& sigma) {
    if (pi.n() != sigma.n()) throw DomainError("supercharacter_value: sizes differ");
    RegularSingular rs = regular_singular(pi);
    for (auto [i, j] : sigma.arcs()) {
        bool regular = std::find(rs.regular.begin(), rs.regular.end(), std::make_pair(i, j)) !=
                       rs.regular.end();
        if (!regular) return QPoly();
    }
    ArcStatistics st = arc_statistics(pi);
    long long common = 0;
    for (auto [i, j] : sigma.arcs())
        if (pi.has_arc(i, j)) ++common;
    long long nst = nestings_of_in(sigma, pi);
    QPoly value = QPoly::q_power(static_cast<int>(st.dim - st.d - nst),
                                 common % 2 == 1 ? BigInt(-1) : BigInt(1));
    for (long long t = 0; t < st.d - common; ++t) value = value * QPoly::q_minus_one();
    return value;
}

BigInt supercharacter_degree(const SetPartition& pi, int q) {
    ArcStatistics st = arc_statistics(pi);
    BigInt value = 1;
    for (long long t = 0; t < st.dim - st.d; ++t) value *= q;
    for (long long t = 0; t < st.d; ++t) value *= (q - 1);
    return value;
}

QPoly supercharacter_degree_poly(const SetPartition& pi) {
    ArcStatistics st = arc_statistics(pi);
    QPoly value = QPoly::q_power(static_cast<int>(st.dim - st.d));
    for (long long t = 0; t < st.d; ++t) value = value * QPoly::q_minus_one();
    return value;
}

BigInt supercharacter_norm(const SetPartition& pi, int q) {
    ArcStatistics st = arc_statistics(pi);
    BigInt value = 1;
    for (long long t = 0; t < st.crs; ++t) value *= q;
    for (long long t = 0; t < st.d; ++t) value *= (q - 1);
    return value;
}

Rational superplancherel(const SetPartition& pi, int q) {
    ArcStatistics st = arc_statistics(pi);
    long long n = pi.n();
    BigInt num = 1, den = 1;
    for (long long t = 0; t < 2 * (st.dim - st.d); ++t) num *= q;
    for (long long t = 0; t < st.d; ++t) num *= (q - 1);
    for (long long t = 0; t < n * (n - 1) / 2 + st.crs; ++t) den *= q;
    return Rational(num, den);
}

CellFunctionals cell_functionals(const SetPartition& pi) {
    long long n = pi.n();
    const auto& arcs = pi.arcs();
    CellFunctionals f;
    // I1: each arc cell contributes mean(y - x) / n = (j - i) / n^2.
    f.i1 = 0;
    for (auto [i, j] : arcs) f.i1 += Rational(j - i);
    f.i1 /= Rational(BigInt(n) * n);
    // I2: ordered cell pairs through the exact integral table.
    BigInt quarters = 0; // count in units of 1/(4 n^4), scaled by n^2 below
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = 0; b < arcs.size(); ++b) {
            auto [i, j] = arcs[a];
            auto [k, l] = arcs[b];
            if (a == b) quarters += 1;
            else if (i < k && k < j && j < l) quarters += 4;
            else if (j == k) quarters += 2;
        }
    f.i2 = Rational(quarters, 4 * BigInt(n) * n);
    f.entropy = Rational(1, 2) - 2 * f.i1 + f.i2;
    return f;
}

double corner_mass(const SetPartition& pi, double a, double b) {
    int n = pi.n();
    double total = 0.0;
    for (auto [i, j] : pi.arcs()) {
        double x0 = (i - 1) / static_cast<double>(n), x1 = i / static_cast<double>(n);
        double y0 = (j - 1) / static_cast<double>(n), y1 = j / static_cast<double>(n);
        double fx = std::clamp((a - x0) / (x1 - x0), 0.0, 1.0);
        double fy = std::clamp((y1 - (1.0 - b)) / (y1 - y0), 0.0, 1.0);
        total += fx * fy;
    }
    return total / n;
}

double omega_discrepancy(const SetPartition& pi, int grid) {
    if (grid < 2) throw DomainError("omega_discrepancy: grid >= 2");
    double worst = 0.0;
    for (int s = 0; s <= grid; ++s)
        for (int t = 0; t <= grid; ++t) {
            double a = 0.5 * s / grid, b = 0.5 * t / grid;
            worst = std::max(worst, std::abs(corner_mass(pi, a, b) - std::min(a, b)));
        }
    return worst;
}

} // namespace reprlab
