#include "strictpartition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace reprlab {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("strict partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw DomainError("strict partition parts must strictly decrease");
        n_ += parts_[i];
    }
}

std::string StrictPartition::to_string() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

StrictPartition StrictPartition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "[]" || text == "0") return StrictPartition{};
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
    return StrictPartition(std::move(parts));
}

MultiRect to_multirect(const StrictPartition& lambda) {
    MultiRect mr;
    const auto& p = lambda.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j + 1 < p.size() && p[j + 1] == p[j] - 1) ++j;
        mr.q.push_back(p[i]);
        mr.p.push_back(static_cast<int>(j - i + 1));
        i = j + 1;
    }
    return mr;
}

StrictPartition from_multirect(const MultiRect& mr) {
    std::vector<int> parts;
    for (size_t i = 0; i < mr.q.size(); ++i)
        for (int t = 0; t < mr.p[i]; ++t) parts.push_back(mr.q[i] - t);
    return StrictPartition(std::move(parts));
}

DoubleDiagram double_diagram(const StrictPartition& lambda) {
    MultiRect mr = to_multirect(lambda);
    DoubleDiagram dd;
    dd.size = lambda.size();
    int m = mr.blocks();
    dd.x.emplace_back(0);
    for (int i = 1; i <= m; ++i) {
        int b = m - i; // block index, from innermost staircase out
        dd.y.push_back(Rational(2 * (mr.q[b] - mr.p[b]) + 1, 2));
        dd.x.push_back(Rational(2 * mr.q[b] + 1, 2));
    }
    return dd;
}

double DoubleDiagram::value(double t) const {
    // Piecewise linear, slopes +-1, determined by minima at +-x_i (value
    // |x_i|... no: value of D at its extrema follows from the alternating
    // walk); reconstruct by walking from the outside in.
    double a = std::abs(t);
    double xm = to_double(x.back());
    if (a >= xm) return a;
    // Between the extrema the function alternates slope; value at x_m is x_m,
    // walk down: at abscissa s in [y_i, x_i] the function descends from
    // (x_i, v_i) with slope +1 moving right. Compute value at each extremum.
    int m = static_cast<int>(y.size());
    std::vector<double> xs(m + 1), vs(m + 1); // values at x_0..x_m
    std::vector<double> ys(m), vy(m);
    for (int i = 0; i <= m; ++i) xs[i] = to_double(x[i]);
    for (int i = 0; i < m; ++i) ys[i] = to_double(y[i]);
    vs[m] = xs[m];
    for (int i = m - 1; i >= 0; --i) {
        vy[i] = vs[i + 1] + (xs[i + 1] - ys[i]); // move left from x_{i+1}, slope -1
        vs[i] = vy[i] - (ys[i] - xs[i]);
    }
    // Locate a within [x_i, y_{i+1}] or [y_{i+1}, x_{i+1}].
    for (int i = 0; i < m; ++i) {
        if (a <= ys[i]) return vs[i] + (a - xs[i]);
        if (a <= xs[i + 1]) return vy[i] - (a - ys[i]);
    }
    return a;
}

std::vector<StrictPartition> enumerate_strict(int n, const Limits& limits) {
    if (n < 0) throw DomainError("n must be nonnegative");
    if (n > limits.strict_cap) throw LimitError("enumerate_strict: n exceeds cap");
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long count_odd_partitions(int n) {
    std::vector<long long> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
    return ways[n];
}

BigInt g_dimension_product(const StrictPartition& lambda) {
    Rational g = Rational(factorial(lambda.size()));
    for (int p : lambda.parts()) g /= Rational(factorial(p));
    int l = lambda.length();
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            g *= Rational(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
    if (denominator(g) != 1) throw DomainError("g_dimension_product: non-integer value");
    return numerator(g);
}

std::vector<std::vector<int>> shifted_hooks(const StrictPartition& lambda) {
    // Row i (0-based) occupies columns i .. i + lambda_i - 1 of the shifted
    // diagram. Hook of (i, j): arm + leg + 1 + lambda_{j+1} (the (j+1)-th part,
    // 0 when absent; j is the 0-based column, so that part is lambda.part(j+1-1+1)).
    int l = lambda.length();
    std::vector<std::vector<int>> h(l);
    auto in_diagram = [&](int r, int c) {
        return r >= 0 && r < l && c >= r && c <= r + lambda.part(r) - 1;
    };
    for (int i = 0; i < l; ++i) {
        h[i].resize(lambda.part(i));
        for (int t = 0; t < lambda.part(i); ++t) {
            int j = i + t; // absolute column
            int arm = lambda.part(i) - 1 - t;
            int leg = 0;
            for (int r = i + 1; r < l; ++r)
                if (in_diagram(r, j)) ++leg;
            int tail = lambda.part(j + 1); // part below the column's diagonal foot
            h[i][t] = arm + leg + 1 + tail;
        }
    }
    return h;
}

BigInt g_dimension_hooks(const StrictPartition& lambda) {
    BigInt prod = 1;
    for (const auto& row : shifted_hooks(lambda))
        for (int v : row) prod *= v;
    return factorial(lambda.size()) / prod;
}

Rational strict_plancherel(const StrictPartition& lambda) {
    BigInt g = g_dimension_product(lambda);
    BigInt num = g * g;
    int e = lambda.size() - lambda.length();
    for (int i = 0; i < e; ++i) num *= 2;
    return Rational(num, factorial(lambda.size()));
}

std::vector<StrictPartition> strict_successors(const StrictPartition& lambda) {
    std::vector<StrictPartition> out;
    int l = lambda.length();
    for (int i = 0; i < l; ++i) {
        if (i == 0 || lambda.part(i) + 1 < lambda.part(i - 1)) {
            auto parts = lambda.parts();
            parts[i]++;
            out.emplace_back(std::move(parts));
        }
    }
    if (l == 0 || lambda.part(l - 1) > 1) {
        auto parts = lambda.parts();
        parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

Rational strict_growth_weight(const StrictPartition& lambda, const StrictPartition& grown) {
    if (grown.size() != lambda.size() + 1)
        throw DomainError("strict_growth_weight: sizes must differ by one");
    Rational ratio(g_dimension_product(grown), g_dimension_product(lambda));
    int shift = lambda.length() - grown.length() + 1; // 1 if same length, 0 if new row
    Rational pw = shift >= 0 ? Rational(BigInt(1) << shift) : Rational(1, BigInt(1) << (-shift));
    return pw * ratio / (lambda.size() + 1);
}

DiscreteMeasure spin_transition_measure(const StrictPartition& lambda) {
    DoubleDiagram dd = double_diagram(lambda);
    int m = static_cast<int>(dd.y.size());
    DiscreteMeasure out;
    Rational mu0 = 1;
    for (int k = 0; k < m; ++k) mu0 *= (dd.y[k] * dd.y[k]) / (dd.x[k + 1] * dd.x[k + 1]);
    std::vector<Rational> mu(m);
    for (int i = 1; i <= m; ++i) {
        Rational w = 1;
        Rational xi2 = dd.x[i] * dd.x[i];
        for (int k = 0; k < m; ++k) w *= xi2 - dd.y[k] * dd.y[k];
        w /= 2 * xi2;
        for (int k = 1; k <= m; ++k)
            if (k != i) w /= xi2 - dd.x[k] * dd.x[k];
        mu[i - 1] = w;
    }
    for (int i = m; i >= 1; --i) out.atoms.emplace_back(-dd.x[i], mu[i - 1]);
    out.atoms.emplace_back(Rational(0), mu0);
    for (int i = 1; i <= m; ++i) out.atoms.emplace_back(dd.x[i], mu[i - 1]);
    return out;
}

} // namespace reprlab
