#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace reprlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "[]" || text == "0") return Partition{};
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw DomainError("bad partition literal: " + text);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n, const Limits& limits) {
    if (n < 0) throw DomainError("n must be nonnegative");
    if (n > limits.partition_cap) throw LimitError("enumerate_partitions: n exceeds cap");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Reverse-lexicographic descent: largest first part first.
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const auto& p = lambda.parts();
    Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> h(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        h[i].resize(p[i]);
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - (j + 1);
            int leg = conj.part(j) - (static_cast<int>(i) + 1);
            h[i][j] = arm + leg + 1;
        }
    }
    return h;
}

BigInt hook_product(const Partition& lambda) {
    BigInt prod = 1;
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) prod *= h;
    return prod;
}

BigInt dimension(const Partition& lambda) {
    return factorial(lambda.size()) / hook_product(lambda);
}

CornerData corners(const Partition& lambda) {
    CornerData cd;
    const auto& p = lambda.parts();
    int l = lambda.length();
    // Row i (0-based) has a removable box iff p[i] > p[i+1]; its content is
    // p[i]-1-i. Addable positions: row 0 at content p[0]; row i (1<=i<=l)
    // where p[i] < p[i-1], content p[i]-i (below the last row: content -l).
    for (int i = 0; i <= l; ++i) {
        bool addable = (i == 0) || (i < l && p[i] < p[i - 1]) || (i == l);
        if (i < l && i > 0 && p[i] == p[i - 1]) addable = false;
        if (!addable) continue;
        int content = lambda.part(i) - i;
        std::vector<int> np = p;
        if (i < l) np[i]++;
        else np.push_back(1);
        cd.inner.push_back(content);
        cd.added.emplace_back(std::move(np));
    }
    for (int i = 0; i < l; ++i) {
        bool removable = (i + 1 == l) || (p[i] > p[i + 1]);
        if (!removable) continue;
        int content = p[i] - 1 - i;
        std::vector<int> np = p;
        np[i]--;
        if (np[i] == 0) np.erase(np.begin() + i);
        cd.outer.push_back(content);
        cd.removed.emplace_back(std::move(np));
    }
    // Store in increasing content order (x_1 < y_1 < x_2 < ...).
    std::reverse(cd.inner.begin(), cd.inner.end());
    std::reverse(cd.added.begin(), cd.added.end());
    std::reverse(cd.outer.begin(), cd.outer.end());
    std::reverse(cd.removed.begin(), cd.removed.end());
    return cd;
}

std::vector<int> contents_multiset(const Partition& lambda) {
    std::vector<int> out;
    out.reserve(lambda.size());
    const auto& p = lambda.parts();
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) out.push_back(j - static_cast<int>(i));
    return out;
}

BigInt skew_dimension_recursive(const Partition& lambda, const Partition& nu) {
    if (nu.size() > lambda.size()) return 0;
    if (nu.length() > lambda.length()) return 0;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i) > lambda.part(i)) return 0;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    static std::shared_mutex mx;
    auto key = std::make_pair(lambda.parts(), nu.parts());
    {
        std::shared_lock lk(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt total;
    if (lambda.size() == nu.size()) {
        total = (lambda == nu) ? 1 : 0;
    } else {
        total = 0;
        for (const auto& mu : corners(lambda).removed)
            total += skew_dimension_recursive(mu, nu);
    }
    std::unique_lock lk(mx);
    memo.emplace(std::move(key), total);
    return total;
}

std::string StandardTableau::to_string() const {
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].resize(shape.part(i));
    for (size_t e = 0; e < pos.size(); ++e) rows[pos[e].first][pos[e].second] = static_cast<int>(e) + 1;
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << '/';
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ' ';
            os << rows[i][j];
        }
    }
    return os.str();
}

namespace {

// Encoding of a tableau of a fixed shape: the row of each entry.
std::vector<int8_t> row_word(const StandardTableau& t) {
    std::vector<int8_t> w(t.pos.size());
    for (size_t e = 0; e < t.pos.size(); ++e) w[e] = static_cast<int8_t>(t.pos[e].first);
    return w;
}

struct RowWordHash {
    size_t operator()(const std::vector<int8_t>& w) const {
        size_t h = 1469598103934665603ull;
        for (int8_t c : w) { h ^= static_cast<size_t>(c) + 1; h *= 1099511628211ull; }
        return h;
    }
};

} // namespace

void TableauSet::build(const Limits& limits) {
    int n = shape_.size();
    if (n > limits.syt_cap) throw LimitError("SYT enumeration cap exceeded");
    // Recursive construction in last letter order. Removable corners in
    // increasing content order put n in lower rows first.
    if (n == 0) {
        tableaux_.push_back(StandardTableau{shape_, {}});
    } else {
        CornerData cd = corners(shape_);
        for (size_t j = 0; j < cd.removed.size(); ++j) {
            auto sub = TableauSet::of(cd.removed[j], limits);
            block_begin_.push_back(static_cast<int>(tableaux_.size()));
            // The removed corner has content outer[j] = col - row; recover its
            // position from the shape difference.
            int row = -1, col = -1;
            for (int i = 0; i < shape_.length(); ++i) {
                if (cd.removed[j].part(i) != shape_.part(i)) { row = i; col = shape_.part(i) - 1; break; }
            }
            for (int t = 0; t < sub->count(); ++t) {
                StandardTableau T;
                T.shape = shape_;
                T.pos = sub->tableau(t).pos;
                T.pos.emplace_back(row, col);
                tableaux_.push_back(std::move(T));
            }
        }
    }
    block_begin_.push_back(static_cast<int>(tableaux_.size()));

    std::unordered_map<std::vector<int8_t>, int, RowWordHash> index;
    index.reserve(tableaux_.size() * 2);
    for (size_t t = 0; t < tableaux_.size(); ++t) index.emplace(row_word(tableaux_[t]), static_cast<int>(t));

    swaps_.assign(std::max(0, n - 1), std::vector<int>(tableaux_.size(), -1));
    for (size_t t = 0; t < tableaux_.size(); ++t) {
        for (int k = 1; k < n; ++k) {
            auto [r1, c1] = tableaux_[t].pos[k - 1];
            auto [r2, c2] = tableaux_[t].pos[k];
            if (r1 == r2 || c1 == c2) continue;
            auto w = row_word(tableaux_[t]);
            std::swap(w[k - 1], w[k]);
            auto it = index.find(w);
            if (it != index.end()) swaps_[k - 1][t] = it->second;
        }
    }
}

std::shared_ptr<const TableauSet> TableauSet::of(const Partition& shape, const Limits& limits) {
    static std::map<std::vector<int>, std::shared_ptr<const TableauSet>> cache;
    static std::shared_mutex mx;
    {
        std::shared_lock lk(mx);
        auto it = cache.find(shape.parts());
        if (it != cache.end()) return it->second;
    }
    auto ts = std::make_shared<TableauSet>();
    ts->shape_ = shape;
    ts->build(limits);
    std::unique_lock lk(mx);
    auto [it, inserted] = cache.emplace(shape.parts(), std::move(ts));
    return it->second;
}

} // namespace reprlab
