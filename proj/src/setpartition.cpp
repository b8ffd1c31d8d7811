#include "setpartition.hpp"

#include <algorithm>
#include <sstream>

namespace reprlab {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(n, false);
    for (auto& b : blocks_) {
        if (b.empty()) throw DomainError("set partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n || seen[v - 1]) throw DomainError("set partition must cover [n] once");
            seen[v - 1] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw DomainError("set partition must cover [n]");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    finish();
}

void SetPartition::finish() {
    next_.assign(n_, 0);
    prev_.assign(n_, 0);
    arcs_.clear();
    for (const auto& b : blocks_)
        for (size_t i = 0; i + 1 < b.size(); ++i) {
            arcs_.emplace_back(b[i], b[i + 1]);
            next_[b[i] - 1] = b[i + 1];
            prev_[b[i + 1] - 1] = b[i];
        }
    std::sort(arcs_.begin(), arcs_.end());
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> to(n + 1, 0), from(n + 1, 0);
    for (auto [i, j] : arcs) {
        if (i < 1 || j <= i || j > n) throw DomainError("bad arc");
        if (to[i] || from[j]) throw DomainError("arc set has a repeated endpoint role");
        to[i] = j;
        from[j] = i;
    }
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(n + 1, false);
    for (int s = 1; s <= n; ++s) {
        if (seen[s] || from[s]) continue;
        std::vector<int> b;
        for (int v = s; v; v = to[v]) {
            b.push_back(v);
            seen[v] = true;
        }
        blocks.push_back(std::move(b));
    }
    return SetPartition(n, std::move(blocks));
}

bool SetPartition::has_arc(int i, int j) const { return i >= 1 && i <= n_ && next_[i - 1] == j; }

std::string SetPartition::to_string() const {
    std::ostringstream os;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << '|';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) os << ',';
            os << blocks_[b][i];
        }
    }
    return os.str();
}

SetPartition SetPartition::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    int n = 0;
    std::istringstream is(text);
    std::string btok;
    while (std::getline(is, btok, '|')) {
        std::istringstream bs(btok);
        std::string tok;
        std::vector<int> b;
        while (std::getline(bs, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            b.push_back(v);
            n = std::max(n, v);
        }
        if (!b.empty()) blocks.push_back(std::move(b));
    }
    return SetPartition(n, std::move(blocks));
}

ArcStatistics arc_statistics(const SetPartition& pi) {
    ArcStatistics s;
    const auto& arcs = pi.arcs();
    s.d = static_cast<long long>(arcs.size());
    for (auto [i, j] : arcs) s.dim += j - i;
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = 0; b < arcs.size(); ++b) {
            if (a == b) continue;
            auto [i, j] = arcs[a];
            auto [k, l] = arcs[b];
            if (i < k && k < j && j < l) s.crs++;
            if (i < k && l < j) s.nst++;
            if (j == k) s.adjacent++;
        }
    return s;
}

RegularSingular regular_singular(const SetPartition& pi) {
    RegularSingular out;
    for (int i = 1; i <= pi.n(); ++i)
        for (int j = i + 1; j <= pi.n(); ++j) {
            bool singular = false;
            for (int k = 1; k < i && !singular; ++k)
                if (pi.has_arc(k, j)) singular = true;
            for (int l = j + 1; l <= pi.n() && !singular; ++l)
                if (pi.has_arc(i, l)) singular = true;
            (singular ? out.singular : out.regular).emplace_back(i, j);
        }
    return out;
}

long long nestings_of_in(const SetPartition& sigma, const SetPartition& pi) {
    long long total = 0;
    for (auto [k, l] : sigma.arcs())
        for (auto [i, j] : pi.arcs())
            if (i < k && l < j) total++;
    return total;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(n, blocks);
            return;
        }
        size_t existing = blocks.size(); // deeper calls grow the vector
        for (size_t i = 0; i < existing; ++i) {
            blocks[i].push_back(v);
            self(self, v + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({v});
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

} // namespace reprlab
