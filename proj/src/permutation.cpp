#include "permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reprlab {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw DomainError("not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::adjacent(int k, int n) {
    if (k < 1 || k + 1 > n) throw DomainError("adjacent transposition out of range");
    Permutation p(n);
    std::swap(p.img_[k - 1], p.img_[k]);
    return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int min_n) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size() || text == "()" || text == "id") {
        return Permutation(std::max(min_n, 0));
    }
    int n = min_n;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw DomainError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) {
                if (i < text.size() && text[i] == ')' && cyc.empty()) break;
                throw DomainError("expected integer in cycle notation: " + text);
            }
            int v = std::stoi(text.substr(start, i - start));
            if (v < 1) throw DomainError("cycle entries must be >= 1");
            cyc.push_back(v);
            n = std::max(n, v);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
        if (i == text.size() || text[i] != ')') throw DomainError("expected ')' in cycle notation: " + text);
        ++i;
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& cyc : cycles) {
        std::vector<bool> used(n, false);
        for (size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (used[from - 1]) throw DomainError("repeated element in cycle");
            used[from - 1] = true;
            img[from - 1] = to;
        }
    }
    // Disjointness check: composing disjoint cycles never remaps a point twice.
    std::vector<bool> moved(n, false);
    for (const auto& cyc : cycles)
        for (int v : cyc) {
            if (moved[v - 1]) throw DomainError("cycles must be disjoint");
            moved[v - 1] = true;
        }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
    int n = std::max(degree(), o.degree());
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) {
        int y = x <= o.degree() ? o.apply(x) : x;
        img[x - 1] = y <= degree() ? apply(y) : y;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int x = 1; x <= degree(); ++x) img[apply(x) - 1] = x;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (apply(x) != x) return false;
    return true;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[x - 1]) continue;
        int len = 0, y = x;
        do {
            seen[y - 1] = true;
            y = apply(y);
            ++len;
        } while (y != x);
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<int> Permutation::support() const {
    std::vector<int> s;
    for (int x = 1; x <= degree(); ++x)
        if (apply(x) != x) s.push_back(x);
    return s;
}

int Permutation::weight() const { return static_cast<int>(support().size()); }

std::vector<int> Permutation::reduced_word() const {
    // Bubble sort the one-line word to the identity by right multiplication;
    // sigma = s_{i_m} ... s_{i_1} for the recorded swaps i_1, ..., i_m.
    std::vector<int> w = img_;
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                swaps.push_back(i + 1);
                changed = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::string Permutation::to_cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (int x = 1; x <= degree(); ++x) {
        if (seen[x - 1] || apply(x) == x) { seen[x - 1] = true; continue; }
        os << '(';
        int y = x;
        bool first = true;
        do {
            if (!first) os << ',';
            os << y;
            first = false;
            seen[y - 1] = true;
            y = apply(y);
        } while (y != x);
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation representative_of_type(const Partition& rho) {
    std::vector<int> img(rho.size());
    int start = 1;
    for (int len : rho.parts()) {
        for (int j = 0; j < len; ++j) img[start - 1 + j] = start + (j + 1) % len;
        start += len;
    }
    return Permutation(std::move(img));
}

} // namespace reprlab
