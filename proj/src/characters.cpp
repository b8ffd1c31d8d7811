#include "characters.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>

namespace reprlab {

BigInt centralizer_order(const Partition& rho) {
    BigInt z = 1;
    int run = 0, prev = -1;
    for (int p : rho.parts()) {
        z *= p;
        if (p == prev) ++run;
        else run = 1;
        z *= run;
        prev = p;
    }
    return z;
}

namespace {

// Beta set of lambda padded to length l: {lambda_i + l - 1 - i}, 0-based i.
std::vector<int> beta_set(const Partition& lambda, int l) {
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda.part(i) + l - 1 - i;
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    std::vector<int> parts;
    int l = static_cast<int>(beta.size());
    for (int i = 0; i < l; ++i) {
        int p = beta[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
        else if (p < 0) throw DomainError("invalid beta set");
    }
    return Partition(std::move(parts));
}

BigInt mn(const Partition& lambda, const std::vector<int>& rho, size_t idx);

BigInt mn_uncached(const Partition& lambda, const std::vector<int>& rho, size_t idx) {
    if (idx == rho.size()) return lambda.empty() ? BigInt(1) : throw DomainError("size mismatch");
    int k = rho[idx];
    int l = std::max(lambda.length(), 1);
    std::vector<int> beta = beta_set(lambda, l);
    std::vector<bool> present(beta.empty() ? 1 : *std::max_element(beta.begin(), beta.end()) + 1, false);
    for (int b : beta) present[b] = true;
    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b - k < 0 || (b - k < static_cast<int>(present.size()) && present[b - k])) continue;
        int height = 0;
        for (int c : beta)
            if (c > b - k && c < b) ++height;
        std::vector<int> nb = beta;
        nb[i] = b - k;
        BigInt sub = mn(from_beta(std::move(nb)), rho, idx + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

BigInt mn(const Partition& lambda, const std::vector<int>& rho, size_t idx) {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    static std::shared_mutex mx;
    std::vector<int> rest(rho.begin() + idx, rho.end());
    auto key = std::make_pair(lambda.parts(), std::move(rest));
    {
        std::shared_lock lk(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt v = mn_uncached(lambda, rho, idx);
    std::unique_lock lk(mx);
    memo.emplace(std::move(key), v);
    return v;
}

} // namespace

BigInt character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw DomainError("character: |rho| must equal |lambda|");
    // Remove long strips first; trailing 1-strips reduce to a dimension count
    // but the plain recursion is exact and already cheap at these sizes.
    return mn(lambda, rho.parts(), 0);
}

Rational normalized_character(const Partition& lambda, const Partition& rho) {
    int n = lambda.size(), r = rho.size();
    if (r > n) throw DomainError("normalized_character: |rho| > |lambda|");
    std::vector<int> padded = rho.parts();
    for (int i = 0; i < n - r; ++i) padded.push_back(1);
    return Rational(character(lambda, Partition(std::move(padded))), dimension(lambda));
}

Rational p_sharp(const Partition& rho, const Partition& lambda) {
    int n = lambda.size(), r = rho.size();
    if (r > n) return 0;
    return Rational(falling_factorial(BigInt(n), r)) * normalized_character(lambda, rho);
}

BigInt skew_dimension(const Partition& lambda, const Partition& nu) {
    int n = lambda.size(), r = nu.size();
    if (r > n) return 0;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i) > lambda.part(i)) return 0;
    Rational total = 0;
    for (const auto& rho : enumerate_partitions(r)) {
        std::vector<int> padded = rho.parts();
        for (int i = 0; i < n - r; ++i) padded.push_back(1);
        total += Rational(character(nu, rho) * character(lambda, Partition(std::move(padded))),
                          centralizer_order(rho));
    }
    if (denominator(total) != 1) throw DomainError("skew_dimension: non-integer character sum");
    return numerator(total);
}

Rational modified_power_sum_contents(const Partition& lambda, int k) {
    if (k < 1) throw DomainError("modified_power_sum_contents: k >= 1");
    BigInt pk = 0;
    for (int c : contents_multiset(lambda)) {
        BigInt t = 1;
        for (int i = 0; i < k; ++i) t *= c;
        pk += t;
    }
    if (k % 2 == 1) return Rational(pk);
    int m = k / 2;
    Rational correction = Rational(catalan(m), m + 1) *
                          Rational(falling_factorial(BigInt(lambda.size()), m + 1));
    return Rational(pk) - correction;
}

} // namespace reprlab
