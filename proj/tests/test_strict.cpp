#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rng.hpp"
#include "strictpartition.hpp"

#include <map>

using namespace reprlab;

TEST_CASE("strict partition construction and enumeration") {
    CHECK_THROWS_AS(StrictPartition({2, 2}), DomainError);
    CHECK_FALSE(StrictPartition({4, 3, 1}).even_parity()); // n - l = 5, DP-
    CHECK(StrictPartition({3, 1}).even_parity());          // n - l = 2, DP+
    auto d4 = enumerate_strict(4);
    REQUIRE(d4.size() == 2);
    CHECK(d4[0] == StrictPartition({4}));
    CHECK(d4[1] == StrictPartition({3, 1}));
    auto d5 = enumerate_strict(5);
    REQUIRE(d5.size() == 3);
    CHECK(d5[0] == StrictPartition({5}));
    CHECK(d5[1] == StrictPartition({4, 1}));
    CHECK(d5[2] == StrictPartition({3, 2}));
    for (int n = 1; n <= 20; ++n)
        CHECK(static_cast<long long>(enumerate_strict(n).size()) == count_odd_partitions(n));
    CHECK_THROWS_AS(enumerate_strict(61), LimitError);
}

TEST_CASE("multirectangular round trip") {
    StrictPartition lam({7, 6, 3, 2});
    MultiRect mr = to_multirect(lam);
    REQUIRE(mr.blocks() == 2);
    CHECK(mr.q == std::vector<int>{7, 3});
    CHECK(mr.p == std::vector<int>{2, 2});
    CHECK(from_multirect(mr) == lam);
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : enumerate_strict(n)) {
            MultiRect m = to_multirect(l);
            CHECK(from_multirect(m) == l);
            for (int i = 0; i + 1 < m.blocks(); ++i) {
                CHECK(m.q[i + 1] <= m.q[i] - m.p[i]);
                CHECK(m.q[i] >= m.p[i]);
            }
        }
}

TEST_CASE("double diagram extrema") {
    DoubleDiagram dd = double_diagram(StrictPartition({7, 6, 3, 2}));
    REQUIRE(dd.x.size() == 3);
    CHECK(dd.x[0] == 0);
    CHECK(dd.x[1] == Rational(7, 2));
    CHECK(dd.x[2] == Rational(15, 2));
    CHECK(dd.y[0] == Rational(3, 2));
    CHECK(dd.y[1] == Rational(11, 2));
    DoubleDiagram one = double_diagram(StrictPartition({1}));
    CHECK(one.x[1] == Rational(3, 2));
    CHECK(one.y[0] == Rational(1, 2));
    // interlacing 0 < y_1 < x_1 < y_2 < ...
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : enumerate_strict(n)) {
            DoubleDiagram d = double_diagram(l);
            Rational prev = 0;
            for (size_t i = 0; i < d.y.size(); ++i) {
                CHECK(d.y[i] > prev);
                CHECK(d.x[i + 1] > d.y[i]);
                prev = d.x[i + 1];
            }
        }
    // profile heights of the worked diagram
    CHECK(dd.value(0.0) == doctest::Approx(8.0));
    CHECK(dd.value(1.5) == doctest::Approx(9.5));
    CHECK(dd.value(-5.5) == doctest::Approx(9.5));
    CHECK(dd.value(7.5) == doctest::Approx(7.5));
    CHECK(dd.value(10.0) == doctest::Approx(10.0));
}

TEST_CASE("shifted hooks and the two g paths") {
    CHECK(g_dimension_product(StrictPartition({5})) == 1);
    CHECK(g_dimension_product(StrictPartition({2, 1})) == 1);
    auto h21 = shifted_hooks(StrictPartition({2, 1}));
    BigInt prod = 1;
    for (const auto& row : h21)
        for (int v : row) prod *= v;
    CHECK(prod == 6);
    CHECK(shifted_hooks(StrictPartition({1}))[0] == std::vector<int>{1});
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : enumerate_strict(n))
            CHECK(g_dimension_product(l) == g_dimension_hooks(l));
    // (7,6,3,2): product of shifted hooks equals 18!/g
    StrictPartition big({7, 6, 3, 2});
    BigInt hb = 1;
    for (const auto& row : shifted_hooks(big))
        for (int v : row) hb *= v;
    CHECK(hb == factorial(18) / g_dimension_product(big));
    // g counts standard shifted tableaux: branching recursion oracle
    std::map<std::vector<int>, BigInt> memo;
    auto count = [&](auto&& self, const StrictPartition& l) -> BigInt {
        if (l.size() <= 1) return 1;
        auto it = memo.find(l.parts());
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int i = 0; i < l.length(); ++i) {
            auto parts = l.parts();
            parts[i]--;
            if (parts[i] == 0) parts.erase(parts.begin() + i);
            bool ok = true;
            for (size_t t = 0; t + 1 < parts.size(); ++t)
                if (parts[t] <= parts[t + 1]) ok = false;
            if (ok) total += self(self, StrictPartition(parts));
        }
        memo[l.parts()] = total;
        return total;
    };
    for (const auto& l : enumerate_strict(12))
        CHECK(g_dimension_product(l) == count(count, l));
}

TEST_CASE("strict plancherel sums to one") {
    CHECK(strict_plancherel(StrictPartition({1})) == 1);
    CHECK(strict_plancherel(StrictPartition({2, 1})) == Rational(1, 3));
    for (int n = 1; n <= 20; ++n) {
        Rational total = 0;
        for (const auto& l : enumerate_strict(n)) total += strict_plancherel(l);
        CHECK(total == 1);
    }
}

TEST_CASE("growth weights cohere with strict plancherel") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& l : enumerate_strict(n)) {
            Rational total = 0;
            for (const auto& up : strict_successors(l)) total += strict_growth_weight(l, up);
            CHECK(total == 1);
        }
    // marginal exactness: P_{n+1}(Lambda) = sum_lambda P_n(lambda) tr(lambda, Lambda)
    for (int n = 1; n <= 13; ++n) {
        std::map<std::vector<int>, Rational> acc;
        for (const auto& l : enumerate_strict(n))
            for (const auto& up : strict_successors(l))
                acc[up.parts()] += strict_plancherel(l) * strict_growth_weight(l, up);
        for (const auto& up : enumerate_strict(n + 1))
            CHECK(acc[up.parts()] == strict_plancherel(up));
    }
}

TEST_CASE("spin transition measure") {
    DiscreteMeasure one = spin_transition_measure(StrictPartition({1}));
    REQUIRE(one.atoms.size() == 3);
    CHECK(one.atoms[1].first == 0);
    CHECK(one.atoms[1].second == Rational(1, 9));
    CHECK(one.atoms[0].second == Rational(4, 9));
    for (int n = 1; n <= 12; ++n)
        for (const auto& l : enumerate_strict(n)) {
            DiscreteMeasure m = spin_transition_measure(l);
            CHECK(m.total() == 1);
            // symmetry and nonnegativity
            size_t cnt = m.atoms.size();
            for (size_t i = 0; i < cnt; ++i) {
                CHECK(m.atoms[i].second >= 0);
                CHECK(m.atoms[i].first == -m.atoms[cnt - 1 - i].first);
                CHECK(m.atoms[i].second == m.atoms[cnt - 1 - i].second);
            }
        }
    // Cauchy transform at z = 10 for (7,6,3,2):
    // sum mu_i/(z - x_i) = (1/z) prod (z^2-y^2)/(z^2-x^2)
    StrictPartition lam({7, 6, 3, 2});
    DiscreteMeasure m = spin_transition_measure(lam);
    Rational z(10);
    Rational lhs = 0;
    for (const auto& [x, w] : m.atoms) lhs += w / (z - x);
    DoubleDiagram dd = double_diagram(lam);
    Rational rhs = 1 / z;
    for (size_t i = 0; i < dd.y.size(); ++i)
        rhs *= (z * z - dd.y[i] * dd.y[i]) / (z * z - dd.x[i + 1] * dd.x[i + 1]);
    CHECK(lhs == rhs);
}

TEST_CASE("strict growth sampling matches the exact law at n = 3") {
    // P_strict^3: (3) and (2,1)
    std::map<std::vector<int>, int> freq;
    int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        TrialRng rng(2024, t);
        // inline growth using exact rational weights
        StrictPartition cur({1});
        for (int m = 1; m < 3; ++m) {
            auto ups = strict_successors(cur);
            double r = rng.uniform01();
            for (const auto& up : ups) {
                double w = to_double(strict_growth_weight(cur, up));
                if (r < w) { cur = up; break; }
                r -= w;
            }
        }
        freq[cur.parts()]++;
    }
    double p3 = to_double(strict_plancherel(StrictPartition({3})));
    double observed = freq[{3}] / static_cast<double>(trials);
    double sigma = std::sqrt(p3 * (1 - p3) / trials);
    CHECK(std::abs(observed - p3) < 3 * sigma + 1e-9);
}
