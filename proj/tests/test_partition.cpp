#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "characters.hpp"
#include "partition.hpp"

using namespace reprlab;

TEST_CASE("partition basics and validation") {
    Partition p({6, 4, 3, 3, 2});
    CHECK(p.size() == 18);
    CHECK(p.length() == 5);
    CHECK(p.conjugate() == Partition({5, 5, 4, 2, 1, 1}));
    CHECK(Partition::parse("6,4,3,3,2") == p);
    CHECK(Partition::parse("[]").empty());
    CHECK_THROWS_AS(Partition({3, 4}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("enumerate_partitions counts and order") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    // reverse-lexicographic: each next is smaller
    for (size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i + 1] < p4[i]);
    auto p18 = enumerate_partitions(18);
    CHECK(std::find(p18.begin(), p18.end(), Partition({6, 4, 3, 3, 2})) != p18.end());
    // no duplicates
    auto copy = p18;
    std::sort(copy.begin(), copy.end());
    CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
    CHECK_THROWS_AS(enumerate_partitions(41), LimitError);
}

TEST_CASE("hook lengths of the worked diagram") {
    auto h = hook_lengths(Partition({6, 4, 3, 3, 2}));
    CHECK(h[0] == std::vector<int>{10, 9, 7, 4, 2, 1});
    CHECK(hook_lengths(Partition({1}))[0] == std::vector<int>{1});
}

TEST_CASE("dimension equals SYT count") {
    CHECK(dimension(Partition({3, 2})) == 5);
    CHECK(dimension(Partition({7})) == 1);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(dimension(lam) == TableauSet::of(lam)->count());
    // larger shape against the backtracking enumeration
    Partition big({5, 3, 2});
    CHECK(dimension(big) == TableauSet::of(big)->count());
    CHECK_THROWS_AS(TableauSet::of(Partition({13})), LimitError);
}

TEST_CASE("corners of the worked diagram and the interlacing invariant") {
    CornerData cd = corners(Partition({6, 4, 3, 3, 2}));
    CHECK(cd.inner == std::vector<int>{-5, -2, 1, 3, 6});
    CHECK(cd.outer == std::vector<int>{-3, -1, 2, 5});
    CornerData empty = corners(Partition{});
    CHECK(empty.inner == std::vector<int>{0});
    CHECK(empty.outer.empty());
    for (int n = 1; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            CornerData c = corners(lam);
            REQUIRE(c.inner.size() == c.outer.size() + 1);
            for (size_t j = 0; j < c.outer.size(); ++j) {
                CHECK(c.inner[j] < c.outer[j]);
                CHECK(c.outer[j] < c.inner[j + 1]);
            }
            for (const auto& add : c.added) CHECK(add.size() == lam.size() + 1);
            for (const auto& rem : c.removed) CHECK(rem.size() == lam.size() - 1);
        }
}

TEST_CASE("contents multiset") {
    auto c = contents_multiset(Partition({6, 4, 3, 3, 2}));
    CHECK(c.size() == 18);
    CHECK(std::vector<int>(c.begin(), c.begin() + 6) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(contents_multiset(Partition({1})) == std::vector<int>{0});
    // C_lambda = C_mu + {y_j} for every removable corner
    for (const auto& lam : enumerate_partitions(7)) {
        CornerData cd = corners(lam);
        for (size_t j = 0; j < cd.outer.size(); ++j) {
            auto whole = contents_multiset(lam);
            auto sub = contents_multiset(cd.removed[j]);
            sub.push_back(cd.outer[j]);
            std::sort(whole.begin(), whole.end());
            std::sort(sub.begin(), sub.end());
            CHECK(whole == sub);
        }
    }
}

TEST_CASE("SYT last letter order for (3,2)") {
    auto ts = TableauSet::of(Partition({3, 2}));
    REQUIRE(ts->count() == 5);
    CHECK(ts->tableau(0).to_string() == "1 2 3/4 5");
    CHECK(ts->tableau(1).to_string() == "1 2 4/3 5");
    CHECK(ts->tableau(2).to_string() == "1 3 4/2 5");
    CHECK(ts->tableau(3).to_string() == "1 2 5/3 4");
    CHECK(ts->tableau(4).to_string() == "1 3 5/2 4");
    CHECK(TableauSet::of(Partition({2, 2}))->count() == 2);
    CHECK(TableauSet::of(Partition({6}))->count() == 1);
}

TEST_CASE("skew dimension: recursion vs character formula") {
    CHECK(skew_dimension(Partition({3, 2}), Partition({3, 2})) == 1);
    CHECK(skew_dimension(Partition({3, 2}), Partition({3, 3})) == 0);
    CHECK(skew_dimension(Partition({3, 2}), Partition({1})) ==
          skew_dimension_recursive(Partition({3, 2}), Partition({1})));
    for (const auto& lam : enumerate_partitions(7))
        for (int r = 0; r <= 7; ++r)
            for (const auto& nu : enumerate_partitions(r))
                CHECK(skew_dimension(lam, nu) == skew_dimension_recursive(lam, nu));
}

TEST_CASE("border strip characters") {
    CHECK(character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
    for (const auto& rho : enumerate_partitions(6)) CHECK(character(Partition({6}), rho) == 1);
    // column shape carries the sign character
    CHECK(character(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == -1);
    CHECK(normalized_character(Partition({2, 1}), Partition({3})) == Rational(-1, 2));
}

TEST_CASE("p_sharp basics") {
    for (const auto& lam : enumerate_partitions(6))
        CHECK(p_sharp(Partition({1}), lam) == 6);
    CHECK(p_sharp(Partition({3, 2}), Partition({2, 1})) == 0);
}

TEST_CASE("modified power sums of contents") {
    // odd k: plain power sum of contents
    Partition lam({3, 1});
    Rational p3 = 0;
    for (int c : contents_multiset(lam)) p3 += c * c * c;
    CHECK(modified_power_sum_contents(lam, 3) == p3);
    // difference identity p~_k(C_lambda) - p~_k(C_mu) = y^k - Cat(k/2)(n-1)^{down k/2}
    for (const auto& l2 : enumerate_partitions(6)) {
        CornerData cd = corners(l2);
        for (size_t j = 0; j < cd.outer.size(); ++j) {
            for (int k = 1; k <= 6; ++k) {
                Rational lhs = modified_power_sum_contents(l2, k) -
                               modified_power_sum_contents(cd.removed[j], k);
                Rational y(cd.outer[j]);
                Rational yk = 1;
                for (int t = 0; t < k; ++t) yk *= y;
                Rational corr = 0;
                if (k % 2 == 0)
                    corr = Rational(catalan(k / 2)) *
                           Rational(falling_factorial(BigInt(l2.size() - 1), k / 2));
                CHECK(lhs == yk - corr);
            }
        }
    }
    // the paper formula gives 0 for lambda = (1), k = 2 (1 down 2 vanishes)
    CHECK(modified_power_sum_contents(Partition({1}), 2) == 0);
}
