#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "setpartition.hpp"

using namespace reprlab;

TEST_CASE("construction, parsing, arcs") {
    SetPartition pi = SetPartition::parse("1,5,7|2|3,4,9|6,8");
    CHECK(pi.n() == 9);
    CHECK(pi.to_string() == "1,5,7|2|3,4,9|6,8");
    std::vector<std::pair<int, int>> arcs{{1, 5}, {3, 4}, {4, 9}, {5, 7}, {6, 8}};
    CHECK(pi.arcs() == arcs);
    CHECK(pi.has_arc(1, 5));
    CHECK_FALSE(pi.has_arc(1, 7));
    CHECK(SetPartition::from_arcs(9, pi.arcs()) == pi);
    CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(SetPartition(2, {{1, 2}, {2}}), DomainError);
}

TEST_CASE("statistics of the worked example") {
    SetPartition pi = SetPartition::parse("1,5,7|2|3,4,9|6,8");
    ArcStatistics st = arc_statistics(pi);
    CHECK(st.d == 5);
    CHECK(st.dim == 14);
    CHECK(st.crs == 2);
    CHECK(st.nst == 3);
    ArcStatistics none = arc_statistics(SetPartition::singletons(5));
    CHECK(none.d == 0);
    CHECK(none.dim == 0);
    CHECK(none.crs == 0);
    CHECK(none.nst == 0);
    SetPartition single = SetPartition::from_arcs(6, {{1, 6}});
    ArcStatistics s1 = arc_statistics(single);
    CHECK(s1.dim == 5);
    CHECK(s1.crs == 0);
    CHECK(s1.nst == 0);
}

TEST_CASE("regular and singular pairs") {
    SetPartition pi = SetPartition::parse("1,4|2,3,5");
    RegularSingular rs = regular_singular(pi);
    std::vector<std::pair<int, int>> reg{{1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 5}};
    std::vector<std::pair<int, int>> sing{{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
    CHECK(rs.regular == reg);
    CHECK(rs.singular == sing);
    // arcless: all pairs regular
    RegularSingular all = regular_singular(SetPartition::singletons(4));
    CHECK(all.singular.empty());
    CHECK(all.regular.size() == 6);
    // |Sing| = 2(dim - d) - crs exhaustively for n <= 8
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_set_partitions(n)) {
            ArcStatistics st = arc_statistics(p);
            RegularSingular r = regular_singular(p);
            CHECK(static_cast<long long>(r.singular.size()) == 2 * (st.dim - st.d) - st.crs);
        }
}

TEST_CASE("enumeration sizes are Bell numbers") {
    long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long long>(enumerate_set_partitions(n).size()) == bell[n]);
}

TEST_CASE("nestings relative to another partition") {
    SetPartition pi = SetPartition::from_arcs(5, {{1, 5}});
    SetPartition sigma = SetPartition::from_arcs(5, {{2, 3}, {3, 4}});
    CHECK(nestings_of_in(sigma, pi) == 2);
    CHECK(nestings_of_in(pi, sigma) == 0);
}
