#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fqmatrix.hpp"
#include "rng.hpp"
#include "supercharacter.hpp"

#include <map>
#include <set>

using namespace reprlab;

TEST_CASE("finite field tables") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        auto f = Fq::of(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->mul(a, 1) == a);
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
    }
    CHECK_THROWS_AS(Fq::of(6), DomainError);
}

TEST_CASE("canonicalize: the worked sweep") {
    auto f = Fq::of(7);
    FqMatrix a(5, f);
    a.set(1, 3, 5), a.set(1, 4, 2), a.set(1, 5, 1);
    a.set(2, 3, 2);
    a.set(3, 4, 5);
    a.set(4, 5, 4);
    Canonicalized c = canonicalize(a);
    CHECK(c.pi == SetPartition::parse("1,5|2,3,4"));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            CHECK(c.canonical.get(i, j) == (c.pi.has_arc(i, j) ? 1 : 0));
    // identity canonicalizes to singletons
    FqMatrix id(4, Fq::of(3));
    CHECK(canonicalize(id).pi == SetPartition::singletons(4));
}

TEST_CASE("fibers partition the group and have the predicted sizes") {
    for (int q : {2, 3}) {
        auto f = Fq::of(q);
        for (int n = 1; n <= 4; ++n) {
            auto parts = enumerate_set_partitions(n);
            std::map<std::vector<std::pair<int, int>>, long long> count;
            unsigned long long order = FqMatrix::group_order(n, q);
            for (unsigned long long code = 0; code < order; ++code) {
                FqMatrix m = FqMatrix::decode(n, f, code);
                Canonicalized c = canonicalize(m);
                CHECK(in_fiber(m, c.pi));
                count[c.pi.arcs()]++;
            }
            long long total = 0;
            for (const auto& pi : parts) {
                ArcStatistics st = arc_statistics(pi);
                BigInt expect = 1;
                for (long long t = 0; t < 2 * (st.dim - st.d) - st.crs; ++t) expect *= q;
                for (long long t = 0; t < st.d; ++t) expect *= (q - 1);
                CHECK(BigInt(count[pi.arcs()]) == expect);
                total += count[pi.arcs()];
                CHECK(superplancherel(pi, q) == Rational(expect, BigInt(order)));
            }
            CHECK(static_cast<unsigned long long>(total) == order);
        }
    }
}

TEST_CASE("superplancherel sums to one") {
    for (int q : {2, 3})
        for (int n = 1; n <= 8; ++n) {
            Rational total = 0;
            for (const auto& pi : enumerate_set_partitions(n)) total += superplancherel(pi, q);
            CHECK(total == 1);
        }
    CHECK(superplancherel(SetPartition::singletons(1), 2) == 1);
}

TEST_CASE("superclass labels match orbit enumeration at n <= 4, q = 2") {
    auto f = Fq::of(2);
    for (int n = 2; n <= 4; ++n) {
        unsigned long long order = FqMatrix::group_order(n, 2);
        // two-sided orbits of A - 1 under g X g' (scalars trivial at q = 2)
        std::map<unsigned long long, int> orbit_of;
        int orbits = 0;
        for (unsigned long long code = 0; code < order; ++code) {
            if (orbit_of.count(code)) continue;
            int label = orbits++;
            std::vector<unsigned long long> frontier{code};
            orbit_of[code] = label;
            while (!frontier.empty()) {
                unsigned long long cur = frontier.back();
                frontier.pop_back();
                FqMatrix x = FqMatrix::decode(n, f, cur); // strictly upper = A - 1
                // elementary generators g = 1 + E_{ab} (a < b) acting on both sides
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        // g X: row_a += row_b of X
                        FqMatrix gx = x;
                        for (int t = b + 1; t <= n; ++t)
                            gx.set(a, t, f->add(gx.get(a, t), x.get(b, t)));
                        // X g: col_b += col_a of X
                        FqMatrix xg = x;
                        for (int t = 1; t < a; ++t)
                            xg.set(t, b, f->add(xg.get(t, b), x.get(t, a)));
                        for (FqMatrix& y : {std::ref(gx), std::ref(xg)}) {
                            unsigned long long cc = y.encode();
                            if (!orbit_of.count(cc)) {
                                orbit_of[cc] = label;
                                frontier.push_back(cc);
                            }
                        }
                    }
            }
        }
        // orbit label <-> superclass_of label must be a bijection
        std::map<int, std::vector<std::pair<int, int>>> seen;
        for (unsigned long long code = 0; code < order; ++code) {
            FqMatrix a = FqMatrix::decode(n, f, code);
            SetPartition sc = superclass_of(a);
            int label = orbit_of[code];
            auto it = seen.find(label);
            if (it == seen.end()) seen[label] = sc.arcs();
            else CHECK(it->second == sc.arcs());
        }
        CHECK(static_cast<int>(seen.size()) == orbits);
        std::set<std::vector<std::pair<int, int>>> distinct;
        for (auto& [l, arcs] : seen) distinct.insert(arcs);
        CHECK(static_cast<int>(distinct.size()) == orbits);
    }
}

TEST_CASE("superclass pattern of the visual example") {
    // matrix with the K_pi star pattern: nonzero at (1,5),(2,3),(3,8),(5,7)
    auto f = Fq::of(2);
    FqMatrix a(8, f);
    a.set(1, 5, 1), a.set(2, 3, 1), a.set(3, 8, 1), a.set(5, 7, 1);
    CHECK(superclass_of(a) == SetPartition::parse("1,5,7|2,3,8|4|6"));
    FqMatrix id(6, f);
    CHECK(superclass_of(id) == SetPartition::singletons(6));
}

TEST_CASE("supercharacter values") {
    // arcless sigma gives the degree
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_set_partitions(n)) {
            ArcStatistics st = arc_statistics(pi);
            BigInt expect = 1;
            for (long long t = 0; t < st.dim - st.d; ++t) expect *= 2;
            for (long long t = 0; t < st.d; ++t) expect *= 1; // (q-1) = 1 at q=2
            CHECK(supercharacter_value(pi, SetPartition::singletons(n), 2) ==
                  supercharacter_degree(pi, 2));
            CHECK(supercharacter_degree(pi, 2) == expect);
        }
    // vanishing outside regular support
    SetPartition pi = SetPartition::parse("1,4|2,3,5");
    SetPartition sigma = SetPartition::from_arcs(5, {{1, 2}});
    CHECK(supercharacter_value(pi, sigma, 2) == 0);
    // symbolic matches integer evaluations
    for (const auto& p : enumerate_set_partitions(4))
        for (const auto& s : enumerate_set_partitions(4))
            for (int q : {2, 3, 5})
                CHECK(supercharacter_value_poly(p, s).evaluate(q) ==
                      supercharacter_value(p, s, q));
}

TEST_CASE("first and second orthogonality via brute force, n <= 4, q = 2") {
    auto f = Fq::of(2);
    for (int n = 2; n <= 4; ++n) {
        auto parts = enumerate_set_partitions(n);
        unsigned long long order = FqMatrix::group_order(n, 2);
        // group elements bucketed by superclass
        std::map<std::vector<std::pair<int, int>>, long long> class_size;
        for (unsigned long long code = 0; code < order; ++code)
            class_size[superclass_of(FqMatrix::decode(n, f, code)).arcs()]++;
        for (const auto& p1 : parts)
            for (const auto& p2 : parts) {
                BigInt acc = 0;
                for (const auto& sc : parts)
                    acc += class_size[sc.arcs()] * supercharacter_value(p1, sc, 2) *
                           supercharacter_value(p2, sc, 2);
                if (p1 == p2)
                    CHECK(acc == BigInt(order) * supercharacter_norm(p1, 2));
                else
                    CHECK(acc == 0);
            }
        // second kind: modified table has orthonormal columns
        for (const auto& k1 : parts)
            for (const auto& k2 : parts) {
                Rational acc = 0;
                for (const auto& chi : parts) {
                    // c(chi)/chi(1) = 1/<chi, chi> (from <chi,chi> = chi(1)/c(chi))
                    Rational cfac(1, supercharacter_norm(chi, 2));
                    acc += cfac * supercharacter_value(chi, k1, 2) *
                           supercharacter_value(chi, k2, 2);
                }
                if (k1 == k2)
                    CHECK(acc == Rational(BigInt(order), BigInt(class_size[k1.arcs()])));
                else
                    CHECK(acc == 0);
            }
    }
}

TEST_CASE("star product and superinduction") {
    // i = k returns pi itself
    SetPartition pi3 = SetPartition::parse("1,3|2");
    QPolyCombo self = star_product(pi3, 2, 2);
    REQUIRE(self.size() == 1);
    CHECK(self.begin()->second == QPoly(1));
    // the worked U3 -> U4 expansion
    QPolyCombo ind = superinduce(pi3);
    REQUIRE(ind.size() == 5);
    auto coeff = [&](const std::string& s) {
        auto it = ind.find(SetPartition::parse(s));
        REQUIRE(it != ind.end());
        return it->second;
    };
    CHECK(coeff("1,3|2|4") == QPoly(1));
    CHECK(coeff("1,3,4|2") == QPoly(1));
    CHECK(coeff("1,3|2,4") == QPoly(1));
    CHECK(coeff("1,4|2|3") == QPoly::q_minus_one());
    CHECK(coeff("1,4|2,3") == QPoly::q_minus_one());
    // edge multiplicity kappa(pi, sigma) = (q-1) q
    QPoly kappa = edge_multiplicity(pi3, SetPartition::parse("1,3|2,4"));
    CHECK(kappa == QPoly::q_minus_one() * QPoly::q_power(1));
    // dimension identity SInd(chi^pi)(1) = q^n chi^pi(1), symbolic in q
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_set_partitions(n)) {
            QPolyCombo si = superinduce(p);
            QPoly lhs;
            for (const auto& [sigma, c] : si) lhs = lhs + c * supercharacter_degree_poly(sigma);
            QPoly rhs = QPoly::q_power(n) * supercharacter_degree_poly(p);
            CHECK(lhs == rhs);
        }
    // coherence: sum over Lambda of tr(pi, Lambda) = 1 at q = 2, n <= 5
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_set_partitions(n)) {
            QPolyCombo si = superinduce(p);
            Rational total = 0;
            BigInt qn = 1;
            for (int t = 0; t < n; ++t) qn *= 2;
            for (const auto& [sigma, c] : si)
                total += Rational(c.evaluate(2) * supercharacter_degree(sigma, 2),
                                  qn * supercharacter_degree(p, 2));
            CHECK(total == 1);
        }
}

TEST_CASE("sampler law matches superplancherel exactly in distribution, n = 4, q = 2") {
    std::map<std::vector<std::pair<int, int>>, long long> freq;
    int trials = 200000;
    for (int t = 0; t < trials; ++t) {
        TrialRng rng(99, t);
        SetPartition pi = sample_superplancherel(4, 2, [&](int q) {
            return static_cast<int>(rng.below(q));
        });
        freq[pi.arcs()]++;
    }
    for (const auto& pi : enumerate_set_partitions(4)) {
        double p = to_double(superplancherel(pi, 2));
        double obs = freq[pi.arcs()] / static_cast<double>(trials);
        double sigma = std::sqrt(p * (1 - p) / trials);
        CHECK(std::abs(obs - p) < 4 * sigma + 1e-9);
    }
}

TEST_CASE("cell functionals and entropy") {
    SetPartition pi = SetPartition::parse("1,5,7|2|3,4,9|6,8");
    CellFunctionals f = cell_functionals(pi);
    // total mass of mu_pi is d/n = 5/9 (checked through I1 scaling): mass is
    // d(pi)/n by construction; the worked example quotes 5/9
    CHECK(Rational(arc_statistics(pi).d, pi.n()) == Rational(5, 9));
    // dim = n^2 I1 and crs = n^2 I2 - d/4 - adjacent/2 for all n <= 8
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_set_partitions(n)) {
            ArcStatistics st = arc_statistics(p);
            CellFunctionals cf = cell_functionals(p);
            CHECK(Rational(st.dim) == Rational(BigInt(n) * n) * cf.i1);
            CHECK(Rational(st.crs) ==
                  Rational(BigInt(n) * n) * cf.i2 - Rational(st.d, 4) -
                      Rational(st.adjacent, 2));
        }
    (void)f;
}

TEST_CASE("omega discrepancy") {
    // the nested partition {{1,n},{2,n-1},...} approaches zero discrepancy
    auto nested = [](int n) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 1; i <= n / 2; ++i) arcs.emplace_back(i, n + 1 - i);
        return SetPartition::from_arcs(n, arcs);
    };
    double d20 = omega_discrepancy(nested(20), 40);
    double d200 = omega_discrepancy(nested(200), 40);
    CHECK(d200 < d20);
    CHECK(d200 < 0.02);
    // arcless: F = 0, discrepancy = max min(a,b) = 1/2
    double none = omega_discrepancy(SetPartition::singletons(50), 40);
    CHECK(none == doctest::Approx(0.5));
}
