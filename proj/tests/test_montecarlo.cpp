#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "characters.hpp"
#include "jsonio.hpp"
#include "montecarlo.hpp"
#include "profile.hpp"
#include "svgplot.hpp"

#include <map>

using namespace reprlab;

TEST_CASE("plancherel sampler: exact small-n law") {
    // n = 2: both shapes with probability 1/2
    std::map<std::vector<int>, int> freq;
    int trials = 40000;
    for (int t = 0; t < trials; ++t) freq[sample_plancherel(2, 7, t).parts()]++;
    CHECK(std::abs(freq[{2}] / static_cast<double>(trials) - 0.5) < 0.02);
    // n = 4 frequencies match dim^2/24 within 4 sigma
    freq.clear();
    for (int t = 0; t < trials; ++t) freq[sample_plancherel(4, 11, t).parts()]++;
    for (const auto& lam : enumerate_partitions(4)) {
        double p = to_double(Rational(dimension(lam) * dimension(lam), factorial(4)));
        double obs = freq[lam.parts()] / static_cast<double>(trials);
        double sigma = std::sqrt(p * (1 - p) / trials);
        CHECK(std::abs(obs - p) < 4 * sigma + 1e-9);
    }
}

TEST_CASE("determinism: same (seed, index) gives the same sample") {
    CHECK(sample_plancherel(50, 123, 4).parts() == sample_plancherel(50, 123, 4).parts());
    CHECK(sample_strict_plancherel(50, 9, 2).parts() == sample_strict_plancherel(50, 9, 2).parts());
    auto a = kerov_clt_report(Partition({2}), 40, 50, 3, 1);
    auto b = kerov_clt_report(Partition({2}), 40, 50, 3, 4);
    REQUIRE(a.stats.size() == b.stats.size());
    for (size_t i = 0; i < a.stats.size(); ++i) {
        CHECK(a.stats[i].mean == b.stats[i].mean);
        CHECK(a.stats[i].variance == b.stats[i].variance);
    }
}

TEST_CASE("large-n character helpers agree with exact characters") {
    for (const auto& lam : enumerate_partitions(8)) {
        for (int k : {2, 3}) {
            std::vector<int> rho{k};
            for (int i = 0; i < 8 - k; ++i) rho.push_back(1);
            double exact = to_double(normalized_character(lam, Partition({k})));
            CHECK(chi_hat_cycle_large(lam.parts(), k) == doctest::Approx(exact).epsilon(1e-12));
            CHECK(chi_hat_large(lam.parts(), {k}) == doctest::Approx(exact).epsilon(1e-9));
        }
        // a two-part type through the generic strip path
        double exact22 = to_double(normalized_character(lam, Partition({2, 2})));
        CHECK(chi_hat_large(lam.parts(), {2, 2}) == doctest::Approx(exact22).epsilon(1e-9));
    }
}

TEST_CASE("co-transition corner weights equal exact dimension ratios") {
    for (const auto& lam : enumerate_partitions(9)) {
        CornerWeights cw = cotransition_weights_large(lam.parts());
        DiscreteMeasure m = cotransition_measure(lam);
        REQUIRE(cw.weights.size() == m.atoms.size());
        for (size_t j = 0; j < cw.weights.size(); ++j)
            CHECK(cw.weights[j] == doctest::Approx(to_double(m.atoms[j].second)).epsilon(1e-9));
    }
}

TEST_CASE("main term at sigma = id is the co-transition cdf step") {
    Partition lam({5, 3, 3, 1});
    double u = 0.55;
    double mt = main_term_large(lam, {}, u);
    CornerWeights cw = cotransition_weights_large(lam.parts());
    double cum = 0.0, expect = 0.0;
    for (double w : cw.weights) {
        if (cum + w > u) break;
        cum += w;
        expect += w;
    }
    CHECK(mt == doctest::Approx(expect));
    CHECK(mt <= u + 1e-12);
}

TEST_CASE("sup distance helpers are sane") {
    // the classical staircase is close-ish to Omega even at tiny n
    CHECK(sup_distance_classical(Partition({4, 3, 2, 1})) < 0.5);
    // a strict Plancherel sample of moderate size is reasonably close
    CHECK(sup_distance_strict(sample_strict_plancherel(2000, 31, 0)) < 0.3);
    // large deviation for a one-row shape
    CHECK(sup_distance_classical(Partition({36})) > 1.0);
}

TEST_CASE("report json and csv serialize and round trip samples") {
    auto rep = limit_shape_report("setpartition", 30, 4, 5, 2, 2);
    std::string js = report_json(rep);
    CHECK(js.find("\"report\"") != std::string::npos);
    CHECK(report_csv(rep).find("name,mean") == 0);
    Partition lam = sample_plancherel(20, 77, 0);
    CHECK(partition_from_json(sample_json(lam, 77)) == lam);
    StrictPartition sp = sample_strict_plancherel(20, 77, 0);
    CHECK(strict_from_json(sample_json(sp, 77)) == sp);
    SetPartition pi = sample_superplancherel_matrix(12, 2, 77, 0);
    CHECK(setpartition_from_json(sample_json(pi, 2, 77)) == pi);
}

TEST_CASE("svg output is deterministic and well formed") {
    SetPartition pi = sample_superplancherel_matrix(30, 2, 5, 0);
    std::string a = svg_arcs(pi), b = svg_arcs(pi);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(svg_heatmap(pi, 20).find("<rect") != std::string::npos);
    CHECK(svg_profile(sample_plancherel(60, 5, 0)).find("polyline") != std::string::npos);
    CHECK(svg_profile(sample_strict_plancherel(60, 5, 0)).find("polyline") != std::string::npos);
}
