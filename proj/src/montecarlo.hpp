#pragma once

#include "partition.hpp"
#include "permutation.hpp"
#include "rng.hpp"
#include "setpartition.hpp"
#include "strictpartition.hpp"

#include <string>
#include <vector>

namespace reprlab {

// Plancherel growth process; exact one-step law via Kerov's corner weights.
Partition sample_plancherel(int n, TrialRng& rng);
inline Partition sample_plancherel(int n, uint64_t seed, uint64_t index = 0) {
    TrialRng rng(seed, index);
    return sample_plancherel(n, rng);
}

// Strict Plancherel growth; one-step weights 2^{l - l' + 1} g'/((m+1) g).
StrictPartition sample_strict_plancherel(int n, TrialRng& rng);
inline StrictPartition sample_strict_plancherel(int n, uint64_t seed, uint64_t index = 0) {
    TrialRng rng(seed, index);
    return sample_strict_plancherel(n, rng);
}

SetPartition sample_superplancherel_matrix(int n, int q, TrialRng& rng);
inline SetPartition sample_superplancherel_matrix(int n, int q, uint64_t seed, uint64_t index = 0) {
    TrialRng rng(seed, index);
    return sample_superplancherel_matrix(n, q, rng);
}

// Normalized character on (rho, 1^{n-r}) of a large partition: border strips
// for the nontrivial parts, hook-formula dimension ratios afterwards.
double chi_hat_large(const std::vector<int>& parts, const std::vector<int>& rho_nontrivial);

// Fast single-cycle values from content power sums, k in {1, 2, 3}.
double chi_hat_cycle_large(const std::vector<int>& parts, int k);

// sup_x |rescaled profile - Omega|.
double sup_distance_classical(const Partition& lambda);
double sup_distance_strict(const StrictPartition& lambda);

// Removable corners of a large partition with co-transition weights
// (Kerov's signed product formula, evaluated in log space).
struct CornerWeights {
    std::vector<int> contents;             // y_j ascending
    std::vector<double> weights;           // dim mu_j / dim lambda
    std::vector<std::vector<int>> removed; // parts of mu_j
};
CornerWeights cotransition_weights_large(const std::vector<int>& parts);

// Main term of the partial trace at u for a sampled lambda.
double main_term_large(const Partition& lambda, const std::vector<int>& rho_nontrivial, double u);

struct Statistic {
    std::string name;
    double mean = 0.0;
    double variance = 0.0;
    double target = 0.0;
    double zscore = 0.0;
    double threshold = 0.0;
    bool pass = true;
};

struct StatReport {
    std::string kind;
    uint64_t seed = 0;
    long n = 0;
    long trials = 0;
    int q = 0;
    std::vector<Statistic> stats;
    bool pass = true;
};

StatReport kerov_clt_report(const Partition& rho, int n, int trials, uint64_t seed, int jobs = 1);
StatReport limit_shape_report(const std::string& kind, int n, int trials, uint64_t seed, int q = 2,
                              int jobs = 1);
StatReport cotransition_semicircle_report(int n, int trials, uint64_t seed, int jobs = 1);
StatReport main_term_report(const Permutation& sigma, double u, int n, int trials, uint64_t seed,
                            int jobs = 1);

} // namespace reprlab
