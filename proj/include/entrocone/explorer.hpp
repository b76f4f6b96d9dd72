#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entrocone/coupling.hpp"
#include "entrocone/geometry.hpp"

namespace entrocone {

// One sampled point of the entropy region: the entropy vector of a sampled
// diagram plus its simplex coordinates and diagnostics. Every emitted point
// satisfies the Shannon inequalities at tolerance 1e-9 (enforced).
struct SamplePoint {
    std::string descriptor; // JSON text sufficient to re-derive the point
    EntropyVector vec;
    std::array<double, 15> alpha{};
    bool in_smc = false;
    double ingleton_min = 0.0; // min over the six Ingleton pairings
};

SamplePoint make_sample_point(std::string descriptor, EntropyVector vec);

// Random dyadic joints (denominator 2^10) over four variables with the given
// per-variable support sizes (each <= 6). Reproducible by seed; worker
// streams derive from (seed, index), so results are independent of thread
// count.
std::vector<SamplePoint> sample_distributions(unsigned long long seed, int count,
                                              const std::vector<int>& support_sizes,
                                              int threads = 1);

// Random minimal Λ4 group diagrams over Abelian groups of order <= order_cap.
// Exact entropy vectors; every point satisfies all six Ingleton inequalities
// (verified exactly via integer products).
std::vector<SamplePoint> sample_group_points(unsigned long long seed, int count, int order_cap,
                                             int threads = 1);

struct SearchResult {
    bool violation_found = false;
    double best_alpha15 = 0.0;
    int exact_ing_sign = 0; // sign of ing(12;34) at the best point
    long iterations = 0;
    SamplePoint best;
    JointTable witness;
};

// Local search for Ingleton-violating distributions: coordinate-wise dyadic
// mass moves over a 2x2x2x2 support, accepted on alpha_15 increase, with
// periodic restarts. `budget` counts candidate evaluations.
SearchResult maximize_alpha15(unsigned long long seed, long budget);

struct ExpansionReport {
    EntropyVector before, after;
    std::array<double, 15> alpha_before{}, alpha_after{};
    std::array<double, 4> noise_entropy{};
    double max_delta_law_error = 0.0;  // max |delta[I] - sum_{i in I} h_i|
    double max_alpha_drift = 0.0;      // max |delta alpha_j|, j >= 5
    bool delta_law_ok = false;
};

// Expands each of the four terminal variables by an independent noise and
// verifies the per-subset entropy deltas: delta[I] = sum of h_i over i in I,
// hence alpha_5..alpha_15 are unchanged and alpha_i grows by h_i.
ExpansionReport expansion_sweep(const FullDiagram& point, const std::array<Space, 4>& noises);

struct GridSpec {
    double width = 0.05;
    bool include_first_four = false; // diagnostic mode: bucket on alpha_1..alpha_14
};

// Inner-bound table for the boundary function: points are normalized by the
// sum of their alpha coordinates, bucketed by (alpha_5..alpha_14), and the
// maximum alpha_15 per bucket is recorded with a witness descriptor.
struct PhiTable {
    GridSpec grid;
    long skipped = 0; // points with nonpositive alpha sum
    std::map<std::vector<int>, std::pair<double, std::string>> buckets;

    void insert(const SamplePoint& p);
    void merge(const PhiTable& other); // entries only grow
};

PhiTable phi_inner_bound(const std::vector<SamplePoint>& dataset, const GridSpec& grid);

} // namespace entrocone
