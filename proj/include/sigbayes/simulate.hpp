#pragma once

// Monte Carlo generation of synthetic signal sequences under both hypotheses
// and calibration checks on the resulting likelihood ratios.
//
// Reproducibility contract: the engine is mt19937_64 (bit-exact across
// platforms); uniforms take the top 53 bits of each draw; per-rep seeds are
// derived from the master seed by a splitmix64 counter so reps can run in any
// order (or concurrently) with identical results. Reports carry the algorithm
// identifier and seed.

#include "sigbayes/evidence.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace sigbayes::sim {

inline constexpr const char* kRngAlgorithm = "mt19937_64/u53";
inline constexpr const char* kSeedScheme =
    "rep_seed = splitmix64(master_seed + (rep_index+1) * 0x9E3779B97F4A7C15)";

using SignalVec = std::vector<std::uint8_t>; // values 0/1

std::uint64_t derive_rep_seed(std::uint64_t master_seed, std::size_t rep_index);

// Uniform in [0,1) from the top 53 bits; independent of any library
// distribution implementation.
double next_uniform(std::mt19937_64& engine);

// Distribution of the latent signal probability q under the random hypothesis.
struct QSpec {
    enum class Kind { fixed, uniform };
    Kind kind;
    double value; // the fixed q, or the upper bound of the uniform range

    static QSpec fixed(double q);
    static QSpec uniform(double q_max);
};

enum class Hypothesis { coded, random };

struct SimConfig {
    Hypothesis hypothesis;
    std::size_t n;
    double p;     // coded-hypothesis execution probability
    QSpec q_spec; // random-hypothesis signal probability
    std::size_t reps;
    std::uint64_t seed;
};

// Each observed signal equals the expected one with probability p.
SignalVec simulate_coded(const SignalVec& expected, double p, std::uint64_t seed);

// Draws q per q_spec (once), then n independent Bernoulli(q) signals.
SignalVec simulate_random(std::size_t n, const QSpec& q_spec, std::uint64_t seed);

// One log10 likelihood ratio per rep. Expected-signal vectors are fair coin
// flips per rep unless a fixture vector is supplied.
std::vector<double> lr_distribution(const SimConfig& config, const CodedModel& coded,
                                    const RandomModel& random,
                                    const std::optional<SignalVec>& expected_fixture = {});

struct MarkovCheck {
    double k;
    double empirical_fraction; // fraction of sampled LRs at or above k
    double bound;              // 1/k
    double slack;              // 3 sqrt(1/(k reps)) Monte Carlo allowance
    bool pass;
};

// Universal bound under the random hypothesis: P(LR >= k) <= 1/k.
MarkovCheck markov_bound_check(std::span<const double> log10_lrs, double k);

struct NormalizationSums {
    double sum_coded;
    double sum_random;
};

// Exhaustive sum of both model likelihoods over all 2^n outcomes; n <= 12.
NormalizationSums brute_force_normalization(const SignalVec& expected,
                                            const CodedModel& coded,
                                            const RandomModel& random);

} // namespace sigbayes::sim
