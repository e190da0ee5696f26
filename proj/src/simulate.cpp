#include "sigbayes/simulate.hpp"

#include "sigbayes/errors.hpp"

#include <cmath>
#include <string>

namespace sigbayes::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SignalVec coded_draw(std::mt19937_64& engine, const SignalVec& expected, double p) {
    SignalVec observed(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const bool follow = next_uniform(engine) < p;
        observed[i] = follow ? expected[i] : static_cast<std::uint8_t>(1 - expected[i]);
    }
    return observed;
}

SignalVec random_draw(std::mt19937_64& engine, std::size_t n, const QSpec& q_spec) {
    double q = q_spec.value;
    if (q_spec.kind == QSpec::Kind::uniform) q = next_uniform(engine) * q_spec.value;
    SignalVec observed(n);
    for (std::size_t i = 0; i < n; ++i)
        observed[i] = next_uniform(engine) < q ? 1 : 0;
    return observed;
}

SignalVec fair_coin_draw(std::mt19937_64& engine, std::size_t n) {
    SignalVec expected(n);
    for (std::size_t i = 0; i < n; ++i)
        expected[i] = next_uniform(engine) < 0.5 ? 1 : 0;
    return expected;
}

MatchSummary summarize_pair(const SignalVec& expected, const SignalVec& observed) {
    MatchSummary s;
    s.n = expected.size();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] == observed[i]) ++s.m;
        if (observed[i]) ++s.positives;
    }
    return s;
}

} // namespace

std::uint64_t derive_rep_seed(std::uint64_t master_seed, std::size_t rep_index) {
    // the +1 keeps rep 0 from collapsing onto the bare master seed
    return splitmix64(master_seed + (static_cast<std::uint64_t>(rep_index) + 1) *
                                        0x9E3779B97F4A7C15ULL);
}

double next_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

QSpec QSpec::fixed(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("fixed q must lie in [0,1], got " + std::to_string(q));
    return {Kind::fixed, q};
}

QSpec QSpec::uniform(double q_max) {
    if (!(q_max > 0.0 && q_max <= 1.0))
        throw domain_error("uniform q_max must lie in (0,1], got " + std::to_string(q_max));
    return {Kind::uniform, q_max};
}

SignalVec simulate_coded(const SignalVec& expected, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("simulate_coded: p must lie strictly in (0,1)");
    std::mt19937_64 engine(seed);
    return coded_draw(engine, expected, p);
}

SignalVec simulate_random(std::size_t n, const QSpec& q_spec, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    return random_draw(engine, n, q_spec);
}

std::vector<double> lr_distribution(const SimConfig& config, const CodedModel& coded,
                                    const RandomModel& random,
                                    const std::optional<SignalVec>& expected_fixture) {
    if (config.reps < 1) throw domain_error("lr_distribution: reps must be >= 1");
    if (expected_fixture && expected_fixture->size() != config.n)
        throw domain_error("lr_distribution: fixture length does not match n");
    if (config.hypothesis == Hypothesis::coded && !(config.p > 0.0 && config.p < 1.0))
        throw domain_error("lr_distribution: p must lie strictly in (0,1)");

    std::vector<double> out;
    out.reserve(config.reps);
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
        std::mt19937_64 engine(derive_rep_seed(config.seed, rep));
        const SignalVec expected =
            expected_fixture ? *expected_fixture : fair_coin_draw(engine, config.n);
        const SignalVec observed = config.hypothesis == Hypothesis::coded
                                       ? coded_draw(engine, expected, config.p)
                                       : random_draw(engine, config.n, config.q_spec);
        out.push_back(log10_lr(summarize_pair(expected, observed), coded, random));
    }
    return out;
}

MarkovCheck markov_bound_check(std::span<const double> log10_lrs, double k) {
    if (!(k > 1.0)) throw domain_error("markov_bound_check: k must exceed 1");
    const double threshold = std::log10(k);
    std::size_t hits = 0;
    for (double v : log10_lrs)
        if (v >= threshold) ++hits;
    const double reps = static_cast<double>(log10_lrs.size());
    const double fraction = log10_lrs.empty() ? 0.0 : static_cast<double>(hits) / reps;
    const double bound = 1.0 / k;
    const double slack = log10_lrs.empty() ? 0.0 : 3.0 * std::sqrt(1.0 / (k * reps));
    return {k, fraction, bound, slack, fraction <= bound + slack};
}

NormalizationSums brute_force_normalization(const SignalVec& expected,
                                            const CodedModel& coded,
                                            const RandomModel& random) {
    const std::size_t n = expected.size();
    if (n > 12)
        throw domain_error("brute_force_normalization: n is limited to 12, got " +
                           std::to_string(n));

    double sum_coded = 0.0, sum_random = 0.0;
    SignalVec observed(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) observed[i] = (bits >> i) & 1u;
        const MatchSummary s = summarize_pair(expected, observed);
        sum_coded += std::exp(log_lik_coded(s, coded));
        sum_random += std::exp(log_lik_random(s, random));
    }
    return {sum_coded, sum_random};
}

} // namespace sigbayes::sim
