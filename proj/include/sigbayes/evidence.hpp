#pragma once

// Hypothesis models and likelihood-ratio arithmetic for binary covert-signal
// evidence, independent of any particular game or sport.
//
// The coded hypothesis says each event's observed signal equals the code's
// prediction with probability p; the random hypothesis says signals are
// Bernoulli(q) with q uniform over [0, q_max]. Everything downstream of the
// match summary works on log scales; reports use log10.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigbayes {

enum class Prediction : unsigned char {
    zero = 0,
    one = 1,
    not_applicable = 2, // event excluded from evaluation (e.g. singleton lead)
};

struct SignalObservation {
    Prediction expected;
    bool observed; // true = signal 1
};

// Sufficient statistics of an observation sequence.
struct MatchSummary {
    std::size_t n = 0;         // applicable observations
    std::size_t m = 0;         // matches among applicable
    std::size_t positives = 0; // observed 1-signals among applicable (h / b)
    std::size_t excluded = 0;  // not-applicable observations
};

// Per-event success probability of executing the code. p = 1 is rejected:
// it degenerates the likelihood to {0,1} and breaks log arithmetic; callers
// wanting near-perfect coding can pass 1 - 1e-12.
class CodedModel {
public:
    explicit CodedModel(double p);
    double p() const noexcept { return p_; }

private:
    double p_;
};

// Uniform-q signal model, optionally truncated at q_max. The integral over q
// is left unnormalized by default (matching the headline case figures);
// `normalize` divides by q_max for a proper uniform prior on [0, q_max].
class RandomModel {
public:
    explicit RandomModel(double q_max = 1.0, bool normalize = false);
    double q_max() const noexcept { return q_max_; }
    bool normalize() const noexcept { return normalize_; }

private:
    double q_max_;
    bool normalize_;
};

// Prior inputs: psi = prior probability of cheating in this modality,
// m_codes = bound M on the number of meaningful codes. No defaults on
// purpose; the prior belongs to the decision maker, not the tool.
class PriorParams {
public:
    PriorParams(double psi, long m_codes);
    double psi() const noexcept { return psi_; }
    long m_codes() const noexcept { return m_codes_; }

private:
    double psi_;
    long m_codes_;
};

MatchSummary summarize(std::span<const SignalObservation> observations);

// ln P(observations | coded) = m ln p + (n-m) ln(1-p)
double log_lik_coded(const MatchSummary& summary, const CodedModel& model);

// ln P(observations | random) = ln of the truncated beta integral over
// [0, q_max], minus ln q_max when the model is normalized.
double log_lik_random(const MatchSummary& summary, const RandomModel& model);

// log10 of the likelihood ratio coded : random.
double log10_lr(const MatchSummary& summary, const CodedModel& coded,
                const RandomModel& random);

// log10 of psi / (M (1 - psi)).
double prior_odds_log10(const PriorParams& prior);

// posterior odds = likelihood ratio x prior odds, in log10.
double posterior_odds_log10(double log10_lr_value, const PriorParams& prior);

// Timing evidence: each bang lands inside the pre-pitch window with
// probability ~1 under cheating and window/frame otherwise, contributing
// log10(frame/window) per bang. Reported separately, never folded into the
// base LR implicitly.
double timing_log10_factor(std::size_t bang_count, double window_seconds,
                           double frame_seconds);

enum class SweepParameter { p, q_max };

struct SweepGrid {
    double from;
    double to;
    std::size_t steps; // >= 2
};

struct SweepRow {
    double value;
    double log10_lr;
};

// Evaluate log10_lr across an evenly spaced grid of one model parameter,
// holding the other model fixed. Rows come back in ascending parameter order.
std::vector<SweepRow> sweep(const MatchSummary& summary, SweepParameter parameter,
                            const SweepGrid& grid, const CodedModel& coded,
                            const RandomModel& random);

struct PosteriorOdds {
    double log10_prior_odds;
    double log10_posterior_odds;
};

struct TimingSpec {
    std::size_t bang_count;
    double window_seconds;
    double frame_seconds;
};

struct TimingFactor {
    std::size_t bang_count;
    double window_seconds;
    double frame_seconds;
    double log10_factor;
    double log10_lr_with_timing; // explicit combination, base LR stays untouched
};

struct EvidenceReport {
    MatchSummary summary;
    double log10_lik_coded;
    double log10_lik_random;
    double log10_lr; // always log10_lik_coded - log10_lik_random
    std::string lr_scientific;
    std::optional<PosteriorOdds> posterior;
    std::optional<TimingFactor> timing;
};

EvidenceReport build_report(const MatchSummary& summary, const CodedModel& coded,
                            const RandomModel& random,
                            const std::optional<PriorParams>& prior = {},
                            const std::optional<TimingSpec>& timing = {});

// "3.445075E+30"-style rendering of a log10 value; round-trips via
// log10_from_scientific to within 1e-6.
std::string lr_scientific_from_log10(double log10_value);
double log10_from_scientific(const std::string& text);

} // namespace sigbayes
