#include "sigbayes/evidence.hpp"

#include "sigbayes/errors.hpp"
#include "sigbayes/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace sigbayes {

namespace {

const double kLn10 = std::log(10.0);

void require_valid(const MatchSummary& s) {
    if (s.m > s.n)
        throw domain_error("match summary: m (" + std::to_string(s.m) +
                           ") exceeds n (" + std::to_string(s.n) + ")");
    if (s.positives > s.n)
        throw domain_error("match summary: positives (" + std::to_string(s.positives) +
                           ") exceeds n (" + std::to_string(s.n) + ")");
}

} // namespace

CodedModel::CodedModel(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0))
        throw domain_error("coded model: p must lie strictly in (0,1), got " +
                           std::to_string(p));
}

RandomModel::RandomModel(double q_max, bool normalize)
    : q_max_(q_max), normalize_(normalize) {
    if (!(q_max > 0.0 && q_max <= 1.0))
        throw domain_error("random model: q_max must lie in (0,1], got " +
                           std::to_string(q_max));
}

PriorParams::PriorParams(double psi, long m_codes) : psi_(psi), m_codes_(m_codes) {
    if (!(psi > 0.0 && psi < 1.0))
        throw domain_error("prior: psi must lie strictly in (0,1), got " +
                           std::to_string(psi));
    if (m_codes < 1)
        throw domain_error("prior: m_codes must be >= 1, got " + std::to_string(m_codes));
}

MatchSummary summarize(std::span<const SignalObservation> observations) {
    MatchSummary s;
    for (const auto& obs : observations) {
        if (obs.expected == Prediction::not_applicable) {
            ++s.excluded;
            continue;
        }
        ++s.n;
        const bool predicted_one = obs.expected == Prediction::one;
        if (predicted_one == obs.observed) ++s.m;
        if (obs.observed) ++s.positives;
    }
    return s;
}

double log_lik_coded(const MatchSummary& summary, const CodedModel& model) {
    require_valid(summary);
    const double m = static_cast<double>(summary.m);
    const double misses = static_cast<double>(summary.n - summary.m);
    return m * std::log(model.p()) + misses * std::log1p(-model.p());
}

double log_lik_random(const MatchSummary& summary, const RandomModel& model) {
    require_valid(summary);
    double v = log_trunc_beta_integral(summary.positives, summary.n, model.q_max());
    if (model.normalize()) v -= std::log(model.q_max());
    return v;
}

double log10_lr(const MatchSummary& summary, const CodedModel& coded,
                const RandomModel& random) {
    return (log_lik_coded(summary, coded) - log_lik_random(summary, random)) / kLn10;
}

double prior_odds_log10(const PriorParams& prior) {
    // written as a difference of logs so that psi = 1/2 cancels exactly
    return std::log10(prior.psi()) - std::log10(1.0 - prior.psi()) -
           std::log10(static_cast<double>(prior.m_codes()));
}

double posterior_odds_log10(double log10_lr_value, const PriorParams& prior) {
    return log10_lr_value + prior_odds_log10(prior);
}

double timing_log10_factor(std::size_t bang_count, double window_seconds,
                           double frame_seconds) {
    if (!(window_seconds > 0.0))
        throw domain_error("timing: window must be positive, got " +
                           std::to_string(window_seconds));
    if (!(window_seconds <= frame_seconds))
        throw domain_error("timing: window (" + std::to_string(window_seconds) +
                           "s) exceeds frame (" + std::to_string(frame_seconds) + "s)");
    return static_cast<double>(bang_count) * std::log10(frame_seconds / window_seconds);
}

std::vector<SweepRow> sweep(const MatchSummary& summary, SweepParameter parameter,
                            const SweepGrid& grid, const CodedModel& coded,
                            const RandomModel& random) {
    if (grid.steps < 2)
        throw domain_error("sweep: grid needs at least 2 steps, got " +
                           std::to_string(grid.steps));
    if (!(grid.from <= grid.to))
        throw domain_error("sweep: grid must be ascending (from <= to)");
    if (parameter == SweepParameter::p) {
        if (!(grid.from > 0.0 && grid.to < 1.0))
            throw domain_error("sweep: p grid must lie strictly inside (0,1)");
    } else {
        if (!(grid.from > 0.0 && grid.to <= 1.0))
            throw domain_error("sweep: q_max grid must lie in (0,1]");
    }

    std::vector<SweepRow> rows;
    rows.reserve(grid.steps);
    for (std::size_t i = 0; i < grid.steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid.steps - 1);
        const double value = (i + 1 == grid.steps) ? grid.to : grid.from + t * (grid.to - grid.from);
        double lr;
        if (parameter == SweepParameter::p) {
            lr = log10_lr(summary, CodedModel(value), random);
        } else {
            lr = log10_lr(summary, coded, RandomModel(value, random.normalize()));
        }
        rows.push_back({value, lr});
    }
    return rows;
}

std::string lr_scientific_from_log10(double log10_value) {
    if (!std::isfinite(log10_value))
        throw domain_error("scientific rendering requires a finite log10 value");
    double exponent = std::floor(log10_value);
    double mantissa = std::pow(10.0, log10_value - exponent);
    if (mantissa >= 9.9999995) { // would round to "10.000000"
        mantissa /= 10.0;
        exponent += 1.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6fE%+03d", mantissa, static_cast<int>(exponent));
    return buf;
}

double log10_from_scientific(const std::string& text) {
    const auto epos = text.find('E');
    if (epos == std::string::npos)
        throw parse_error("scientific literal missing exponent marker: " + text);
    const double mantissa = std::stod(text.substr(0, epos));
    const int exponent = std::stoi(text.substr(epos + 1));
    return static_cast<double>(exponent) + std::log10(mantissa);
}

EvidenceReport build_report(const MatchSummary& summary, const CodedModel& coded,
                            const RandomModel& random,
                            const std::optional<PriorParams>& prior,
                            const std::optional<TimingSpec>& timing) {
    EvidenceReport report;
    report.summary = summary;
    report.log10_lik_coded = log_lik_coded(summary, coded) / kLn10;
    report.log10_lik_random = log_lik_random(summary, random) / kLn10;
    report.log10_lr = report.log10_lik_coded - report.log10_lik_random;
    report.lr_scientific = lr_scientific_from_log10(report.log10_lr);
    if (prior) {
        const double prior_log10 = prior_odds_log10(*prior);
        report.posterior = PosteriorOdds{prior_log10, report.log10_lr + prior_log10};
    }
    if (timing) {
        const double factor =
            timing_log10_factor(timing->bang_count, timing->window_seconds,
                                timing->frame_seconds);
        report.timing = TimingFactor{timing->bang_count, timing->window_seconds,
                                     timing->frame_seconds, factor,
                                     report.log10_lr + factor};
    }
    return report;
}

} // namespace sigbayes
