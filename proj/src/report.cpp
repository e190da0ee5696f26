#include "sigbayes/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sigbayes::report {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void line(std::ostringstream& out, const std::string& label, const std::string& value) {
    out << "  ";
    out << label;
    for (std::size_t i = label.size(); i < 26; ++i) out << ' ';
    out << value << '\n';
}

} // namespace

std::string verbal_scale(double log10_lr) {
    const double a = std::fabs(log10_lr);
    const char* strength;
    if (a < 0.5) return "no meaningful discrimination between the hypotheses";
    if (a < 1.0) strength = "weak";
    else if (a < 2.0) strength = "moderate";
    else if (a < 3.0) strength = "moderately strong";
    else if (a < 4.0) strength = "strong";
    else if (a < 6.0) strength = "very strong";
    else strength = "extremely strong";
    return std::string(strength) + " support for the " +
           (log10_lr > 0 ? "coded" : "random") + " hypothesis";
}

nlohmann::json tool_json() {
    return {{"name", kToolName}, {"version", kToolVersion}};
}

nlohmann::json summary_json(const MatchSummary& summary) {
    return {{"n", summary.n},
            {"m", summary.m},
            {"positives", summary.positives},
            {"excluded", summary.excluded}};
}

nlohmann::json evidence_json(const EvidenceReport& report) {
    nlohmann::json j{
        {"summary", summary_json(report.summary)},
        {"log10_lik_coded", report.log10_lik_coded},
        {"log10_lik_random", report.log10_lik_random},
        {"log10_lr", report.log10_lr},
        {"lr_scientific", report.lr_scientific},
        {"verbal", verbal_scale(report.log10_lr)},
    };
    if (report.posterior) {
        j["posterior"] = {
            {"log10_prior_odds", report.posterior->log10_prior_odds},
            {"log10_posterior_odds", report.posterior->log10_posterior_odds},
        };
    }
    if (report.timing) {
        j["timing"] = {
            {"bang_count", report.timing->bang_count},
            {"window_seconds", report.timing->window_seconds},
            {"frame_seconds", report.timing->frame_seconds},
            {"log10_factor", report.timing->log10_factor},
            {"log10_lr_with_timing", report.timing->log10_lr_with_timing},
        };
    }
    return j;
}

nlohmann::json per_game_json(const baseball::PerGameEvidence& per_game) {
    nlohmann::json games = nlohmann::json::array();
    for (const auto& game : per_game.games) {
        nlohmann::json g = summary_json(game.summary);
        g["game_id"] = game.game_id;
        g["date"] = baseball::to_string(game.date);
        g["opponent"] = game.opponent;
        g["log10_lr"] = game.log10_lr;
        games.push_back(std::move(g));
    }
    return {{"games", std::move(games)},
            {"combined_log10_lr", per_game.combined_log10_lr},
            {"combined_assumes", "independent q per game"}};
}

nlohmann::json rate_json(const baseball::BangRateEstimate& estimate,
                         const baseball::Date& from, const baseball::Date& to) {
    return {{"from", baseball::to_string(from)},
            {"to", baseball::to_string(to)},
            {"per_pitch_rate", estimate.per_pitch_rate},
            {"per_game_max_rate", estimate.per_game_max_rate},
            {"games", estimate.games},
            {"pitches", estimate.pitches}};
}

std::string evidence_text(const EvidenceReport& report, const std::string& heading) {
    std::ostringstream out;
    out << heading << '\n';
    line(out, "events (n)", std::to_string(report.summary.n));
    line(out, "matches (m)", std::to_string(report.summary.m));
    line(out, "positive signals", std::to_string(report.summary.positives));
    line(out, "excluded", std::to_string(report.summary.excluded));
    line(out, "log10 P(data | coded)", fmt(report.log10_lik_coded));
    line(out, "log10 P(data | random)", fmt(report.log10_lik_random));
    line(out, "log10 LR", fmt(report.log10_lr));
    line(out, "LR", report.lr_scientific);
    line(out, "verbal scale", verbal_scale(report.log10_lr));
    if (report.posterior) {
        line(out, "log10 prior odds", fmt(report.posterior->log10_prior_odds));
        line(out, "log10 posterior odds", fmt(report.posterior->log10_posterior_odds));
    }
    if (report.timing) {
        line(out, "timing bangs", std::to_string(report.timing->bang_count));
        line(out, "timing log10 factor", fmt(report.timing->log10_factor));
        line(out, "log10 LR with timing", fmt(report.timing->log10_lr_with_timing));
    }
    return out.str();
}

std::string per_game_text(const baseball::PerGameEvidence& per_game) {
    std::ostringstream out;
    out << "  per-game breakdown (combined figure assumes independent q per game)\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-14s %-11s %-9s %6s %6s %6s %6s %12s\n",
                  "game", "date", "opponent", "n", "m", "pos", "excl", "log10 LR");
    out << buf;
    for (const auto& game : per_game.games) {
        std::snprintf(buf, sizeof(buf), "  %-14s %-11s %-9s %6zu %6zu %6zu %6zu %12.4f\n",
                      game.game_id.c_str(), baseball::to_string(game.date).c_str(),
                      game.opponent.c_str(), game.summary.n, game.summary.m,
                      game.summary.positives, game.summary.excluded, game.log10_lr);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "  combined log10 LR: %.6f\n",
                  per_game.combined_log10_lr);
    out << buf;
    return out.str();
}

std::string rate_text(const baseball::BangRateEstimate& estimate) {
    std::ostringstream out;
    out << "Quiet-period bang rate\n";
    line(out, "pitches", std::to_string(estimate.pitches));
    line(out, "games", std::to_string(estimate.games));
    line(out, "per-pitch rate", fmt(estimate.per_pitch_rate));
    line(out, "per-game peak rate", fmt(estimate.per_game_max_rate));
    return out.str();
}

} // namespace sigbayes::report
