// Command-line front end: evaluates covert-signal evidence from recorded
// event sequences (card-lead orientations, pitch-by-pitch bang logs) or from
// directly entered match summaries, plus rate estimation, calibration
// simulation and sensitivity sweeps.

#include "sigbayes/baseball.hpp"
#include "sigbayes/bridge.hpp"
#include "sigbayes/errors.hpp"
#include "sigbayes/evidence.hpp"
#include "sigbayes/report.hpp"
#include "sigbayes/simulate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace sigbayes;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw parse_error("cannot open input file '" + path + "'");
    return in;
}

void emit(const json& doc, const std::string& json_path, const std::string& text) {
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out.good()) throw parse_error("cannot write JSON report to '" + json_path + "'");
        out << doc.dump(2) << '\n';
    }
}

struct ModelOptions {
    double p = 0.9;
    double q_max = 1.0;
    bool normalize = false;
    double psi = 0.0;
    long m_codes = 1;
    CLI::Option* psi_opt = nullptr;
    CLI::Option* m_codes_opt = nullptr;

    void attach(CLI::App* cmd, double default_p, double default_q_max) {
        p = default_p;
        q_max = default_q_max;
        cmd->add_option("--p", p, "probability of executing the code per event")
            ->capture_default_str();
        cmd->add_option("--qmax", q_max, "upper bound of the uniform range for q")
            ->capture_default_str();
        cmd->add_flag("--normalize-prior", normalize,
                      "divide the random-model integral by q_max (proper uniform prior)");
        psi_opt = cmd->add_option("--psi", psi, "prior probability of cheating");
        m_codes_opt = cmd->add_option("--m-codes", m_codes,
                                      "bound on the number of meaningful codes");
        psi_opt->needs(m_codes_opt);
        m_codes_opt->needs(psi_opt);
    }

    std::optional<PriorParams> prior() const {
        if (psi_opt->count() == 0) return std::nullopt;
        return PriorParams(psi, m_codes);
    }

    void echo(json& request) const {
        request["p"] = p;
        request["q_max"] = q_max;
        request["normalize"] = normalize;
        if (psi_opt->count() > 0) {
            request["psi"] = psi;
            request["m_codes"] = m_codes;
        }
    }
};

struct SummaryOptions {
    std::size_t n = 0, m = 0, positives = 0;
    CLI::Option* n_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* pos_opt = nullptr;

    void attach(CLI::App* cmd, const char* pos_names) {
        n_opt = cmd->add_option("--summary-n", n, "direct entry: applicable events");
        m_opt = cmd->add_option("--summary-m", m, "direct entry: matches");
        pos_opt = cmd->add_option(pos_names, positives, "direct entry: positive signals");
        n_opt->needs(m_opt)->needs(pos_opt);
        m_opt->needs(n_opt);
        pos_opt->needs(n_opt);
    }

    bool present() const { return n_opt->count() > 0; }
    MatchSummary summary() const { return {n, m, positives, 0}; }
};

json quantiles_json(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const auto at = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    return {{"p05", at(0.05)}, {"p25", at(0.25)}, {"p50", at(0.50)},
            {"p75", at(0.75)}, {"p95", at(0.95)}};
}

// ---------------------------------------------------------------------------

int run_bridge(const std::string& input, const std::string& code_name,
               const SummaryOptions& summary_opts, const ModelOptions& model,
               const std::string& json_path) {
    if (input.empty() == !summary_opts.present())
        throw domain_error("bridge: provide either --input or the --summary-* trio");

    const auto code = bridge::hv_code_from_string(code_name);
    json request{{"mode", "bridge"}, {"code", bridge::to_string(code)}};
    model.echo(request);

    MatchSummary summary;
    if (summary_opts.present()) {
        summary = summary_opts.summary();
        request["summary_entry"] = true;
    } else {
        auto in = open_input(input);
        const auto records = bridge::parse_bridge_csv(in);
        summary = summarize(bridge::evaluate_code(code, records));
        request["input"] = input;
    }

    const auto report = build_report(summary, CodedModel(model.p),
                                     RandomModel(model.q_max, model.normalize),
                                     model.prior());

    json doc{{"tool", report::tool_json()}, {"request", request},
             {"warnings", json::array()}};
    doc.update(report::evidence_json(report));
    emit(doc, json_path,
         report::evidence_text(report, "Lead-orientation evidence (code " +
                                           bridge::to_string(code) + ")"));
    return 0;
}

int run_baseball(const std::string& input, const std::string& taxonomy_path,
                 const SummaryOptions& summary_opts, const ModelOptions& model,
                 bool per_game, bool skip_unknown, bool skip_malformed,
                 const CLI::Option* timing_window_opt, double timing_window,
                 double timing_frame, const std::string& json_path) {
    if (input.empty() == !summary_opts.present())
        throw domain_error("baseball: provide either --input or the --summary-* trio");
    if (per_game && summary_opts.present())
        throw domain_error("baseball: --per-game needs --input records");

    json request{{"mode", "baseball"},
                 {"per_game", per_game},
                 {"skip_unknown", skip_unknown},
                 {"skip_malformed", skip_malformed}};
    if (timing_window_opt->count() > 0) {
        request["timing_window"] = timing_window;
        request["timing_frame"] = timing_frame;
    }
    model.echo(request);

    auto taxonomy = baseball::PitchTaxonomy::standard();
    if (!taxonomy_path.empty()) {
        auto in = open_input(taxonomy_path);
        taxonomy = baseball::load_taxonomy_csv(in);
        request["taxonomy"] = taxonomy_path;
    }

    const CodedModel coded(model.p);
    const RandomModel random(model.q_max, model.normalize);
    json warnings = json::array();

    std::vector<baseball::PitchRecord> records;
    if (!input.empty()) {
        auto in = open_input(input);
        auto parsed = baseball::parse_pitch_csv(
            in, skip_malformed ? baseball::MalformedRowPolicy::skip
                               : baseball::MalformedRowPolicy::error);
        records = std::move(parsed.records);
        for (auto& w : parsed.warnings) warnings.push_back(w);
        request["input"] = input;
    } else {
        request["summary_entry"] = true;
    }

    const auto timing_spec = [&](const MatchSummary& s) -> std::optional<TimingSpec> {
        if (timing_window_opt->count() == 0) return std::nullopt;
        return TimingSpec{s.positives, timing_window, timing_frame};
    };

    if (per_game) {
        const auto evidence = baseball::per_game_evidence(
            records, taxonomy, coded, random,
            skip_unknown ? baseball::UnknownPitchPolicy::skip
                         : baseball::UnknownPitchPolicy::error);
        for (const auto& w : evidence.warnings) warnings.push_back(w);

        json doc{{"tool", report::tool_json()}, {"request", request},
                 {"warnings", warnings}};
        doc.update(report::per_game_json(evidence));
        if (const auto prior = model.prior()) {
            const double prior_log10 = prior_odds_log10(*prior);
            doc["posterior"] = {
                {"log10_prior_odds", prior_log10},
                {"log10_posterior_odds", evidence.combined_log10_lr + prior_log10},
            };
        }
        std::string text = "Bang-code evidence, per game\n" + report::per_game_text(evidence);
        if (timing_window_opt->count() > 0) {
            MatchSummary total;
            for (const auto& g : evidence.games) total.positives += g.summary.positives;
            const double factor =
                timing_log10_factor(total.positives, timing_window, timing_frame);
            doc["timing"] = {
                {"bang_count", total.positives},
                {"window_seconds", timing_window},
                {"frame_seconds", timing_frame},
                {"log10_factor", factor},
                {"log10_lr_with_timing", evidence.combined_log10_lr + factor},
            };
        }
        emit(doc, json_path, text);
        return 0;
    }

    MatchSummary summary;
    if (summary_opts.present()) {
        summary = summary_opts.summary();
    } else {
        std::vector<std::string> unknown_warnings;
        const auto obs = baseball::pitch_observations(
            records, taxonomy,
            skip_unknown ? baseball::UnknownPitchPolicy::skip
                         : baseball::UnknownPitchPolicy::error,
            &unknown_warnings);
        for (auto& w : unknown_warnings) warnings.push_back(w);
        summary = summarize(obs);
    }

    const auto report = build_report(summary, coded, random, model.prior(),
                                     timing_spec(summary));
    json doc{{"tool", report::tool_json()}, {"request", request}, {"warnings", warnings}};
    doc.update(report::evidence_json(report));
    emit(doc, json_path, report::evidence_text(report, "Bang-code evidence (code B)"));
    return 0;
}

int run_rate(const std::string& input, const std::string& from_text,
             const std::string& to_text, const std::string& json_path) {
    const auto from = baseball::parse_date(from_text);
    const auto to = baseball::parse_date(to_text);
    auto in = open_input(input);
    const auto records = baseball::parse_pitch_csv(in).records;
    const auto estimate = baseball::estimate_bang_rate(records, from, to);

    json doc{{"tool", report::tool_json()},
             {"request", {{"mode", "rate"}, {"input", input},
                          {"from", from_text}, {"to", to_text}}},
             {"warnings", json::array()}};
    doc.update(report::rate_json(estimate, from, to));
    emit(doc, json_path, report::rate_text(estimate));
    return 0;
}

int run_simulate(const std::string& hypothesis_name, std::size_t n, std::size_t reps,
                 std::uint64_t seed, const CLI::Option* q_fixed_opt, double q_fixed,
                 double q_uniform, const ModelOptions& model,
                 const std::string& json_path) {
    const auto hypothesis = [&] {
        if (hypothesis_name == "coded") return sim::Hypothesis::coded;
        if (hypothesis_name == "random") return sim::Hypothesis::random;
        throw domain_error("simulate: hypothesis must be coded or random");
    }();
    const auto q_spec = q_fixed_opt->count() > 0 ? sim::QSpec::fixed(q_fixed)
                                                 : sim::QSpec::uniform(q_uniform);

    const double p = model.p;
    const sim::SimConfig config{hypothesis, n, p, q_spec, reps, seed};
    const CodedModel coded(p);
    const RandomModel random(model.q_max, model.normalize);
    const auto lrs = sim::lr_distribution(config, coded, random);

    json request{{"mode", "simulate"},
                 {"hypothesis", hypothesis_name},
                 {"n", n},
                 {"reps", reps},
                 {"p", p},
                 {"rng", {{"algorithm", sim::kRngAlgorithm},
                          {"seed_scheme", sim::kSeedScheme},
                          {"master_seed", seed}}}};
    if (q_fixed_opt->count() > 0) request["q_fixed"] = q_fixed;
    else request["q_uniform_max"] = q_uniform;
    request["denominator_q_max"] = model.q_max;
    request["denominator_normalized"] = model.normalize;

    json doc{{"tool", report::tool_json()}, {"request", request},
             {"warnings", json::array()}};

    const double max_abs = std::fabs(*std::max_element(
        lrs.begin(), lrs.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); }));
    if (max_abs <= 300.0) {
        double mean = 0.0;
        for (double v : lrs) mean += std::pow(10.0, v);
        mean /= static_cast<double>(lrs.size());
        doc["mean_lr"] = mean;
    } else {
        doc["mean_lr"] = nullptr;
        doc["warnings"].push_back("mean LR suppressed: |log10 LR| exceeds 300");
    }
    doc["log10_lr_quantiles"] = quantiles_json(lrs);
    json markov = json::array();
    for (double k : {10.0, 100.0}) {
        const auto check = sim::markov_bound_check(lrs, k);
        markov.push_back({{"k", check.k},
                          {"empirical_fraction", check.empirical_fraction},
                          {"bound", check.bound},
                          {"slack", check.slack},
                          {"pass", check.pass}});
    }
    doc["markov"] = markov;

    std::ostringstream text;
    text << "Simulation (" << hypothesis_name << ", n=" << n << ", reps=" << reps
         << ", seed=" << seed << ", rng=" << sim::kRngAlgorithm << ")\n";
    if (doc["mean_lr"].is_number())
        text << "  mean LR            " << doc["mean_lr"].get<double>() << '\n';
    text << "  log10 LR quantiles p05=" << doc["log10_lr_quantiles"]["p05"].get<double>()
         << " p50=" << doc["log10_lr_quantiles"]["p50"].get<double>()
         << " p95=" << doc["log10_lr_quantiles"]["p95"].get<double>() << '\n';
    for (const auto& row : markov)
        text << "  P(LR >= " << row["k"].get<double>()
             << ")  empirical=" << row["empirical_fraction"].get<double>()
             << " bound=" << row["bound"].get<double>()
             << (row["pass"].get<bool>() ? "  ok" : "  EXCEEDED") << '\n';
    emit(doc, json_path, text.str());
    return 0;
}

int run_sweep(const std::string& param_name, const SummaryOptions& summary_opts,
              double from, double to, std::size_t steps, const ModelOptions& model,
              const std::string& json_path) {
    if (!summary_opts.present())
        throw domain_error("sweep: the --summary-* trio is required");
    const auto parameter = [&] {
        if (param_name == "p") return SweepParameter::p;
        if (param_name == "qmax" || param_name == "q_max") return SweepParameter::q_max;
        throw domain_error("sweep: --param must be p or qmax");
    }();

    const MatchSummary summary = summary_opts.summary();
    const auto rows = sweep(summary, parameter, {from, to, steps}, CodedModel(model.p),
                            RandomModel(model.q_max, model.normalize));

    json request{{"mode", "sweep"}, {"param", param_name}, {"from", from},
                 {"to", to}, {"steps", steps}};
    model.echo(request);
    request["summary"] = report::summary_json(summary);

    json table = json::array();
    for (const auto& row : rows)
        table.push_back({{"value", row.value}, {"log10_lr", row.log10_lr}});
    json doc{{"tool", report::tool_json()}, {"request", request},
             {"rows", table}, {"warnings", json::array()}};

    std::ostringstream text;
    text << "Sensitivity sweep over " << param_name << "\n";
    char buf[64];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "  %-12.8g %14.6f\n", row.value, row.log10_lr);
        text << buf;
    }
    emit(doc, json_path, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Likelihood-ratio evaluation of covert signaling codes"};
    app.require_subcommand(1);

    // bridge
    auto* bridge_cmd = app.add_subcommand("bridge", "lead-orientation code evidence");
    std::string bridge_input, bridge_code = "c", bridge_json;
    SummaryOptions bridge_summary;
    ModelOptions bridge_model;
    bridge_cmd->add_option("--input", bridge_input, "lead CSV (board,hand,lead,orientation)");
    bridge_cmd->add_option("--code", bridge_code, "c | deuce | parity")->capture_default_str();
    bridge_summary.attach(bridge_cmd, "--summary-h,--summary-positives");
    bridge_model.attach(bridge_cmd, 0.9, 1.0);
    bridge_cmd->add_option("--json", bridge_json, "write the JSON report here");

    // baseball
    auto* baseball_cmd = app.add_subcommand("baseball", "bang code evidence");
    std::string bb_input, bb_taxonomy, bb_json;
    SummaryOptions bb_summary;
    ModelOptions bb_model;
    bool bb_per_game = false, bb_skip_unknown = false, bb_skip_malformed = false;
    double bb_window = 6.0, bb_frame = 30.0;
    baseball_cmd->add_option("--input", bb_input,
                             "pitch CSV (game_id,date,opponent,inning,pitch_seq,pitch_type,bangs)");
    baseball_cmd->add_option("--taxonomy", bb_taxonomy, "taxonomy override CSV");
    bb_summary.attach(baseball_cmd, "--summary-b,--summary-positives");
    bb_model.attach(baseball_cmd, 0.8, 0.1);
    baseball_cmd->add_flag("--per-game", bb_per_game, "group evidence by game_id");
    baseball_cmd->add_flag("--skip-unknown", bb_skip_unknown,
                           "skip unknown pitch types with a warning");
    baseball_cmd->add_flag("--skip-malformed", bb_skip_malformed,
                           "skip malformed CSV rows with a warning");
    auto* bb_window_opt =
        baseball_cmd->add_option("--timing-window", bb_window, "pre-pitch window seconds");
    auto* bb_frame_opt =
        baseball_cmd->add_option("--timing-frame", bb_frame, "full frame seconds");
    bb_window_opt->needs(bb_frame_opt);
    bb_frame_opt->needs(bb_window_opt);
    baseball_cmd->add_option("--json", bb_json, "write the JSON report here");

    // rate
    auto* rate_cmd = app.add_subcommand("rate", "quiet-period bang rate");
    std::string rate_input, rate_from, rate_to, rate_json;
    rate_cmd->add_option("--input", rate_input, "pitch CSV")->required();
    rate_cmd->add_option("--from", rate_from, "start date (yyyy-mm-dd)")->required();
    rate_cmd->add_option("--to", rate_to, "end date (yyyy-mm-dd)")->required();
    rate_cmd->add_option("--json", rate_json, "write the JSON report here");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo LR calibration");
    std::string sim_hypothesis = "random", sim_json;
    std::size_t sim_n = 20, sim_reps = 10000;
    std::uint64_t sim_seed = 12345;
    double sim_q_fixed = 0.0, sim_q_uniform = 1.0;
    ModelOptions sim_model;
    sim_cmd->add_option("--hypothesis", sim_hypothesis, "coded | random")
        ->capture_default_str();
    sim_cmd->add_option("--n", sim_n, "events per rep")->capture_default_str();
    sim_cmd->add_option("--reps", sim_reps, "number of reps")->capture_default_str();
    sim_cmd->add_option("--seed", sim_seed, "master seed")->capture_default_str();
    auto* sim_q_fixed_opt =
        sim_cmd->add_option("--q", sim_q_fixed, "fixed q for random generation");
    auto* sim_q_uniform_opt = sim_cmd->add_option(
        "--q-uniform", sim_q_uniform, "draw q uniformly from [0, this] per rep");
    sim_q_fixed_opt->excludes(sim_q_uniform_opt);
    sim_model.attach(sim_cmd, 0.6, 1.0);
    sim_cmd->add_option("--json", sim_json, "write the JSON report here");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "sensitivity sweep of p or q_max");
    std::string sweep_param = "p", sweep_json;
    double sweep_from = 0.0, sweep_to = 0.0;
    std::size_t sweep_steps = 25;
    SummaryOptions sweep_summary;
    ModelOptions sweep_model;
    sweep_cmd->add_option("--param", sweep_param, "p | qmax")->capture_default_str();
    sweep_cmd->add_option("--from", sweep_from, "grid start")->required();
    sweep_cmd->add_option("--to", sweep_to, "grid end")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "grid points")->capture_default_str();
    sweep_summary.attach(sweep_cmd, "--summary-positives,--summary-h,--summary-b");
    sweep_model.attach(sweep_cmd, 0.9, 1.0);
    sweep_cmd->add_option("--json", sweep_json, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bridge_cmd->parsed())
            return run_bridge(bridge_input, bridge_code, bridge_summary, bridge_model,
                              bridge_json);
        if (baseball_cmd->parsed())
            return run_baseball(bb_input, bb_taxonomy, bb_summary, bb_model, bb_per_game,
                                bb_skip_unknown, bb_skip_malformed, bb_window_opt,
                                bb_window, bb_frame, bb_json);
        if (rate_cmd->parsed()) return run_rate(rate_input, rate_from, rate_to, rate_json);
        if (sim_cmd->parsed())
            return run_simulate(sim_hypothesis, sim_n, sim_reps, sim_seed,
                                sim_q_fixed_opt, sim_q_fixed, sim_q_uniform, sim_model,
                                sim_json);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_param, sweep_summary, sweep_from, sweep_to,
                             sweep_steps, sweep_model, sweep_json);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const numeric_failure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
