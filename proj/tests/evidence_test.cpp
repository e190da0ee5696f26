#include "sigbayes/evidence.hpp"
#include "sigbayes/errors.hpp"
#include "sigbayes/numerics.hpp"
#include "support/bignat.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace sigbayes;
using testsupport::binomial;

namespace {

// 85 observations with 83 matches and 45 observed ones, as in the card
// orientation case summary.
std::vector<SignalObservation> card_case_observations() {
    std::vector<SignalObservation> obs;
    for (int i = 0; i < 85; ++i) {
        const bool observed = i < 45;
        Prediction expected = observed ? Prediction::one : Prediction::zero;
        if (i >= 83) expected = observed ? Prediction::zero : Prediction::one; // 2 mismatches
        obs.push_back({expected, observed});
    }
    return obs;
}

} // namespace

TEST_SUITE("evidence") {

TEST_CASE("summarize counts applicable, matched and positive signals") {
    CHECK(summarize({}).n == 0);
    CHECK(summarize({}).excluded == 0);

    // positives counts observed ones among applicable entries, matched or not
    const std::vector<SignalObservation> obs{
        {Prediction::one, true},
        {Prediction::zero, true},
        {Prediction::not_applicable, false},
    };
    const MatchSummary s = summarize(obs);
    CHECK(s.n == 2);
    CHECK(s.m == 1);
    CHECK(s.positives == 2);
    CHECK(s.excluded == 1);

    const std::vector<SignalObservation> obs2{
        {Prediction::one, true},
        {Prediction::one, false},
        {Prediction::not_applicable, false},
    };
    const MatchSummary s2 = summarize(obs2);
    CHECK(s2.n == 2);
    CHECK(s2.m == 1);
    CHECK(s2.positives == 1);
    CHECK(s2.excluded == 1);

    const MatchSummary card = summarize(card_case_observations());
    CHECK(card.n == 85);
    CHECK(card.m == 83);
    CHECK(card.positives == 45);
    CHECK(card.excluded == 0);
}

TEST_CASE("model constructors enforce their domains") {
    CHECK_THROWS_AS(CodedModel(0.0), domain_error);
    CHECK_THROWS_AS(CodedModel(1.0), domain_error);
    CHECK_NOTHROW(CodedModel(1.0 - 1e-12));
    CHECK_THROWS_AS(RandomModel(0.0), domain_error);
    CHECK_THROWS_AS(RandomModel(1.5), domain_error);
    CHECK_THROWS_AS(PriorParams(0.0, 5), domain_error);
    CHECK_THROWS_AS(PriorParams(1.0, 5), domain_error);
    CHECK_THROWS_AS(PriorParams(0.5, 0), domain_error);
}

TEST_CASE("log_lik_coded closed forms") {
    const double ln10 = std::log(10.0);
    CHECK(log_lik_coded({0, 0, 0, 0}, CodedModel(0.9)) == 0.0);
    CHECK(log_lik_coded({85, 83, 45, 0}, CodedModel(0.9)) / ln10 ==
          doctest::Approx(-5.797871716536036).epsilon(1e-13));
    CHECK(log_lik_coded({267, 201, 85, 0}, CodedModel(0.8)) / ln10 ==
          doctest::Approx(-65.610932900796584).epsilon(1e-13));
    CHECK_THROWS_AS(log_lik_coded({3, 4, 0, 0}, CodedModel(0.9)), domain_error);
}

TEST_CASE("log_lik_random closed forms") {
    // full-range case equals 1/(86 * C(85,45)) exactly
    const double expect = -(std::log(86.0) + binomial(85, 45).log_natural());
    CHECK(log_lik_random({85, 83, 45, 0}, RandomModel(1.0)) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(log_lik_random({0, 0, 0, 0}, RandomModel(1.0)) == 0.0);
    CHECK(log_lik_random({267, 201, 85, 0}, RandomModel(0.1)) ==
          doctest::Approx(-221.389250880526333).epsilon(1e-12));
}

TEST_CASE("log10_lr headline values") {
    // trash-can case: n=267, m=201, b=85, p=0.8, q_max=0.1 unnormalized
    CHECK(log10_lr({267, 201, 85, 0}, CodedModel(0.8), RandomModel(0.1)) ==
          doctest::Approx(30.537197109310696).epsilon(1e-12));
    // card case: exact closed-form value; the widely quoted ~4e19 figure for
    // this case is an order of magnitude below the exact number.
    CHECK(log10_lr({85, 83, 45, 0}, CodedModel(0.9), RandomModel(1.0)) ==
          doctest::Approx(20.596972703351245).epsilon(1e-12));
    CHECK(log10_lr({0, 0, 0, 0}, CodedModel(0.37), RandomModel(1.0)) == 0.0);
}

TEST_CASE("prior and posterior odds") {
    CHECK(prior_odds_log10(PriorParams(0.5, 1)) == 0.0);
    CHECK(prior_odds_log10(PriorParams(0.01, 100)) ==
          doctest::Approx(-3.995635194597550).epsilon(1e-13));
    CHECK(prior_odds_log10(PriorParams(0.5, 10)) == doctest::Approx(-1.0).epsilon(1e-15));

    CHECK(posterior_odds_log10(20.0, PriorParams(0.5, 1)) == doctest::Approx(20.0));
    CHECK(posterior_odds_log10(19.6, PriorParams(0.5, 10)) ==
          doctest::Approx(18.6).epsilon(1e-13));
    CHECK(posterior_odds_log10(0.0, PriorParams(0.01, 100)) ==
          doctest::Approx(-3.995635194597550).epsilon(1e-13));
}

TEST_CASE("posterior at lr=1 equals the prior odds exactly") {
    for (double psi : {0.001, 0.12, 0.5, 0.93}) {
        for (long m : {1L, 7L, 1000L}) {
            const PriorParams prior(psi, m);
            CHECK(posterior_odds_log10(0.0, prior) == prior_odds_log10(prior));
        }
    }
}

TEST_CASE("timing factor") {
    CHECK(timing_log10_factor(1, 6.0, 30.0) == doctest::Approx(std::log10(5.0)).epsilon(1e-15));
    CHECK(timing_log10_factor(0, 6.0, 30.0) == 0.0);
    CHECK(timing_log10_factor(3, 6.0, 30.0) ==
          doctest::Approx(3.0 * std::log10(5.0)).epsilon(1e-15));
    CHECK_THROWS_AS(timing_log10_factor(1, 31.0, 30.0), domain_error);
    CHECK_THROWS_AS(timing_log10_factor(1, 0.0, 30.0), domain_error);
}

TEST_CASE("sweep over p") {
    const MatchSummary card{85, 83, 45, 0};
    // every p above 0.9 strengthens the ratio relative to the 0.9 anchor;
    // strict monotonicity only holds below the likelihood peak at p = m/n
    const auto rows = sweep(card, SweepParameter::p, {0.9, 0.99, 10},
                            CodedModel(0.9), RandomModel(1.0));
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].value > rows[i - 1].value);
        CHECK(rows[i].log10_lr > rows.front().log10_lr);
    }
    CHECK(rows.front().value == doctest::Approx(0.9));
    CHECK(rows.back().value == doctest::Approx(0.99));

    const auto below_peak = sweep(card, SweepParameter::p, {0.9, 0.97, 8},
                                  CodedModel(0.9), RandomModel(1.0));
    for (std::size_t i = 1; i < below_peak.size(); ++i)
        CHECK(below_peak[i].log10_lr > below_peak[i - 1].log10_lr);

    // degenerate grid: two identical rows
    const auto flat = sweep(card, SweepParameter::p, {0.8, 0.8, 2},
                            CodedModel(0.9), RandomModel(1.0));
    REQUIRE(flat.size() == 2);
    CHECK(flat[0].value == flat[1].value);
    CHECK(flat[0].log10_lr == flat[1].log10_lr);

    // per-point closed-form anchors for n=10, m=5, h=5, q_max=1
    const MatchSummary small{10, 5, 5, 0};
    const auto pts = sweep(small, SweepParameter::p, {0.5, 0.7, 3},
                           CodedModel(0.6), RandomModel(1.0));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].log10_lr == doctest::Approx(0.432493269299957).epsilon(1e-12));
    CHECK(pts[1].log10_lr == doctest::Approx(0.343849434497800).epsilon(1e-12));
    CHECK(pts[2].log10_lr == doctest::Approx(0.053889699609365).epsilon(1e-12));

    CHECK_THROWS_AS(sweep(card, SweepParameter::p, {0.0, 0.9, 5}, CodedModel(0.9),
                          RandomModel(1.0)),
                    domain_error);
    CHECK_THROWS_AS(sweep(card, SweepParameter::p, {0.5, 0.9, 1}, CodedModel(0.9),
                          RandomModel(1.0)),
                    domain_error);
    CHECK_THROWS_AS(sweep(card, SweepParameter::q_max, {0.5, 1.1, 5}, CodedModel(0.9),
                          RandomModel(1.0)),
                    domain_error);
}

TEST_CASE("log10_lr strictly increases in m for p above one half") {
    const RandomModel random(0.3);
    const CodedModel coded(0.8);
    double prev = -1e9;
    for (std::size_t m = 0; m <= 40; ++m) {
        const double lr = log10_lr({40, m, 12, 0}, coded, random);
        CHECK(lr > prev);
        prev = lr;
    }
}

TEST_CASE("normalize toggle shifts the LR by exactly log10 q_max") {
    const MatchSummary s{267, 201, 85, 0};
    const CodedModel coded(0.8);
    for (double q_max : {0.05, 0.1, 0.5, 1.0}) {
        const double unnorm = log10_lr(s, coded, RandomModel(q_max, false));
        const double norm = log10_lr(s, coded, RandomModel(q_max, true));
        CHECK(norm == doctest::Approx(unnorm + std::log10(q_max)).epsilon(1e-12));
    }
}

TEST_CASE("scientific rendering round-trips") {
    for (double v : {30.537197109310696, 20.596972703351245, 0.0, -3.2,
                     -96.148130010107280, 299.9, 1.0000001}) {
        const std::string text = lr_scientific_from_log10(v);
        CHECK(std::fabs(log10_from_scientific(text) - v) <= 1e-6);
    }
    CHECK(lr_scientific_from_log10(30.537197109310696) == "3.445063E+30");
}

TEST_CASE("build_report wires components together") {
    const MatchSummary s{267, 201, 85, 0};
    const auto report = build_report(s, CodedModel(0.8), RandomModel(0.1),
                                     PriorParams(0.5, 10),
                                     TimingSpec{85, 6.0, 30.0});
    CHECK(report.log10_lr == report.log10_lik_coded - report.log10_lik_random);
    CHECK(report.log10_lr == doctest::Approx(30.537197109310696).epsilon(1e-12));
    REQUIRE(report.posterior.has_value());
    CHECK(report.posterior->log10_prior_odds == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(report.posterior->log10_posterior_odds ==
          doctest::Approx(report.log10_lr - 1.0).epsilon(1e-13));
    REQUIRE(report.timing.has_value());
    CHECK(report.timing->log10_factor ==
          doctest::Approx(85.0 * std::log10(5.0)).epsilon(1e-12));
    CHECK(report.timing->log10_lr_with_timing ==
          doctest::Approx(report.log10_lr + 85.0 * std::log10(5.0)).epsilon(1e-12));
    CHECK(std::fabs(log10_from_scientific(report.lr_scientific) - report.log10_lr) <= 1e-6);

    // posterior and timing blocks are omitted unless requested
    const auto bare = build_report(s, CodedModel(0.8), RandomModel(0.1));
    CHECK_FALSE(bare.posterior.has_value());
    CHECK_FALSE(bare.timing.has_value());
}

} // TEST_SUITE
