#include "sigbayes/baseball.hpp"
#include "sigbayes/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace sigbayes;
using namespace sigbayes::baseball;

namespace {

std::string fixture_path(const char* name) {
    return std::string(SIGBAYES_FIXTURE_DIR) + "/" + name;
}

std::vector<PitchRecord> load_fixture(const char* name) {
    std::ifstream in(fixture_path(name));
    REQUIRE(in.good());
    return parse_pitch_csv(in).records;
}

} // namespace

TEST_SUITE("baseball") {

TEST_CASE("date parsing is strict about the calendar") {
    const Date d = parse_date("2017-06-30");
    CHECK(d.year == 2017);
    CHECK(d.month == 6);
    CHECK(d.day == 30);
    CHECK(to_string(d) == "2017-06-30");
    CHECK(parse_date("2016-02-29") == Date{2016, 2, 29}); // leap year
    CHECK_THROWS_AS(parse_date("2017-06-31"), parse_error);
    CHECK_THROWS_AS(parse_date("2017-02-29"), parse_error);
    CHECK_THROWS_AS(parse_date("2017-13-01"), parse_error);
    CHECK_THROWS_AS(parse_date("2017/06/30"), parse_error);
    CHECK_THROWS_AS(parse_date("17-06-30"), parse_error);
}

TEST_CASE("pitch csv accepts well-formed rows") {
    std::istringstream in("game_id,date,opponent,inning,pitch_seq,pitch_type,bangs\n"
                          "G1,2017-06-30,NYY,1,1,FF,0\n");
    const auto result = parse_pitch_csv(in);
    REQUIRE(result.records.size() == 1);
    CHECK(result.warnings.empty());
    const auto& rec = result.records[0];
    CHECK(rec.game_id == "G1");
    CHECK(rec.opponent == "NYY");
    CHECK(rec.inning == 1);
    CHECK(rec.pitch_seq == 1);
    CHECK(rec.pitch_type == "FF");
    CHECK(rec.bangs == 0);
}

TEST_CASE("pitch csv rejects malformed rows with line numbers") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_pitch_csv(in);
    };
    const std::string header = "game_id,date,opponent,inning,pitch_seq,pitch_type,bangs\n";
    CHECK_THROWS_WITH_AS(parse(header + "G1,2017-06-30,NYY,1,1,FF,-1\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse(header + "G1,2017-06-31,NYY,1,1,FF,0\n"),
                         doctest::Contains("calendar"), parse_error);
    CHECK_THROWS_WITH_AS(parse(header + "G1,2017-06-30,NYY,1,1,FF,1.5\n"),
                         doctest::Contains("integer"), parse_error);
    CHECK_THROWS_WITH_AS(parse(header + "G1,2017-06-30,NYY,1,1,FF,0\n"
                                        "G1,2017-06-30,NYY,1,1,SL,0\n"),
                         doctest::Contains("duplicate"), parse_error);
    CHECK_THROWS_WITH_AS(parse("game_id,date,opponent,inning,pitch_type,bangs\n"),
                         doctest::Contains("header"), parse_error);
}

TEST_CASE("skip policy keeps good rows and reports the bad ones") {
    std::ifstream in(fixture_path("malformed_pitches.csv"));
    REQUIRE(in.good());
    const auto result = parse_pitch_csv(in, MalformedRowPolicy::skip);
    CHECK(result.records.size() == 8);
    REQUIRE(result.warnings.size() == 2);
    CHECK(result.warnings[0].find("line 4") != std::string::npos);
    CHECK(result.warnings[1].find("line 7") != std::string::npos);
}

TEST_CASE("code B maps fastballs to silence and off-speed to a bang") {
    const auto taxonomy = PitchTaxonomy::standard();
    CHECK(code_b_expected("FF", taxonomy) == Prediction::zero);
    CHECK(code_b_expected("SI", taxonomy) == Prediction::zero);
    CHECK(code_b_expected("SL", taxonomy) == Prediction::one);
    CHECK(code_b_expected("CH", taxonomy) == Prediction::one);
    CHECK_THROWS_WITH_AS(code_b_expected("XX", taxonomy),
                         doctest::Contains("unknown pitch type 'XX'"), domain_error);
    // every taxonomy token maps to exactly one class
    for (const auto& t : taxonomy.fastballs())
        CHECK(code_b_expected(t, taxonomy) == Prediction::zero);
    for (const auto& t : taxonomy.offspeed())
        CHECK(code_b_expected(t, taxonomy) == Prediction::one);
}

TEST_CASE("taxonomy rejects overlapping classes") {
    CHECK_THROWS_AS(PitchTaxonomy({"FF"}, {"FF", "SL"}), domain_error);
    std::istringstream in("pitch_type,class\nFF,fastball\nFF,offspeed\n");
    CHECK_THROWS_AS(load_taxonomy_csv(in), parse_error);
    std::istringstream bad_class("pitch_type,class\nFF,medium\n");
    CHECK_THROWS_WITH_AS(load_taxonomy_csv(bad_class), doctest::Contains("line 2"),
                         parse_error);
}

TEST_CASE("taxonomy override file extends the standard set") {
    std::ifstream in(fixture_path("taxonomy_override.csv"));
    REQUIRE(in.good());
    const auto taxonomy = load_taxonomy_csv(in);
    CHECK(taxonomy.classify("SV") == PitchTaxonomy::Class::offspeed);
    CHECK(taxonomy.classify("FA") == PitchTaxonomy::Class::fastball);
    CHECK(taxonomy.classify("EP") == PitchTaxonomy::Class::unknown); // not listed
}

TEST_CASE("binarize_bangs") {
    CHECK(binarize_bangs(0) == false);
    CHECK(binarize_bangs(1) == true);
    CHECK(binarize_bangs(2) == true);
    CHECK_THROWS_AS(binarize_bangs(-1), domain_error);
}

TEST_CASE("quiet-period estimator reproduces the fixture statistics") {
    const auto records = load_fixture("quiet_period.csv");
    REQUIRE(records.size() == 1000);
    const auto est = estimate_bang_rate(records, Date{2017, 4, 3}, Date{2017, 5, 24});
    CHECK(est.per_pitch_rate == 0.015);
    CHECK(est.per_game_max_rate == 0.03);
    CHECK(est.games == 22);
    CHECK(est.pitches == 1000);
    CHECK(est.per_pitch_rate <= est.per_game_max_rate);

    // a narrower window sees fewer games
    const auto april = estimate_bang_rate(records, Date{2017, 4, 1}, Date{2017, 4, 30});
    CHECK(april.games < 22);

    CHECK_THROWS_AS(estimate_bang_rate(records, Date{2017, 5, 24}, Date{2017, 4, 3}),
                    domain_error);
    CHECK_THROWS_AS(estimate_bang_rate(records, Date{2019, 1, 1}, Date{2019, 12, 31}),
                    domain_error);
}

TEST_CASE("degenerate rate inputs") {
    std::vector<PitchRecord> records;
    for (int i = 1; i <= 5; ++i)
        records.push_back({"G1", Date{2017, 4, 10}, "SEA", 1, i, "FF", 1});
    const auto est = estimate_bang_rate(records, Date{2017, 4, 1}, Date{2017, 4, 30});
    CHECK(est.per_pitch_rate == 1.0);
    CHECK(est.per_game_max_rate == 1.0);
    CHECK(est.games == 1);
    CHECK(est.pitches == 5);

    for (auto& rec : records) rec.bangs = 0;
    const auto zero = estimate_bang_rate(records, Date{2017, 4, 1}, Date{2017, 4, 30});
    CHECK(zero.per_pitch_rate == 0.0);
    CHECK(zero.per_game_max_rate == 0.0);
}

TEST_CASE("per-game evidence adds in log space") {
    const auto records = load_fixture("two_games.csv");
    const auto taxonomy = PitchTaxonomy::standard();
    const CodedModel coded(0.8);
    const RandomModel random(0.1);

    const auto per_game = per_game_evidence(records, taxonomy, coded, random);
    REQUIRE(per_game.games.size() == 2);
    CHECK(per_game.games[0].game_id == "HOU-MIN-1");
    CHECK(per_game.games[1].game_id == "HOU-MIN-2");

    const MatchSummary a = per_game.games[0].summary;
    CHECK(a.n == 8);
    CHECK(a.m == 6);
    CHECK(a.positives == 4);
    const MatchSummary b = per_game.games[1].summary;
    CHECK(b.n == 6);
    CHECK(b.m == 5);
    CHECK(b.positives == 2);

    CHECK(per_game.games[0].log10_lr ==
          doctest::Approx(3.870101754339877).epsilon(1e-12));
    CHECK(per_game.games[1].log10_lr ==
          doctest::Approx(2.427879768373757).epsilon(1e-12));
    CHECK(per_game.combined_log10_lr ==
          per_game.games[0].log10_lr + per_game.games[1].log10_lr);

    // grouping preserves the record multiset
    CHECK(a.n + a.excluded + b.n + b.excluded == records.size());
}

TEST_CASE("series fixture pools to the headline counts") {
    const auto records = load_fixture("yankees_series.csv");
    REQUIRE(records.size() == 267);
    const auto taxonomy = PitchTaxonomy::standard();
    const auto per_game =
        per_game_evidence(records, taxonomy, CodedModel(0.8), RandomModel(0.1));
    REQUIRE(per_game.games.size() == 1);
    const MatchSummary s = per_game.games[0].summary;
    CHECK(s.n == 267);
    CHECK(s.m == 201);
    CHECK(s.positives == 85);
    CHECK(per_game.combined_log10_lr ==
          doctest::Approx(30.537197109310696).epsilon(1e-12));
}

TEST_CASE("unknown pitch types: hard error or skip with warning") {
    std::vector<PitchRecord> records{
        {"G1", Date{2017, 6, 1}, "SEA", 1, 1, "FF", 0},
        {"G1", Date{2017, 6, 1}, "SEA", 1, 2, "ZZ", 1},
        {"G1", Date{2017, 6, 1}, "SEA", 1, 3, "SL", 1},
    };
    const auto taxonomy = PitchTaxonomy::standard();
    CHECK_THROWS_AS(pitch_observations(records, taxonomy, UnknownPitchPolicy::error),
                    domain_error);
    std::vector<std::string> warnings;
    const auto obs =
        pitch_observations(records, taxonomy, UnknownPitchPolicy::skip, &warnings);
    CHECK(obs.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("ZZ") != std::string::npos);

    // a game with zero applicable records reports lr = 0
    std::vector<PitchRecord> unknown_only{
        {"G2", Date{2017, 6, 2}, "SEA", 1, 1, "ZZ", 0},
    };
    const auto per_game = per_game_evidence(unknown_only, taxonomy, CodedModel(0.8),
                                            RandomModel(0.1), UnknownPitchPolicy::skip);
    REQUIRE(per_game.games.size() == 1);
    CHECK(per_game.games[0].log10_lr == 0.0);
    CHECK(per_game.combined_log10_lr == 0.0);
}

} // TEST_SUITE
