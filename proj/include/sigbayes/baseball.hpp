#pragma once

// Pitch-log ingestion, the bang code, quiet-period rate estimation and
// per-game evidence grouping. A bang present = signal 1, absent = signal 0;
// the code predicts silence on fastball-family pitches and a bang otherwise.

#include "sigbayes/evidence.hpp"

#include <compare>
#include <istream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sigbayes::baseball {

struct Date {
    int year;
    int month;
    int day;
    friend auto operator<=>(const Date&, const Date&) = default;
};

Date parse_date(const std::string& iso); // ISO-8601 yyyy-mm-dd, calendar-valid
std::string to_string(const Date& date);

struct PitchRecord {
    std::string game_id;
    Date date;
    std::string opponent;
    int inning;    // >= 1
    int pitch_seq; // >= 1, order within game; unique per (game_id, pitch_seq)
    std::string pitch_type;
    int bangs; // >= 0, raw count; matching uses presence/absence only
};

// Disjoint fastball/off-speed token sets. The standard set covers the usual
// MLB pitch-type abbreviations; an override file can replace it.
class PitchTaxonomy {
public:
    enum class Class { fastball, offspeed, unknown };

    PitchTaxonomy(std::set<std::string> fastballs, std::set<std::string> offspeed);
    static PitchTaxonomy standard();

    Class classify(const std::string& pitch_type) const;
    const std::set<std::string>& fastballs() const noexcept { return fastballs_; }
    const std::set<std::string>& offspeed() const noexcept { return offspeed_; }

private:
    std::set<std::string> fastballs_;
    std::set<std::string> offspeed_;
};

// Two-column CSV `pitch_type,class` with class in {fastball, offspeed}.
PitchTaxonomy load_taxonomy_csv(std::istream& in);

enum class MalformedRowPolicy { error, skip };
enum class UnknownPitchPolicy { error, skip };

struct PitchParseResult {
    std::vector<PitchRecord> records;
    std::vector<std::string> warnings; // one per skipped row under the skip policy
};

// CSV with header `game_id,date,opponent,inning,pitch_seq,pitch_type,bangs`.
PitchParseResult parse_pitch_csv(std::istream& in,
                                 MalformedRowPolicy policy = MalformedRowPolicy::error);

// 0 for fastballs, 1 for off-speed; unknown tokens are an error.
Prediction code_b_expected(const std::string& pitch_type, const PitchTaxonomy& taxonomy);

// Signal presence: one or more bangs reads as 1.
bool binarize_bangs(int bangs);

// Observation sequence for the evidence pipeline. Unknown pitch types either
// throw or are skipped with a warning, per policy.
std::vector<SignalObservation> pitch_observations(std::span<const PitchRecord> records,
                                                  const PitchTaxonomy& taxonomy,
                                                  UnknownPitchPolicy policy,
                                                  std::vector<std::string>* warnings = nullptr);

struct BangRateEstimate {
    double per_pitch_rate;    // binarized bangs / pitches over the range
    double per_game_max_rate; // max over games of the in-game rate
    std::size_t games;
    std::size_t pitches;
};

// Rate statistics over records dated within [from, to].
BangRateEstimate estimate_bang_rate(std::span<const PitchRecord> records, Date from,
                                    Date to);

struct GameEvidence {
    std::string game_id;
    Date date;
    std::string opponent;
    MatchSummary summary;
    double log10_lr;
};

struct PerGameEvidence {
    std::vector<GameEvidence> games; // ascending game_id
    double combined_log10_lr;        // sum over games; assumes independent q per game
    std::vector<std::string> warnings;
};

PerGameEvidence per_game_evidence(std::span<const PitchRecord> records,
                                  const PitchTaxonomy& taxonomy, const CodedModel& coded,
                                  const RandomModel& random,
                                  UnknownPitchPolicy policy = UnknownPitchPolicy::error);

} // namespace sigbayes::baseball
