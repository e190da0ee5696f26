#include "sigbayes/baseball.hpp"

#include "sigbayes/csv.hpp"
#include "sigbayes/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

namespace sigbayes::baseball {

namespace {

int parse_int_field(const std::string& text, const char* what, int min_value) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw parse_error(std::string(what) + " '" + text + "' is not an integer");
    if (value < min_value)
        throw parse_error(std::string(what) + " '" + text + "' must be >= " +
                          std::to_string(min_value));
    return value;
}

bool leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && leap_year(y)) return 29;
    return kDays[m - 1];
}

} // namespace

Date parse_date(const std::string& iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw parse_error("date '" + iso + "' is not in yyyy-mm-dd form");
    const auto digits = [&](std::size_t pos, std::size_t len) {
        int value = 0;
        for (std::size_t i = pos; i < pos + len; ++i) {
            if (iso[i] < '0' || iso[i] > '9')
                throw parse_error("date '" + iso + "' is not in yyyy-mm-dd form");
            value = value * 10 + (iso[i] - '0');
        }
        return value;
    };
    const Date d{digits(0, 4), digits(5, 2), digits(8, 2)};
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month))
        throw parse_error("date '" + iso + "' is not a valid calendar date");
    return d;
}

std::string to_string(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", date.year, date.month, date.day);
    return buf;
}

PitchTaxonomy::PitchTaxonomy(std::set<std::string> fastballs, std::set<std::string> offspeed)
    : fastballs_(std::move(fastballs)), offspeed_(std::move(offspeed)) {
    for (const auto& t : fastballs_)
        if (offspeed_.count(t))
            throw domain_error("taxonomy: pitch type '" + t +
                               "' is listed as both fastball and offspeed");
}

PitchTaxonomy PitchTaxonomy::standard() {
    return PitchTaxonomy({"FF", "FT", "FC", "SI", "FS"},
                         {"CH", "CU", "SL", "KC", "KN", "EP", "FO", "SC"});
}

PitchTaxonomy::Class PitchTaxonomy::classify(const std::string& pitch_type) const {
    if (fastballs_.count(pitch_type)) return Class::fastball;
    if (offspeed_.count(pitch_type)) return Class::offspeed;
    return Class::unknown;
}

PitchTaxonomy load_taxonomy_csv(std::istream& in) {
    const auto rows = csv::read_table(in, {"pitch_type", "class"});
    std::set<std::string> fastballs, offspeed;
    for (const auto& row : rows) {
        if (row.fields.size() != 2)
            throw parse_error("expected 2 fields", row.line);
        const auto& token = row.fields[0];
        const auto& cls = row.fields[1];
        if (token.empty()) throw parse_error("empty pitch type", row.line);
        if (cls == "fastball") fastballs.insert(token);
        else if (cls == "offspeed") offspeed.insert(token);
        else
            throw parse_error("class '" + cls + "' must be fastball or offspeed", row.line);
    }
    try {
        return PitchTaxonomy(std::move(fastballs), std::move(offspeed));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

PitchParseResult parse_pitch_csv(std::istream& in, MalformedRowPolicy policy) {
    const auto rows = csv::read_table(
        in, {"game_id", "date", "opponent", "inning", "pitch_seq", "pitch_type", "bangs"});

    PitchParseResult result;
    result.records.reserve(rows.size());
    std::set<std::pair<std::string, int>> seen;

    for (const auto& row : rows) {
        try {
            if (row.fields.size() != 7)
                throw parse_error("expected 7 fields, found " +
                                  std::to_string(row.fields.size()));
            PitchRecord rec;
            rec.game_id = row.fields[0];
            if (rec.game_id.empty()) throw parse_error("empty game_id");
            rec.date = parse_date(row.fields[1]);
            rec.opponent = row.fields[2];
            rec.inning = parse_int_field(row.fields[3], "inning", 1);
            rec.pitch_seq = parse_int_field(row.fields[4], "pitch_seq", 1);
            rec.pitch_type = row.fields[5];
            if (rec.pitch_type.empty()) throw parse_error("empty pitch_type");
            rec.bangs = parse_int_field(row.fields[6], "bangs", 0);
            if (!seen.emplace(rec.game_id, rec.pitch_seq).second)
                throw parse_error("duplicate (game_id, pitch_seq) pair " + rec.game_id +
                                  "/" + std::to_string(rec.pitch_seq));
            result.records.push_back(std::move(rec));
        } catch (const parse_error& e) {
            if (policy == MalformedRowPolicy::error)
                throw parse_error(e.what(), row.line);
            result.warnings.push_back("line " + std::to_string(row.line) +
                                      " skipped: " + e.what());
        }
    }
    return result;
}

Prediction code_b_expected(const std::string& pitch_type, const PitchTaxonomy& taxonomy) {
    switch (taxonomy.classify(pitch_type)) {
        case PitchTaxonomy::Class::fastball: return Prediction::zero;
        case PitchTaxonomy::Class::offspeed: return Prediction::one;
        case PitchTaxonomy::Class::unknown: break;
    }
    throw domain_error("unknown pitch type '" + pitch_type + "'");
}

bool binarize_bangs(int bangs) {
    if (bangs < 0) throw domain_error("bangs must be >= 0, got " + std::to_string(bangs));
    return bangs >= 1;
}

std::vector<SignalObservation> pitch_observations(std::span<const PitchRecord> records,
                                                  const PitchTaxonomy& taxonomy,
                                                  UnknownPitchPolicy policy,
                                                  std::vector<std::string>* warnings) {
    std::vector<SignalObservation> obs;
    obs.reserve(records.size());
    for (const auto& rec : records) {
        if (taxonomy.classify(rec.pitch_type) == PitchTaxonomy::Class::unknown) {
            if (policy == UnknownPitchPolicy::error)
                throw domain_error("unknown pitch type '" + rec.pitch_type + "' in game " +
                                   rec.game_id + " pitch " + std::to_string(rec.pitch_seq));
            if (warnings)
                warnings->push_back("skipped unknown pitch type '" + rec.pitch_type +
                                    "' in game " + rec.game_id + " pitch " +
                                    std::to_string(rec.pitch_seq));
            continue;
        }
        obs.push_back({code_b_expected(rec.pitch_type, taxonomy), binarize_bangs(rec.bangs)});
    }
    return obs;
}

BangRateEstimate estimate_bang_rate(std::span<const PitchRecord> records, Date from,
                                    Date to) {
    if (to < from)
        throw domain_error("bang rate: empty date range " + to_string(from) + " .. " +
                           to_string(to));

    std::map<std::string, std::pair<std::size_t, std::size_t>> per_game; // pitches, bangs
    std::size_t pitches = 0, banged = 0;
    for (const auto& rec : records) {
        if (rec.date < from || to < rec.date) continue;
        auto& [game_pitches, game_bangs] = per_game[rec.game_id];
        ++game_pitches;
        ++pitches;
        if (binarize_bangs(rec.bangs)) {
            ++game_bangs;
            ++banged;
        }
    }
    if (pitches == 0)
        throw domain_error("bang rate: no pitches dated within " + to_string(from) +
                           " .. " + to_string(to));

    double max_rate = 0.0;
    for (const auto& [id, counts] : per_game)
        max_rate = std::max(max_rate, static_cast<double>(counts.second) /
                                          static_cast<double>(counts.first));

    return {static_cast<double>(banged) / static_cast<double>(pitches), max_rate,
            per_game.size(), pitches};
}

PerGameEvidence per_game_evidence(std::span<const PitchRecord> records,
                                  const PitchTaxonomy& taxonomy, const CodedModel& coded,
                                  const RandomModel& random, UnknownPitchPolicy policy) {
    std::map<std::string, std::vector<PitchRecord>> groups;
    for (const auto& rec : records) groups[rec.game_id].push_back(rec);

    PerGameEvidence out;
    out.combined_log10_lr = 0.0;
    for (auto& [game_id, group] : groups) {
        std::sort(group.begin(), group.end(),
                  [](const PitchRecord& a, const PitchRecord& b) {
                      return a.pitch_seq < b.pitch_seq;
                  });
        const auto obs = pitch_observations(group, taxonomy, policy, &out.warnings);
        const MatchSummary summary = summarize(obs);
        const double lr = summary.n == 0 ? 0.0 : log10_lr(summary, coded, random);
        out.games.push_back({game_id, group.front().date, group.front().opponent,
                             summary, lr});
        out.combined_log10_lr += lr;
    }
    return out;
}

} // namespace sigbayes::baseball
