#pragma once

// Bridge-side data model: hands, leads, and the horizontal/vertical codes
// evaluated against them. Output is a SignalObservation sequence for the
// evidence pipeline; horizontal = signal 1, vertical = signal 0.

#include "sigbayes/evidence.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace sigbayes::bridge {

enum class Suit : unsigned char { spades = 0, hearts = 1, diamonds = 2, clubs = 3 };

// Ranks 2..14; 11 = jack, 12 = queen, 13 = king, 14 = ace.
inline constexpr int kJack = 11;
inline constexpr int kQueen = 12;
inline constexpr int kKing = 13;
inline constexpr int kAce = 14;

struct Card {
    Suit suit;
    int rank;
    friend bool operator==(const Card&, const Card&) = default;
};

char suit_to_char(Suit suit);
char rank_to_char(int rank);

// "S2", "DT", "HA" — suit letter followed by rank character.
Card parse_card(const std::string& token);

// Exactly 13 distinct cards, stored as a 52-bit membership mask.
class Hand {
public:
    explicit Hand(std::span<const Card> cards);

    bool contains(Card card) const noexcept;
    int suit_length(Suit suit) const noexcept;
    bool suit_has_rank(Suit suit, int rank) const noexcept;
    std::vector<Card> cards() const; // descending rank within each suit

private:
    std::uint64_t mask_ = 0;
};

// Dot notation, suits in spades.hearts.diamonds.clubs order, ranks from
// {A,K,Q,J,T,9..2}, empty group = void. "AQ3.K52.9762.T84"
Hand parse_hand(const std::string& text);
std::string to_dot_notation(const Hand& hand); // canonical descending form

enum class Orientation : unsigned char { horizontal, vertical };

struct BridgeLeadRecord {
    int board_no; // >= 1
    Hand hand;
    Card lead; // must be a member of hand
    Orientation orientation;
};

enum class HvCodeId { code_c, deuce_of_clubs, board_parity };

HvCodeId hv_code_from_string(const std::string& name);
std::string to_string(HvCodeId id);

// Code C: a horizontal lead denies a top honor (A, K or Q) in the lead suit,
// a vertical lead promises one; singleton leads carry no signal.
Prediction code_c_expected(const Hand& hand, Card lead);

// Horizontal promises the deuce of clubs, vertical denies it.
Prediction code_deuce_clubs_expected(const Hand& hand, Card lead);

// Board-parity code:
//   even board:  horizontal = ace in the lead suit plus at least one queen in
//                some other suit; vertical otherwise (so a vertical lead
//                denies the ace unless the hand has no queens elsewhere)
//   odd board:   horizontal = exactly one of king/jack in the lead suit;
//                vertical = both or neither
Prediction code_board_parity_expected(int board_no, const Hand& hand, Card lead);

Prediction evaluate_hv_code(HvCodeId code, const BridgeLeadRecord& record);

// One observation per record, order preserved; observed = 1 for horizontal.
std::vector<SignalObservation> evaluate_code(HvCodeId code,
                                             std::span<const BridgeLeadRecord> records);

// CSV with header `board,hand,lead,orientation`; orientation strictly H or V.
std::vector<BridgeLeadRecord> parse_bridge_csv(std::istream& in);

} // namespace sigbayes::bridge
