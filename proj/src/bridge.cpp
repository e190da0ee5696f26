#include "sigbayes/bridge.hpp"

#include "sigbayes/csv.hpp"
#include "sigbayes/errors.hpp"

#include <algorithm>
#include <bit>

namespace sigbayes::bridge {

namespace {

constexpr std::array<char, 4> kSuitChars{'S', 'H', 'D', 'C'};

int bit_index(Card card) noexcept {
    return static_cast<int>(card.suit) * 13 + (card.rank - 2);
}

int rank_from_char(char c) {
    switch (c) {
        case 'A': return kAce;
        case 'K': return kKing;
        case 'Q': return kQueen;
        case 'J': return kJack;
        case 'T': return 10;
        default:
            if (c >= '2' && c <= '9') return c - '0';
            throw parse_error(std::string("invalid rank character '") + c + "'");
    }
}

Suit suit_from_char(char c) {
    switch (c) {
        case 'S': return Suit::spades;
        case 'H': return Suit::hearts;
        case 'D': return Suit::diamonds;
        case 'C': return Suit::clubs;
        default:
            throw parse_error(std::string("invalid suit character '") + c + "'");
    }
}

} // namespace

char suit_to_char(Suit suit) { return kSuitChars[static_cast<int>(suit)]; }

char rank_to_char(int rank) {
    switch (rank) {
        case kAce: return 'A';
        case kKing: return 'K';
        case kQueen: return 'Q';
        case kJack: return 'J';
        case 10: return 'T';
        default: return static_cast<char>('0' + rank);
    }
}

Card parse_card(const std::string& token) {
    if (token.size() != 2)
        throw parse_error("card token '" + token + "' must be suit letter + rank");
    return Card{suit_from_char(token[0]), rank_from_char(token[1])};
}

Hand::Hand(std::span<const Card> cards) {
    if (cards.size() != 13)
        throw parse_error("hand has " + std::to_string(cards.size()) +
                          " cards, expected 13");
    for (const Card& card : cards) {
        const std::uint64_t bit = std::uint64_t{1} << bit_index(card);
        if (mask_ & bit)
            throw parse_error(std::string("duplicate card ") + suit_to_char(card.suit) +
                              rank_to_char(card.rank));
        mask_ |= bit;
    }
}

bool Hand::contains(Card card) const noexcept {
    return (mask_ >> bit_index(card)) & 1u;
}

int Hand::suit_length(Suit suit) const noexcept {
    const std::uint64_t suit_bits = (mask_ >> (static_cast<int>(suit) * 13)) & 0x1FFF;
    return std::popcount(suit_bits);
}

bool Hand::suit_has_rank(Suit suit, int rank) const noexcept {
    return contains(Card{suit, rank});
}

std::vector<Card> Hand::cards() const {
    std::vector<Card> out;
    out.reserve(13);
    for (Suit suit : {Suit::spades, Suit::hearts, Suit::diamonds, Suit::clubs})
        for (int rank = kAce; rank >= 2; --rank)
            if (contains(Card{suit, rank})) out.push_back(Card{suit, rank});
    return out;
}

Hand parse_hand(const std::string& text) {
    std::vector<std::string> groups;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        if (dot == std::string::npos) {
            groups.push_back(text.substr(start));
            break;
        }
        groups.push_back(text.substr(start, dot - start));
        start = dot + 1;
    }
    if (groups.size() != 4)
        throw parse_error("hand '" + text + "' has " + std::to_string(groups.size()) +
                          " suit groups, expected 4 (spades.hearts.diamonds.clubs)");

    std::vector<Card> cards;
    for (std::size_t s = 0; s < 4; ++s) {
        for (char c : groups[s]) {
            int rank;
            try {
                rank = rank_from_char(c);
            } catch (const parse_error&) {
                throw parse_error(std::string("invalid rank character '") + c +
                                  "' in hand '" + text + "'");
            }
            cards.push_back(Card{static_cast<Suit>(s), rank});
        }
    }
    try {
        return Hand(cards);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()) + " in hand '" + text + "'");
    }
}

std::string to_dot_notation(const Hand& hand) {
    std::string out;
    for (Suit suit : {Suit::spades, Suit::hearts, Suit::diamonds, Suit::clubs}) {
        if (suit != Suit::spades) out += '.';
        for (int rank = kAce; rank >= 2; --rank)
            if (hand.suit_has_rank(suit, rank)) out += rank_to_char(rank);
    }
    return out;
}

HvCodeId hv_code_from_string(const std::string& name) {
    if (name == "c" || name == "C") return HvCodeId::code_c;
    if (name == "deuce" || name == "deuce-of-clubs") return HvCodeId::deuce_of_clubs;
    if (name == "parity" || name == "board-parity") return HvCodeId::board_parity;
    throw domain_error("unknown code '" + name + "' (expected c, deuce or parity)");
}

std::string to_string(HvCodeId id) {
    switch (id) {
        case HvCodeId::code_c: return "c";
        case HvCodeId::deuce_of_clubs: return "deuce";
        case HvCodeId::board_parity: return "parity";
    }
    return "?";
}

namespace {

void require_lead_in_hand(const Hand& hand, Card lead) {
    if (!hand.contains(lead))
        throw domain_error(std::string("lead ") + suit_to_char(lead.suit) +
                           rank_to_char(lead.rank) + " is not in the hand " +
                           to_dot_notation(hand));
}

bool has_top_honor(const Hand& hand, Suit suit) {
    return hand.suit_has_rank(suit, kAce) || hand.suit_has_rank(suit, kKing) ||
           hand.suit_has_rank(suit, kQueen);
}

bool has_queen_outside(const Hand& hand, Suit lead_suit) {
    for (Suit suit : {Suit::spades, Suit::hearts, Suit::diamonds, Suit::clubs})
        if (suit != lead_suit && hand.suit_has_rank(suit, kQueen)) return true;
    return false;
}

} // namespace

Prediction code_c_expected(const Hand& hand, Card lead) {
    require_lead_in_hand(hand, lead);
    if (hand.suit_length(lead.suit) == 1) return Prediction::not_applicable;
    return has_top_honor(hand, lead.suit) ? Prediction::zero : Prediction::one;
}

Prediction code_deuce_clubs_expected(const Hand& hand, Card lead) {
    require_lead_in_hand(hand, lead);
    return hand.contains(Card{Suit::clubs, 2}) ? Prediction::one : Prediction::zero;
}

Prediction code_board_parity_expected(int board_no, const Hand& hand, Card lead) {
    require_lead_in_hand(hand, lead);
    if (board_no < 1) throw domain_error("board number must be >= 1");
    if (board_no % 2 == 0) {
        const bool horizontal =
            hand.suit_has_rank(lead.suit, kAce) && has_queen_outside(hand, lead.suit);
        return horizontal ? Prediction::one : Prediction::zero;
    }
    const bool king = hand.suit_has_rank(lead.suit, kKing);
    const bool jack = hand.suit_has_rank(lead.suit, kJack);
    return (king != jack) ? Prediction::one : Prediction::zero;
}

Prediction evaluate_hv_code(HvCodeId code, const BridgeLeadRecord& record) {
    switch (code) {
        case HvCodeId::code_c:
            return code_c_expected(record.hand, record.lead);
        case HvCodeId::deuce_of_clubs:
            return code_deuce_clubs_expected(record.hand, record.lead);
        case HvCodeId::board_parity:
            return code_board_parity_expected(record.board_no, record.hand, record.lead);
    }
    throw domain_error("unhandled code id");
}

std::vector<SignalObservation> evaluate_code(HvCodeId code,
                                             std::span<const BridgeLeadRecord> records) {
    std::vector<SignalObservation> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            const Prediction expected = evaluate_hv_code(code, records[i]);
            out.push_back({expected, records[i].orientation == Orientation::horizontal});
        } catch (const domain_error& e) {
            throw domain_error("record " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

std::vector<BridgeLeadRecord> parse_bridge_csv(std::istream& in) {
    const auto rows = csv::read_table(in, {"board", "hand", "lead", "orientation"});
    std::vector<BridgeLeadRecord> records;
    records.reserve(rows.size());
    for (const auto& row : rows) {
        try {
            if (row.fields.size() != 4)
                throw parse_error("expected 4 fields, found " +
                                  std::to_string(row.fields.size()));
            std::size_t pos = 0;
            const int board = std::stoi(row.fields[0], &pos);
            if (pos != row.fields[0].size() || board < 1)
                throw parse_error("board number '" + row.fields[0] +
                                  "' must be a positive integer");
            const Hand hand = parse_hand(row.fields[1]);
            const Card lead = parse_card(row.fields[2]);
            if (!hand.contains(lead))
                throw parse_error("lead " + row.fields[2] + " is not in the hand " +
                                  row.fields[1]);
            Orientation orientation;
            if (row.fields[3] == "H") orientation = Orientation::horizontal;
            else if (row.fields[3] == "V") orientation = Orientation::vertical;
            else
                throw parse_error("orientation '" + row.fields[3] +
                                  "' must be exactly H or V");
            records.push_back({board, hand, lead, orientation});
        } catch (const parse_error& e) {
            if (e.line() > 0) throw;
            throw parse_error(e.what(), row.line);
        } catch (const std::invalid_argument&) {
            throw parse_error("board number '" + row.fields[0] + "' is not an integer",
                              row.line);
        } catch (const std::out_of_range&) {
            throw parse_error("field out of range", row.line);
        }
    }
    return records;
}

} // namespace sigbayes::bridge
