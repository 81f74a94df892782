// Copyright 2026 The Valet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VALET_CARD_H_
#define VALET_CARD_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace valet {

using CardId = std::uint8_t;

enum class Suit : std::uint8_t {
  kClubs = 0,
  kDiamonds = 1,
  kHearts = 2,
  kSpades = 3,
  kTrump = 4,
  kFool = 5,
};

inline constexpr int kNumPlainSuits = 4;

// Rank codes shared by every deck. Pips use their face value. Cavalier is
// the knight of Tarot, Spanish and Italian decks. Tarot trumps use 1..21 with
// Suit::kTrump and the Fool uses rank 0.
inline constexpr int kAce = 1;
inline constexpr int kJack = 11;
inline constexpr int kCavalier = 12;
inline constexpr int kQueen = 13;
inline constexpr int kKing = 14;

struct Card {
  CardId id = 0;
  std::uint8_t rank = 0;
  Suit suit = Suit::kClubs;
  std::uint8_t back = 0;

  // Same rank and suit; ids may differ.
  bool SameFace(const Card& other) const {
    return rank == other.rank && suit == other.suit;
  }
  bool operator==(const Card&) const = default;
};

enum class DeckSpec {
  kFrench52,
  kPiquet32,
  kEuchre24,
  kAgram35,
  kSpanish40,
  kItalian40,
  kTarot78,
  kLeduc6,
  kGoofspielSplit,
};

// Expands a deck recipe. Ids are dense, assigned in suit order
// (clubs, diamonds, hearts, spades, trumps, fool) and ascending rank code
// within each suit.
std::vector<Card> BuildDeck(DeckSpec spec);

std::string_view DeckSpecName(DeckSpec spec);
// Throws ConfigError for unknown names.
DeckSpec DeckSpecFromName(std::string_view name);
std::vector<DeckSpec> AllDeckSpecs();

char SuitChar(Suit suit);
std::string RankText(int rank);
// "QS", "10H", "T12" for trump 12, "FOOL".
std::string CardText(const Card& card);

// Inverse of CardText on faces: returns rank and suit. Throws ParseError.
struct Face {
  int rank;
  Suit suit;
};
Face ParseFace(std::string_view text);

}  // namespace valet

#endif  // VALET_CARD_H_
