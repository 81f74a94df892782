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

#include "valet/card.h"

#include <array>
#include <cctype>
#include <string>

#include "valet/errors.h"

namespace valet {
namespace {

constexpr std::array<Suit, 4> kPlainSuits = {Suit::kClubs, Suit::kDiamonds,
                                             Suit::kHearts, Suit::kSpades};

void AddSuitRanks(std::vector<Card>& deck, Suit suit,
                  std::initializer_list<int> ranks, std::uint8_t back = 0) {
  for (int rank : ranks) {
    deck.push_back(Card{static_cast<CardId>(deck.size()),
                        static_cast<std::uint8_t>(rank), suit, back});
  }
}

}  // namespace

std::vector<Card> BuildDeck(DeckSpec spec) {
  std::vector<Card> deck;
  switch (spec) {
    case DeckSpec::kFrench52:
      for (Suit s : kPlainSuits) {
        AddSuitRanks(deck, s, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, kJack, kQueen,
                               kKing});
      }
      break;
    case DeckSpec::kPiquet32:
      for (Suit s : kPlainSuits) {
        AddSuitRanks(deck, s, {kAce, 7, 8, 9, 10, kJack, kQueen, kKing});
      }
      break;
    case DeckSpec::kEuchre24:
      for (Suit s : kPlainSuits) {
        AddSuitRanks(deck, s, {kAce, 9, 10, kJack, kQueen, kKing});
      }
      break;
    case DeckSpec::kAgram35:
      // No court cards, no twos, no ace of spades.
      for (Suit s : kPlainSuits) {
        if (s == Suit::kSpades) {
          AddSuitRanks(deck, s, {3, 4, 5, 6, 7, 8, 9, 10});
        } else {
          AddSuitRanks(deck, s, {kAce, 3, 4, 5, 6, 7, 8, 9, 10});
        }
      }
      break;
    case DeckSpec::kSpanish40:
    case DeckSpec::kItalian40:
      for (Suit s : kPlainSuits) {
        AddSuitRanks(deck, s, {1, 2, 3, 4, 5, 6, 7, kJack, kCavalier, kKing});
      }
      break;
    case DeckSpec::kTarot78:
      for (Suit s : kPlainSuits) {
        AddSuitRanks(deck, s, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, kJack,
                               kCavalier, kQueen, kKing});
      }
      for (int t = 1; t <= 21; ++t) AddSuitRanks(deck, Suit::kTrump, {t});
      AddSuitRanks(deck, Suit::kFool, {0});
      break;
    case DeckSpec::kLeduc6:
      AddSuitRanks(deck, Suit::kHearts, {kJack, kQueen, kKing});
      AddSuitRanks(deck, Suit::kSpades, {kJack, kQueen, kKing});
      break;
    case DeckSpec::kGoofspielSplit:
      // Diamonds are the prize suit with their own back; hearts and spades
      // are the two bidding hands.
      AddSuitRanks(deck, Suit::kDiamonds,
                   {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, kJack, kQueen, kKing}, 1);
      AddSuitRanks(deck, Suit::kHearts,
                   {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, kJack, kQueen, kKing});
      AddSuitRanks(deck, Suit::kSpades,
                   {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, kJack, kQueen, kKing});
      break;
  }
  return deck;
}

std::string_view DeckSpecName(DeckSpec spec) {
  switch (spec) {
    case DeckSpec::kFrench52: return "French52";
    case DeckSpec::kPiquet32: return "Piquet32";
    case DeckSpec::kEuchre24: return "Euchre24";
    case DeckSpec::kAgram35: return "Agram35";
    case DeckSpec::kSpanish40: return "Spanish40";
    case DeckSpec::kItalian40: return "Italian40";
    case DeckSpec::kTarot78: return "Tarot78";
    case DeckSpec::kLeduc6: return "Leduc6";
    case DeckSpec::kGoofspielSplit: return "GoofspielSplit";
  }
  return "?";
}

std::vector<DeckSpec> AllDeckSpecs() {
  return {DeckSpec::kFrench52,  DeckSpec::kPiquet32,  DeckSpec::kEuchre24,
          DeckSpec::kAgram35,   DeckSpec::kSpanish40, DeckSpec::kItalian40,
          DeckSpec::kTarot78,   DeckSpec::kLeduc6,    DeckSpec::kGoofspielSplit};
}

DeckSpec DeckSpecFromName(std::string_view name) {
  for (DeckSpec spec : AllDeckSpecs()) {
    if (DeckSpecName(spec) == name) return spec;
  }
  throw ConfigError("unknown deck spec '" + std::string(name) + "'");
}

char SuitChar(Suit suit) {
  switch (suit) {
    case Suit::kClubs: return 'C';
    case Suit::kDiamonds: return 'D';
    case Suit::kHearts: return 'H';
    case Suit::kSpades: return 'S';
    case Suit::kTrump: return 'T';
    case Suit::kFool: return 'F';
  }
  return '?';
}

std::string RankText(int rank) {
  switch (rank) {
    case kAce: return "A";
    case kJack: return "J";
    case kCavalier: return "C";
    case kQueen: return "Q";
    case kKing: return "K";
    default: return std::to_string(rank);
  }
}

std::string CardText(const Card& card) {
  if (card.suit == Suit::kFool) return "FOOL";
  if (card.suit == Suit::kTrump) return "T" + std::to_string(card.rank);
  return RankText(card.rank) + SuitChar(card.suit);
}

Face ParseFace(std::string_view text) {
  auto fail = [&]() -> Face {
    throw ParseError("bad card text '" + std::string(text) + "'");
  };
  if (text == "FOOL") return {0, Suit::kFool};
  if (text.size() < 2) return fail();
  if (text[0] == 'T' && text.size() <= 3 && std::isdigit(text[1])) {
    int n = std::stoi(std::string(text.substr(1)));
    if (n < 1 || n > 21) return fail();
    return {n, Suit::kTrump};
  }
  std::string_view rank = text.substr(0, text.size() - 1);
  Suit suit;
  switch (text.back()) {
    case 'C': suit = Suit::kClubs; break;
    case 'D': suit = Suit::kDiamonds; break;
    case 'H': suit = Suit::kHearts; break;
    case 'S': suit = Suit::kSpades; break;
    default: return fail();
  }
  if (rank == "A") return {kAce, suit};
  if (rank == "J") return {kJack, suit};
  if (rank == "C") return {kCavalier, suit};
  if (rank == "Q") return {kQueen, suit};
  if (rank == "K") return {kKing, suit};
  for (char c : rank) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
  }
  int n = std::stoi(std::string(rank));
  if (n < 2 || n > 10) return fail();
  return {n, suit};
}

}  // namespace valet
