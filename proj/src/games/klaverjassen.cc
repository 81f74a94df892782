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

// Klaverjassen, Rotterdam style: always trump when void, always overtrump.
// Trump is chosen in one round of bidding; when everyone passes the first
// seat must choose. The only meld scored is stuk (king and queen of trumps
// in one trick).
#include "games/common.h"

namespace valet::games {
namespace {

enum Phase { kPlay = 0, kChoose = 1 };
enum Kind : std::uint8_t { kChooseSuit = 1, kPass = 2 };

constexpr int kLastTrickBonus = 10;
constexpr int kStuk = 20;
constexpr int kPit = 100;
constexpr int kCardPoints = 152;

// Trump order J 9 A 10 K Q 8 7; plain order A 10 K Q J 9 8 7.
int TrumpOrder(int rank) {
  switch (rank) {
    case kJack: return 8;
    case 9: return 7;
    case kAce: return 6;
    case 10: return 5;
    case kKing: return 4;
    case kQueen: return 3;
    case 8: return 2;
    default: return 1;
  }
}

int PlainOrder(int rank) {
  switch (rank) {
    case kAce: return 8;
    case 10: return 7;
    case kKing: return 6;
    case kQueen: return 5;
    case kJack: return 4;
    case 9: return 3;
    case 8: return 2;
    default: return 1;
  }
}

int CardPoints(int rank, bool trump) {
  switch (rank) {
    case kJack: return trump ? 20 : 2;
    case 9: return trump ? 14 : 0;
    case kAce: return 11;
    case 10: return 10;
    case kKing: return 4;
    case kQueen: return 3;
    default: return 0;
  }
}

class Klaverjassen : public TrickGame {
 public:
  Klaverjassen()
      : TrickGame(GameMetadata{.id = "klaverjassen",
                               .name = "Klaverjassen",
                               .genre = "Jack-Nine",
                               .origin = "Netherlands",
                               .year = 1890,
                               .players = 4,
                               .deck_family = "Piquet",
                               .deck = DeckSpec::kPiquet32,
                               .scoring = Objective::kHighScore,
                               .info = InfoLabels::Parse("P, D"),
                               .tricks = true,
                               .sets = true,
                               .teams = true,
                               .score_min = 0,
                               .score_max = 302,
                               .team_of_seat = {0, 1, 0, 1}},
                  /*hand_size=*/8) {
    v_forced_ = AddVar("forced");
    v_players_team_ = AddVar("playing_team");
    for (int t = 0; t < 2; ++t) {
      v_points_[t] = AddVar("team" + std::to_string(t) + "_points");
      v_roem_[t] = AddVar("team" + std::to_string(t) + "_roem");
      v_team_tricks_[t] = AddVar("team" + std::to_string(t) + "_tricks");
    }
  }

 protected:
  void Setup(GameState& state) const override {
    ShuffleAndDeal(state);
    state.SetVar(v_trump_, -1);
    state.SetVar(v_phase_, kChoose);
    state.SetToMove(0);
  }

  void PhaseMoves(const GameState& state,
                  std::vector<Move>& out) const override {
    for (int s = 0; s < kNumPlainSuits; ++s) {
      out.push_back(Move{kChooseSuit, 0, static_cast<std::uint8_t>(s), 0});
    }
    if (state.Var(v_forced_) == 0) out.push_back(Move{kPass, 0, 0, 0});
  }

  void ApplyPhaseMove(GameState& state, const Move& move) const override {
    const int seat = state.ToMove();
    if (move.kind == kPass) {
      if (seat == 3) {
        state.SetVar(v_forced_, 1);
        state.SetToMove(0);
      } else {
        state.SetToMove(seat + 1);
      }
      return;
    }
    state.SetVar(v_trump_, move.arg);
    state.SetVar(v_players_team_, TeamOf(seat));
    state.SetVar(v_phase_, kPlay);
    StartPlay(state, 0);
  }

  std::string PhaseMoveText(const Move& move) const override {
    if (move.kind == kPass) return "pass";
    return std::string("trump ") + SuitChar(static_cast<Suit>(move.arg));
  }

  int HighestTrumpInTrick(const GameState& state) const {
    int best = 0;
    for (CardId c : state.Cards(trick_)) {
      const Card& card = state.card(c);
      if (SuitIndex(card.suit) == state.Var(v_trump_)) {
        best = std::max(best, TrumpOrder(card.rank));
      }
    }
    return best;
  }

  void PlayMoves(const GameState& state, int seat,
                 std::vector<Move>& out) const override {
    const int led = LedSuit(state);
    const int trump = state.Var(v_trump_);
    auto hand = state.Cards(hand_[seat]);
    auto emit = [&](auto&& keep) {
      for (CardId c : hand) {
        if (keep(state.card(c))) out.push_back(Move{kPlayCard, c, 0, 0});
      }
    };
    auto is_trump = [&](const Card& c) { return SuitIndex(c.suit) == trump; };
    if (led < 0) {
      emit([](const Card&) { return true; });
      return;
    }
    const int top_trump = HighestTrumpInTrick(state);
    auto over = [&](const Card& c) {
      return is_trump(c) && TrumpOrder(c.rank) > top_trump;
    };
    bool has_led = false, has_trump = false, has_over = false;
    for (CardId c : hand) {
      const Card& card = state.card(c);
      has_led |= SuitIndex(card.suit) == led;
      has_trump |= is_trump(card);
      has_over |= over(card);
    }
    if (led == trump) {
      if (has_over) {
        emit(over);
      } else if (has_led) {
        emit(is_trump);
      } else {
        emit([](const Card&) { return true; });
      }
      return;
    }
    if (has_led) {
      emit([&](const Card& c) { return SuitIndex(c.suit) == led; });
    } else if (has_over) {
      emit(over);
    } else if (has_trump) {
      emit(is_trump);
    } else {
      emit([](const Card&) { return true; });
    }
  }

  int Strength(const GameState& state, CardId card,
               int led_suit) const override {
    const Card& c = state.card(card);
    const int suit = SuitIndex(c.suit);
    if (suit == state.Var(v_trump_)) return 100 + TrumpOrder(c.rank);
    if (suit == led_suit) return PlainOrder(c.rank);
    return -1;
  }

  void OnTrickWon(GameState& state, int winner, int index) const override {
    const int team = TeamOf(winner);
    const int trump = state.Var(v_trump_);
    int points = index == hand_size_ - 1 ? kLastTrickBonus : 0;
    bool king = false, queen = false;
    for (CardId c : state.Cards(trick_)) {
      const Card& card = state.card(c);
      const bool is_trump = SuitIndex(card.suit) == trump;
      points += CardPoints(card.rank, is_trump);
      king |= is_trump && card.rank == kKing;
      queen |= is_trump && card.rank == kQueen;
    }
    state.SetVar(v_points_[team], state.Var(v_points_[team]) + points);
    if (king && queen) {
      state.SetVar(v_roem_[team], state.Var(v_roem_[team]) + kStuk);
    }
    state.SetVar(v_team_tricks_[team], state.Var(v_team_tricks_[team]) + 1);
  }

  void FinishHand(GameState& state) const override {
    const int players = state.Var(v_players_team_);
    const int others = 1 - players;
    int total[2];
    for (int t = 0; t < 2; ++t) {
      total[t] = state.Var(v_points_[t]) + state.Var(v_roem_[t]);
    }
    if (state.Var(v_team_tricks_[players]) == hand_size_) {
      total[players] += kPit;
    }
    if (total[players] <= total[others]) {
      // Nat: the defenders take every point and all declared roem.
      total[others] = kCardPoints + kLastTrickBonus +
                      state.Var(v_roem_[0]) + state.Var(v_roem_[1]);
      total[players] = 0;
    }
    SetTeamScore(state, 0, total[0]);
    SetTeamScore(state, 1, total[1]);
    state.SetTerminal();
  }

 private:
  int v_forced_;
  int v_players_team_;
  int v_points_[2];
  int v_roem_[2];
  int v_team_tricks_[2];
};

}  // namespace

std::shared_ptr<const Game> MakeKlaverjassen() {
  return std::make_shared<Klaverjassen>();
}

}  // namespace valet::games
