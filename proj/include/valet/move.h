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

#ifndef VALET_MOVE_H_
#define VALET_MOVE_H_

#include <compare>
#include <cstdint>

namespace valet {

// Game-specific action payload. Games give each field their own meaning;
// `mask` usually holds a set of card ids. Canonical order is the
// lexicographic order of (kind, card, arg, mask).
struct Move {
  std::uint8_t kind = 0;
  std::uint8_t card = 0;
  std::uint8_t arg = 0;
  std::uint64_t mask = 0;

  auto operator<=>(const Move&) const = default;
};

}  // namespace valet

#endif  // VALET_MOVE_H_
