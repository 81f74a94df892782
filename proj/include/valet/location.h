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

#ifndef VALET_LOCATION_H_
#define VALET_LOCATION_H_

#include <string>
#include <string_view>

namespace valet {

enum class Visibility : unsigned char { kPublic, kHidden, kPrivate };

// Play locations hold cards. Memory locations hold references to cards that
// physically sit in some play location; they never take part in card
// conservation.
enum class LocationClass : unsigned char { kPlay, kMemory };

inline constexpr int kTableOwner = -1;

struct LocationInfo {
  std::string name;
  int owner = kTableOwner;
  LocationClass klass = LocationClass::kPlay;
  Visibility visibility = Visibility::kHidden;
};

std::string_view VisibilityName(Visibility v);

}  // namespace valet

#endif  // VALET_LOCATION_H_
