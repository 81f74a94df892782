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

#ifndef VALET_ERRORS_H_
#define VALET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace valet {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown game, deck or agent names; malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A caller passed a value outside the operation's domain (bad seat, empty
// move list, mixed games, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A move that is not in the current legal set.
class IllegalMoveError : public Error {
 public:
  using Error::Error;
};

// A state or observation violates an internal invariant.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed record or input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A playthrough exceeded the decision safety cap.
class SafetyCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace valet

#endif  // VALET_ERRORS_H_
