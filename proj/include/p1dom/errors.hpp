// Copyright 2026 The p1dom Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef P1DOM_ERRORS_HPP
#define P1DOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace p1dom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands over different coefficient rings, e.g. GF(3) and GF(5).
class MixedRingError : public Error {
 public:
  using Error::Error;
};

// The requested operation needs a field (or a PID) that the ring is not.
class UnsupportedRingError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidComplexError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDiagramError : public Error {
 public:
  using Error::Error;
};

class BandViolation : public Error {
 public:
  using Error::Error;
};

class NonVanishingH1 : public Error {
 public:
  using Error::Error;
};

class NotNovikovAcyclic : public Error {
 public:
  using Error::Error;
};

class StabilisationFailure : public Error {
 public:
  using Error::Error;
};

// Malformed input. `where` is a JSON pointer or byte offset.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace p1dom

#endif  // P1DOM_ERRORS_HPP
