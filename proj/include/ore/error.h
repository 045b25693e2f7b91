// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ore {

enum class Errc {
  kNonPrime,
  kReducibleModulus,
  kDegreeMismatch,
  kContextMismatch,
  kDivisionByZero,
  kTwistMismatch,
  kSingularSystem,
  kNotAPermutation,
  kDivisionByZeroPoly,
  kBothZero,
  kNotInRing,
  kTooLarge,
  kDegreeTooLarge,
  kShapeViolation,
  kDegreeBoundTooSmall,
  kParseError,
  kPolicyBound,
  kInvalidArgument,
};

std::string_view ErrcName(Errc code);

// All library failures are reported through this type. Outcomes that are
// legitimate results of an algorithm (no factor found, attack gave up, ...)
// are values, not exceptions.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void Fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void Enforce(bool cond, Errc code, const std::string& msg) {
  if (!cond) Fail(code, msg);
}

inline std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kNonPrime: return "NonPrime";
    case Errc::kReducibleModulus: return "ReducibleModulus";
    case Errc::kDegreeMismatch: return "DegreeMismatch";
    case Errc::kContextMismatch: return "ContextMismatch";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kTwistMismatch: return "TwistMismatch";
    case Errc::kSingularSystem: return "SingularSystem";
    case Errc::kNotAPermutation: return "NotAPermutation";
    case Errc::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::kBothZero: return "BothZero";
    case Errc::kNotInRing: return "NotInRing";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kDegreeTooLarge: return "DegreeTooLarge";
    case Errc::kShapeViolation: return "ShapeViolation";
    case Errc::kDegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case Errc::kParseError: return "ParseError";
    case Errc::kPolicyBound: return "PolicyBound";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ore
