// Copyright 2026 The Solenoid Polya Authors
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

#ifndef SOLENOID_ERRORS_HPP_
#define SOLENOID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace solenoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CharacterOutsideGroup : public Error {
 public:
  explicit CharacterOutsideGroup(const std::string& y)
      : Error("character " + y + " is not in the character group") {}
};

class SpecMismatch : public Error {
 public:
  SpecMismatch() : Error("operands live on different solenoids") {}
};

class BadWeights : public Error {
 public:
  using Error::Error;
};

class DepthInsufficient : public Error {
 public:
  using Error::Error;
};

class CharacterTooDeep : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class TermLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace solenoid

#endif  // SOLENOID_ERRORS_HPP_
