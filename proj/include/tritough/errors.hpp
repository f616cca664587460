// Copyright 2026 The tritough Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRITOUGH_ERRORS_HPP_
#define TRITOUGH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tritough {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRITOUGH_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

TRITOUGH_DEFINE_ERROR(EmbeddingInconsistent);
TRITOUGH_DEFINE_ERROR(ParseError);
TRITOUGH_DEFINE_ERROR(ParameterOutOfRange);
TRITOUGH_DEFINE_ERROR(FaceClassificationError);
TRITOUGH_DEFINE_ERROR(OverlappingSets);
TRITOUGH_DEFINE_ERROR(DegreeTooSmall);
TRITOUGH_DEFINE_ERROR(NotACutset);
TRITOUGH_DEFINE_ERROR(TooLarge);
TRITOUGH_DEFINE_ERROR(NotAPermutation);
TRITOUGH_DEFINE_ERROR(LabelsMissing);
TRITOUGH_DEFINE_ERROR(MatchingInvalid);
TRITOUGH_DEFINE_ERROR(IoError);

#undef TRITOUGH_DEFINE_ERROR

// A validator check that did not hold. `name` identifies the check (for
// example "e" or "bipartite"); expected/found are rendered values.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string name, std::string expected, std::string found)
      : Error("invariant '" + name + "' violated: expected " + expected +
              ", found " + found),
        name_(std::move(name)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& name() const { return name_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string name_;
  std::string expected_;
  std::string found_;
};

}  // namespace tritough

#endif  // TRITOUGH_ERRORS_HPP_
