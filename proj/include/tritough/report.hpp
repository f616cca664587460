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

#ifndef TRITOUGH_REPORT_HPP_
#define TRITOUGH_REPORT_HPP_

#include <functional>
#include <string>
#include <vector>

namespace tritough {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const;
  void add(std::string name, bool pass, std::string expected,
           std::string actual, double seconds = 0.0);
  // Compares two rendered values.
  void expect(std::string name, const std::string& expected,
              const std::string& actual, double seconds = 0.0);
  // Runs `body`, timing it; an exception becomes a failed check.
  void run(const std::string& name,
           const std::function<void(VerificationReport&)>& body);
  void append(const VerificationReport& other);

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace tritough

#endif  // TRITOUGH_REPORT_HPP_
