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

#include "tritough/report.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include <json.hpp>

namespace tritough {

bool VerificationReport::overall() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, bool pass, std::string expected,
                             std::string actual, double seconds) {
  checks.push_back(
      {std::move(name), pass, std::move(expected), std::move(actual), seconds});
}

void VerificationReport::expect(std::string name, const std::string& expected,
                                const std::string& actual, double seconds) {
  add(std::move(name), expected == actual, expected, actual, seconds);
}

void VerificationReport::run(
    const std::string& name,
    const std::function<void(VerificationReport&)>& body) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport inner;
  try {
    body(inner);
  } catch (const std::exception& e) {
    inner.add(name, false, "no exception", e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (!inner.checks.empty() && inner.checks.back().seconds == 0.0)
    inner.checks.back().seconds = secs;
  append(inner);
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["overall"] = overall() ? "pass" : "fail";
  auto& arr = doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    arr.push_back({{"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"seconds", c.seconds}});
  }
  return doc.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << (c.pass ? "pass " : "FAIL ") << c.name << ": " << c.actual;
    if (!c.pass) out << " (expected " << c.expected << ")";
    out << "\n";
  }
  out << "overall: " << (overall() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace tritough
