/*
 * Copyright 2026 The convexalg authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convexalg {

struct CheckCase {
  std::string name;
  bool pass = false;
  /// Human-readable counterexample or detail; empty when not applicable.
  std::string witness;
};

/// Outcome of a law suite: one case per checked statement.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckCase> cases;

  void add(std::string name, bool pass, std::string witness = "") {
    cases.push_back({std::move(name), pass, std::move(witness)});
  }

  bool all_pass() const {
    for (const auto& c : cases) {
      if (!c.pass) return false;
    }
    return true;
  }
};

}  // namespace convexalg
