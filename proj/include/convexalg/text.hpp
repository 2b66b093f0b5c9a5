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

#include <set>
#include <string>

#include "convexalg/convexset.hpp"
#include "convexalg/finsupp.hpp"

namespace convexalg {

// Compact one-line renderings, used for witnesses and CLI text output.

inline std::string text(const std::string& k) { return k; }

template <class K>
std::string text(const std::set<K>& s) {
  std::string out = "{";
  bool first = true;
  for (const K& k : s) {
    if (!first) out += ", ";
    out += text(k);
    first = false;
  }
  return out + "}";
}

template <Semiring S, class K>
std::string text(const FinSupp<S, K>& f) {
  if (f.is_zero()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : f.entries()) {
    if (!first) out += ", ";
    out += text(k) + ": " + S::to_string(v);
    first = false;
  }
  return out + "}";
}

template <Semiring S, class K>
std::string text(const ConvexSet<S, K>& c) {
  if (c.is_empty()) return "hull{}";
  std::string out = "hull{";
  bool first = true;
  for (const auto& g : c.generators()) {
    if (!first) out += ", ";
    out += text(g);
    first = false;
  }
  return out + "}";
}

template <class It>
std::string text_list(It begin, It end) {
  std::string out = "[";
  for (It it = begin; it != end; ++it) {
    if (it != begin) out += ", ";
    out += text(*it);
  }
  return out + "]";
}

}  // namespace convexalg
