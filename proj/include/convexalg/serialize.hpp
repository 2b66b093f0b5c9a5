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

#include <string>

#include <json.hpp>

#include "convexalg/convexset.hpp"
#include "convexalg/distlaw.hpp"
#include "convexalg/finsupp.hpp"
#include "convexalg/monad_cf.hpp"
#include "convexalg/report.hpp"

namespace convexalg {

// JSON forms used by the command line and by test-vector files.  Element
// values travel as literal strings in the active semiring's syntax, so the
// representation stays exact.

using json = nlohmann::json;

/// {"x": "2", "y": "7"}; the zero vector is {}.
template <Semiring S>
json to_json(const FinSupp<S>& f) {
  json out = json::object();
  for (const auto& [k, v] : f.entries()) out[k] = S::to_string(v);
  return out;
}

template <Semiring S>
FinSupp<S> finsupp_from_json(const json& j) {
  if (!j.is_object()) throw Error("expected an object for a vector");
  std::vector<typename FinSupp<S>::entry_type> entries;
  for (const auto& [k, v] : j.items()) {
    entries.emplace_back(k, S::parse(v.template get<std::string>()));
  }
  return FinSupp<S>(std::move(entries));
}

/// {"basis": [...], "generators": [vector, ...]}.
template <Semiring S>
json to_json(const ConvexSet<S>& c) {
  json out = json::object();
  out["basis"] = json::array();
  for (const auto& k : c.basis()) out["basis"].push_back(k);
  out["generators"] = json::array();
  for (const auto& g : c.generators()) out["generators"].push_back(to_json(g));
  return out;
}

template <Semiring S>
ConvexSet<S> convexset_from_json(const json& j) {
  Basis basis;
  for (const auto& k : j.at("basis")) basis.insert(k.get<std::string>());
  std::vector<FinSupp<S>> gens;
  for (const auto& g : j.at("generators")) {
    gens.push_back(finsupp_from_json<S>(g));
  }
  return ConvexSet<S>(std::move(basis), std::move(gens));
}

/// [{"set": [ids], "weight": literal}, ...].
template <Semiring S>
json to_json(const WeightedFamily<S>& family) {
  json out = json::array();
  for (const auto& [member, w] : family.entries()) {
    json entry = json::object();
    entry["set"] = json::array();
    for (const auto& k : member) entry["set"].push_back(k);
    entry["weight"] = S::to_string(w);
    out.push_back(entry);
  }
  return out;
}

template <Semiring S>
WeightedFamily<S> weighted_family_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an array for a weighted family");
  std::vector<typename WeightedFamily<S>::entry_type> entries;
  for (const auto& entry : j) {
    std::set<BasisElement> member;
    for (const auto& k : entry.at("set")) member.insert(k.get<std::string>());
    entries.emplace_back(std::move(member),
                         S::parse(entry.at("weight").get<std::string>()));
  }
  return WeightedFamily<S>(std::move(entries));
}

/// Object mapping source identifiers to convex-set objects.
template <Semiring S>
json to_json(const KleisliMap<S>& f) {
  json out = json::object();
  for (const auto& [x, c] : f.table) out[x] = to_json(c);
  return out;
}

template <Semiring S>
KleisliMap<S> kleisli_map_from_json(const json& j, Basis target) {
  Basis source;
  std::map<BasisElement, ConvexSet<S>> table;
  for (const auto& [k, v] : j.items()) {
    source.insert(k);
    table.emplace(k, convexset_from_json<S>(v));
  }
  return KleisliMap<S>(std::move(source), std::move(target),
                       std::move(table));
}

/// {"suite": str, "cases": [{"name", "status", "witness"?}], "seed": int}.
inline json to_json(const Report& report) {
  json out = json::object();
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["cases"] = json::array();
  for (const auto& c : report.cases) {
    json jc = json::object();
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) jc["witness"] = c.witness;
    out["cases"].push_back(jc);
  }
  return out;
}

}  // namespace convexalg
