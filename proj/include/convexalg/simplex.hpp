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

#include <cstddef>
#include <vector>

#include "convexalg/errors.hpp"
#include "convexalg/rational.hpp"

namespace convexalg {

/// Decides, exactly, whether the linear system  A t = b  has a solution with
/// every component t_j >= 0.  Phase-1 simplex: one artificial variable per
/// row, minimise their sum with Bland's smallest-index pivoting rule, which
/// rules out cycling.  Artificial variables never re-enter the basis, so
/// their columns are not stored.
inline bool feasible_nonneg(std::vector<std::vector<Rational>> a,
                            std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PreconditionError("rhs length mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("ragged coefficient matrix");
  }
  if (m == 0) return true;

  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].is_negative()) {
      for (auto& c : a[i]) c = -c;
      b[i] = -b[i];
    }
  }

  // Reduced-cost row for the original variables, with the artificial basis
  // priced out.  obj_rhs is the negated artificial sum; feasible iff it
  // reaches zero.
  std::vector<Rational> obj(n, Rational(0));
  Rational obj_rhs(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= a[i][j];
    obj_rhs -= b[i];
  }

  // basis[i] is the variable basic in row i; values >= n denote artificials.
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (obj[j].is_negative()) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    Rational best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(Rational(0) < a[i][enter])) continue;
      Rational ratio = b[i] / a[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // The artificial sum is bounded below by zero, so an unbounded ray
      // cannot occur in a well-formed phase-1 tableau.
      throw Error("phase-1 simplex: unbounded pivot column");
    }

    Rational pivot = a[leave][enter];
    for (std::size_t j = 0; j < n; ++j) a[leave][j] /= pivot;
    b[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || a[i][enter].is_zero()) continue;
      Rational factor = a[i][enter];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[leave][j];
      }
      b[i] -= factor * b[leave];
    }
    if (!obj[enter].is_zero()) {
      Rational factor = obj[enter];
      for (std::size_t j = 0; j < n; ++j) obj[j] -= factor * a[leave][j];
      obj_rhs -= factor * b[leave];
    }
    basis[leave] = enter;
  }

  return obj_rhs.is_zero();
}

}  // namespace convexalg
