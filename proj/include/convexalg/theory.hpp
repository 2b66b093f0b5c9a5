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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "convexalg/enumerate.hpp"
#include "convexalg/lifting.hpp"
#include "convexalg/random_values.hpp"
#include "convexalg/rational.hpp"
#include "convexalg/report.hpp"
#include "convexalg/term.hpp"
#include "convexalg/text.hpp"

namespace convexalg {

/// Denotation of a term as a convex set over the declared basis: variables
/// become Dirac singletons, bottom the empty set, zero the zero singleton,
/// and the three operations act through the lifted semimodule/join
/// structure.  Scaling by zero collapses to the zero singleton even under
/// bottom.  Semifield instances only.
template <Semiring S>
ConvexSet<S> eval(const Term<S>& t, const Basis& basis) {
  if constexpr (!S::semifield) {
    throw UnsupportedError(std::string(S::name) +
                           ": evaluation needs a semifield");
  } else {
    using Kind = typename Term<S>::Kind;
    switch (t.kind()) {
      case Kind::bottom:
        return ConvexSet<S>::empty(basis);
      case Kind::zero:
        return zero_set<S>(basis);
      case Kind::var:
        if (!basis.contains(t.name())) {
          throw PreconditionError("variable '" + t.name() +
                                  "' not in the basis");
        }
        return lifted_unit<S>(t.name(), basis);
      case Kind::scale:
        return scale_set(t.scalar(), eval(t.left(), basis));
      case Kind::add:
        return add_set(eval(t.left(), basis), eval(t.right(), basis));
      case Kind::join:
        return join_sets(eval(t.left(), basis), eval(t.right(), basis));
    }
    throw PreconditionError("unknown term kind");
  }
}

/// Decides equality of denotations.  By the presentation of the composed
/// monad this coincides with provable equality in the axiom system below.
template <Semiring S>
bool equal_terms(const Term<S>& a, const Term<S>& b, const Basis& basis) {
  return equal(eval(a, basis), eval(b, basis));
}

/// A term denoting the given convex set: bottom for the empty set,
/// otherwise the join over generators of the weighted sums of variables.
template <Semiring S>
Term<S> term_for_set(const ConvexSet<S>& c) {
  if (c.is_empty()) return Term<S>::bottom();
  auto term_for_generator = [](const FinSupp<S>& g) {
    if (g.is_zero()) return Term<S>::zero();
    Term<S> out = Term<S>::zero();
    bool first = true;
    for (const auto& [k, v] : g.entries()) {
      Term<S> piece = v == S::one() ? Term<S>::var(k)
                                    : Term<S>::scale(v, Term<S>::var(k));
      out = first ? piece : Term<S>::add(out, piece);
      first = false;
    }
    return out;
  };
  Term<S> out = term_for_generator(c.generators().front());
  for (std::size_t i = 1; i < c.generators().size(); ++i) {
    out = Term<S>::join(out, term_for_generator(c.generators()[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The single-variable interval oracle.

/// Value of a single-variable term over the nonnegative rationals: either
/// empty or a closed interval.
struct Interval {
  bool empty = true;
  Rational lo, hi;

  static Interval none() { return {}; }
  static Interval of(Rational a, Rational b) { return {false, a, b}; }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty || b.empty) return a.empty == b.empty;
    return a.lo == b.lo && a.hi == b.hi;
  }

  std::string to_string() const {
    if (empty) return "empty";
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
  }
};

/// Independent endpoint recursion for terms in one variable: scaling acts on
/// both endpoints (zero scaling collapses to [0,0] even on empty operands),
/// sums add endpoints and are annihilated by an empty operand, joins span
/// the endpoints and ignore empty operands.
inline Interval interval_eval(const Term<QPlusSemiring>& t) {
  if (t.variables().size() > 1) {
    throw PreconditionError("interval form needs a single-variable term");
  }
  using Kind = Term<QPlusSemiring>::Kind;
  auto rec = [](auto&& self, const Term<QPlusSemiring>& u) -> Interval {
    switch (u.kind()) {
      case Kind::bottom:
        return Interval::none();
      case Kind::zero:
        return Interval::of(Rational(0), Rational(0));
      case Kind::var:
        return Interval::of(Rational(1), Rational(1));
      case Kind::scale: {
        if (u.scalar().is_zero()) {
          return Interval::of(Rational(0), Rational(0));
        }
        Interval body = self(self, u.left());
        if (body.empty) return Interval::none();
        return Interval::of(u.scalar() * body.lo, u.scalar() * body.hi);
      }
      case Kind::add: {
        Interval a = self(self, u.left());
        Interval b = self(self, u.right());
        if (a.empty || b.empty) return Interval::none();
        return Interval::of(a.lo + b.lo, a.hi + b.hi);
      }
      case Kind::join: {
        Interval a = self(self, u.left());
        Interval b = self(self, u.right());
        if (a.empty) return b;
        if (b.empty) return a;
        return Interval::of(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
      }
    }
    return Interval::none();
  };
  return rec(rec, t);
}

// ---------------------------------------------------------------------------
// The axiom suite.

template <Semiring S>
struct AxiomScheme {
  std::string name;
  int var_count = 0;
  int scalar_count = 0;
  bool scalars_nonzero = false;
  std::function<std::pair<Term<S>, Term<S>>(
      const std::vector<Term<S>>&,
      const std::vector<typename S::value_type>&)>
      instantiate;
};

/// The full finitary axiom set: join-semilattice with bottom, left
/// semimodule, and the four laws letting the two structures distribute.
template <Semiring S>
std::vector<AxiomScheme<S>> axiom_schemes() {
  using T = Term<S>;
  using Terms = std::vector<T>;
  using Scalars = std::vector<typename S::value_type>;
  std::vector<AxiomScheme<S>> out;
  auto def = [&](std::string name, int vars, int scalars, bool nonzero,
                 auto fn) {
    out.push_back({std::move(name), vars, scalars, nonzero,
                   [fn](const Terms& t, const Scalars& s) {
                     return fn(t, s);
                   }});
  };

  // Join-semilattice with bottom.
  def("join_associative", 3, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::join(T::join(t[0], t[1]), t[2]),
                     T::join(t[0], T::join(t[1], t[2])));
  });
  def("join_commutative", 2, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::join(t[0], t[1]), T::join(t[1], t[0]));
  });
  def("join_bottom_unit", 1, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::join(t[0], T::bottom()), t[0]);
  });
  def("join_idempotent", 1, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::join(t[0], t[0]), t[0]);
  });

  // Left semimodule.
  def("add_associative", 3, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::add(T::add(t[0], t[1]), t[2]),
                     T::add(t[0], T::add(t[1], t[2])));
  });
  def("add_commutative", 2, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::add(t[0], t[1]), T::add(t[1], t[0]));
  });
  def("add_zero_unit", 1, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::add(t[0], T::zero()), t[0]);
  });
  def("scale_scalar_sum", 1, 2, false, [](const Terms& t, const Scalars& s) {
    return std::pair(T::scale(S::add(s[0], s[1]), t[0]),
                     T::add(T::scale(s[0], t[0]), T::scale(s[1], t[0])));
  });
  def("scale_zero_scalar", 1, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::scale(S::zero(), t[0]), T::zero());
  });
  def("scale_scalar_product", 1, 2, false,
      [](const Terms& t, const Scalars& s) {
        return std::pair(T::scale(S::mul(s[0], s[1]), t[0]),
                         T::scale(s[0], T::scale(s[1], t[0])));
      });
  def("scale_over_sum", 2, 1, false, [](const Terms& t, const Scalars& s) {
    return std::pair(T::scale(s[0], T::add(t[0], t[1])),
                     T::add(T::scale(s[0], t[0]), T::scale(s[0], t[1])));
  });
  def("scale_zero_term", 0, 1, false, [](const Terms&, const Scalars& s) {
    return std::pair(T::scale(s[0], T::zero()), T::zero());
  });

  // Distributivity of the two structures.
  def("scale_bottom", 0, 1, true, [](const Terms&, const Scalars& s) {
    return std::pair(T::scale(s[0], T::bottom()), T::bottom());
  });
  def("add_bottom", 1, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(T::add(t[0], T::bottom()), T::bottom());
  });
  def("scale_over_join", 2, 1, false, [](const Terms& t, const Scalars& s) {
    return std::pair(T::scale(s[0], T::join(t[0], t[1])),
                     T::join(T::scale(s[0], t[0]), T::scale(s[0], t[1])));
  });
  def("add_over_join", 3, 0, false, [](const Terms& t, const Scalars&) {
    return std::pair(
        T::add(t[0], T::join(t[1], t[2])),
        T::join(T::add(t[0], t[1]), T::add(t[0], t[2])));
  });

  return out;
}

/// Instantiates every axiom and compares both sides as convex sets.  Over
/// the booleans the instantiation is exhaustive: variables range over terms
/// denoting every convex set over the basis and scalars over the whole
/// carrier.  Otherwise variables are random terms and scalars random
/// elements, `samples` rounds per axiom.
template <Semiring S>
Report check_axiom_suite(const Basis& basis, int samples = 100,
                         std::uint64_t seed = default_seed, int depth = 2) {
  Report report;
  report.suite = "axioms";
  report.seed = seed;

  auto run_instance = [&](const AxiomScheme<S>& axiom,
                          const std::vector<Term<S>>& terms,
                          const std::vector<typename S::value_type>& scalars,
                          std::string& witness) {
    auto [lhs, rhs] = axiom.instantiate(terms, scalars);
    if (equal_terms(lhs, rhs, basis)) return true;
    witness = to_string(lhs) + "  vs  " + to_string(rhs);
    return false;
  };

  if constexpr (S::enumerable) {
    if (basis.size() > 2) {
      throw ResourceLimitError(
          "exhaustive axiom instantiation supports bases of size 0-2");
    }
    std::vector<Term<S>> pool;
    for (const auto& c : all_bool_convex_sets(basis)) {
      pool.push_back(term_for_set(c));
    }
    std::vector<typename S::value_type> carrier = S::enumerate();

    for (const auto& axiom : axiom_schemes<S>()) {
      bool pass = true;
      std::string witness;
      std::vector<std::size_t> t_idx(axiom.var_count, 0);
      std::vector<std::size_t> s_idx(axiom.scalar_count, 0);
      bool done = false;
      while (!done && pass) {
        std::vector<Term<S>> terms;
        for (std::size_t i : t_idx) terms.push_back(pool[i]);
        std::vector<typename S::value_type> scalars;
        bool skip = false;
        for (std::size_t i : s_idx) {
          scalars.push_back(carrier[i]);
          if (axiom.scalars_nonzero && carrier[i] == S::zero()) skip = true;
        }
        if (!skip) pass = run_instance(axiom, terms, scalars, witness);
        // Advance the mixed-radix counter over (terms, scalars).
        done = true;
        for (std::size_t i = 0; i < t_idx.size(); ++i) {
          if (++t_idx[i] < pool.size()) {
            done = false;
            break;
          }
          t_idx[i] = 0;
        }
        if (done) {
          for (std::size_t i = 0; i < s_idx.size(); ++i) {
            if (++s_idx[i] < carrier.size()) {
              done = false;
              break;
            }
            s_idx[i] = 0;
          }
        }
      }
      report.add(axiom.name, pass, witness);
    }
  } else {
    Rng rng(seed);
    for (const auto& axiom : axiom_schemes<S>()) {
      bool pass = true;
      std::string witness;
      for (int round = 0; round < samples && pass; ++round) {
        std::vector<Term<S>> terms;
        for (int i = 0; i < axiom.var_count; ++i) {
          terms.push_back(random_term<S>(basis, depth, rng));
        }
        std::vector<typename S::value_type> scalars;
        for (int i = 0; i < axiom.scalar_count; ++i) {
          scalars.push_back(axiom.scalars_nonzero ? sample_nonzero<S>(rng)
                                                  : S::sample(rng));
        }
        pass = run_instance(axiom, terms, scalars, witness);
      }
      report.add(axiom.name, pass, witness);
    }
  }
  return report;
}

}  // namespace convexalg
