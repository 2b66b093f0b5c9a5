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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "convexalg/semiring_checks.hpp"
#include "convexalg/serialize.hpp"
#include "convexalg/text.hpp"
#include "convexalg/theory.hpp"

namespace {

using namespace convexalg;

// Exit codes: 0 success / laws pass / terms equal, 1 failure or inequality,
// 2 syntax error, 3 semantic error, 4 resource limit.
enum ExitCode {
  exit_ok = 0,
  exit_unequal = 1,
  exit_syntax = 2,
  exit_semantic = 3,
  exit_resource = 4,
};

struct Options {
  std::string semiring = "rat";
  std::string basis_csv;
  std::uint64_t seed = default_seed;
  int max_size = 2;
  int samples = 200;
  std::string format = "text";

  void validate() const {
    if (samples < 1) throw PreconditionError("--samples must be positive");
    if (max_size < 0) throw PreconditionError("--max-size must be nonnegative");
    if (format != "text" && format != "json") {
      throw PreconditionError("--format must be text or json");
    }
  }

  Basis basis() const {
    Basis b;
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= basis_csv.size() && !basis_csv.empty()) {
      std::size_t comma = basis_csv.find(',', start);
      std::size_t end = comma == std::string::npos ? basis_csv.size() : comma;
      std::string id = basis_csv.substr(start, end - start);
      if (id.empty()) throw PreconditionError("empty basis identifier");
      b.insert(std::move(id));
      ++count;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (b.size() != count) {
      throw PreconditionError("duplicate basis identifiers");
    }
    return b;
  }
  bool json_output() const { return format == "json"; }
};

template <class F>
int with_semiring(const std::string& tag, F&& f) {
  if (tag == "bool") return f(BoolSemiring{});
  if (tag == "rat") return f(QPlusSemiring{});
  if (tag == "nat") return f(NatSemiring{});
  throw PreconditionError("unknown semiring '" + tag + "'");
}

void print_report(const Report& report, const Options& opt) {
  if (opt.json_output()) {
    std::cout << to_json(report).dump(2) << "\n";
    return;
  }
  for (const auto& c : report.cases) {
    std::cout << c.name << ": " << (c.pass ? "pass" : "fail");
    if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
  std::cout << (report.all_pass() ? "all checks passed" : "FAILURES above")
            << "\n";
}

int cmd_eval(const Options& opt, const std::string& term_text) {
  return with_semiring(opt.semiring, [&](auto tag) {
    using S = decltype(tag);
    Basis basis = opt.basis();
    Term<S> term = parse_term<S>(term_text);
    ConvexSet<S> value = eval(term, basis);

    bool with_interval = false;
    Interval interval;
    if constexpr (S::id == SemiringId::rational_nonneg) {
      if (basis.size() == 1) {
        interval = interval_eval(term);
        with_interval = true;
      }
    }

    if (opt.json_output()) {
      json out = json::object();
      out["term"] = to_string(term);
      out["value"] = to_json(value);
      if (with_interval) out["interval"] = interval.to_string();
      std::cout << out.dump(2) << "\n";
    } else {
      if (value.is_empty()) {
        std::cout << "empty set\n";
      } else {
        std::cout << "generators:\n";
        for (const auto& g : value.generators()) {
          std::cout << "  " << text(g) << "\n";
        }
      }
      if (with_interval) {
        std::cout << "interval: " << interval.to_string() << "\n";
      }
    }
    return exit_ok;
  });
}

int cmd_equal(const Options& opt, const std::string& lhs_text,
              const std::string& rhs_text) {
  return with_semiring(opt.semiring, [&](auto tag) {
    using S = decltype(tag);
    Basis basis = opt.basis();
    bool same = equal_terms(parse_term<S>(lhs_text), parse_term<S>(rhs_text),
                            basis);
    if (opt.json_output()) {
      json out = json::object();
      out["equal"] = same;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (same ? "equal" : "not equal") << "\n";
    }
    return same ? exit_ok : exit_unequal;
  });
}

int cmd_laws(const Options& opt, const std::string& suite) {
  Report report;
  if (suite == "weak-law" || suite == "thm2" || suite == "pentagon") {
    if (opt.semiring != "bool") {
      throw UnsupportedError("suite '" + suite +
                             "' runs on the boolean instance");
    }
    if (suite == "weak-law") {
      report = check_weak_law(opt.max_size);
    } else if (suite == "thm2") {
      report = check_thm2_equivalence(opt.max_size, opt.samples, opt.seed);
    } else {
      report = check_pentagon(opt.max_size);
    }
  } else if (suite == "monad" || suite == "kleisli") {
    with_semiring(opt.semiring, [&](auto tag) {
      using S = decltype(tag);
      if constexpr (!S::semifield) {
        throw UnsupportedError("suite needs a semifield instance");
      } else {
        report = suite == "monad"
                     ? check_monad_laws<S>(opt.max_size, opt.samples, opt.seed)
                     : check_kleisli_cppo<S>(opt.max_size, opt.samples,
                                             opt.seed);
      }
      return 0;
    });
  } else if (suite == "axioms") {
    with_semiring(opt.semiring, [&](auto tag) {
      using S = decltype(tag);
      if constexpr (!S::semifield) {
        throw UnsupportedError("suite needs a semifield instance");
      } else {
        Basis basis = opt.basis_csv.empty() ? Basis{"x", "y"} : opt.basis();
        report = check_axiom_suite<S>(basis, opt.samples, opt.seed);
      }
      return 0;
    });
  } else {
    throw PreconditionError("unknown suite '" + suite + "'");
  }
  print_report(report, opt);
  return report.all_pass() ? exit_ok : exit_unequal;
}

int cmd_check_semiring(const Options& opt) {
  return with_semiring(opt.semiring, [&](auto tag) {
    using S = decltype(tag);
    Report report;
    report.suite = "check-semiring";
    report.seed = opt.seed;

    auto axiom_violations = check_axioms<S>(opt.samples, opt.seed);
    report.add("semiring_axioms", axiom_violations.empty(),
               axiom_violations.empty() ? "" : axiom_violations.front());

    const SemiringProperty props[] = {
        SemiringProperty::positive,  SemiringProperty::semifield,
        SemiringProperty::refinable, SemiringProperty::prop_a,
        SemiringProperty::prop_b,    SemiringProperty::prop_c,
        SemiringProperty::prop_d,    SemiringProperty::prop_e,
    };
    std::vector<std::pair<std::string, std::string>> skipped;
    for (SemiringProperty p : props) {
      try {
        PropertyVerdict v = check_property<S>(p, opt.samples, opt.seed);
        std::string detail;
        if (v.kind == PropertyVerdict::Kind::fails) {
          detail = "witness (";
          for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) detail += ", ";
            detail += v.witness[i];
          }
          detail += ")";
        } else {
          detail = v.kind == PropertyVerdict::Kind::holds_exhaustive
                       ? "exhaustive"
                       : "sampled";
        }
        // A failing property is a finding about the instance, not a broken
        // check, so the case itself reports as pass with the verdict.
        std::string name = std::string("property_") + to_string(p);
        if (v.holds()) {
          report.add(name + "_holds", true, detail);
        } else {
          report.add(name + "_fails", true, detail);
        }
      } catch (const UnsupportedError& e) {
        skipped.emplace_back(std::string("property_") + to_string(p),
                             e.what());
      }
    }

    print_report(report, opt);
    if (!opt.json_output()) {
      for (const auto& [name, why] : skipped) {
        std::cout << name << ": unsupported (" << why << ")\n";
      }
    }
    return report.all_pass() ? exit_ok : exit_unequal;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact semiring-generic calculator for finitely generated convex "
      "subsets of free semimodules: term evaluation, decidable term "
      "equality, and finite-model law suites."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--semiring", opt.semiring, "bool, rat, or nat")
      ->capture_default_str();
  app.add_option("--basis", opt.basis_csv,
                 "comma-separated basis identifiers");
  app.add_option("--seed", opt.seed, "seed for the sampled suites")
      ->envname("CONVEXALG_SEED")
      ->capture_default_str();
  app.add_option("--max-size", opt.max_size, "basis-size cap for law suites")
      ->capture_default_str();
  app.add_option("--samples", opt.samples, "sample count for random suites")
      ->capture_default_str();
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string term_text, lhs_text, rhs_text, suite;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a term to a convex set");
  eval_cmd->add_option("term", term_text, "term to evaluate")->required();

  CLI::App* equal_cmd =
      app.add_subcommand("equal", "decide equality of two terms");
  equal_cmd->add_option("lhs", lhs_text)->required();
  equal_cmd->add_option("rhs", rhs_text)->required();

  CLI::App* laws_cmd = app.add_subcommand("laws", "run a law suite");
  laws_cmd
      ->add_option("--suite", suite,
                   "weak-law, thm2, monad, pentagon, axioms, or kleisli")
      ->required();

  CLI::App* check_cmd =
      app.add_subcommand("check-semiring", "semiring axiom/property report");

  // Shared options may appear after the subcommand name.
  for (CLI::App* sub : {eval_cmd, equal_cmd, laws_cmd, check_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
    opt.validate();
    if (eval_cmd->parsed()) return cmd_eval(opt, term_text);
    if (equal_cmd->parsed()) return cmd_equal(opt, lhs_text, rhs_text);
    if (laws_cmd->parsed()) return cmd_laws(opt, suite);
    if (check_cmd->parsed()) return cmd_check_semiring(opt);
    return exit_semantic;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_syntax;
  } catch (const convexalg::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return exit_syntax;
  } catch (const convexalg::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const convexalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_semantic;
  }
}
