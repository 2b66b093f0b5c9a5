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

#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(CONVEXALG_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 512> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    output += buffer.data();
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("cli evaluates terms") {
  auto r = run_cli("eval --semiring rat --basis x \"1*x | 3*x\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("interval: [1, 3]") != std::string::npos);

  auto empty = run_cli("eval --semiring rat --basis x bot");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("empty set") != std::string::npos);

  auto zero = run_cli("eval --semiring rat --basis x 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("{}") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("equal --semiring rat --basis x,y \"x|y\" \"y|x\"").exit_code ==
        0);
  CHECK(run_cli("equal --semiring rat --basis x,y x y").exit_code == 1);
  CHECK(run_cli("equal --semiring rat --basis x \"x +\" x").exit_code == 2);
  CHECK(run_cli("eval --semiring nat --basis x x").exit_code == 3);
  CHECK(run_cli("laws --semiring bool --suite weak-law --max-size 9")
            .exit_code == 4);
}

TEST_CASE("cli law suites") {
  auto weak = run_cli("laws --semiring bool --suite weak-law --max-size 1");
  CHECK(weak.exit_code == 0);
  CHECK(weak.output.find("eta_powerset_triangle: pass") != std::string::npos);

  auto thm2 =
      run_cli("laws --semiring bool --suite thm2 --max-size 2 --format json");
  CHECK(thm2.exit_code == 0);
  CHECK(thm2.output.find("\"suite\": \"thm2\"") != std::string::npos);
}

TEST_CASE("cli check-semiring reports the property table") {
  auto nat = run_cli("check-semiring --semiring nat --samples 60");
  CHECK(nat.exit_code == 0);
  CHECK(nat.output.find("property_semifield_fails") != std::string::npos);
  CHECK(nat.output.find("property_A_holds") != std::string::npos);
  CHECK(nat.output.find("property_E: unsupported") != std::string::npos);

  auto b = run_cli("check-semiring --semiring bool --samples 10");
  CHECK(b.exit_code == 0);
  CHECK(b.output.find("property_semifield_holds") != std::string::npos);
  CHECK(b.output.find("property_A_fails: pass  [witness (1, 1)]") !=
        std::string::npos);
}

TEST_CASE("fixed seeds give byte-identical json reports") {
  std::string args =
      "laws --semiring rat --suite monad --max-size 2 --samples 30 "
      "--seed 12345 --format json";
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}
