// Copyright 2026 The seqprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one line per criterion, non-zero exit if any fails.
//
//   seqprod_acceptance <path to seqprod executable>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "seqprod/generators.hpp"
#include "seqprod/report.hpp"
#include "seqprod/suites.hpp"

using namespace seqprod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok;
  std::string detail;
};

bool has_note(const SuiteReport& r, const std::string& text) {
  for (const auto& n : r.notes)
    if (n.find(text) != std::string::npos) return true;
  return false;
}

const Json* find_witness(const SuiteReport& r, const std::string& prefix) {
  for (const auto& w : r.witnesses)
    if (w["name"].get<std::string>().rfind(prefix, 0) == 0) return &w;
  return nullptr;
}

std::string summary(const SuiteReport& r) {
  return std::string(to_string(r.status)) + ", " + std::to_string(r.cases_passed) + "/" +
         std::to_string(r.cases_run) + " cases";
}

Outcome example4() {
  const auto start = Clock::now();
  const Effect a(ComplexMatrix{{1, 0}, {0, 0.5}});
  const Effect b(ComplexMatrix{{0, 0}, {0, 1}});
  const Operation j = kraus_operation(ComplexMatrix{{1, 0}, {0, 1 / std::sqrt(2.0)}});
  const Operation k = kraus_operation(ComplexMatrix{{0, 1}, {0, 0}});
  const CommutatorResult c = commutator(a, b, j, k);
  const ComplexMatrix expected{{0, 0}, {0, -0.5}};
  const double dev = max_abs_diff(c.value, expected);
  const double bracket = max_abs(a.matrix() * b.matrix() - b.matrix() * a.matrix());
  const double ms = seconds_since(start) * 1e3;
  const SuiteReport suite = run_suite("example-4", TrialConfig{});
  std::ostringstream s;
  s << "|C - diag(0,-1/2)| = " << dev << ", |ab - ba| = " << bracket << ", " << ms << " ms, suite "
    << summary(suite);
  return {dev <= 1e-12 && bracket == 0.0 && ms < 100.0 && suite.ok(), s.str()};
}

Outcome thm21() {
  const SuiteReport r = run_suite("thm-2.1", TrialConfig{});
  const Json* h2 = find_witness(r, "(H2)");
  const Json* h3 = find_witness(r, "(H3)");
  const Json* h4 = find_witness(r, "(H4)");
  const bool early = h2 && h3 && (*h2)["trial"].get<int>() < 50 && (*h3)["trial"].get<int>() < 50;
  std::ostringstream s;
  s << summary(r) << ", H2 trial " << (h2 ? (*h2)["trial"].get<int>() : -1) << ", H3 trial "
    << (h3 ? (*h3)["trial"].get<int>() : -1) << ", H4 " << (h4 ? "found" : "missing");
  return {r.status == SuiteStatus::pass && early && h4 != nullptr && r.cases_run >= 2 * 200, s.str()};
}

Outcome suite_with_time(const std::string& name, double limit_s) {
  const auto start = Clock::now();
  const SuiteReport r = run_suite(name, TrialConfig{});
  const double t = seconds_since(start);
  std::ostringstream s;
  s << summary(r) << ", " << t << " s";
  return {r.status == SuiteStatus::pass && t < limit_s, s.str()};
}

Outcome thm31() {
  const SuiteReport r = run_suite("thm-3.1", TrialConfig{});
  const bool agree = has_note(r, "900 instances") && has_note(r, " 0 criterion disagreements");
  return {r.status == SuiteStatus::pass && agree, summary(r) + (r.notes.empty() ? "" : ", " + r.notes.front())};
}

Outcome plain_suite(const std::string& name) {
  const SuiteReport r = run_suite(name, TrialConfig{});
  return {r.status == SuiteStatus::pass, summary(r)};
}

Outcome uncertainty() {
  const SuiteReport r = run_suite("uncertainty", TrialConfig{});
  const Json* w = find_witness(r, "equality case");
  bool witness_ok = false;
  if (w) {
    const double cor_sq = std::pow((*w)["correlation_re"].get<double>(), 2) +
                          std::pow((*w)["correlation_im"].get<double>(), 2);
    witness_ok = std::abs(cor_sq - 1.0) <= 1e-12 && std::abs((*w)["bound"].get<double>() - 1.0) <= 1e-12 &&
                 std::abs((*w)["commutator_term"].get<double>() - 4.0) <= 1e-12;
  }
  return {r.status == SuiteStatus::pass && witness_ok && r.cases_run >= 1500,
          summary(r) + (witness_ok ? ", sigma_x/sigma_y: |Cor|^2 = bound = 1, commutator_term = 4" : "")};
}

Outcome examples56() {
  const SuiteReport r = run_suite("stats-identities", TrialConfig{});
  // Direct check of the shared-alpha collapse over 20 states.
  Rng rng(2024);
  const Observable a = random_observable(3, 3, rng);
  const RealObservable b = random_real_observable(3, random_outcome_values(3, rng), rng);
  const State alpha = random_state(3, rng);
  const Instrument h = holevo_instrument(a, std::vector<State>(3, alpha));
  const double target = expectation(alpha, stochastic_operator(b));
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    worst = std::max(worst, std::abs(conditioned_stats(random_state(3, rng), b, b, h).expectation_s - target));
  }
  std::ostringstream s;
  s << summary(r) << ", shared-alpha spread " << worst;
  return {r.status == SuiteStatus::pass && worst <= 1e-9, s.str()};
}

int run_cli(const std::string& exe, const std::string& out) {
  const std::string cmd = "\"" + exe + "\" check --all --seed 0 --format json --out \"" + out + "\"";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome end_to_end(const std::string& exe) {
  if (exe.empty()) return {false, "no seqprod executable given"};
  const std::string p1 = "acceptance_run1.json";
  const std::string p2 = "acceptance_run2.json";
  const auto start = Clock::now();
  const int rc1 = run_cli(exe, p1);
  const double t = seconds_since(start);
  const int rc2 = run_cli(exe, p2);
  const std::string a = slurp(p1);
  const bool same = !a.empty() && a == slurp(p2);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  std::ostringstream s;
  s << "exit " << rc1 << "/" << rc2 << ", " << t << " s, rerun " << (same ? "byte-identical" : "differs");
  return {rc1 == 0 && rc2 == 0 && t < 60.0 && same, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example-4 commutator reproduction", example4},
      {"Holevo product suite (H1-H5, associativity)", thm21},
      {"Lueders L1-L5 suite under 10 s", [] { return suite_with_time("luders-L1-L5", 10.0); }},
      {"Repeatability criteria agree", thm31},
      {"Eigenvalue-one repeatability", [] { return plain_suite("thm-3.2"); }},
      {"Kraus and Holevo repeatability", [] { return plain_suite("thm-3.3"); }},
      {"Conditioning fixed points and commutation", [] { return plain_suite("thm-3.4"); }},
      {"Marginal laws of sequential observables", [] { return plain_suite("obs-marginals"); }},
      {"Uncertainty bound and decomposition", uncertainty},
      {"Conditioned stochastic operator closed forms", examples56},
      {"End-to-end check --all", [&] { return end_to_end(exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << "criterion " << (i + 1) << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
