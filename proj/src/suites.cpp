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

#include "seqprod/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "seqprod/error.hpp"
#include "suite_support.hpp"

namespace seqprod {
namespace detail {
namespace {

constexpr int kMaxFailureNotes = 20;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng Recorder::stream(std::string_view part, Index dim) const {
  return base_.split(fnv1a(part) ^ (static_cast<std::uint64_t>(dim) * 0x9e3779b97f4a7c15ULL));
}

int Recorder::scaled(int native) const {
  const long long n = static_cast<long long>(native) * cfg_.trials / 200;
  return static_cast<int>(std::max<long long>(1, n));
}

std::vector<Index> Recorder::dims(Index lo, Index hi) const {
  if (cfg_.dim) return {static_cast<Index>(*cfg_.dim)};
  std::vector<Index> out;
  for (Index d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

void Recorder::fail(std::string text) {
  if (failure_notes_ < kMaxFailureNotes) notes_.push_back("FAIL " + std::move(text));
  ++failure_notes_;
}

void Recorder::check(std::string_view what, const std::function<bool()>& body) {
  ++cases_run_;
  try {
    if (body()) {
      ++cases_passed_;
    } else {
      fail(std::string(what));
    }
  } catch (const Error& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

void Recorder::expect(bool ok, std::string_view what) {
  check(what, [ok] { return ok; });
}

bool Recorder::search(std::string_view name, const std::vector<Index>& dims, const Probe& probe,
                      bool required) {
  for (const Index d : dims) {
    Rng rng = stream(name, d);
    for (int t = 0; t < cfg_.trials; ++t) {
      std::optional<Json> found;
      try {
        found = probe(d, rng);
      } catch (const Error& e) {
        if (required) ++cases_run_;
        fail(std::string(name) + " search: " + e.what());
        return false;
      }
      if (found) {
        Json w = {{"name", name}, {"dim", d}, {"trial", t}};
        w.update(*found);
        witnesses_.push_back(std::move(w));
        if (required) {
          ++cases_run_;
          ++cases_passed_;
        } else {
          note("exploratory " + std::string(name) + ": witness found at dim " + std::to_string(d) +
               ", trial " + std::to_string(t));
        }
        return true;
      }
    }
  }
  if (required) {
    ++cases_run_;
    ++missing_witnesses_;
    note("witness not found: " + std::string(name) + " after " + std::to_string(cfg_.trials) +
         " trials per dimension");
  } else {
    note("exploratory " + std::string(name) + ": no witness within " +
         std::to_string(cfg_.trials) + " trials per dimension");
  }
  return false;
}

void Recorder::witness(std::string_view name, Json body) {
  Json w = {{"name", name}};
  w.update(body);
  witnesses_.push_back(std::move(w));
}

void Recorder::note(std::string text) { notes_.push_back(std::move(text)); }

SuiteReport Recorder::finish(std::string suite, std::string claim, bool counterexample) const {
  SuiteReport out;
  out.suite = std::move(suite);
  out.paper_claim = std::move(claim);
  out.cases_run = cases_run_;
  out.cases_passed = cases_passed_;
  out.witnesses = witnesses_;
  out.notes = notes_;
  if (failure_notes_ > kMaxFailureNotes) {
    out.notes.push_back(std::to_string(failure_notes_ - kMaxFailureNotes) +
                        " further failures not listed");
  }
  const int failures = cases_run_ - cases_passed_ - missing_witnesses_;
  if (failures > 0) {
    out.status = SuiteStatus::fail;
  } else if (missing_witnesses_ > 0) {
    out.status = SuiteStatus::witness_not_found;
  } else {
    out.status = !counterexample              ? SuiteStatus::pass
                 : out.witnesses.empty() ? SuiteStatus::witness_not_found
                                         : SuiteStatus::witness_found;
  }
  return out;
}

bool nonnegative(const ComplexMatrix& x, double tol) {
  return min_eigenvalue(hermitian_part(x)) >= -tol;
}

}  // namespace detail

namespace {

enum class Kind { theorem, counterexample };

struct Entry {
  SuiteInfo info;
  Kind kind;
  detail::SuiteFn fn;
};

const std::vector<Entry>& registry() {
  using namespace detail;
  static const std::vector<Entry> entries = {
      {{"duality", "tr[rho I*(b)] = tr[I(rho) b] for every operation, state and effect"},
       Kind::theorem, suite_duality},
      {{"seqprod-laws",
        "a[I]I = a, a[I]0 = 0, 0[I]a = 0 and a[I]b <= a; b -> a[I]b is additive on orthogonal "
        "effects and convex"},
       Kind::theorem, suite_seqprod_laws},
      {{"luders-L1-L5",
        "The Lüders product satisfies (L1) to (L5); its commutator vanishes iff ab = ba"},
       Kind::theorem, suite_luders},
      {{"thm-2.1",
        "Holevo products: (H1) and (H5) hold, (H2) and (H3) fail, commutation need not pass from "
        "b to b', and the iterated product a[H](b[H]c) is associative"},
       Kind::theorem, suite_thm21},
      {{"kraus-counterparts",
        "Kraus products: the (L1) counterpart holds and the (L3) counterpart holds for "
        "K = U a^{1/2} with [U, a] = 0; the (L2), (L4) and general (L3) counterparts fail; "
        "an (L5) failure is searched for"},
       Kind::counterexample, suite_kraus_counterparts},
      {{"example-1",
        "a <= b need not give c[I]a <= c[J]b or a[I]c <= b[J]c once the operations differ, "
        "even for Lüders operations"},
       Kind::counterexample, suite_example1},
      {{"example-2",
        "C(c,a) = C(c,b) = 0 need not give C(c, a[J]b) = 0 once a Holevo operation is involved"},
       Kind::counterexample, suite_example2},
      {{"example-3",
        "For Holevo operations C(c,a) = C(c,b) = 0 need not give C(c, a+b) = 0; it does for "
        "Lüders operations"},
       Kind::counterexample, suite_example3},
      {{"example-4",
        "Commuting a = diag(1, 1/2), b = diag(0, 1) with Kraus operations J, K give "
        "C(a,b;J,K) = diag(0, -1/2) != 0"},
       Kind::theorem, suite_example4},
      {{"thm-3.1",
        "I*(a) = a, a[I]a' = 0, a[I]b = 0 for all b perpendicular to a, I*(b) <= I*(a) for all "
        "b, and tr I(I(rho)) = tr I(rho) for all rho are equivalent"},
       Kind::theorem, suite_thm31},
      {{"thm-3.2", "An effect is repeatable iff it is 0 or has eigenvalue 1"}, Kind::theorem,
       suite_thm32},
      {{"thm-3.3",
        "a is Kraus-repeatable iff sharp; a is repeatable for H(a, alpha) iff a = 0 or a fixes "
        "every eigenvector in the support of alpha"},
       Kind::theorem, suite_thm33},
      {{"thm-3.4",
        "[a,b] = 0 gives b|(L^a, L^a')a = b; for sharp a the converse holds"},
       Kind::theorem, suite_thm34},
      {{"conditioning-laws",
        "b -> b|(I,J)a is a convex morphism with I|a = I and b'|a = (b|a)'; Holevo pairs give "
        "tr[(alpha - beta) b] a + tr(beta b) I"},
       Kind::theorem, suite_conditioning},
      {{"obs-marginals",
        "The marginals of A[I]B are the measured observable A and B|(I)A, which therefore "
        "coexist"},
       Kind::theorem, suite_obs_marginals},
      {{"obs-distribution",
        "Observable and instrument distributions sum to 1; an instrument measures x -> I_x*(I)"},
       Kind::theorem, suite_obs_distribution},
      {{"post-processing",
        "tr(alpha_x B_y) is row-stochastic and (B|H A)_y = sum_x tr(alpha_x B_y) A_x; sharp A "
        "gives commuting effects"},
       Kind::theorem, suite_post_processing},
      {{"stats-identities",
        "(B|I A)~ = Ibar*(B~), E_rho(B|I A) = tr[Ibar(rho) B~], and the Lüders and Holevo "
        "closed forms"},
       Kind::theorem, suite_stats},
      {{"uncertainty",
        "|Cor(S,T)|^2 <= Var(S) Var(T) with |Cor(S,T)|^2 = Cov(S,T)^2 + |tr(rho [S,T])|^2 / 4"},
       Kind::theorem, suite_uncertainty},
  };
  return entries;
}

SuiteReport run_entry(std::size_t index, const TrialConfig& cfg) {
  const Entry& e = registry()[index];
  detail::Recorder rec(cfg, Rng(cfg.seed).split(index));
  try {
    e.fn(rec);
  } catch (const std::exception& ex) {
    rec.check("suite aborted", [&]() -> bool { throw Error(ErrorKind::InvariantViolation, ex.what()); });
  }
  return rec.finish(e.info.name, e.info.paper_claim, e.kind == Kind::counterexample);
}

}  // namespace

void TrialConfig::validate() const {
  if (dim && *dim < 2) throw Error(ErrorKind::BadConfig, "dim must be at least 2");
  if (dim && *dim > 16) throw Error(ErrorKind::BadConfig, "dim must be at most 16");
  if (trials < 1) throw Error(ErrorKind::BadConfig, "trials must be at least 1");
  tol.validate();
}

std::string_view to_string(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::pass:
      return "pass";
    case SuiteStatus::fail:
      return "fail";
    case SuiteStatus::witness_found:
      return "witness-found";
    case SuiteStatus::witness_not_found:
      return "witness-not-found";
  }
  return "fail";
}

const std::vector<SuiteInfo>& list_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteReport run_suite(std::string_view name, const TrialConfig& cfg) {
  cfg.validate();
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (reg[i].info.name == name) return run_entry(i, cfg);
  }
  throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_all(const TrialConfig& cfg, bool parallel) {
  cfg.validate();
  const std::size_t n = registry().size();
  std::vector<SuiteReport> out(n);
  if (!parallel) {
    for (std::size_t i = 0; i < n; ++i) out[i] = run_entry(i, cfg);
    return out;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) out[i] = run_entry(i, cfg);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

int exit_code(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return 1;
  }
  return 0;
}

Json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},
          {"paper_claim", r.paper_claim},
          {"cases_run", r.cases_run},
          {"cases_passed", r.cases_passed},
          {"witnesses", r.witnesses},
          {"status", to_string(r.status)},
          {"notes", r.notes}};
}

}  // namespace seqprod
