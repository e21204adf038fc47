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

#include "seqprod/observables.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "seqprod/error.hpp"

namespace seqprod {
namespace {

template <typename T>
void require_distinct(const std::vector<T>& labels, std::string_view what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw Error(ErrorKind::DuplicateLabel,
                    std::string(what) + ": duplicate outcome '" + label_to_string(labels[i]) + "'");
      }
    }
  }
}

void require_sums_to_identity(std::span<const Effect> effects, const Tolerances& tol,
                              std::string_view what) {
  ComplexMatrix sum = zero(effects.front().dim());
  for (const auto& e : effects) {
    require_same_dim(sum, e.matrix(), what);
    sum += e.matrix();
  }
  const double err = max_abs(sum - identity(sum.rows()));
  if (err > tol.eq_tol) {
    throw Error(ErrorKind::NotNormalized,
                std::string(what) + ": effects sum to I only within " + std::to_string(err));
  }
}

}  // namespace

std::string label_to_string(const Label& label) {
  if (const auto* s = std::get_if<std::string>(&label)) return *s;
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::get<double>(label));
  return std::string(buf.data(), res.ptr);
}

std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::to_string(i));
  return out;
}

Observable::Observable(std::vector<Label> outcomes, std::vector<Effect> effects,
                       const Tolerances& tol)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
  if (effects_.empty() || outcomes_.size() != effects_.size()) {
    throw Error(ErrorKind::LengthMismatch, "Observable: need one effect per outcome");
  }
  require_distinct(outcomes_, "Observable");
  require_sums_to_identity(effects_, tol, "Observable");
}

std::size_t Observable::index_of(const Label& label) const {
  auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
  if (it == outcomes_.end()) {
    throw Error(ErrorKind::UnknownLabel, "no outcome '" + label_to_string(label) + "'");
  }
  return static_cast<std::size_t>(it - outcomes_.begin());
}

bool Observable::is_sharp(const Tolerances& tol) const {
  return std::all_of(effects_.begin(), effects_.end(),
                     [&](const Effect& e) { return seqprod::is_sharp(e, tol); });
}

RealObservable::RealObservable(Observable obs) : obs_(std::move(obs)) {
  for (const auto& label : obs_.outcomes()) {
    const auto* v = std::get_if<double>(&label);
    if (v == nullptr || !std::isfinite(*v)) {
      throw Error(ErrorKind::OutcomeMismatch,
                  "RealObservable: label '" + label_to_string(label) + "' is not a finite real");
    }
    values_.push_back(*v);
  }
}

RealObservable::RealObservable(std::vector<double> values, std::vector<Effect> effects,
                               const Tolerances& tol)
    : RealObservable(Observable(std::vector<Label>(values.begin(), values.end()),
                                std::move(effects), tol)) {}

Instrument::Instrument(std::vector<Label> outcomes, std::vector<Operation> operations,
                       const Tolerances& tol)
    : outcomes_(std::move(outcomes)), operations_(std::move(operations)) {
  if (operations_.empty() || outcomes_.size() != operations_.size()) {
    throw Error(ErrorKind::LengthMismatch, "Instrument: need one operation per outcome");
  }
  require_distinct(outcomes_, "Instrument");
  ComplexMatrix sum = zero(operations_.front().dim());
  for (const auto& op : operations_) {
    require_same_dim(sum, op.kraus().front(), "Instrument");
    for (const auto& k : op.kraus()) sum += k.adjoint() * k;
  }
  const double err = max_abs(sum - identity(sum.rows()));
  if (err > tol.eq_tol) {
    throw Error(ErrorKind::NotNormalized,
                "Instrument: total operation is not a channel (error " + std::to_string(err) + ")");
  }
}

BiObservable::BiObservable(std::vector<Label> outcomes1, std::vector<Label> outcomes2,
                           std::vector<Effect> effects, const Tolerances& tol)
    : outcomes1_(std::move(outcomes1)),
      outcomes2_(std::move(outcomes2)),
      effects_(std::move(effects)) {
  if (outcomes1_.empty() || outcomes2_.empty() ||
      effects_.size() != outcomes1_.size() * outcomes2_.size()) {
    throw Error(ErrorKind::LengthMismatch, "BiObservable: need one effect per outcome pair");
  }
  require_distinct(outcomes1_, "BiObservable");
  require_distinct(outcomes2_, "BiObservable");
  require_sums_to_identity(effects_, tol, "BiObservable");
}

std::vector<std::pair<Label, double>> distribution(const State& rho, const Observable& obs,
                                                   const Tolerances& tol) {
  std::vector<std::pair<Label, double>> out;
  out.reserve(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) {
    out.emplace_back(obs.outcomes()[i], prob(rho, obs.effects()[i], tol));
  }
  return out;
}

std::vector<std::pair<Label, double>> distribution(const State& rho, const Instrument& instr) {
  std::vector<std::pair<Label, double>> out;
  out.reserve(instr.size());
  for (std::size_t i = 0; i < instr.size(); ++i) {
    out.emplace_back(instr.outcomes()[i], seqprod::apply(instr.operations()[i], rho).trace().real());
  }
  return out;
}

Effect subset_effect(const Observable& obs, std::span<const Label> subset,
                     const Tolerances& tol) {
  ComplexMatrix sum = zero(obs.dim());
  std::vector<std::size_t> seen;
  for (const auto& label : subset) {
    const std::size_t i = obs.index_of(label);
    if (std::find(seen.begin(), seen.end(), i) != seen.end()) continue;
    seen.push_back(i);
    sum += obs.effects()[i].matrix();
  }
  return Effect(std::move(sum), tol);
}

Operation total_channel(const Instrument& instr, const Tolerances& tol) {
  return operation_sum(instr.operations(), tol);
}

Observable measured_observable(const Instrument& instr, const Tolerances& tol) {
  std::vector<Effect> effects;
  effects.reserve(instr.size());
  for (const auto& op : instr.operations()) effects.push_back(measured_effect(op, tol));
  return Observable(instr.outcomes(), std::move(effects), tol);
}

Instrument luders_instrument(const Observable& obs, const Tolerances& tol) {
  std::vector<Operation> ops;
  ops.reserve(obs.size());
  for (const auto& e : obs.effects()) ops.push_back(luders_operation(e, tol));
  return Instrument(obs.outcomes(), std::move(ops), tol);
}

Instrument holevo_instrument(const Observable& obs, std::span<const State> alphas,
                             const Tolerances& tol) {
  if (alphas.size() != obs.size()) {
    throw Error(ErrorKind::LengthMismatch, "holevo_instrument: need one state per outcome");
  }
  std::vector<Operation> ops;
  ops.reserve(obs.size());
  for (std::size_t i = 0; i < obs.size(); ++i) {
    ops.push_back(holevo_operation(obs.effects()[i], alphas[i], tol));
  }
  return Instrument(obs.outcomes(), std::move(ops), tol);
}

Instrument kraus_instrument(std::span<const ComplexMatrix> kraus, const Tolerances& tol) {
  return kraus_instrument(default_labels(kraus.size()), kraus, tol);
}

Instrument kraus_instrument(std::vector<Label> outcomes, std::span<const ComplexMatrix> kraus,
                            const Tolerances& tol) {
  if (kraus.empty()) throw Error(ErrorKind::LengthMismatch, "kraus_instrument: no operators");
  ComplexMatrix sum = zero(kraus.front().rows());
  for (const auto& k : kraus) {
    require_same_dim(sum, k, "kraus_instrument");
    sum += k.adjoint() * k;
  }
  if (!approx_equal(sum, identity(sum.rows()), tol)) {
    throw Error(ErrorKind::NotNormalized, "kraus_instrument: sum K^dagger K != I");
  }
  std::vector<Operation> ops;
  ops.reserve(kraus.size());
  for (const auto& k : kraus) ops.push_back(kraus_operation(k, tol));
  return Instrument(std::move(outcomes), std::move(ops), tol);
}

BiObservable seq_product_obs(const Instrument& instr, const Observable& b,
                             const Tolerances& tol) {
  require_same_dim(instr.operations().front().kraus().front(), b.effects().front().matrix(),
                   "seq_product_obs");
  std::vector<Effect> effects;
  effects.reserve(instr.size() * b.size());
  for (const auto& op : instr.operations()) {
    for (const auto& e : b.effects()) effects.push_back(seq_product(op, e, tol));
  }
  return BiObservable(instr.outcomes(), b.outcomes(), std::move(effects), tol);
}

Observable marginal(const BiObservable& joint, Marginal which, const Tolerances& tol) {
  const std::size_t n1 = joint.outcomes1().size();
  const std::size_t n2 = joint.outcomes2().size();
  std::vector<Effect> effects;
  if (which == Marginal::first) {
    for (std::size_t x = 0; x < n1; ++x) {
      ComplexMatrix sum = zero(joint.dim());
      for (std::size_t y = 0; y < n2; ++y) sum += joint.at(x, y).matrix();
      effects.emplace_back(std::move(sum), tol);
    }
    return Observable(joint.outcomes1(), std::move(effects), tol);
  }
  for (std::size_t y = 0; y < n2; ++y) {
    ComplexMatrix sum = zero(joint.dim());
    for (std::size_t x = 0; x < n1; ++x) sum += joint.at(x, y).matrix();
    effects.emplace_back(std::move(sum), tol);
  }
  return Observable(joint.outcomes2(), std::move(effects), tol);
}

Observable conditioned_obs(const Observable& b, const Instrument& instr,
                           const Tolerances& tol) {
  require_same_dim(instr.operations().front().kraus().front(), b.effects().front().matrix(),
                   "conditioned_obs");
  std::vector<Effect> effects;
  effects.reserve(b.size());
  for (const auto& e : b.effects()) {
    ComplexMatrix sum = zero(b.dim());
    for (const auto& op : instr.operations()) sum += dual_apply(op, e.matrix(), tol);
    effects.emplace_back(std::move(sum), tol);
  }
  return Observable(b.outcomes(), std::move(effects), tol);
}

std::vector<std::vector<double>> transition_matrix(const Observable& b,
                                                   std::span<const State> alphas,
                                                   const Tolerances& tol) {
  std::vector<std::vector<double>> t;
  t.reserve(alphas.size());
  for (const auto& alpha : alphas) {
    std::vector<double> row;
    row.reserve(b.size());
    double total = 0.0;
    for (const auto& e : b.effects()) {
      const double p = prob(alpha, e, tol);
      if (p < -tol.eq_tol || p > 1.0 + tol.eq_tol) {
        throw Error(ErrorKind::InvariantViolation, "transition_matrix: entry outside [0, 1]");
      }
      row.push_back(p);
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorKind::InvariantViolation, "transition_matrix: row does not sum to 1");
    }
    t.push_back(std::move(row));
  }
  return t;
}

bool coexist_via_joint(const BiObservable& joint, const Observable& b, const Observable& c,
                       const Tolerances& tol) {
  if (joint.outcomes1() != b.outcomes() || joint.outcomes2() != c.outcomes()) {
    throw Error(ErrorKind::OutcomeMismatch,
                "coexist_via_joint: marginal outcome sets do not match the joint");
  }
  const Observable first = marginal(joint, Marginal::first, tol);
  const Observable second = marginal(joint, Marginal::second, tol);
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (!approx_equal(first.effects()[x].matrix(), b.effects()[x].matrix(), tol)) return false;
  }
  for (std::size_t y = 0; y < c.size(); ++y) {
    if (!approx_equal(second.effects()[y].matrix(), c.effects()[y].matrix(), tol)) return false;
  }
  return true;
}

}  // namespace seqprod
