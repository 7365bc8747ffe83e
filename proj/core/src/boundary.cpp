#include "qchar/boundary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qchar {

namespace {

std::optional<Signature> first_difference(const LevelCharacter& a, const LevelCharacter& b) {
  std::optional<Signature> first;
  auto consider = [&](const Signature& sig) {
    if (a.mass(sig) != b.mass(sig) && (!first || sig < *first)) {
      first = sig;
    }
  };
  for (const auto& [sig, w] : a.weights()) {
    consider(sig);
  }
  for (const auto& [sig, w] : b.weights()) {
    consider(sig);
  }
  return first;
}

}  // namespace

BoundaryParam::BoundaryParam(std::vector<int> head, int tail)
    : head_(std::move(head)), tail_(tail) {
  if (!std::is_sorted(head_.begin(), head_.end())) {
    throw std::invalid_argument("boundary parameter head must be nondecreasing");
  }
  if (!head_.empty() && head_.back() > tail_) {
    throw std::invalid_argument("boundary parameter head must not exceed its tail");
  }
}

int BoundaryParam::at(std::size_t i) const {
  if (i == 0) {
    throw std::out_of_range("boundary parameters are indexed from 1");
  }
  return i <= head_.size() ? head_[i - 1] : tail_;
}

Signature BoundaryParam::bottom_signature(int length) const {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(length));
  for (int i = length; i >= 1; --i) {
    parts.push_back(at(static_cast<std::size_t>(i)));
  }
  return Signature(std::move(parts));
}

ExtremeApproximant extreme_character(const BoundaryParam& theta, int level, int truncation,
                                     const QParam& q) {
  if (level < 1 || truncation < level) {
    throw std::invalid_argument("extreme character needs 1 <= N <= L, got N=" +
                                std::to_string(level) + ", L=" + std::to_string(truncation));
  }
  LevelCharacter measure = indecomposable(theta.bottom_signature(truncation), q);
  while (measure.level() > level) {
    measure = restrict_character(measure);
  }
  return {theta, level, truncation, std::move(measure)};
}

std::vector<LevelCharacter> extreme_tower(const BoundaryParam& theta, int truncation,
                                          const QParam& q) {
  if (truncation < 1) {
    throw std::invalid_argument("extreme tower needs L >= 1");
  }
  std::vector<LevelCharacter> tower;
  tower.push_back(indecomposable(theta.bottom_signature(truncation), q));
  while (tower.back().level() > 1) {
    tower.push_back(restrict_character(tower.back()));
  }
  std::reverse(tower.begin(), tower.end());
  return tower;
}

Rational total_variation(const LevelCharacter& a, const LevelCharacter& b) {
  Rational sum(0);
  for (const auto& [sig, w] : a.weights()) {
    sum += abs(w - b.mass(sig));
  }
  for (const auto& [sig, w] : b.weights()) {
    if (a.weights().find(sig) == a.weights().end()) {
      sum += w;
    }
  }
  return sum / 2;
}

Rational cauchy_gap(const BoundaryParam& theta, int level, int truncation, const QParam& q) {
  const auto near = extreme_character(theta, level, truncation, q);
  const auto far = extreme_character(theta, level, truncation + 1, q);
  return total_variation(near.measure, far.measure);
}

BoundaryParam ak_on_theta(const BoundaryParam& theta, int k) {
  std::vector<int> head = theta.head();
  for (int& h : head) {
    h += k;
  }
  return BoundaryParam(std::move(head), theta.tail() + k);
}

LevelCharacter ak_on_measure(const LevelCharacter& chi, int k) {
  LevelCharacter::Weights moved;
  for (const auto& [sig, w] : chi.weights()) {
    moved.emplace(shift(sig, k), w);
  }
  return LevelCharacter(chi.level(), chi.q(), std::move(moved));
}

CorollaryReport verify_corollary_measures(const LevelCharacter& base, int k,
                                          const LevelCharacter& target) {
  const LevelCharacter det_power = indecomposable(constant_signature(base.level(), k), base.q());
  CorollaryReport report{.lhs = tensor(base, det_power),
                         .rhs = target,
                         .shifted = ak_on_measure(base, k),
                         .discrepancy = std::nullopt};
  report.tensor_matches_shift = report.lhs == report.shifted;
  report.shift_matches_extreme = report.shifted == report.rhs;
  report.pass = report.tensor_matches_shift && report.shift_matches_extreme;
  if (!report.tensor_matches_shift) {
    report.discrepancy = first_difference(report.lhs, report.shifted);
  } else if (!report.shift_matches_extreme) {
    report.discrepancy = first_difference(report.shifted, report.rhs);
  }
  return report;
}

CorollaryReport verify_corollary(const BoundaryParam& theta, int k, int level, int truncation,
                                 const QParam& q) {
  const auto base = extreme_character(theta, level, truncation, q);
  const auto target = extreme_character(ak_on_theta(theta, k), level, truncation, q);
  return verify_corollary_measures(base.measure, k, target.measure);
}

}  // namespace qchar
