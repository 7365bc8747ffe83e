#ifndef QCHAR_BOUNDARY_HPP
#define QCHAR_BOUNDARY_HPP

#include <optional>
#include <vector>

#include "qchar/characters.hpp"
#include "qchar/combinatorics.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// Eventually constant θ = (head_1, ..., head_m, tail, tail, ...) with
/// θ_1 ≤ θ_2 ≤ ..., a point of the boundary parameter set.
class BoundaryParam {
 public:
  /// Throws std::invalid_argument unless head is nondecreasing and last(head) ≤ tail.
  BoundaryParam(std::vector<int> head, int tail);

  const std::vector<int>& head() const noexcept { return head_; }
  int tail() const noexcept { return tail_; }
  /// θ_i, 1-based.
  int at(std::size_t i) const;
  /// λ(L) = (θ_L, θ_{L−1}, ..., θ_1).
  Signature bottom_signature(int length) const;

  friend bool operator==(const BoundaryParam&, const BoundaryParam&) = default;

 private:
  std::vector<int> head_;
  int tail_;
};

struct ExtremeApproximant {
  BoundaryParam theta;
  int level;
  int truncation;
  LevelCharacter measure;
};

/// Level-N pushdown of δ_{λ(L)} through L − N exact restrictions.
/// Throws std::invalid_argument unless 1 ≤ N ≤ L.
ExtremeApproximant extreme_character(const BoundaryParam& theta, int level, int truncation,
                                     const QParam& q);

/// Approximants for every level 1..L at one truncation; element i has level i + 1.
std::vector<LevelCharacter> extreme_tower(const BoundaryParam& theta, int truncation,
                                          const QParam& q);

/// Total variation ½ Σ |P^{θ,L}_N − P^{θ,L+1}_N|.
Rational total_variation(const LevelCharacter& a, const LevelCharacter& b);
Rational cauchy_gap(const BoundaryParam& theta, int level, int truncation, const QParam& q);

BoundaryParam ak_on_theta(const BoundaryParam& theta, int k);

/// Pushforward of P under λ ↦ A_k(λ).
LevelCharacter ak_on_measure(const LevelCharacter& chi, int k);

struct CorollaryReport {
  bool pass = false;
  /// tensor(P, δ_{(k,…,k)})
  LevelCharacter lhs;
  /// extreme_character(A_k θ, N, L).measure
  LevelCharacter rhs;
  /// ak_on_measure(P, k)
  LevelCharacter shifted;
  bool tensor_matches_shift = false;
  bool shift_matches_extreme = false;
  /// First signature (lexicographic) where a failing comparison disagrees.
  std::optional<Signature> discrepancy;
};

/// Checks tensor(P, δ_{(k..k)}) = ak_on_measure(P, k) = target, exactly.
CorollaryReport verify_corollary_measures(const LevelCharacter& base, int k,
                                          const LevelCharacter& target);

/// verify_corollary_measures on the approximants of θ and A_k θ at truncation L.
CorollaryReport verify_corollary(const BoundaryParam& theta, int k, int level, int truncation,
                                 const QParam& q);

}  // namespace qchar

#endif  // QCHAR_BOUNDARY_HPP
