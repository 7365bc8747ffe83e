#ifndef QCHAR_CHARACTERS_HPP
#define QCHAR_CHARACTERS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qchar/combinatorics.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// A quantized character of U_q(N), stored as its decomposition
/// χ = Σ_λ c_λ χ^λ into indecomposables: a finitely supported probability
/// measure on level-N signatures.
class LevelCharacter {
 public:
  using Weights = std::map<Signature, Rational>;

  /// Throws std::invalid_argument if a key has the wrong level, a weight is
  /// not strictly positive, or the weights do not sum to exactly 1.
  LevelCharacter(int level, QParam q, Weights weights);

  int level() const noexcept { return level_; }
  const QParam& q() const noexcept { return q_; }
  const Weights& weights() const noexcept { return weights_; }
  /// P({λ}); zero off the support.
  Rational mass(const Signature& sig) const;

  friend bool operator==(const LevelCharacter& a, const LevelCharacter& b) {
    return a.level_ == b.level_ && a.q_ == b.q_ && a.weights_ == b.weights_;
  }

 private:
  int level_;
  QParam q_;
  Weights weights_;
};

/// Measures for consecutive levels sharing one q.
struct CoherentFamily {
  QParam q;
  std::vector<LevelCharacter> measures;
};

struct CoherenceReport {
  bool coherent = true;
  /// Level N of the first pair (P_N, P_{N+1}) that disagrees, and the first
  /// signature (lexicographic) where restrict(P_{N+1}) and P_N differ.
  std::optional<int> level;
  std::optional<Signature> signature;
  Rational expected;  // restrict(P_{N+1})(λ)
  Rational actual;    // P_N(λ)
};

/// χ^λ as the point mass δ_λ.
LevelCharacter indecomposable(const Signature& sig, const QParam& q);

/// w_q(λ, ν) = q^{(N+1)|λ| − N|ν|} for λ ≺ ν.
/// Throws std::invalid_argument if λ does not interlace ν.
Rational wq(const Signature& lower, const Signature& upper, const QParam& q);

/// Row ν of the cotransition kernel: Λ(ν, λ) = w_q(λ,ν) dim_q(λ) / dim_q(ν).
std::map<Signature, Rational> cotransition(const Signature& upper, const QParam& q);

/// Pushes a level-(N+1) character down to level N along the cotransition
/// kernel. A level-1 character restricts to the unit mass on "*".
LevelCharacter restrict_character(const LevelCharacter& chi);

/// Checks restrict(P_{N+1}) = P_N for all consecutive levels, exactly.
/// Throws std::invalid_argument on an empty family, a q mismatch or
/// non-consecutive levels.
CoherenceReport is_coherent(const CoherentFamily& family);

/// χ_1 ⊛ χ_2. On indecomposables,
/// χ^λ ⊛ χ^μ = Σ_ν c^ν_{λμ} dim_q(ν) / (dim_q(λ) dim_q(μ)) χ^ν,
/// extended bilinearly. Throws std::invalid_argument on a level or q mismatch.
LevelCharacter tensor(const LevelCharacter& a, const LevelCharacter& b);

/// q-Schur generating function Σ_λ P(λ) s_λ(x) / s_λ(1, q^{−2}, ..., q^{−2(N−1)}).
Rational sgf_eval(const LevelCharacter& chi, std::span<const Rational> points);

/// Exact monomial expansion of a character's generating function after the
/// substitution x_i = q^{−2(i−1)} z_i, ready for repeated evaluation on the
/// torus. Coefficients are summed exactly and converted to double once.
class TorusSeries {
 public:
  explicit TorusSeries(const LevelCharacter& chi);

  int level() const noexcept { return level_; }
  /// Throws std::invalid_argument on a size mismatch or if some
  /// | |z_i| − 1 | exceeds `precision`.
  std::complex<double> evaluate(std::span<const std::complex<double>> z,
                                double precision = 1e-12) const;

 private:
  int level_;
  std::vector<std::vector<int>> exponents_;
  std::vector<double> coefficients_;
};

/// The torus pairing: S at (z_1, q^{−2} z_2, ..., q^{−2(N−1)} z_N) in double
/// precision. Per-weight coefficients are computed exactly and converted to
/// double only at the end.
/// Throws std::invalid_argument if some | |z_i| − 1 | exceeds `precision`.
std::complex<double> sgf_eval_torus(const LevelCharacter& chi,
                                    std::span<const std::complex<double>> z,
                                    double precision = 1e-12);

/// Nonzero rationals a/b, a ∈ [−9, 9] \ {0}, b ∈ [1, 9].
std::vector<Rational> random_rational_points(std::size_t count, std::mt19937_64& rng);

/// Exact comparison of S(·; χ) against S(·; χ_1)·S(·; χ_2) at `trials`
/// seeded random rational point tuples.
bool check_product(const LevelCharacter& chi, const LevelCharacter& a, const LevelCharacter& b,
                   int trials, std::uint64_t seed);

/// Deterministic variant: tensor(a, b) == chi weight by weight.
bool check_product_exact(const LevelCharacter& chi, const LevelCharacter& a,
                         const LevelCharacter& b);

}  // namespace qchar

#endif  // QCHAR_CHARACTERS_HPP
