#ifndef QCHAR_BLOCKS_HPP
#define QCHAR_BLOCKS_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qchar/characters.hpp"
#include "qchar/combinatorics.hpp"
#include "qchar/matrix.hpp"
#include "qchar/rational.hpp"

namespace qchar {

// Finite-level model of W*(U_q(N)): an element is a finitely supported family
// of square blocks x_λ, one per signature, each acting on the GT basis of λ in
// the order of GTPatternRange. F_λ is diagonal in that basis.

/// Diagonal of F_λ as powers of q: F_λ[p,p] = q^{exponents[p]} with
/// exponents[p] = Σ_i (N + 1 − 2i) w_i(p).
struct FSpectrum {
  Signature signature;
  std::vector<long> exponents;
};

FSpectrum f_spectrum(const Signature& sig);

template <class T>
class BasicBlockElement {
 public:
  using Blocks = std::map<Signature, Matrix<T>>;

  /// Throws std::invalid_argument if a block has the wrong level or is not
  /// square of side gt_dimension(λ).
  BasicBlockElement(int level, QParam q, Blocks blocks)
      : level_(level), q_(std::move(q)), blocks_(std::move(blocks)) {
    for (const auto& [sig, m] : blocks_) {
      validate(sig, m);
    }
  }

  int level() const noexcept { return level_; }
  const QParam& q() const noexcept { return q_; }
  const Blocks& blocks() const noexcept { return blocks_; }

  /// nullptr off the support.
  const Matrix<T>* block(const Signature& sig) const {
    const auto it = blocks_.find(sig);
    return it == blocks_.end() ? nullptr : &it->second;
  }

  void set_block(const Signature& sig, Matrix<T> m) {
    validate(sig, m);
    blocks_.insert_or_assign(sig, std::move(m));
  }

  /// Blockwise product; a block missing on either side is zero.
  friend BasicBlockElement operator*(const BasicBlockElement& a, const BasicBlockElement& b) {
    a.require_compatible(b);
    Blocks out;
    for (const auto& [sig, m] : a.blocks_) {
      if (const auto* other = b.block(sig)) {
        out.emplace(sig, m * *other);
      }
    }
    return BasicBlockElement(a.level_, a.q_, std::move(out));
  }

  friend BasicBlockElement operator+(const BasicBlockElement& a, const BasicBlockElement& b) {
    a.require_compatible(b);
    Blocks out = a.blocks_;
    for (const auto& [sig, m] : b.blocks_) {
      auto it = out.find(sig);
      if (it == out.end()) {
        out.emplace(sig, m);
      } else {
        it->second = it->second + m;
      }
    }
    return BasicBlockElement(a.level_, a.q_, std::move(out));
  }

  friend BasicBlockElement adjoint(const BasicBlockElement& x) {
    Blocks out;
    for (const auto& [sig, m] : x.blocks_) {
      out.emplace(sig, adjoint(m));
    }
    return BasicBlockElement(x.level_, x.q_, std::move(out));
  }

  /// Equality up to zero blocks.
  friend bool operator==(const BasicBlockElement& a, const BasicBlockElement& b) {
    if (a.level_ != b.level_ || !(a.q_ == b.q_)) {
      return false;
    }
    auto covered = [](const BasicBlockElement& x, const BasicBlockElement& y) {
      for (const auto& [sig, m] : x.blocks_) {
        const auto* other = y.block(sig);
        if (other ? !(*other == m) : !(m == Matrix<T>(m.rows(), m.cols()))) {
          return false;
        }
      }
      return true;
    };
    return covered(a, b) && covered(b, a);
  }

 private:
  void validate(const Signature& sig, const Matrix<T>& m) const {
    if (sig.level() != level_) {
      throw std::invalid_argument("block " + sig.to_string() + " does not have level " +
                                  std::to_string(level_));
    }
    const std::size_t dim = sig.empty() ? 1 : gt_dimension(sig);
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("block " + sig.to_string() + " must be " +
                                  std::to_string(dim) + "x" + std::to_string(dim));
    }
  }

  void require_compatible(const BasicBlockElement& other) const {
    if (level_ != other.level_ || !(q_ == other.q_)) {
      throw std::invalid_argument("block elements differ in level or q");
    }
  }

  int level_;
  QParam q_;
  Blocks blocks_;
};

using BlockElement = BasicBlockElement<Rational>;
using NumericBlockElement = BasicBlockElement<std::complex<double>>;

/// χ(x) = Σ_λ weights[λ] · Tr(F_λ x_λ) / dim_q(λ).
class BlockState {
 public:
  /// Same validation as LevelCharacter (positive weights summing to 1).
  BlockState(int level, QParam q, std::map<Signature, Rational> weights);
  explicit BlockState(const LevelCharacter& chi);

  static BlockState point(const Signature& sig, const QParam& q);

  int level() const noexcept { return level_; }
  const QParam& q() const noexcept { return q_; }
  const std::map<Signature, Rational>& weights() const noexcept { return weights_; }

  /// Density of the state on block λ: weights[λ] F_λ / dim_q(λ).
  std::map<Signature, RationalMatrix> densities() const;

 private:
  int level_;
  QParam q_;
  std::map<Signature, Rational> weights_;
};

/// Throws std::invalid_argument on a level or q mismatch.
Rational char_state_eval(const BlockState& state, const BlockElement& x);
std::complex<double> char_state_eval(const BlockState& state, const NumericBlockElement& x);

/// Positive functional φ(x) = Σ_λ Tr(ρ_λ x_λ) for arbitrary block densities.
Rational density_eval(const std::map<Signature, RationalMatrix>& densities, const BlockElement& x);

/// Imaginary-time flow τ_{−is}: x_λ[p,p'] ↦ q^{s(e_p − e_p')} x_λ[p,p'].
/// scaling(y, 1) = F y F^{−1}.
BlockElement scaling(const BlockElement& x, long s);

/// Real-time flow Ad F^{it}: x_λ[p,p'] ↦ q^{it(e_p − e_p')} x_λ[p,p'].
NumericBlockElement scaling_real_time(const NumericBlockElement& x, double t);

/// χ(x · scaling(y, 1)) == χ(y · x), exactly.
bool kms_check(const BlockState& state, const BlockElement& x, const BlockElement& y);

/// The same identity for the functional with the given densities.
bool kms_check_densities(const std::map<Signature, RationalMatrix>& densities,
                         const BlockElement& x, const BlockElement& y);

/// Θ_N truncated to `targets`: block ν is the direct sum of x_λ over λ ≺ ν,
/// in GT order (descending λ), zero where x has no block.
/// Throws std::invalid_argument if a target is not of level N + 1.
BlockElement embed(const BlockElement& x, std::span<const Signature> targets);

struct FCompatibilityReport {
  bool pass = true;
  std::optional<Signature> lower;          // first failing λ ≺ ν
  std::optional<std::size_t> pattern;      // index of the failing pattern of ν
  long expected_exponent = 0;              // e_λ(p↾) + log_q w_q(λ, ν)
  long actual_exponent = 0;                // e_ν(p)
};

/// Checks F_ν restricted to the λ-sub-block equals w_q(λ,ν) F_λ for every
/// λ ≺ ν. Throws std::invalid_argument if ν has level < 2.
FCompatibilityReport check_f_compatibility(const Signature& upper, const QParam& q);

struct Decomposition {
  bool accepted = false;
  std::map<Signature, Rational> coefficients;
  std::optional<Signature> rejected_at;
  std::string reason;
};

struct NumericDecomposition {
  bool accepted = false;
  std::map<Signature, double> coefficients;
  std::optional<Signature> rejected_at;
  std::string reason;
};

/// Accepts iff every density is c_λ F_λ / dim_q(λ) for some c_λ ≥ 0, and then
/// returns c. Throws std::invalid_argument if the total trace is not 1 or a
/// block has the wrong size, and std::domain_error if a density is not
/// symmetric positive semidefinite.
Decomposition decompose_state(const std::map<Signature, RationalMatrix>& densities,
                              const QParam& q);

/// Floating-point variant; entries within `tolerance` of the exact condition
/// are accepted, and eigenvalues below −tolerance are a domain error.
NumericDecomposition decompose_state_numeric(
    const std::map<Signature, ComplexMatrix>& densities, const QParam& q,
    double tolerance = 1e-10);

/// Exact positive-semidefiniteness of a symmetric rational matrix.
bool is_positive_semidefinite(const RationalMatrix& m);

}  // namespace qchar

#endif  // QCHAR_BLOCKS_HPP
