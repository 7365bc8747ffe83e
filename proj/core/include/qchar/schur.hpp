#ifndef QCHAR_SCHUR_HPP
#define QCHAR_SCHUR_HPP

#include <map>
#include <span>
#include <vector>

#include "qchar/combinatorics.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// Quantum integer [n]_q = (q^n − q^{−n}) / (q − q^{−1}).
Rational qbracket(long n, const QParam& q);

/// s_λ(x_1, ..., x_N) for a Laurent signature λ.
///
/// Uses the bialternant det(x_i^{λ_j+N−j}) / det(x_i^{N−j}) on the partition
/// λ − λ_N, evaluated with integer Bareiss elimination after clearing the
/// denominators of each row. Repeated points fall back to the GT sum.
/// Throws std::invalid_argument on a level mismatch and std::domain_error on
/// a zero point.
Rational schur_eval(const Signature& sig, std::span<const Rational> points);

/// Reference evaluation Σ_patterns Π x_i^{w_i}; exponential in N.
Rational schur_eval_gt_oracle(const Signature& sig, std::span<const Rational> points);

/// s_λ(1, q^{−2}, ..., q^{−2(N−1)}).
Rational principal_specialization(const Signature& sig, const QParam& q);

/// Π_{i<j} [λ_i − λ_j + j − i]_q / [j − i]_q, equal to
/// s_λ(q^{N−1}, q^{N−3}, ..., q^{1−N}). The empty signature has dimension 1.
Rational qdim(const Signature& sig, const QParam& q);

/// Structure constants of s_λ·s_μ in N variables.
using LRExpansion = std::map<Signature, Integer>;

/// c^ν_{λμ} for signatures of a common level N, keeping only ν of level N.
/// Both inputs are shifted to partitions, the Littlewood–Richardson tableau
/// rule is applied, and the result is shifted back by λ_N + μ_N.
/// Throws std::invalid_argument on a level mismatch.
LRExpansion lr_coefficients(const Signature& lambda, const Signature& mu);

/// Determinant of a square integer matrix (row-major) by Bareiss elimination.
Integer bareiss_determinant(std::vector<Integer> matrix, std::size_t n);

}  // namespace qchar

#endif  // QCHAR_SCHUR_HPP
