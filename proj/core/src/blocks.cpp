#include "qchar/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qchar/schur.hpp"

namespace qchar {

namespace {

void require_match(int level, const QParam& q, int other_level, const QParam& other_q) {
  if (level != other_level || !(q == other_q)) {
    throw std::invalid_argument("state and element differ in level or q");
  }
}

// Tr(F_λ a b) with F_λ = diag(q^{e}), in O(d²) without forming the product.
Rational weighted_trace_product(const std::vector<Rational>& f, const RationalMatrix& a,
                                const RationalMatrix& b) {
  Rational total(0);
  for (std::size_t p = 0; p < a.rows(); ++p) {
    Rational row(0);
    for (std::size_t r = 0; r < a.cols(); ++r) {
      if (a(p, r) != 0 && b(r, p) != 0) {
        row += a(p, r) * b(r, p);
      }
    }
    total += f[p] * row;
  }
  return total;
}

std::vector<Rational> f_diagonal(const Signature& sig, const QParam& q) {
  const FSpectrum spec = f_spectrum(sig);
  std::vector<Rational> diag;
  diag.reserve(spec.exponents.size());
  for (long e : spec.exponents) {
    diag.push_back(q.pow(e));
  }
  return diag;
}

void check_block_size(const Signature& sig, std::size_t rows, std::size_t cols) {
  const std::size_t dim = gt_dimension(sig);
  if (rows != dim || cols != dim) {
    throw std::invalid_argument("density for " + sig.to_string() + " must be " +
                                std::to_string(dim) + "x" + std::to_string(dim));
  }
}

}  // namespace

FSpectrum f_spectrum(const Signature& sig) {
  FSpectrum spec{sig, {}};
  if (sig.empty()) {
    spec.exponents.push_back(0);
    return spec;
  }
  const long n = sig.level();
  for (const GTPattern& p : enumerate_gt_patterns(sig)) {
    const std::vector<int> w = weight(p);
    long e = 0;
    for (long i = 1; i <= n; ++i) {
      e += (n + 1 - 2 * i) * w[static_cast<std::size_t>(i - 1)];
    }
    spec.exponents.push_back(e);
  }
  return spec;
}

BlockState::BlockState(int level, QParam q, std::map<Signature, Rational> weights)
    : level_(level), q_(std::move(q)), weights_(std::move(weights)) {
  // Reuse the probability-measure validation.
  LevelCharacter check(level_, q_, weights_);
}

BlockState::BlockState(const LevelCharacter& chi)
    : level_(chi.level()), q_(chi.q()), weights_(chi.weights()) {}

BlockState BlockState::point(const Signature& sig, const QParam& q) {
  return BlockState(sig.level(), q, {{sig, Rational(1)}});
}

std::map<Signature, RationalMatrix> BlockState::densities() const {
  std::map<Signature, RationalMatrix> out;
  for (const auto& [sig, w] : weights_) {
    const std::vector<Rational> f = f_diagonal(sig, q_);
    const Rational scale = w / qdim(sig, q_);
    RationalMatrix rho(f.size(), f.size());
    for (std::size_t p = 0; p < f.size(); ++p) {
      rho(p, p) = scale * f[p];
    }
    out.emplace(sig, std::move(rho));
  }
  return out;
}

Rational char_state_eval(const BlockState& state, const BlockElement& x) {
  require_match(state.level(), state.q(), x.level(), x.q());
  Rational total(0);
  for (const auto& [sig, w] : state.weights()) {
    const RationalMatrix* block = x.block(sig);
    if (block == nullptr) {
      continue;
    }
    const std::vector<Rational> f = f_diagonal(sig, state.q());
    Rational trace(0);
    for (std::size_t p = 0; p < f.size(); ++p) {
      trace += f[p] * (*block)(p, p);
    }
    total += w * trace / qdim(sig, state.q());
  }
  return total;
}

std::complex<double> char_state_eval(const BlockState& state, const NumericBlockElement& x) {
  require_match(state.level(), state.q(), x.level(), x.q());
  std::complex<double> total(0.0, 0.0);
  for (const auto& [sig, w] : state.weights()) {
    const ComplexMatrix* block = x.block(sig);
    if (block == nullptr) {
      continue;
    }
    const std::vector<Rational> f = f_diagonal(sig, state.q());
    const Rational scale = w / qdim(sig, state.q());
    for (std::size_t p = 0; p < f.size(); ++p) {
      total += Rational(scale * f[p]).get_d() * (*block)(p, p);
    }
  }
  return total;
}

Rational density_eval(const std::map<Signature, RationalMatrix>& densities, const BlockElement& x) {
  Rational total(0);
  for (const auto& [sig, rho] : densities) {
    const RationalMatrix* block = x.block(sig);
    if (block == nullptr) {
      continue;
    }
    if (block->rows() != rho.rows()) {
      throw std::invalid_argument("density and block sizes differ at " + sig.to_string());
    }
    for (std::size_t p = 0; p < rho.rows(); ++p) {
      for (std::size_t r = 0; r < rho.cols(); ++r) {
        if (rho(p, r) != 0) {
          total += rho(p, r) * (*block)(r, p);
        }
      }
    }
  }
  return total;
}

BlockElement scaling(const BlockElement& x, long s) {
  BlockElement::Blocks out;
  for (const auto& [sig, m] : x.blocks()) {
    const FSpectrum spec = f_spectrum(sig);
    RationalMatrix scaled = m;
    for (std::size_t p = 0; p < m.rows(); ++p) {
      for (std::size_t r = 0; r < m.cols(); ++r) {
        if (scaled(p, r) != 0) {
          scaled(p, r) *= x.q().pow(s * (spec.exponents[p] - spec.exponents[r]));
        }
      }
    }
    out.emplace(sig, std::move(scaled));
  }
  return BlockElement(x.level(), x.q(), std::move(out));
}

NumericBlockElement scaling_real_time(const NumericBlockElement& x, double t) {
  const double log_q = std::log(x.q().value().get_d());
  NumericBlockElement::Blocks out;
  for (const auto& [sig, m] : x.blocks()) {
    const FSpectrum spec = f_spectrum(sig);
    ComplexMatrix rotated = m;
    for (std::size_t p = 0; p < m.rows(); ++p) {
      for (std::size_t r = 0; r < m.cols(); ++r) {
        const double phase =
            t * log_q * static_cast<double>(spec.exponents[p] - spec.exponents[r]);
        rotated(p, r) *= std::polar(1.0, phase);
      }
    }
    out.emplace(sig, std::move(rotated));
  }
  return NumericBlockElement(x.level(), x.q(), std::move(out));
}

bool kms_check(const BlockState& state, const BlockElement& x, const BlockElement& y) {
  require_match(state.level(), state.q(), x.level(), x.q());
  require_match(state.level(), state.q(), y.level(), y.q());
  // χ(x F y F^{-1}) and χ(y x), each as Σ_λ w_λ Tr(F_λ a b) / dim_q(λ).
  for (const auto& [sig, w] : state.weights()) {
    const RationalMatrix* xb = x.block(sig);
    const RationalMatrix* yb = y.block(sig);
    if (xb == nullptr || yb == nullptr) {
      continue;
    }
    if (xb->rows() != yb->rows()) {
      throw std::invalid_argument("block size mismatch at " + sig.to_string());
    }
  }
  const BlockElement twisted = scaling(y, 1);
  Rational lhs(0);
  Rational rhs(0);
  for (const auto& [sig, w] : state.weights()) {
    const RationalMatrix* xb = x.block(sig);
    const RationalMatrix* yb = y.block(sig);
    if (xb == nullptr || yb == nullptr) {
      continue;
    }
    const std::vector<Rational> f = f_diagonal(sig, state.q());
    const Rational scale = w / qdim(sig, state.q());
    lhs += scale * weighted_trace_product(f, *xb, *twisted.block(sig));
    rhs += scale * weighted_trace_product(f, *yb, *xb);
  }
  return lhs == rhs;
}

bool kms_check_densities(const std::map<Signature, RationalMatrix>& densities,
                         const BlockElement& x, const BlockElement& y) {
  return density_eval(densities, x * scaling(y, 1)) == density_eval(densities, y * x);
}

BlockElement embed(const BlockElement& x, std::span<const Signature> targets) {
  BlockElement::Blocks out;
  for (const Signature& upper : targets) {
    if (upper.level() != x.level() + 1) {
      throw std::invalid_argument("embedding target " + upper.to_string() + " must have level " +
                                  std::to_string(x.level() + 1));
    }
    const std::size_t dim = gt_dimension(upper);
    RationalMatrix block(dim, dim);
    std::vector<Signature> lowers = enumerate_down(upper);
    std::reverse(lowers.begin(), lowers.end());  // GT order groups by descending λ
    std::size_t offset = 0;
    for (const Signature& lower : lowers) {
      const std::size_t d = gt_dimension(lower);
      if (const RationalMatrix* src = x.block(lower)) {
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            block(offset + i, offset + j) = (*src)(i, j);
          }
        }
      }
      offset += d;
    }
    out.emplace(upper, std::move(block));
  }
  return BlockElement(x.level() + 1, x.q(), std::move(out));
}

FCompatibilityReport check_f_compatibility(const Signature& upper, const QParam& q) {
  if (upper.level() < 2) {
    throw std::invalid_argument("F-compatibility needs a signature of level >= 2");
  }
  FCompatibilityReport report;
  const long n = upper.level() - 1;
  const std::vector<GTPattern> patterns = gt_patterns(upper);
  const FSpectrum top = f_spectrum(upper);

  std::vector<Signature> lowers = enumerate_down(upper);
  std::reverse(lowers.begin(), lowers.end());
  std::size_t offset = 0;
  for (const Signature& lower : lowers) {
    const Rational factor = wq(lower, upper, q);
    const long log_factor = (n + 1) * lower.size() - n * upper.size();
    const std::vector<GTPattern> sub = gt_patterns(lower);
    const FSpectrum bottom = f_spectrum(lower);
    for (std::size_t j = 0; j < sub.size(); ++j) {
      const std::size_t index = offset + j;
      const GTPattern& p = patterns[index];
      // The ν-pattern at this position must restrict to the j-th λ-pattern.
      const bool aligned = std::equal(sub[j].rows().begin(), sub[j].rows().end(), p.rows().begin());
      const long expected = bottom.exponents[j] + log_factor;
      const long actual = top.exponents[index];
      const bool exact = q.pow(actual) == factor * q.pow(bottom.exponents[j]);
      if (!aligned || expected != actual || !exact) {
        report.pass = false;
        report.lower = lower;
        report.pattern = index;
        report.expected_exponent = expected;
        report.actual_exponent = actual;
        return report;
      }
    }
    offset += sub.size();
  }
  return report;
}

bool is_positive_semidefinite(const RationalMatrix& m) {
  if (!m.square()) {
    return false;
  }
  // Symmetric elimination: a zero pivot forces its whole remaining row to vanish.
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) < 0) {
      return false;
    }
    if (a(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) != 0) {
          return false;
        }
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) {
        continue;
      }
      const Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
      }
    }
  }
  return true;
}

Decomposition decompose_state(const std::map<Signature, RationalMatrix>& densities,
                              const QParam& q) {
  Rational total_trace(0);
  for (const auto& [sig, rho] : densities) {
    check_block_size(sig, rho.rows(), rho.cols());
    if (!(adjoint(rho) == rho)) {
      throw std::domain_error("density for " + sig.to_string() + " is not symmetric");
    }
    if (!is_positive_semidefinite(rho)) {
      throw std::domain_error("density for " + sig.to_string() + " is not positive semidefinite");
    }
    for (std::size_t p = 0; p < rho.rows(); ++p) {
      total_trace += rho(p, p);
    }
  }
  if (total_trace != 1) {
    throw std::invalid_argument("densities must have total trace 1, got " +
                                to_string(total_trace));
  }

  Decomposition result;
  for (const auto& [sig, rho] : densities) {
    auto reject = [&](std::string reason) {
      result.accepted = false;
      result.coefficients.clear();
      result.rejected_at = sig;
      result.reason = std::move(reason);
    };
    const std::vector<Rational> f = f_diagonal(sig, q);
    std::optional<Rational> ratio;
    bool ok = true;
    for (std::size_t p = 0; p < rho.rows() && ok; ++p) {
      for (std::size_t r = 0; r < rho.cols() && ok; ++r) {
        if (p != r && rho(p, r) != 0) {
          reject("nonzero off-diagonal entry");
          ok = false;
        }
      }
      if (!ok) {
        break;
      }
      const Rational current = rho(p, p) / f[p];
      if (ratio && *ratio != current) {
        reject("diagonal not proportional to F");
        ok = false;
      }
      ratio = current;
    }
    if (!ok) {
      return result;
    }
    const Rational c = *ratio * qdim(sig, q);
    if (c != 0) {
      result.coefficients.emplace(sig, c);
    }
  }
  result.accepted = true;
  return result;
}

NumericDecomposition decompose_state_numeric(
    const std::map<Signature, ComplexMatrix>& densities, const QParam& q, double tolerance) {
  double total_trace = 0.0;
  for (const auto& [sig, rho] : densities) {
    check_block_size(sig, rho.rows(), rho.cols());
    const auto n = static_cast<Eigen::Index>(rho.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = rho(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
      throw std::domain_error("density for " + sig.to_string() + " is not Hermitian");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tolerance) {
      throw std::domain_error("density for " + sig.to_string() + " is not positive semidefinite");
    }
    total_trace += m.trace().real();
  }
  if (std::abs(total_trace - 1.0) > tolerance) {
    throw std::invalid_argument("densities must have total trace 1");
  }

  NumericDecomposition result;
  for (const auto& [sig, rho] : densities) {
    const std::vector<Rational> f = f_diagonal(sig, q);
    const double dim_q = qdim(sig, q).get_d();
    // Least-squares c for diag(rho) ≈ c F / dim_q, then an entrywise residual check.
    double num = 0.0;
    double den = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p) {
      const double fp = f[p].get_d() / dim_q;
      num += fp * rho(p, p).real();
      den += fp * fp;
    }
    const double c = num / den;
    for (std::size_t p = 0; p < rho.rows(); ++p) {
      for (std::size_t r = 0; r < rho.cols(); ++r) {
        const std::complex<double> expected =
            p == r ? std::complex<double>(c * f[p].get_d() / dim_q, 0.0) : 0.0;
        if (std::abs(rho(p, r) - expected) > tolerance) {
          result.accepted = false;
          result.coefficients.clear();
          result.rejected_at = sig;
          result.reason = p == r ? "diagonal not proportional to F" : "nonzero off-diagonal entry";
          return result;
        }
      }
    }
    if (std::abs(c) > tolerance) {
      result.coefficients.emplace(sig, c);
    }
  }
  result.accepted = true;
  return result;
}

}  // namespace qchar
