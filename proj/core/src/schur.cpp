#include "qchar/schur.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qchar {

namespace {

void check_points(const Signature& sig, std::span<const Rational> points) {
  if (points.size() != static_cast<std::size_t>(sig.level())) {
    throw std::invalid_argument("schur evaluation of " + sig.to_string() + " needs " +
                                std::to_string(sig.level()) + " points, got " +
                                std::to_string(points.size()));
  }
  for (const Rational& x : points) {
    if (x == 0) {
      throw std::domain_error("schur evaluation at a zero point");
    }
  }
}

bool has_repeated_point(std::span<const Rational> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        return true;
      }
    }
  }
  return false;
}

Integer zpow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Counts LR tableaux of skew shape nu/lambda and content mu: rows weakly
// increasing, columns strictly increasing, reverse reading word a lattice word.
class LRFiller {
 public:
  LRFiller(const std::vector<int>& lambda, const std::vector<int>& nu, const std::vector<int>& mu)
      : lambda_(lambda), nu_(nu), mu_(mu), counts_(mu.size() + 1, 0) {
    for (std::size_t r = 0; r < nu_.size(); ++r) {
      letters_.emplace_back(static_cast<std::size_t>(std::max(nu_[r], 0)), 0);
      for (int c = nu_[r] - 1; c >= lambda_[r]; --c) {
        cells_.push_back({r, static_cast<std::size_t>(c)});
      }
    }
  }

  Integer count() { return fill(0); }

 private:
  struct Cell {
    std::size_t row;
    std::size_t col;
  };

  Integer fill(std::size_t index) {
    if (index == cells_.size()) {
      return 1;
    }
    const auto [r, c] = cells_[index];
    int hi = static_cast<int>(std::min(mu_.size(), r + 1));
    if (static_cast<int>(c) + 1 < nu_[r]) {
      hi = std::min(hi, letters_[r][c + 1]);
    }
    int lo = 1;
    if (r > 0 && static_cast<int>(c) < nu_[r - 1] && static_cast<int>(c) >= lambda_[r - 1]) {
      lo = letters_[r - 1][c] + 1;
    }
    Integer total = 0;
    for (int t = lo; t <= hi; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      if (counts_[ti] >= mu_[ti - 1]) {
        continue;
      }
      if (t > 1 && counts_[ti] >= counts_[ti - 1]) {
        continue;
      }
      ++counts_[ti];
      letters_[r][c] = t;
      total += fill(index + 1);
      --counts_[ti];
    }
    return total;
  }

  const std::vector<int>& lambda_;
  const std::vector<int>& nu_;
  const std::vector<int>& mu_;
  std::vector<int> counts_;  // 1-based letter counts
  std::vector<std::vector<int>> letters_;
  std::vector<Cell> cells_;
};

// Partitions nu ⊇ lambda of length <= n with |nu| = |lambda| + |mu|; row i of
// nu/lambda may only hold letters 1..i+1, which bounds its growth.
void for_each_candidate(const std::vector<int>& lambda, const std::vector<int>& mu,
                        const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t n = lambda.size();
  const int target = std::accumulate(lambda.begin(), lambda.end(), 0) +
                     std::accumulate(mu.begin(), mu.end(), 0);
  std::vector<int> prefix_mu(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix_mu[i] = (i > 0 ? prefix_mu[i - 1] : 0) + (i < mu.size() ? mu[i] : 0);
  }
  std::vector<int> nu(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      if (used == target) {
        visit(nu);
      }
      return;
    }
    int hi = lambda[i] + prefix_mu[i];
    if (i > 0) {
      hi = std::min(hi, nu[i - 1]);
    }
    for (int v = lambda[i]; v <= hi && used + v <= target; ++v) {
      nu[i] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
}

}  // namespace

Rational qbracket(long n, const QParam& q) {
  if (n == 0) {
    return Rational(0);
  }
  const Rational& v = q.value();
  Rational r = (q.pow(n) - q.pow(-n)) / (v - 1 / v);
  return r;
}

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  assert(a.size() == n * n);
  if (n == 0) {
    return 1;
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(k, j), at(p, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    previous = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

Rational schur_eval_gt_oracle(const Signature& sig, std::span<const Rational> points) {
  check_points(sig, points);
  if (sig.empty()) {
    return Rational(1);
  }
  const int shift_by = sig[static_cast<std::size_t>(sig.level() - 1)];
  Rational total(0);
  for (const GTPattern& p : enumerate_gt_patterns(shift(sig, -shift_by))) {
    const std::vector<int> w = weight(p);
    Rational term(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      term *= ipow(points[i], w[i]);
    }
    total += term;
  }
  Rational prod(1);
  for (const Rational& x : points) {
    prod *= x;
  }
  return ipow(prod, shift_by) * total;
}

Rational schur_eval(const Signature& sig, std::span<const Rational> points) {
  check_points(sig, points);
  if (sig.empty()) {
    return Rational(1);
  }
  if (has_repeated_point(points)) {
    return schur_eval_gt_oracle(sig, points);
  }
  const std::size_t n = points.size();
  const int shift_by = sig[n - 1];

  // Row i of det(x_i^{a_j}) scaled by d_i^{a_0} so every entry is an integer.
  std::vector<unsigned long> exponents(n);
  for (std::size_t j = 0; j < n; ++j) {
    exponents[j] = static_cast<unsigned long>(sig[j] - shift_by + static_cast<int>(n - 1 - j));
  }
  const unsigned long top = exponents[0];
  std::vector<Integer> matrix(n * n);
  Integer den_power_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& num = points[i].get_num();
    const Integer& den = points[i].get_den();
    for (std::size_t j = 0; j < n; ++j) {
      matrix[i * n + j] = zpow(num, exponents[j]) * zpow(den, top - exponents[j]);
    }
    den_power_product *= zpow(den, top);
  }
  const Integer alternant = bareiss_determinant(std::move(matrix), n);

  Rational vandermonde(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      vandermonde *= points[i] - points[j];
    }
  }
  Rational value = Rational(alternant, den_power_product) / vandermonde;
  value.canonicalize();

  Rational prod(1);
  for (const Rational& x : points) {
    prod *= x;
  }
  return ipow(prod, shift_by) * value;
}

Rational principal_specialization(const Signature& sig, const QParam& q) {
  std::vector<Rational> points;
  points.reserve(static_cast<std::size_t>(sig.level()));
  for (int i = 0; i < sig.level(); ++i) {
    points.push_back(q.pow(-2L * i));
  }
  return schur_eval(sig, points);
}

Rational qdim(const Signature& sig, const QParam& q) {
  Rational dim(1);
  const int n = sig.level();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const long gap = static_cast<long>(sig[static_cast<std::size_t>(i)]) -
                       sig[static_cast<std::size_t>(j)] + (j - i);
      dim *= qbracket(gap, q) / qbracket(j - i, q);
    }
  }
  return dim;
}

LRExpansion lr_coefficients(const Signature& lambda, const Signature& mu) {
  if (lambda.level() != mu.level()) {
    throw std::invalid_argument("LR coefficients need equal levels, got " + lambda.to_string() +
                                " and " + mu.to_string());
  }
  LRExpansion out;
  if (lambda.empty()) {
    out.emplace(Signature{}, 1);
    return out;
  }
  const std::size_t n = static_cast<std::size_t>(lambda.level());
  const int a = lambda[n - 1];
  const int b = mu[n - 1];
  const std::vector<int> lam = shift(lambda, -a).parts();
  std::vector<int> mu_part = shift(mu, -b).parts();
  while (!mu_part.empty() && mu_part.back() == 0) {
    mu_part.pop_back();
  }
  for_each_candidate(lam, mu_part, [&](const std::vector<int>& nu) {
    // c^ν_{λμ} = 0 unless μ ⊆ ν.
    for (std::size_t i = 0; i < mu_part.size(); ++i) {
      if (nu[i] < mu_part[i]) {
        return;
      }
    }
    LRFiller filler(lam, nu, mu_part);
    Integer c = filler.count();
    if (c != 0) {
      out.emplace(shift(Signature(nu), a + b), std::move(c));
    }
  });
  return out;
}

}  // namespace qchar
