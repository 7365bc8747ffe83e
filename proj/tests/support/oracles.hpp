// Brute-force reference computations and seeded generators shared by the
// unit and acceptance suites. Nothing here calls the code paths it checks.
#ifndef QCHAR_TESTS_ORACLES_HPP
#define QCHAR_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "qchar/blocks.hpp"
#include "qchar/characters.hpp"
#include "qchar/combinatorics.hpp"
#include "qchar/rational.hpp"

namespace qchar::testing {

/// Every nonincreasing tuple of length `level` with parts in [lo, hi].
inline std::vector<Signature> all_signatures(int level, int lo, int hi) {
  std::vector<Signature> out;
  std::vector<int> parts(static_cast<std::size_t>(level));
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == parts.size()) {
      out.emplace_back(parts);
      return;
    }
    for (int v = lo; v <= cap; ++v) {
      parts[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
  return out;
}

/// Interlacers of ν found by scanning the whole box [ν_{N+1}, ν_1]^N.
inline std::vector<Signature> brute_force_interlacers(const Signature& upper) {
  const int n = upper.level() - 1;
  const int lo = upper[static_cast<std::size_t>(n)];
  const int hi = upper[0];
  std::vector<Signature> out;
  std::vector<int> cand(static_cast<std::size_t>(n), lo);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cand.size()) {
      bool ok = true;
      for (std::size_t k = 0; k < cand.size(); ++k) {
        ok = ok && upper[k] >= cand[k] && cand[k] >= upper[k + 1];
      }
      if (ok) {
        out.emplace_back(cand);
      }
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      cand[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Semistandard tableaux of partition shape `shape` with entries in 1..letters,
/// counted by filling cells one at a time.
inline long count_ssyt(const std::vector<int>& shape, int letters) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      cells.emplace_back(r, static_cast<std::size_t>(c));
    }
  }
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) {
    t[r].assign(static_cast<std::size_t>(std::max(shape[r], 0)), 0);
  }
  std::function<long(std::size_t)> rec = [&](std::size_t i) -> long {
    if (i == cells.size()) {
      return 1;
    }
    const auto [r, c] = cells[i];
    long total = 0;
    for (int v = 1; v <= letters; ++v) {
      if (c > 0 && t[r][c - 1] > v) {
        continue;
      }
      if (r > 0 && t[r - 1][c] >= v) {
        continue;
      }
      t[r][c] = v;
      total += rec(i + 1);
    }
    return total;
  };
  return rec(0);
}

/// Laurent polynomial in N variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

/// Monomial expansion of s_λ: one monomial per semistandard tableau of
/// λ − λ_N in N letters, multiplied by (x_1...x_N)^{λ_N}.
inline Poly schur_monomials(const Signature& sig) {
  const std::size_t n = static_cast<std::size_t>(sig.level());
  const int base = sig[n - 1];
  std::vector<int> shape(n);
  for (std::size_t i = 0; i < n; ++i) {
    shape[i] = sig[i] - base;
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < n; ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      cells.emplace_back(r, static_cast<std::size_t>(c));
    }
  }
  std::vector<std::vector<int>> t(n);
  for (std::size_t r = 0; r < n; ++r) {
    t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  }
  Poly out;
  std::vector<int> content(n, base);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      out[content] += 1;
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (c > 0 && t[r][c - 1] > v) {
        continue;
      }
      if (r > 0 && t[r - 1][c] >= v) {
        continue;
      }
      t[r][c] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      rec(i + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

/// Decomposes a symmetric Laurent polynomial into Schur polynomials by
/// repeatedly peeling off the lexicographically largest monomial.
inline std::map<Signature, Integer> decompose_into_schur(Poly p) {
  std::map<Signature, Integer> out;
  while (!p.empty()) {
    const auto top = std::prev(p.end());
    const std::vector<int> e = top->first;
    const Integer c = top->second;
    Signature sig(e);  // the leading exponent of a symmetric polynomial is dominant
    out[sig] += c;
    for (const auto& [m, k] : schur_monomials(sig)) {
      p[m] -= c * k;
      if (p[m] == 0) {
        p.erase(m);
      }
    }
  }
  return out;
}

/// LR coefficients by multiplying monomial expansions and peeling.
inline std::map<Signature, Integer> brute_force_lr(const Signature& a, const Signature& b) {
  return decompose_into_schur(multiply(schur_monomials(a), schur_monomials(b)));
}

inline Signature random_signature(std::mt19937_64& rng, int level, int lo, int hi) {
  std::uniform_int_distribution<int> part(lo, hi);
  std::vector<int> parts(static_cast<std::size_t>(level));
  for (int& p : parts) {
    p = part(rng);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Signature(std::move(parts));
}

/// A finitely supported probability measure with 1..max_support atoms and
/// random positive rational weights.
inline LevelCharacter random_character(std::mt19937_64& rng, int level, const QParam& q,
                                       int lo = -2, int hi = 2, int max_support = 4) {
  std::uniform_int_distribution<int> support(1, max_support);
  std::uniform_int_distribution<int> raw(1, 9);
  std::map<Signature, Rational> w;
  const int atoms = support(rng);
  for (int i = 0; i < atoms; ++i) {
    w[random_signature(rng, level, lo, hi)] += Rational(raw(rng));
  }
  Rational total(0);
  for (const auto& [s, v] : w) {
    total += v;
  }
  for (auto& [s, v] : w) {
    v /= total;
  }
  return LevelCharacter(level, q, std::move(w));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v(entry(rng), den(rng));
      v.canonicalize();
      m(i, j) = v;
    }
  }
  return m;
}

/// Random element with a block on each listed signature.
inline BlockElement random_block_element(std::mt19937_64& rng, int level, const QParam& q,
                                         const std::vector<Signature>& support) {
  BlockElement::Blocks blocks;
  for (const Signature& s : support) {
    blocks.emplace(s, random_matrix(rng, gt_dimension(s)));
  }
  return BlockElement(level, q, std::move(blocks));
}

}  // namespace qchar::testing

#endif  // QCHAR_TESTS_ORACLES_HPP
