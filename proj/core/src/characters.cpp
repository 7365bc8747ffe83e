#include "qchar/characters.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qchar/parallel.hpp"
#include "qchar/schur.hpp"

namespace qchar {

namespace {

void require_compatible(const LevelCharacter& a, const LevelCharacter& b, const char* what) {
  if (a.level() != b.level()) {
    throw std::invalid_argument(std::string(what) + ": level mismatch (" +
                                std::to_string(a.level()) + " vs " + std::to_string(b.level()) +
                                ")");
  }
  if (!(a.q() == b.q())) {
    throw std::invalid_argument(std::string(what) + ": q mismatch (" + to_string(a.q().value()) +
                                " vs " + to_string(b.q().value()) + ")");
  }
}

std::complex<double> cpow(std::complex<double> z, int e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  std::complex<double> r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) {
      r *= z;
    }
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

LevelCharacter::LevelCharacter(int level, QParam q, Weights weights)
    : level_(level), q_(std::move(q)), weights_(std::move(weights)) {
  if (level_ < 0) {
    throw std::invalid_argument("character level must be nonnegative");
  }
  Rational total(0);
  for (auto& [sig, w] : weights_) {
    w.canonicalize();
    if (sig.level() != level_) {
      throw std::invalid_argument("signature " + sig.to_string() + " does not have level " +
                                  std::to_string(level_));
    }
    if (w <= 0) {
      throw std::invalid_argument("character weight at " + sig.to_string() +
                                  " must be positive, got " + to_string(w));
    }
    total += w;
  }
  if (total != 1) {
    throw std::invalid_argument("character weights must sum to 1, got " + to_string(total));
  }
}

Rational LevelCharacter::mass(const Signature& sig) const {
  const auto it = weights_.find(sig);
  return it == weights_.end() ? Rational(0) : it->second;
}

LevelCharacter indecomposable(const Signature& sig, const QParam& q) {
  return LevelCharacter(sig.level(), q, {{sig, Rational(1)}});
}

Rational wq(const Signature& lower, const Signature& upper, const QParam& q) {
  if (!interlaces(lower, upper)) {
    throw std::invalid_argument(lower.to_string() + " does not interlace " + upper.to_string());
  }
  const long n = lower.level();
  return q.pow((n + 1) * lower.size() - n * upper.size());
}

std::map<Signature, Rational> cotransition(const Signature& upper, const QParam& q) {
  std::map<Signature, Rational> row;
  const Rational top = qdim(upper, q);
  for (Signature& lower : enumerate_down(upper)) {
    Rational value = wq(lower, upper, q) * qdim(lower, q) / top;
    row.emplace(std::move(lower), std::move(value));
  }
  return row;
}

LevelCharacter restrict_character(const LevelCharacter& chi) {
  if (chi.level() == 0) {
    throw std::invalid_argument("cannot restrict a level-0 character");
  }
  std::vector<const LevelCharacter::Weights::value_type*> support;
  for (const auto& entry : chi.weights()) {
    support.push_back(&entry);
  }
  std::vector<std::map<Signature, Rational>> rows(support.size());
  parallel_for(support.size(), [&](std::size_t i) {
    rows[i] = cotransition(support[i]->first, chi.q());
  });

  LevelCharacter::Weights pushed;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Rational& mass = support[i]->second;
    for (const auto& [lower, value] : rows[i]) {
      pushed[lower] += mass * value;
    }
  }
  return LevelCharacter(chi.level() - 1, chi.q(), std::move(pushed));
}

CoherenceReport is_coherent(const CoherentFamily& family) {
  if (family.measures.empty()) {
    throw std::invalid_argument("coherence check needs at least one level");
  }
  for (std::size_t i = 0; i < family.measures.size(); ++i) {
    const LevelCharacter& m = family.measures[i];
    if (!(m.q() == family.q)) {
      throw std::invalid_argument("coherent family mixes values of q");
    }
    if (i > 0 && m.level() != family.measures[i - 1].level() + 1) {
      throw std::invalid_argument("coherent family levels must be consecutive");
    }
  }

  CoherenceReport report;
  for (std::size_t i = 0; i + 1 < family.measures.size(); ++i) {
    const LevelCharacter& lower = family.measures[i];
    const LevelCharacter pushed = restrict_character(family.measures[i + 1]);
    if (pushed == lower) {
      continue;
    }
    // First signature, in lexicographic order over the union of supports, where they differ.
    auto a = pushed.weights().begin();
    auto b = lower.weights().begin();
    std::optional<Signature> witness;
    while (!witness) {
      if (a != pushed.weights().end() &&
          (b == lower.weights().end() || a->first < b->first)) {
        witness = a->first;
      } else if (b != lower.weights().end() &&
                 (a == pushed.weights().end() || b->first < a->first)) {
        witness = b->first;
      } else if (a->second != b->second) {
        witness = a->first;
      } else {
        ++a;
        ++b;
      }
    }
    report.coherent = false;
    report.level = lower.level();
    report.expected = pushed.mass(*witness);
    report.actual = lower.mass(*witness);
    report.signature = std::move(witness);
    return report;
  }
  return report;
}

LevelCharacter tensor(const LevelCharacter& a, const LevelCharacter& b) {
  require_compatible(a, b, "tensor");
  const QParam& q = a.q();

  std::vector<std::pair<const Signature*, const Rational*>> left;
  std::vector<std::pair<const Signature*, const Rational*>> right;
  for (const auto& [sig, w] : a.weights()) {
    left.emplace_back(&sig, &w);
  }
  for (const auto& [sig, w] : b.weights()) {
    right.emplace_back(&sig, &w);
  }

  std::vector<std::vector<std::pair<Signature, Rational>>> partial(left.size() * right.size());
  parallel_for(partial.size(), [&](std::size_t index) {
    const auto& [lambda, wl] = left[index / right.size()];
    const auto& [mu, wm] = right[index % right.size()];
    const Rational scale = (*wl) * (*wm) / (qdim(*lambda, q) * qdim(*mu, q));
    for (const auto& [nu, c] : lr_coefficients(*lambda, *mu)) {
      partial[index].emplace_back(nu, scale * Rational(c) * qdim(nu, q));
    }
  });

  LevelCharacter::Weights out;
  for (auto& terms : partial) {
    for (auto& [nu, w] : terms) {
      out[nu] += w;
    }
  }
  return LevelCharacter(a.level(), q, std::move(out));
}

Rational sgf_eval(const LevelCharacter& chi, std::span<const Rational> points) {
  if (points.size() != static_cast<std::size_t>(chi.level())) {
    throw std::invalid_argument("generating function of a level-" + std::to_string(chi.level()) +
                                " character needs that many points");
  }
  Rational total(0);
  for (const auto& [sig, w] : chi.weights()) {
    total += w * schur_eval(sig, points) / principal_specialization(sig, chi.q());
  }
  return total;
}

TorusSeries::TorusSeries(const LevelCharacter& chi) : level_(chi.level()) {
  std::map<std::vector<int>, Rational> series;
  for (const auto& [sig, w] : chi.weights()) {
    if (sig.empty()) {
      series[{}] += w;
      continue;
    }
    const Rational norm = w / principal_specialization(sig, chi.q());
    for (const GTPattern& p : enumerate_gt_patterns(sig)) {
      std::vector<int> e = weight(p);
      long twist = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        twist += static_cast<long>(i) * e[i];
      }
      series[std::move(e)] += norm * chi.q().pow(-2 * twist);
    }
  }
  for (auto& [e, c] : series) {
    exponents_.push_back(e);
    coefficients_.push_back(c.get_d());
  }
}

std::complex<double> TorusSeries::evaluate(std::span<const std::complex<double>> z,
                                           double precision) const {
  if (z.size() != static_cast<std::size_t>(level_)) {
    throw std::invalid_argument("torus evaluation needs " + std::to_string(level_) + " points");
  }
  for (const auto& zi : z) {
    if (!(std::abs(std::abs(zi) - 1.0) <= precision)) {
      throw std::invalid_argument("torus point off the unit circle");
    }
  }
  std::complex<double> total(0.0, 0.0);
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    std::complex<double> term(coefficients_[k], 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
      term *= cpow(z[i], exponents_[k][i]);
    }
    total += term;
  }
  return total;
}

std::complex<double> sgf_eval_torus(const LevelCharacter& chi,
                                    std::span<const std::complex<double>> z, double precision) {
  return TorusSeries(chi).evaluate(z, precision);
}

std::vector<Rational> random_rational_points(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-9, 8);
  std::uniform_int_distribution<int> denominator(1, 9);
  std::vector<Rational> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    int a = numerator(rng);
    if (a >= 0) {
      ++a;  // skip zero
    }
    Rational x(a, denominator(rng));
    x.canonicalize();
    points.push_back(std::move(x));
  }
  return points;
}

bool check_product(const LevelCharacter& chi, const LevelCharacter& a, const LevelCharacter& b,
                   int trials, std::uint64_t seed) {
  if (chi.level() != a.level() || chi.level() != b.level() || !(chi.q() == a.q()) ||
      !(chi.q() == b.q())) {
    return false;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto x = random_rational_points(static_cast<std::size_t>(chi.level()), rng);
    if (sgf_eval(chi, x) != sgf_eval(a, x) * sgf_eval(b, x)) {
      return false;
    }
  }
  return true;
}

bool check_product_exact(const LevelCharacter& chi, const LevelCharacter& a,
                         const LevelCharacter& b) {
  return tensor(a, b) == chi;
}

}  // namespace qchar
