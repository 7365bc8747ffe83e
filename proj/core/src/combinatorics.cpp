#include "qchar/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

#include "qchar/rational.hpp"

namespace qchar {

namespace {

// Largest-first interlacer of `upper`: λ_i = ν_i.
std::vector<int> top_interlacer(const Signature& upper) {
  const auto& nu = upper.parts();
  return {nu.begin(), nu.end() - 1};
}

// Steps λ to the next interlacer of ν in descending lexicographic order.
bool step_down(std::vector<int>& lambda, const Signature& upper) {
  for (std::size_t j = lambda.size(); j-- > 0;) {
    if (lambda[j] > upper[j + 1]) {
      --lambda[j];
      for (std::size_t i = j + 1; i < lambda.size(); ++i) {
        lambda[i] = upper[i];
      }
      return true;
    }
  }
  return false;
}

}  // namespace

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("signature parts must be nonincreasing: " + to_string());
    }
  }
}

long Signature::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Signature::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Signature constant_signature(int level, int k) {
  return Signature(std::vector<int>(static_cast<std::size_t>(level), k));
}

bool interlaces(const Signature& lower, const Signature& upper) {
  if (upper.level() != lower.level() + 1) {
    throw std::invalid_argument("interlacing needs levels N and N+1, got " +
                                std::to_string(lower.level()) + " and " +
                                std::to_string(upper.level()));
  }
  for (int k = 0; k < lower.level(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (upper[i] < lower[i] || lower[i] < upper[i + 1]) {
      return false;
    }
  }
  return true;
}

std::vector<Signature> enumerate_down(const Signature& upper) {
  if (upper.empty()) {
    throw std::invalid_argument("enumerate_down needs a signature of level >= 1");
  }
  std::vector<int> lambda(upper.parts().begin() + 1, upper.parts().end());  // lexicographically least
  std::vector<Signature> out;
  for (;;) {
    out.emplace_back(lambda);
    std::size_t j = lambda.size();
    while (j > 0 && lambda[j - 1] == upper[j - 1]) {
      --j;
    }
    if (j == 0) {
      break;
    }
    ++lambda[j - 1];
    for (std::size_t i = j; i < lambda.size(); ++i) {
      lambda[i] = upper[i + 1];
    }
  }
  return out;
}

Signature shift(const Signature& sig, int k) {
  std::vector<int> parts = sig.parts();
  for (int& p : parts) {
    p += k;
  }
  return Signature(std::move(parts));
}

std::size_t gt_dimension(const Signature& top) {
  Rational dim(1);
  const int n = top.level();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dim *= Rational(top[static_cast<std::size_t>(i)] - top[static_cast<std::size_t>(j)] + j - i,
                      j - i);
    }
  }
  dim.canonicalize();
  return dim.get_num().get_ui();
}

GTPattern::GTPattern(std::vector<Signature> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].level() != static_cast<int>(k + 1)) {
      throw std::invalid_argument("GT pattern row " + std::to_string(k + 1) + " has wrong length");
    }
    if (k > 0 && !interlaces(rows_[k - 1], rows_[k])) {
      throw std::invalid_argument("GT pattern rows " + std::to_string(k) + " and " +
                                  std::to_string(k + 1) + " do not interlace");
    }
  }
}

std::vector<int> weight(const GTPattern& pattern) {
  std::vector<int> w;
  w.reserve(pattern.rows().size());
  long previous = 0;
  for (const Signature& row : pattern.rows()) {
    const long s = row.size();
    w.push_back(static_cast<int>(s - previous));
    previous = s;
  }
  return w;
}

GTPatternRange::GTPatternRange(Signature top) : top_(std::move(top)) {
  if (top_.empty()) {
    throw std::invalid_argument("GT patterns need a signature of level >= 1");
  }
}

GTPatternRange::iterator::iterator(const Signature& top) : done_(false) {
  const auto n = static_cast<std::size_t>(top.level());
  current_.rows_.resize(n);
  current_.rows_[n - 1] = top;
  for (std::size_t k = n - 1; k-- > 0;) {
    current_.rows_[k] = Signature(top_interlacer(current_.rows_[k + 1]));
  }
}

GTPatternRange::iterator& GTPatternRange::iterator::operator++() {
  auto& rows = current_.rows_;
  const std::size_t n = rows.size();
  // Advance the lowest row that still has a successor, then reset the rows below it.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<int> parts = rows[k].parts();
    if (step_down(parts, rows[k + 1])) {
      rows[k] = Signature(std::move(parts));
      for (std::size_t j = k; j-- > 0;) {
        rows[j] = Signature(top_interlacer(rows[j + 1]));
      }
      return *this;
    }
  }
  done_ = true;
  return *this;
}

std::vector<GTPattern> gt_patterns(const Signature& top) {
  std::vector<GTPattern> out;
  for (const GTPattern& p : enumerate_gt_patterns(top)) {
    out.push_back(p);
  }
  return out;
}

}  // namespace qchar
