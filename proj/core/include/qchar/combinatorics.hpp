#ifndef QCHAR_COMBINATORICS_HPP
#define QCHAR_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace qchar {

/// Highest weight of U_q(N): a nonincreasing integer tuple of length N.
/// Level 0 is the empty signature "*".
class Signature {
 public:
  Signature() = default;
  /// Throws std::invalid_argument if parts are not nonincreasing.
  explicit Signature(std::vector<int> parts);
  Signature(std::initializer_list<int> parts) : Signature(std::vector<int>(parts)) {}

  int level() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// 0-based access.
  int operator[](std::size_t i) const { return parts_[i]; }
  /// |λ|, the sum of the parts.
  long size() const noexcept;
  /// "[2,1,0]", or "[]" for the empty signature.
  std::string to_string() const;

  /// Lexicographic on the parts (signatures of one level compare as tuples).
  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> parts_;
};

/// (k, k, ..., k) of the given level.
Signature constant_signature(int level, int k);

/// λ ≺ ν: ν_1 ≥ λ_1 ≥ ν_2 ≥ ... ≥ λ_N ≥ ν_{N+1}. The empty signature
/// interlaces every level-1 signature.
/// Throws std::invalid_argument unless upper.level() == lower.level() + 1.
bool interlaces(const Signature& lower, const Signature& upper);

/// All λ ≺ ν in ascending lexicographic order. There are
/// Π_k (ν_k − ν_{k+1} + 1) of them; a level-1 ν yields {*}.
std::vector<Signature> enumerate_down(const Signature& upper);

/// A_k(λ) = (λ_1 + k, ..., λ_N + k).
Signature shift(const Signature& sig, int k);

/// Number of GT patterns with top row `top` (the Weyl dimension).
std::size_t gt_dimension(const Signature& top);

/// Triangular interlacing array; row k (1-based) has length k and the top
/// row is row N.
class GTPattern {
 public:
  GTPattern() = default;
  /// Throws std::invalid_argument unless row k has level k and consecutive rows interlace.
  explicit GTPattern(std::vector<Signature> rows);

  int level() const noexcept { return static_cast<int>(rows_.size()); }
  /// 1-based row access.
  const Signature& row(int k) const { return rows_[static_cast<std::size_t>(k - 1)]; }
  const Signature& top() const { return rows_.back(); }
  const std::vector<Signature>& rows() const noexcept { return rows_; }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;

 private:
  friend class GTPatternRange;
  std::vector<Signature> rows_;
};

/// w_i = |row i| − |row i−1| (row 0 has sum 0).
std::vector<int> weight(const GTPattern& pattern);

/// Lazily enumerates every GT pattern with a given top row.
///
/// Order: patterns are compared by their rows from row N−1 down to row 1,
/// each row in descending lexicographic order. The first pattern is the
/// highest-weight one (every row a truncation of the top row), and patterns
/// sharing row N−1 are contiguous, so the pattern list of ν is the
/// concatenation over λ ≺ ν (descending) of the pattern lists of λ.
class GTPatternRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GTPattern;
    using difference_type = std::ptrdiff_t;
    using pointer = const GTPattern*;
    using reference = const GTPattern&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class GTPatternRange;
    explicit iterator(const Signature& top);
    GTPattern current_;
    bool done_ = true;
  };

  /// Throws std::invalid_argument for the empty signature.
  explicit GTPatternRange(Signature top);

  iterator begin() const { return iterator(top_); }
  iterator end() const { return iterator(); }

 private:
  Signature top_;
};

inline GTPatternRange enumerate_gt_patterns(const Signature& top) { return GTPatternRange(top); }

/// Materialized form of enumerate_gt_patterns.
std::vector<GTPattern> gt_patterns(const Signature& top);

}  // namespace qchar

#endif  // QCHAR_COMBINATORICS_HPP
