#pragma once

// Permutations of [n] = {0, ..., n-1} in one-line notation, and the two
// Mahonian statistics defined on them: the inversion number and the major
// index.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mahonian {

using Value = std::uint32_t;
using StatValue = std::uint64_t;

/// Default upper bound on n for anything that enumerates all n! objects.
inline constexpr std::size_t kDefaultEnumerationCap = 10;
/// Largest n whose factorial fits in a StatValue.
inline constexpr std::size_t kHardCap = 20;

/// Rejected input. `index()` is the position of the offending element.
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A size argument exceeded an enumeration or DP cap.
class CapExceeded : public std::out_of_range {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::out_of_range(what + ": n=" + std::to_string(requested) +
                          " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// n(n-1)/2, the largest value either statistic takes on a length-n word.
constexpr StatValue max_stat(std::size_t n) noexcept {
  return n == 0 ? 0 : static_cast<StatValue>(n) * (n - 1) / 2;
}

constexpr StatValue factorial(std::size_t n) noexcept {
  StatValue f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline void check_cap(const char* what, std::size_t n, std::size_t cap) {
  const std::size_t effective = std::min(cap, kHardCap);
  if (n > effective) throw CapExceeded(what, n, effective);
}

class Permutation;

namespace detail {
// Wraps words that are permutations by construction, skipping validation.
struct PermutationAccess {
  static Permutation adopt(std::vector<Value> word);
};
}  // namespace detail

/// A permutation of [n] stored as its word p_0 p_1 ... p_{n-1}.
/// Immutable once built; the empty permutation is valid.
class Permutation {
 public:
  Permutation() = default;

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Value operator[](std::size_t i) const { return word_[i]; }
  std::span<const Value> word() const noexcept { return word_; }
  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Value> word) : word_(std::move(word)) {}
  friend struct detail::PermutationAccess;

  std::vector<Value> word_;
};

inline Permutation detail::PermutationAccess::adopt(std::vector<Value> word) {
  return Permutation(std::move(word));
}

/// Validates `word` as a permutation of {0, ..., word.size()-1}.
/// Throws InvalidInput naming the first negative, out-of-range or repeated
/// entry.
inline Permutation make_permutation(std::span<const std::int64_t> word) {
  const std::size_t n = word.size();
  std::vector<bool> seen(n, false);
  std::vector<Value> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = word[i];
    if (v < 0) {
      throw InvalidInput("negative value " + std::to_string(v) +
                             " at index " + std::to_string(i),
                         i);
    }
    if (static_cast<std::uint64_t>(v) >= n) {
      throw InvalidInput("value " + std::to_string(v) + " at index " +
                             std::to_string(i) + " out of range for n=" +
                             std::to_string(n),
                         i);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("duplicate value " + std::to_string(v) +
                             " at index " + std::to_string(i),
                         i);
    }
    seen[static_cast<std::size_t>(v)] = true;
    out.push_back(static_cast<Value>(v));
  }
  return detail::PermutationAccess::adopt(std::move(out));
}

inline Permutation make_permutation(const std::vector<std::int64_t>& word) {
  return make_permutation(std::span<const std::int64_t>(word));
}

inline Permutation identity(std::size_t n) {
  std::vector<Value> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Value>(i);
  return detail::PermutationAccess::adopt(std::move(w));
}

/// q with q[p[i]] = i.
inline Permutation inverse(const Permutation& p) {
  std::vector<Value> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Value>(i);
  return detail::PermutationAccess::adopt(std::move(q));
}

/// Indices i in {1, ..., n-1} with p[i-1] > p[i], increasing.
inline std::vector<std::size_t> descent_positions(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i - 1] > p[i]) out.push_back(i);
  }
  return out;
}

/// Number of pairs i < j with p[i] > p[j], counted during a bottom-up merge
/// sort in O(n log n).
inline StatValue inv_stat(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<Value> a(p.begin(), p.end());
  std::vector<Value> buf(n);
  StatValue count = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          // a[j] jumps ahead of everything left in the left run
          count += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
    }
    a.swap(buf);
  }
  return count;
}

/// Sum of descent positions.
inline StatValue maj_stat(const Permutation& p) {
  StatValue sum = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i - 1] > p[i]) sum += i;
  }
  return sum;
}

/// All permutations of [n] in lexicographic order, optionally restricted to
/// those starting with a given value. The restricted ranges for
/// leading = 0, ..., n-1 partition the full range, which is how
/// enumerations are split across workers.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      auto w = current_.word();
      std::vector<Value> next(w.begin(), w.end());
      const auto first = next.begin() + static_cast<std::ptrdiff_t>(skip_);
      if (std::next_permutation(first, next.end())) {
        current_ = detail::PermutationAccess::adopt(std::move(next));
      } else {
        done_ = true;
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class PermutationRange;
    iterator(Permutation start, std::size_t skip)
        : current_(std::move(start)), skip_(skip), done_(false) {}

    Permutation current_;
    std::size_t skip_ = 0;
    bool done_ = true;
  };

  iterator begin() const {
    if (leading_ < 0) return iterator(identity(n_), 0);
    std::vector<Value> w;
    w.reserve(n_);
    w.push_back(static_cast<Value>(leading_));
    for (std::size_t v = 0; v < n_; ++v) {
      if (static_cast<std::int64_t>(v) != leading_) {
        w.push_back(static_cast<Value>(v));
      }
    }
    return iterator(detail::PermutationAccess::adopt(std::move(w)), 1);
  }
  std::default_sentinel_t end() const { return {}; }

  std::size_t n() const noexcept { return n_; }

 private:
  friend PermutationRange all_permutations(std::size_t, std::size_t);
  friend PermutationRange permutations_starting_with(std::size_t, Value,
                                                     std::size_t);
  PermutationRange(std::size_t n, std::int64_t leading)
      : n_(n), leading_(leading) {}

  std::size_t n_;
  std::int64_t leading_;
};

/// Every permutation of [n] exactly once, lexicographic order.
inline PermutationRange all_permutations(
    std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
  check_cap("all_permutations", n, cap);
  return PermutationRange(n, -1);
}

/// The (n-1)! permutations of [n] whose first entry is `leading`.
inline PermutationRange permutations_starting_with(
    std::size_t n, Value leading, std::size_t cap = kDefaultEnumerationCap) {
  check_cap("permutations_starting_with", n, cap);
  if (leading >= n) {
    throw std::out_of_range("leading value " + std::to_string(leading) +
                            " out of range for n=" + std::to_string(n));
  }
  return PermutationRange(n, static_cast<std::int64_t>(leading));
}

}  // namespace mahonian
