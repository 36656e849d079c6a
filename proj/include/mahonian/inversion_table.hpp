#pragma once

// Inversion tables (a_0, ..., a_{n-1}) with 0 <= a_j <= j, and three ways of
// reading one as a recipe for building a permutation of [n] by adding the
// values 0, 1, ..., n-1 one at a time:
//
//   inv-insertion       insert j so that exactly a_j entries lie to its right;
//                       inv of the result is the table sum.
//   maj-insertion       insert j at the slot that raises maj by exactly a_j;
//                       maj of the result is the table sum.
//   rightmost-insertion append j - a_j and bump every earlier entry that is
//                       >= j - a_j; inv of the result is the table sum and maj
//                       is the sum of ascent positions of the table. The
//                       result is the inverse of the inv-insertion word.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonian/permutation.hpp"

namespace mahonian {

class InversionTable;

namespace detail {
struct TableAccess {
  static InversionTable adopt(std::vector<Value> entries);
};
}  // namespace detail

/// Sequence (a_0, ..., a_{n-1}) with a_j <= j. a_0 is always 0 but is stored.
class InversionTable {
 public:
  InversionTable() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Value operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Value> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const InversionTable&, const InversionTable&) =
      default;
  friend auto operator<=>(const InversionTable&, const InversionTable&) =
      default;

 private:
  explicit InversionTable(std::vector<Value> e) : entries_(std::move(e)) {}
  friend struct detail::TableAccess;

  std::vector<Value> entries_;
};

inline InversionTable detail::TableAccess::adopt(std::vector<Value> entries) {
  return InversionTable(std::move(entries));
}

/// Throws InvalidInput naming the first negative entry or entry with a_j > j.
inline InversionTable make_table(std::span<const std::int64_t> entries) {
  std::vector<Value> out;
  out.reserve(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const std::int64_t a = entries[j];
    if (a < 0) {
      throw InvalidInput("negative entry " + std::to_string(a) + " at index " +
                             std::to_string(j),
                         j);
    }
    if (static_cast<std::uint64_t>(a) > j) {
      throw InvalidInput("entry " + std::to_string(a) + " at index " +
                             std::to_string(j) + " exceeds its index",
                         j);
    }
    out.push_back(static_cast<Value>(a));
  }
  return detail::TableAccess::adopt(std::move(out));
}

inline InversionTable make_table(const std::vector<std::int64_t>& entries) {
  return make_table(std::span<const std::int64_t>(entries));
}

enum class Codec { kInvInsertion, kMajInsertion, kRightmostInsertion };

inline constexpr Codec kAllCodecs[] = {Codec::kInvInsertion,
                                       Codec::kMajInsertion,
                                       Codec::kRightmostInsertion};

inline constexpr std::string_view to_string(Codec c) noexcept {
  switch (c) {
    case Codec::kInvInsertion:
      return "inv";
    case Codec::kMajInsertion:
      return "maj";
    case Codec::kRightmostInsertion:
      return "rightmost";
  }
  return "?";
}

inline std::optional<Codec> parse_codec(std::string_view s) {
  for (Codec c : kAllCodecs) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// Mixed-radix enumeration of all n! tables; the last entry varies fastest,
/// so the order is lexicographic.
class TableRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = InversionTable;
    using difference_type = std::ptrdiff_t;
    using pointer = const InversionTable*;
    using reference = const InversionTable&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      std::vector<Value> digits(current_.begin(), current_.end());
      std::size_t j = digits.size();
      while (j > 0) {
        --j;
        if (digits[j] < j) {
          ++digits[j];
          current_ = detail::TableAccess::adopt(std::move(digits));
          return *this;
        }
        digits[j] = 0;
      }
      done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class TableRange;
    explicit iterator(std::size_t n)
        : current_(detail::TableAccess::adopt(std::vector<Value>(n, 0))),
          done_(false) {}

    InversionTable current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  std::size_t n() const noexcept { return n_; }

 private:
  friend TableRange all_tables(std::size_t, std::size_t);
  explicit TableRange(std::size_t n) : n_(n) {}
  std::size_t n_;
};

inline TableRange all_tables(std::size_t n,
                             std::size_t cap = kDefaultEnumerationCap) {
  check_cap("all_tables", n, cap);
  return TableRange(n);
}

inline StatValue table_sum(const InversionTable& t) {
  StatValue s = 0;
  for (Value a : t) s += a;
  return s;
}

/// Sum of j in {1, ..., n-1} with a_j > a_{j-1}.
inline StatValue table_ascent_sum(const InversionTable& t) {
  StatValue s = 0;
  for (std::size_t j = 1; j < t.size(); ++j) {
    if (t[j] > t[j - 1]) s += j;
  }
  return s;
}

/// Places the value `word.size()` at index `slot` (0..size), shifting the
/// entries at and after `slot` one step right.
inline Permutation insert_maximum(const Permutation& word, std::size_t slot) {
  if (slot > word.size()) {
    throw std::out_of_range("slot " + std::to_string(slot) +
                            " out of range for word of length " +
                            std::to_string(word.size()));
  }
  std::vector<Value> w(word.begin(), word.end());
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot),
           static_cast<Value>(word.size()));
  return detail::PermutationAccess::adopt(std::move(w));
}

/// Drops the largest value from a non-empty word.
inline Permutation remove_maximum(const Permutation& word) {
  if (word.empty()) throw std::invalid_argument("remove_maximum: empty word");
  std::vector<Value> w;
  w.reserve(word.size() - 1);
  const Value top = static_cast<Value>(word.size() - 1);
  for (Value v : word) {
    if (v != top) w.push_back(v);
  }
  return detail::PermutationAccess::adopt(std::move(w));
}

struct InsertionOutcome {
  std::size_t position = 0;  // slot 0..j taken by the new maximum
  StatValue maj_delta = 0;

  friend bool operator==(const InsertionOutcome&,
                         const InsertionOutcome&) = default;
};

/// Finds the slot where inserting the new maximum j = word.size() raises the
/// major index by exactly `target_delta`.
///
/// With kappa descents at d_kappa < ... < d_1:
///  - delta 0 is the rightmost slot j;
///  - delta t in 1..kappa is slot d_t, which pushes descents d_t..d_1 one
///    step right without creating a new one;
///  - delta kappa + r is the r-th non-descent slot from the left among
///    0..j-1 (slot 0 included), which creates one descent and shifts every
///    descent to its right.
inline InsertionOutcome maj_insertion_outcome(const Permutation& word,
                                              StatValue target_delta) {
  const std::size_t j = word.size();
  if (target_delta > j) {
    throw std::out_of_range("target delta " + std::to_string(target_delta) +
                            " out of range [0, " + std::to_string(j) + "]");
  }
  if (target_delta == 0) return {j, 0};

  const std::vector<std::size_t> descents = descent_positions(word);
  const std::size_t kappa = descents.size();
  if (target_delta <= kappa) {
    return {descents[kappa - target_delta], target_delta};
  }

  std::size_t remaining = target_delta - kappa;
  for (std::size_t slot = 0; slot < j; ++slot) {
    const bool non_descent = slot == 0 || word[slot - 1] < word[slot];
    if (non_descent && --remaining == 0) return {slot, target_delta};
  }
  // There are exactly j - kappa non-descent slots, so this is unreachable
  // for a valid word.
  throw std::logic_error("maj_insertion_outcome: no slot found");
}

namespace detail {

using StepSink = std::vector<Permutation>*;

inline void record(StepSink steps, const std::vector<Value>& w) {
  if (steps) steps->push_back(PermutationAccess::adopt(w));
}

inline Permutation decode_inv_impl(const InversionTable& t, StepSink steps) {
  std::vector<Value> w;
  w.reserve(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const auto slot = static_cast<std::ptrdiff_t>(w.size() - t[j]);
    w.insert(w.begin() + slot, static_cast<Value>(j));
    record(steps, w);
  }
  return PermutationAccess::adopt(std::move(w));
}

inline Permutation decode_maj_impl(const InversionTable& t, StepSink steps) {
  Permutation w;
  for (std::size_t j = 0; j < t.size(); ++j) {
    w = insert_maximum(w, maj_insertion_outcome(w, t[j]).position);
    if (steps) steps->push_back(w);
  }
  return w;
}

inline Permutation decode_rightmost_impl(const InversionTable& t,
                                         StepSink steps) {
  std::vector<Value> w;
  w.reserve(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Value placed = static_cast<Value>(j - t[j]);
    for (Value& v : w) v += (v >= placed) ? 1 : 0;
    w.push_back(placed);
    record(steps, w);
  }
  return PermutationAccess::adopt(std::move(w));
}

}  // namespace detail

/// Inserts j = 0, 1, ... so that it has a_j entries to its right.
inline Permutation decode_inv(const InversionTable& t) {
  return detail::decode_inv_impl(t, nullptr);
}

/// a_j = number of entries smaller than j lying to the right of j.
inline InversionTable encode_inv(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<Value> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (p[k] < p[i]) ++a[p[i]];
    }
  }
  return detail::TableAccess::adopt(std::move(a));
}

inline Permutation decode_maj(const InversionTable& t) {
  return detail::decode_maj_impl(t, nullptr);
}

/// Peels off the maximum repeatedly; a_j is the maj lost at each deletion.
inline InversionTable encode_maj(const Permutation& p) {
  std::vector<Value> a(p.size(), 0);
  Permutation w = p;
  while (!w.empty()) {
    const std::size_t j = w.size() - 1;
    Permutation shorter = remove_maximum(w);
    a[j] = static_cast<Value>(maj_stat(w) - maj_stat(shorter));
    w = std::move(shorter);
  }
  return detail::TableAccess::adopt(std::move(a));
}

inline Permutation decode_rightmost(const InversionTable& t) {
  return detail::decode_rightmost_impl(t, nullptr);
}

/// Undoes the rightmost build back to front: the last entry is j - a_j, and
/// removing it lowers every larger entry by one.
inline InversionTable encode_rightmost(const Permutation& p) {
  std::vector<Value> w(p.begin(), p.end());
  std::vector<Value> a(w.size(), 0);
  while (!w.empty()) {
    const std::size_t j = w.size() - 1;
    const Value placed = w.back();
    w.pop_back();
    a[j] = static_cast<Value>(j - placed);
    for (Value& v : w) v -= (v > placed) ? 1 : 0;
  }
  return detail::TableAccess::adopt(std::move(a));
}

inline Permutation decode(Codec codec, const InversionTable& t) {
  switch (codec) {
    case Codec::kInvInsertion:
      return decode_inv(t);
    case Codec::kMajInsertion:
      return decode_maj(t);
    case Codec::kRightmostInsertion:
      return decode_rightmost(t);
  }
  throw std::invalid_argument("unknown codec");
}

inline InversionTable encode(Codec codec, const Permutation& p) {
  switch (codec) {
    case Codec::kInvInsertion:
      return encode_inv(p);
    case Codec::kMajInsertion:
      return encode_maj(p);
    case Codec::kRightmostInsertion:
      return encode_rightmost(p);
  }
  throw std::invalid_argument("unknown codec");
}

/// The word after each step of the build: entry j is the permutation of
/// [j+1] produced from (a_0, ..., a_j).
inline std::vector<Permutation> build_sequence(Codec codec,
                                               const InversionTable& t) {
  std::vector<Permutation> steps;
  steps.reserve(t.size());
  switch (codec) {
    case Codec::kInvInsertion:
      detail::decode_inv_impl(t, &steps);
      break;
    case Codec::kMajInsertion:
      detail::decode_maj_impl(t, &steps);
      break;
    case Codec::kRightmostInsertion:
      detail::decode_rightmost_impl(t, &steps);
      break;
  }
  return steps;
}

}  // namespace mahonian
