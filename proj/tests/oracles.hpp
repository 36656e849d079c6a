#pragma once

// Straight-from-the-definition reference computations. Nothing here calls
// the library's statistic or codec implementations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace mahonian::oracle {

using Word = std::vector<std::uint32_t>;

inline std::uint64_t inversions(const Word& w) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

inline std::uint64_t major_index(const Word& w) {
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) s += i;
  return s;
}

/// Every permutation of [n], generated by recursive choice (not
/// next_permutation).
inline std::vector<Word> permutations(std::size_t n) {
  std::vector<Word> out;
  Word cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

/// Every sequence with 0 <= a_j <= j, by recursion.
inline std::vector<Word> tables(std::size_t n) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    const auto j = static_cast<std::uint32_t>(cur.size());
    for (std::uint32_t a = 0; a <= j; ++a) {
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Inserts j with a_j items to its right, using a list scan from the right.
inline Word insert_by_right_count(const Word& table) {
  Word w;
  for (std::uint32_t j = 0; j < table.size(); ++j) {
    Word next;
    const std::size_t left = w.size() - table[j];
    for (std::size_t i = 0; i < left; ++i) next.push_back(w[i]);
    next.push_back(j);
    for (std::size_t i = left; i < w.size(); ++i) next.push_back(w[i]);
    w = std::move(next);
  }
  return w;
}

/// Tries every slot and returns the first one raising maj by `delta`, or
/// w.size() + 1 if none does.
inline std::size_t slot_for_maj_delta(const Word& w, std::uint64_t delta) {
  const std::uint64_t before = major_index(w);
  for (std::size_t slot = 0; slot <= w.size(); ++slot) {
    Word next = w;
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(slot),
                static_cast<std::uint32_t>(w.size()));
    if (major_index(next) - before == delta) return slot;
  }
  return w.size() + 1;
}

/// Inserts j at whichever slot raises maj by a_j, found by trial.
inline Word insert_by_maj_delta(const Word& table) {
  Word w;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const std::size_t slot = slot_for_maj_delta(w, table[j]);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot),
             static_cast<std::uint32_t>(j));
  }
  return w;
}

/// Bucket counts of table sums over all tables of length n.
inline std::vector<std::uint64_t> table_sum_counts(std::size_t n) {
  const std::size_t top = n == 0 ? 0 : n * (n - 1) / 2;
  std::vector<std::uint64_t> c(top + 1, 0);
  for (const Word& t : tables(n))
    ++c[std::accumulate(t.begin(), t.end(), std::size_t{0})];
  return c;
}

/// b(n, k) from b(n, k) = sum_{i=0}^{min(k, n-1)} b(n-1, k-i) evaluated
/// term by term, O(n^2 K).
inline std::vector<std::uint64_t> mahonian_by_recurrence(std::size_t n) {
  std::vector<std::uint64_t> prev{1};
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t top = m * (m - 1) / 2;
    std::vector<std::uint64_t> cur(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) {
      for (std::size_t i = 0; i <= std::min(k, m - 1); ++i) {
        if (k - i < prev.size()) cur[k] += prev[k - i];
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

/// (inv, maj) -> count over all permutations of [n].
inline std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>
joint_counts(std::size_t n) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> m;
  for (const Word& p : permutations(n)) ++m[{inversions(p), major_index(p)}];
  return m;
}

}  // namespace mahonian::oracle
