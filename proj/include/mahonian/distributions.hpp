#pragma once

// Exact count vectors and joint (inv, maj) matrices over all permutations of
// [n], plus the Mahonian numbers b(n, k) computed without enumeration.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "mahonian/inversion_table.hpp"
#include "mahonian/permutation.hpp"

namespace mahonian {

/// Largest n accepted by mahonian_numbers.
inline constexpr std::size_t kDefaultDpCap = kHardCap;

enum class Statistic { kInv, kMaj };

inline constexpr std::string_view to_string(Statistic s) noexcept {
  return s == Statistic::kInv ? "inv" : "maj";
}

inline StatValue evaluate(Statistic s, const Permutation& p) {
  return s == Statistic::kInv ? inv_stat(p) : maj_stat(p);
}

/// counts[k] for k = 0 .. n(n-1)/2.
struct DistributionVector {
  std::size_t n = 0;
  std::vector<StatValue> counts;

  StatValue total() const {
    return std::accumulate(counts.begin(), counts.end(), StatValue{0});
  }

  friend bool operator==(const DistributionVector&,
                         const DistributionVector&) = default;
};

/// Dense (K+1) x (K+1) counts, K = n(n-1)/2; cell (k, k') counts objects
/// whose first statistic is k and second is k'.
class JointMatrix {
 public:
  JointMatrix() : JointMatrix(0) {}
  explicit JointMatrix(std::size_t n)
      : n_(n),
        dim_(static_cast<std::size_t>(max_stat(n)) + 1),
        cells_(dim_ * dim_, 0) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }

  StatValue& at(std::size_t k, std::size_t k_prime) {
    return cells_.at(k * dim_ + k_prime);
  }
  StatValue at(std::size_t k, std::size_t k_prime) const {
    return cells_.at(k * dim_ + k_prime);
  }

  StatValue total() const {
    return std::accumulate(cells_.begin(), cells_.end(), StatValue{0});
  }

  DistributionVector row_sums() const {
    DistributionVector d{n_, std::vector<StatValue>(dim_, 0)};
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t kp = 0; kp < dim_; ++kp) d.counts[k] += at(k, kp);
    return d;
  }

  DistributionVector column_sums() const {
    DistributionVector d{n_, std::vector<StatValue>(dim_, 0)};
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t kp = 0; kp < dim_; ++kp) d.counts[kp] += at(k, kp);
    return d;
  }

  JointMatrix& operator+=(const JointMatrix& other) {
    if (other.n_ != n_) throw std::invalid_argument("JointMatrix size mismatch");
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
    return *this;
  }

  friend bool operator==(const JointMatrix&, const JointMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t dim_;
  std::vector<StatValue> cells_;
};

/// Settings for brute-force enumeration. `workers` > 1 splits the
/// permutations by leading value; the result does not depend on it.
struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t workers = 1;
};

/// b(n, k): the coefficients of prod_{j=0}^{n-1} (1 + q + ... + q^j), i.e. the
/// number of inversion tables of length n summing to k. Each factor is
/// applied as a sliding-window sum.
inline DistributionVector mahonian_numbers(std::size_t n,
                                           std::size_t cap = kDefaultDpCap) {
  check_cap("mahonian_numbers", n, cap);
  std::vector<StatValue> counts{1};
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<StatValue> next(counts.size() + j, 0);
    StatValue window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < counts.size()) window += counts[k];
      if (k > j) window -= counts[k - j - 1];
      next[k] = window;
    }
    counts = std::move(next);
  }
  return {n, std::move(counts)};
}

namespace detail {

// Runs `body(range, partial)` once per leading value (or once over the whole
// range when n == 0) and sums the partial accumulators.
template <typename Acc, typename Body>
Acc partitioned_enumeration(std::size_t n, const EnumerationOptions& opts,
                            const Acc& zero, Body body) {
  check_cap("enumeration", n, opts.cap);
  if (n == 0 || opts.workers <= 1) {
    Acc acc = zero;
    body(all_permutations(n, opts.cap), acc);
    return acc;
  }
  const std::size_t workers = std::min(opts.workers, n);
  std::vector<Acc> partial(workers, zero);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t lead = w; lead < n; lead += workers) {
        body(permutations_starting_with(n, static_cast<Value>(lead), opts.cap),
             partial[w]);
      }
    });
  }
  for (auto& t : threads) t.join();
  Acc acc = zero;
  for (const Acc& p : partial) acc += p;
  return acc;
}

struct CountAccumulator {
  std::vector<StatValue> counts;
  CountAccumulator& operator+=(const CountAccumulator& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
};

}  // namespace detail

/// Brute-force distribution of a statistic over all_permutations(n).
inline DistributionVector stat_distribution(
    std::size_t n, Statistic stat, const EnumerationOptions& opts = {}) {
  const detail::CountAccumulator zero{
      std::vector<StatValue>(static_cast<std::size_t>(max_stat(n)) + 1, 0)};
  auto acc = detail::partitioned_enumeration(
      n, opts, zero, [stat](const PermutationRange& range,
                            detail::CountAccumulator& out) {
        for (const Permutation& p : range) ++out.counts[evaluate(stat, p)];
      });
  return {n, std::move(acc.counts)};
}

/// cells[k][k'] = #{p : inv(p) = k, maj(p) = k'} by brute force.
inline JointMatrix joint_distribution(std::size_t n,
                                      const EnumerationOptions& opts = {}) {
  return detail::partitioned_enumeration(
      n, opts, JointMatrix(n),
      [](const PermutationRange& range, JointMatrix& out) {
        for (const Permutation& p : range) ++out.at(inv_stat(p), maj_stat(p));
      });
}

/// cells[k][k'] = #{t : table_sum(t) = k, table_ascent_sum(t) = k'}.
inline JointMatrix table_stat_joint(std::size_t n,
                                    std::size_t cap = kDefaultEnumerationCap) {
  JointMatrix m(n);
  for (const InversionTable& t : all_tables(n, cap)) {
    ++m.at(table_sum(t), table_ascent_sum(t));
  }
  return m;
}

struct SymmetryViolation {
  std::size_t k = 0;
  std::size_t k_prime = 0;
  StatValue count = 0;             // cells[k][k']
  StatValue transposed_count = 0;  // cells[k'][k]

  friend bool operator==(const SymmetryViolation&,
                         const SymmetryViolation&) = default;
};

struct SymmetryReport {
  std::size_t pairs_checked = 0;
  std::vector<SymmetryViolation> violations;  // each with k < k_prime

  bool symmetric() const noexcept { return violations.empty(); }
};

inline SymmetryReport check_symmetry(const JointMatrix& m) {
  SymmetryReport report;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    for (std::size_t kp = k + 1; kp < m.dim(); ++kp) {
      ++report.pairs_checked;
      if (m.at(k, kp) != m.at(kp, k)) {
        report.violations.push_back({k, kp, m.at(k, kp), m.at(kp, k)});
      }
    }
  }
  return report;
}

}  // namespace mahonian
