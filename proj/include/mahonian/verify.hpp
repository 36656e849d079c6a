#pragma once

// Exhaustive verification of the codec and distribution identities for every
// n up to a bound. Each check stops at its first counterexample.

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mahonian/distributions.hpp"
#include "mahonian/inversion_table.hpp"
#include "mahonian/permutation.hpp"

namespace mahonian {

enum class Check {
  kRoundTrip,         // encode/decode pairs are mutually inverse
  kTableStats,        // inv/maj of decoded words vs table sum and ascent sum
  kInverse,           // rightmost decoding is the inverse of inv decoding
  kSlots,             // maj insertion slots realize every delta exactly once
  kEquidistribution,  // inv and maj distributions equal b(n, k)
  kSymmetry,          // joint (inv, maj) matrix equals its transpose
  kTransport,         // table (sum, ascent sum) matrix equals the joint matrix
};

inline constexpr Check kAllChecks[] = {
    Check::kRoundTrip, Check::kTableStats,       Check::kInverse,
    Check::kSlots,     Check::kEquidistribution, Check::kSymmetry,
    Check::kTransport};

inline constexpr std::string_view to_string(Check c) noexcept {
  switch (c) {
    case Check::kRoundTrip:
      return "roundtrip";
    case Check::kTableStats:
      return "table-stats";
    case Check::kInverse:
      return "inverse";
    case Check::kSlots:
      return "slots";
    case Check::kEquidistribution:
      return "equidistribution";
    case Check::kSymmetry:
      return "symmetry";
    case Check::kTransport:
      return "transport";
  }
  return "?";
}

inline std::optional<Check> parse_check(std::string_view s) {
  for (Check c : kAllChecks) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// The codec functions under test. Defaults to the library's own; tests swap
/// in faulty versions to make sure the checks can fail.
struct CodecSet {
  std::function<Permutation(const InversionTable&)> decode_inv =
      mahonian::decode_inv;
  std::function<InversionTable(const Permutation&)> encode_inv =
      mahonian::encode_inv;
  std::function<Permutation(const InversionTable&)> decode_maj =
      mahonian::decode_maj;
  std::function<InversionTable(const Permutation&)> encode_maj =
      mahonian::encode_maj;
  std::function<Permutation(const InversionTable&)> decode_rightmost =
      mahonian::decode_rightmost;
  std::function<InversionTable(const Permutation&)> encode_rightmost =
      mahonian::encode_rightmost;
  std::function<InsertionOutcome(const Permutation&, StatValue)> maj_slot =
      mahonian::maj_insertion_outcome;

  Permutation decode(Codec c, const InversionTable& t) const {
    switch (c) {
      case Codec::kInvInsertion:
        return decode_inv(t);
      case Codec::kMajInsertion:
        return decode_maj(t);
      case Codec::kRightmostInsertion:
        return decode_rightmost(t);
    }
    return {};
  }

  InversionTable encode(Codec c, const Permutation& p) const {
    switch (c) {
      case Codec::kInvInsertion:
        return encode_inv(p);
      case Codec::kMajInsertion:
        return encode_maj(p);
      case Codec::kRightmostInsertion:
        return encode_rightmost(p);
    }
    return {};
  }
};

/// maj-insertion decoder with one deliberate fault: a requested delta of 1 at
/// the last step is realized as delta 0. Used as a negative control.
inline Permutation decode_maj_with_fault(const InversionTable& t) {
  Permutation w;
  for (std::size_t j = 0; j < t.size(); ++j) {
    StatValue delta = t[j];
    if (j + 1 == t.size() && delta == 1) delta = 0;
    w = insert_maximum(w, maj_insertion_outcome(w, delta).position);
  }
  return w;
}

inline CodecSet codecs_with_maj_fault() {
  CodecSet c;
  c.decode_maj = decode_maj_with_fault;
  return c;
}

struct Counterexample {
  std::size_t n = 0;
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  Check check = Check::kRoundTrip;
  std::size_t n_max = 0;
  StatValue cases = 0;
  std::optional<Counterexample> failure;

  bool passed() const noexcept { return !failure.has_value(); }
};

struct VerifyOptions {
  std::size_t n_max = 0;
  std::vector<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t workers = 1;
  CodecSet codecs;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  bool passed() const noexcept {
    for (const auto& r : results)
      if (!r.passed()) return false;
    return true;
  }

  const CheckResult* first_failure() const noexcept {
    for (const auto& r : results)
      if (!r.passed()) return &r;
    return nullptr;
  }
};

namespace detail {

template <typename Seq>
std::string join(const Seq& seq, std::string_view sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

inline std::string show(const Permutation& p) { return "[" + join(p) + "]"; }
inline std::string show(const InversionTable& t) { return "(" + join(t) + ")"; }
inline std::string show(const DistributionVector& d) {
  return "[" + join(d.counts) + "]";
}

class CheckRunner {
 public:
  CheckRunner(Check check, std::size_t n_max) {
    result_.check = check;
    result_.n_max = n_max;
  }

  bool failed() const noexcept { return result_.failure.has_value(); }

  // Records one case; returns false once a failure has been recorded.
  bool expect(bool ok, std::size_t n, std::string input, std::string expected,
              std::string actual) {
    ++result_.cases;
    if (!ok && !failed()) {
      result_.failure = Counterexample{n, std::move(input), std::move(expected),
                                       std::move(actual)};
    }
    return !failed();
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

inline CheckResult run_roundtrip(const VerifyOptions& o) {
  CheckRunner run(Check::kRoundTrip, o.n_max);
  for (std::size_t n = 0; n <= o.n_max && !run.failed(); ++n) {
    for (Codec c : kAllCodecs) {
      const std::string tag = std::string(to_string(c)) + " ";
      for (const InversionTable& t : all_tables(n, o.cap)) {
        const InversionTable back = o.codecs.encode(c, o.codecs.decode(c, t));
        if (!run.expect(back == t, n, tag + show(t), show(t), show(back)))
          return run.take();
      }
      for (const Permutation& p : all_permutations(n, o.cap)) {
        const Permutation back = o.codecs.decode(c, o.codecs.encode(c, p));
        if (!run.expect(back == p, n, tag + show(p), show(p), show(back)))
          return run.take();
      }
    }
  }
  return run.take();
}

inline CheckResult run_table_stats(const VerifyOptions& o) {
  CheckRunner run(Check::kTableStats, o.n_max);
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    for (const InversionTable& t : all_tables(n, o.cap)) {
      const StatValue sum = table_sum(t);
      const StatValue ascents = table_ascent_sum(t);
      const StatValue inv_of_inv = inv_stat(o.codecs.decode_inv(t));
      const StatValue maj_of_maj = maj_stat(o.codecs.decode_maj(t));
      const Permutation r = o.codecs.decode_rightmost(t);
      const std::string in = show(t);
      if (!run.expect(inv_of_inv == sum, n, "inv(decode_inv " + in + ")",
                      std::to_string(sum), std::to_string(inv_of_inv)) ||
          !run.expect(maj_of_maj == sum, n, "maj(decode_maj " + in + ")",
                      std::to_string(sum), std::to_string(maj_of_maj)) ||
          !run.expect(inv_stat(r) == sum, n, "inv(decode_rightmost " + in + ")",
                      std::to_string(sum), std::to_string(inv_stat(r))) ||
          !run.expect(maj_stat(r) == ascents, n,
                      "maj(decode_rightmost " + in + ")",
                      std::to_string(ascents), std::to_string(maj_stat(r))))
        return run.take();
    }
  }
  return run.take();
}

inline CheckResult run_inverse(const VerifyOptions& o) {
  CheckRunner run(Check::kInverse, o.n_max);
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    for (const InversionTable& t : all_tables(n, o.cap)) {
      const Permutation expected = inverse(o.codecs.decode_inv(t));
      const Permutation actual = o.codecs.decode_rightmost(t);
      if (!run.expect(actual == expected, n, "decode_rightmost " + show(t),
                      show(expected), show(actual)))
        return run.take();
    }
  }
  return run.take();
}

// Words of length j = 0 .. n_max - 1 receive the new maximum j, so every
// word of length up to n_max is built.
inline CheckResult run_slots(const VerifyOptions& o) {
  CheckRunner run(Check::kSlots, o.n_max);
  for (std::size_t j = 0; j < o.n_max; ++j) {
    for (const Permutation& w : all_permutations(j, o.cap)) {
      const StatValue before = maj_stat(w);
      std::vector<bool> used(j + 1, false);
      for (StatValue delta = 0; delta <= j; ++delta) {
        const InsertionOutcome out = o.codecs.maj_slot(w, delta);
        const std::string in = show(w) + " delta " + std::to_string(delta);
        const bool in_range = out.position <= j;
        const StatValue realized =
            in_range ? maj_stat(insert_maximum(w, out.position)) - before : 0;
        const bool fresh = in_range && !used[out.position];
        if (in_range) used[out.position] = true;
        if (!run.expect(in_range && realized == delta && fresh, j + 1, in,
                        "maj delta " + std::to_string(delta) + " at a new slot",
                        "slot " + std::to_string(out.position) +
                            ", maj delta " + std::to_string(realized)))
          return run.take();
      }
    }
  }
  return run.take();
}

inline CheckResult run_equidistribution(const VerifyOptions& o) {
  CheckRunner run(Check::kEquidistribution, o.n_max);
  const EnumerationOptions eo{o.cap, o.workers};
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    const DistributionVector b = mahonian_numbers(n);
    const DistributionVector inv = stat_distribution(n, Statistic::kInv, eo);
    const DistributionVector maj = stat_distribution(n, Statistic::kMaj, eo);
    if (!run.expect(inv == b, n, "inv distribution", show(b), show(inv)) ||
        !run.expect(maj == b, n, "maj distribution", show(b), show(maj)))
      return run.take();
  }
  return run.take();
}

inline CheckResult run_symmetry(const VerifyOptions& o) {
  CheckRunner run(Check::kSymmetry, o.n_max);
  const EnumerationOptions eo{o.cap, o.workers};
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    const SymmetryReport rep = check_symmetry(joint_distribution(n, eo));
    if (rep.symmetric()) {
      run.expect(true, n, "", "", "");
      continue;
    }
    const SymmetryViolation& v = rep.violations.front();
    run.expect(false, n,
               "cell (" + std::to_string(v.k) + "," + std::to_string(v.k_prime) +
                   ")",
               std::to_string(v.transposed_count), std::to_string(v.count));
    return run.take();
  }
  return run.take();
}

inline CheckResult run_transport(const VerifyOptions& o) {
  CheckRunner run(Check::kTransport, o.n_max);
  const EnumerationOptions eo{o.cap, o.workers};
  for (std::size_t n = 0; n <= o.n_max; ++n) {
    const JointMatrix perms = joint_distribution(n, eo);
    const JointMatrix tables = table_stat_joint(n, o.cap);
    for (std::size_t k = 0; k < perms.dim(); ++k) {
      for (std::size_t kp = 0; kp < perms.dim(); ++kp) {
        if (!run.expect(perms.at(k, kp) == tables.at(k, kp), n,
                        "cell (" + std::to_string(k) + "," +
                            std::to_string(kp) + ")",
                        std::to_string(perms.at(k, kp)),
                        std::to_string(tables.at(k, kp))))
          return run.take();
      }
    }
  }
  return run.take();
}

}  // namespace detail

inline CheckResult run_check(Check check, const VerifyOptions& opts) {
  check_cap("verify", opts.n_max, opts.cap);
  switch (check) {
    case Check::kRoundTrip:
      return detail::run_roundtrip(opts);
    case Check::kTableStats:
      return detail::run_table_stats(opts);
    case Check::kInverse:
      return detail::run_inverse(opts);
    case Check::kSlots:
      return detail::run_slots(opts);
    case Check::kEquidistribution:
      return detail::run_equidistribution(opts);
    case Check::kSymmetry:
      return detail::run_symmetry(opts);
    case Check::kTransport:
      return detail::run_transport(opts);
  }
  throw std::invalid_argument("unknown check");
}

inline VerifyReport verify(const VerifyOptions& opts) {
  check_cap("verify", opts.n_max, opts.cap);
  VerifyReport report;
  for (Check c : opts.checks) report.results.push_back(run_check(c, opts));
  return report;
}

}  // namespace mahonian
