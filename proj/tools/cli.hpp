#pragma once

// Command-line front end. `run_cli` takes the arguments (without the program
// name) and writes to the given streams so it can be driven from tests.
//
// Exit codes: 0 success / all checks pass, 1 invariant violation, 2 usage or
// input error.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahonian/distributions.hpp"
#include "mahonian/inversion_table.hpp"
#include "mahonian/permutation.hpp"
#include "mahonian/text.hpp"
#include "mahonian/verify.hpp"

namespace mahonian::cli {

enum class OutputFormat { kPlain, kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline Json to_json(const Permutation& p) {
  return Json(std::vector<Value>(p.begin(), p.end()));
}
inline Json to_json(const InversionTable& t) {
  return Json(std::vector<Value>(t.begin(), t.end()));
}

inline void emit_stats(OutputFormat fmt, const Permutation& p,
                       std::ostream& out) {
  const auto descents = descent_positions(p);
  const std::string word = format_permutation(p);
  switch (fmt) {
    case OutputFormat::kPlain:
      out << "word=" << word << "\nn=" << p.size() << "\ninv=" << inv_stat(p)
          << "\nmaj=" << maj_stat(p)
          << "\ndescents=" << mahonian::detail::join(descents) << "\n";
      break;
    case OutputFormat::kJson: {
      Json j;
      j["n"] = p.size();
      j["stat"] = "stats";
      j["word"] = word;
      j["data"] = {{"inv", inv_stat(p)},
                   {"maj", maj_stat(p)},
                   {"descents", descents}};
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "word,n,inv,maj,descents\n"
          << csv_field(word) << "," << p.size() << "," << inv_stat(p) << ","
          << maj_stat(p) << "," << mahonian::detail::join(descents, ";")
          << "\n";
      break;
  }
}

inline void emit_codec(OutputFormat fmt, Codec codec, bool decoding,
                       const InversionTable& t, const Permutation& p,
                       std::ostream& out) {
  const std::string table_text = format_table(t);
  const std::string word_text = format_permutation(p);
  switch (fmt) {
    case OutputFormat::kPlain:
      out << (decoding ? word_text : table_text) << "\n";
      break;
    case OutputFormat::kJson: {
      Json j;
      j["n"] = t.size();
      j["codec"] = std::string(to_string(codec));
      if (decoding) {
        j["table"] = to_json(t);
        j["word"] = word_text;
        j["data"] = to_json(p);
      } else {
        j["word"] = word_text;
        j["permutation"] = to_json(p);
        j["data"] = to_json(t);
      }
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      if (decoding) {
        out << "codec,table,permutation\n"
            << to_string(codec) << "," << csv_field(table_text) << ","
            << csv_field(word_text) << "\n";
      } else {
        out << "codec,permutation,table\n"
            << to_string(codec) << "," << csv_field(word_text) << ","
            << csv_field(table_text) << "\n";
      }
      break;
  }
}

inline void emit_distribution(OutputFormat fmt, const std::string& stat,
                              const DistributionVector& d, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::kPlain:
      out << "k count\n";
      for (std::size_t k = 0; k < d.counts.size(); ++k)
        out << k << " " << d.counts[k] << "\n";
      break;
    case OutputFormat::kJson: {
      Json j;
      j["n"] = d.n;
      j["stat"] = stat;
      j["data"] = Json::array();
      for (std::size_t k = 0; k < d.counts.size(); ++k)
        j["data"].push_back({{"k", k}, {"count", d.counts[k]}});
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "k,count\n";
      for (std::size_t k = 0; k < d.counts.size(); ++k)
        out << k << "," << d.counts[k] << "\n";
      break;
  }
}

inline void emit_joint(OutputFormat fmt, const JointMatrix& m,
                       std::ostream& out) {
  const bool symmetric = check_symmetry(m).symmetric();
  switch (fmt) {
    case OutputFormat::kPlain:
      out << "# rows: inv k, columns: maj k'\n";
      for (std::size_t k = 0; k < m.dim(); ++k) {
        for (std::size_t kp = 0; kp < m.dim(); ++kp)
          out << (kp ? " " : "") << m.at(k, kp);
        out << "\n";
      }
      out << "symmetric=" << (symmetric ? "yes" : "no") << "\n";
      break;
    case OutputFormat::kJson: {
      Json j;
      j["n"] = m.n();
      j["stat"] = "joint";
      j["symmetric"] = symmetric;
      j["data"] = Json::array();
      for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t kp = 0; kp < m.dim(); ++kp)
          j["data"].push_back(
              {{"k", k}, {"k_prime", kp}, {"count", m.at(k, kp)}});
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "k,k_prime,count\n";
      for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t kp = 0; kp < m.dim(); ++kp)
          out << k << "," << kp << "," << m.at(k, kp) << "\n";
      break;
  }
}

inline void emit_verify(OutputFormat fmt, std::size_t n_max,
                        const VerifyReport& report, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::kPlain:
      for (const CheckResult& r : report.results) {
        out << (r.passed() ? "PASS " : "FAIL ") << to_string(r.check)
            << " n<=" << r.n_max << " cases=" << r.cases << "\n";
        if (r.failure) {
          out << "  counterexample: n=" << r.failure->n
              << " input=" << r.failure->input
              << " expected=" << r.failure->expected
              << " actual=" << r.failure->actual << "\n";
        }
      }
      out << "note: 0-length cases included\n";
      out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
      break;
    case OutputFormat::kJson: {
      Json j;
      j["n"] = n_max;
      j["stat"] = "verify";
      j["passed"] = report.passed();
      j["note"] = "0-length cases included";
      j["data"] = Json::array();
      for (const CheckResult& r : report.results) {
        Json row{{"check", std::string(to_string(r.check))},
                 {"cases", r.cases},
                 {"passed", r.passed()}};
        if (r.failure) {
          row["counterexample"] = {{"n", r.failure->n},
                                   {"input", r.failure->input},
                                   {"expected", r.failure->expected},
                                   {"actual", r.failure->actual}};
        } else {
          row["counterexample"] = nullptr;
        }
        j["data"].push_back(std::move(row));
      }
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "check,n_max,cases,status,n,input,expected,actual\n";
      for (const CheckResult& r : report.results) {
        out << to_string(r.check) << "," << r.n_max << "," << r.cases << ","
            << (r.passed() ? "pass" : "fail");
        if (r.failure) {
          out << "," << r.failure->n << "," << csv_field(r.failure->input)
              << "," << csv_field(r.failure->expected) << ","
              << csv_field(r.failure->actual);
        } else {
          out << ",,,,";
        }
        out << "\n";
      }
      break;
  }
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Permutation statistics: inversion tables, major index and "
               "Mahonian numbers",
               "mahonian"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  std::size_t max_enum = kDefaultEnumerationCap;
  app.add_option("--format", format_name, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--max-enum", max_enum,
                 "Cap on n for brute-force enumeration")
      ->check(CLI::Range(std::size_t{0}, kHardCap));

  const std::vector<std::string> codec_names{"inv", "maj", "rightmost"};

  auto* stats = app.add_subcommand("stats", "inv, maj and descents of a word");
  std::string stats_word;
  stats->add_option("word", stats_word, "Permutation, e.g. 241350 or 2,4,1,3,5,0")
      ->required();

  auto* decode = app.add_subcommand("decode", "Inversion table to permutation");
  std::string decode_codec;
  std::string decode_table;
  decode->add_option("--codec", decode_codec, "inv | maj | rightmost")
      ->required()
      ->check(CLI::IsMember(codec_names));
  decode->add_option("table", decode_table, "Table, e.g. 0,1,0,3,3")->required();

  auto* encode = app.add_subcommand("encode", "Permutation to inversion table");
  std::string encode_codec;
  std::string encode_word;
  encode->add_option("--codec", encode_codec, "inv | maj | rightmost")
      ->required()
      ->check(CLI::IsMember(codec_names));
  encode->add_option("word", encode_word, "Permutation")->required();

  auto* dist = app.add_subcommand("dist", "Distribution of a statistic");
  std::size_t dist_n = 0;
  std::string dist_stat = "mahonian";
  std::size_t dist_workers = 1;
  dist->add_option("--n", dist_n, "Word length")->required();
  dist->add_option("--stat", dist_stat, "inv | maj | mahonian")
      ->check(CLI::IsMember({"inv", "maj", "mahonian"}));
  dist->add_option("--workers", dist_workers, "Enumeration threads")
      ->check(CLI::PositiveNumber);

  auto* joint = app.add_subcommand("joint", "Joint (inv, maj) distribution");
  std::size_t joint_n = 0;
  std::size_t joint_workers = 1;
  joint->add_option("--n", joint_n, "Word length")->required();
  joint->add_option("--workers", joint_workers, "Enumeration threads")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd =
      app.add_subcommand("verify", "Exhaustively check every identity");
  std::size_t n_max = 0;
  std::vector<std::string> check_names;
  std::size_t verify_workers = 1;
  bool inject_fault = false;
  std::vector<std::string> known_checks;
  for (Check c : kAllChecks) known_checks.emplace_back(to_string(c));
  verify_cmd->add_option("--n-max", n_max, "Largest n checked")->required();
  verify_cmd->add_option("--check", check_names, "Checks to run (default all)")
      ->check(CLI::IsMember(known_checks));
  verify_cmd->add_option("--workers", verify_workers, "Enumeration threads")
      ->check(CLI::PositiveNumber);
  // Negative control: decode_maj mishandles one delta.
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = format_name == "json"  ? OutputFormat::kJson
                              : format_name == "csv" ? OutputFormat::kCsv
                                                     : OutputFormat::kPlain;
  try {
    if (*stats) {
      detail::emit_stats(format, parse_permutation(stats_word), out);
    } else if (*decode) {
      const Codec codec = *parse_codec(decode_codec);
      const InversionTable t = parse_table(decode_table);
      detail::emit_codec(format, codec, true, t, mahonian::decode(codec, t),
                         out);
    } else if (*encode) {
      const Codec codec = *parse_codec(encode_codec);
      const Permutation p = parse_permutation(encode_word);
      detail::emit_codec(format, codec, false, mahonian::encode(codec, p), p,
                         out);
    } else if (*dist) {
      if (dist_stat == "mahonian") {
        detail::emit_distribution(format, dist_stat, mahonian_numbers(dist_n),
                                  out);
      } else {
        const Statistic s =
            dist_stat == "inv" ? Statistic::kInv : Statistic::kMaj;
        try {
          detail::emit_distribution(
              format, dist_stat,
              stat_distribution(dist_n, s, {max_enum, dist_workers}), out);
        } catch (const CapExceeded& e) {
          err << "error: " << e.what()
              << "; use --stat mahonian for the enumeration-free DP (n <= "
              << kDefaultDpCap << ")\n";
          return kExitUsage;
        }
      }
    } else if (*joint) {
      detail::emit_joint(format,
                         joint_distribution(joint_n, {max_enum, joint_workers}),
                         out);
    } else if (*verify_cmd) {
      VerifyOptions opts;
      opts.n_max = n_max;
      opts.cap = max_enum;
      opts.workers = verify_workers;
      if (!check_names.empty()) {
        opts.checks.clear();
        for (const auto& name : check_names)
          opts.checks.push_back(*parse_check(name));
      }
      if (inject_fault) opts.codecs = codecs_with_maj_fault();
      const VerifyReport report = verify(opts);
      detail::emit_verify(format, n_max, report, out);
      if (!report.passed()) {
        const CheckResult* f = report.first_failure();
        err << "error: check " << to_string(f->check)
            << " failed at n=" << f->failure->n << " on "
            << f->failure->input << ": expected " << f->failure->expected
            << ", got " << f->failure->actual << "\n";
        return kExitViolation;
      }
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace mahonian::cli
