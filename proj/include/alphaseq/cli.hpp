#pragma once

// Command-line front end. run() takes the full argument vector (including the
// program name) and writes to the given streams, so it can be driven from
// tests as well as from main().
//
// Exit codes: 0 ok, 1 usage error, 2 domain error, 3 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphaseq/adjacency.hpp"
#include "alphaseq/elementary.hpp"
#include "alphaseq/enumeration.hpp"
#include "alphaseq/error.hpp"
#include "alphaseq/io.hpp"
#include "alphaseq/oracle.hpp"
#include "alphaseq/sequence.hpp"

namespace alphaseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitMismatch = 3;

struct Limits {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t oracle_cap = oracle::kDefaultOracleCap;

  /// Defaults overridden by ALPHASEQ_ENUM_CAP / ALPHASEQ_ORACLE_CAP.
  static Limits from_environment() {
    Limits limits;
    auto read = [](const char* name, std::uint64_t& slot) {
      if (const char* value = std::getenv(name); value != nullptr && *value != '\0') {
        try {
          slot = std::stoull(value);
        } catch (const std::exception&) {
          // unparsable values leave the default in place
        }
      }
    };
    read("ALPHASEQ_ENUM_CAP", limits.enumeration_cap);
    read("ALPHASEQ_ORACLE_CAP", limits.oracle_cap);
    return limits;
  }
};

inline std::string set_name(SetKind kind) {
  switch (kind) {
    case SetKind::A: return "an";
    case SetKind::L: return "ln";
    case SetKind::D: return "dn";
  }
  return "?";
}

inline SetKind parse_set(const std::string& name) {
  if (name == "an") return SetKind::A;
  if (name == "ln") return SetKind::L;
  return SetKind::D;
}

/// {"n":8,"set":"dn","count":20,"items":[[],[1],...]} with no whitespace.
inline std::string to_json_record(std::uint64_t n, SetKind kind,
                                  const std::vector<AlphaSequence>& items) {
  nlohmann::json record;
  record["n"] = n;
  record["set"] = set_name(kind);
  record["count"] = items.size();
  auto arrays = nlohmann::json::array();
  for (const auto& a : items) {
    arrays.push_back(std::vector<Element>(a.begin(), a.end()));
  }
  record["items"] = std::move(arrays);
  return record.dump();
}

/// Inverse of to_json_record's items field.
inline std::vector<AlphaSequence> items_from_json(const std::string& text) {
  const auto record = nlohmann::json::parse(text);
  std::vector<AlphaSequence> items;
  for (const auto& arr : record.at("items")) {
    items.emplace_back(arr.get<std::vector<Element>>());
  }
  return items;
}

namespace detail {

inline const char* ordering_word(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

inline void require_member_An(const AlphaSequence& a, std::uint64_t n) {
  if (!SetContext{SetKind::A, n}.contains(a)) {
    throw Error(ErrorCode::NotMember, "sequence is not in A_" + std::to_string(n));
  }
}

inline void print_lines(std::ostream& out, const std::vector<AlphaSequence>& items) {
  for (const auto& a : items) {
    out << to_text(a) << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const Limits& limits = Limits::from_environment()) {
  CLI::App app{"Order and enumerate lexical and nonlexical alpha-sequences", "alphaseq"};
  app.require_subcommand(1);

  const std::vector<std::string> set_names{"an", "ln", "dn"};
  std::string set;
  std::uint64_t n = 0;
  std::string seq_a;
  std::string seq_b;

  auto* list = app.add_subcommand("list", "Stream an ordered set");
  bool descending = false;
  std::optional<std::size_t> limit;
  std::string format = "text";
  list->add_option("--set", set, "an | ln | dn")->required()->check(CLI::IsMember(set_names));
  list->add_option("n", n, "Set index")->required();
  list->add_flag("--desc", descending, "Descending order");
  list->add_option("--limit", limit, "Emit only the first K elements");
  list->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* succ = app.add_subcommand("succ", "Adjacent successor");
  succ->add_option("--set", set, "an | ln | dn")->required()->check(CLI::IsMember(set_names));
  succ->add_option("n", n)->required();
  succ->add_option("seq", seq_a)->required();

  auto* pred = app.add_subcommand("pred", "Adjacent predecessor");
  pred->add_option("--set", set, "an | ln")->required()->check(CLI::IsMember({"an", "ln"}));
  pred->add_option("n", n)->required();
  pred->add_option("seq", seq_a)->required();

  auto* lexical = app.add_subcommand("lexical", "Is the sequence lexical?");
  lexical->add_option("seq", seq_a)->required();

  auto* cmp = app.add_subcommand("compare", "Compare two sequences");
  cmp->add_option("a", seq_a)->required();
  cmp->add_option("b", seq_b)->required();

  auto* meet_cmd = app.add_subcommand("meet", "Meet of two sequences");
  meet_cmd->add_option("a", seq_a)->required();
  meet_cmd->add_option("b", seq_b)->required();

  auto* star_cmd = app.add_subcommand("star", "Star product");
  star_cmd->add_option("a", seq_a)->required();
  star_cmd->add_option("b", seq_b)->required();

  auto* harmonic_cmd = app.add_subcommand("harmonic", "j-th harmonic");
  std::size_t j = 0;
  harmonic_cmd->add_option("j", j)->required();
  harmonic_cmd->add_option("seq", seq_a)->required();

  auto* least = app.add_subcommand("least", "Least element of L_n");
  least->add_option("n", n)->required();

  auto* verify = app.add_subcommand("verify", "Check enumeration against the brute-force oracle");
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  verify->add_option("n_min", n_min)->required();
  verify->add_option("n_max", n_max)->required();

  auto* bench = app.add_subcommand("bench", "Time L_n enumeration against the oracle");
  std::size_t repeat = 1;
  bench->add_option("n", n)->required();
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*list) {
      const SetKind kind = parse_set(set);
      const Direction dir = descending ? Direction::Descending : Direction::Ascending;
      std::vector<AlphaSequence> items;
      switch (kind) {
        case SetKind::A:
          items = collect(enumerate_An(n, {}, dir, limits.enumeration_cap), limit);
          break;
        case SetKind::L:
          items = collect(enumerate_Ln(n, dir, limits.enumeration_cap), limit);
          break;
        case SetKind::D:
          if (descending) {
            // D_n has no descending walk; reverse the full ascending stream.
            items = collect(enumerate_Dn(n, limits.enumeration_cap));
            std::ranges::reverse(items);
            if (limit && items.size() > *limit) {
              items.resize(*limit);
            }
          } else {
            items = collect(enumerate_Dn(n, limits.enumeration_cap), limit);
          }
          break;
      }
      if (format == "json") {
        out << to_json_record(n, kind, items) << '\n';
      } else {
        detail::print_lines(out, items);
      }
    } else if (*succ || *pred) {
      const bool forward = static_cast<bool>(*succ);
      const AlphaSequence a = parse_sequence(seq_a);
      const SetKind kind = parse_set(set);
      if (kind == SetKind::A) {
        detail::require_member_An(a, n);
        out << to_text(forward ? successor_step_An(a) : predecessor_step_An(a)) << '\n';
      } else if (kind == SetKind::L) {
        out << to_text(forward ? successor_Ln(a, n) : predecessor_Ln(a, n)) << '\n';
      } else {
        detail::print_lines(out, successor_Dn(a, n));
      }
    } else if (*lexical) {
      out << (is_lexical(parse_sequence(seq_a)) ? "true" : "false") << '\n';
    } else if (*cmp) {
      out << detail::ordering_word(compare(parse_sequence(seq_a), parse_sequence(seq_b))) << '\n';
    } else if (*meet_cmd) {
      out << to_text(meet(parse_sequence(seq_a), parse_sequence(seq_b))) << '\n';
    } else if (*star_cmd) {
      out << to_text(star(parse_sequence(seq_a), parse_sequence(seq_b))) << '\n';
    } else if (*harmonic_cmd) {
      out << to_text(harmonic(j, parse_sequence(seq_a))) << '\n';
    } else if (*least) {
      out << to_text(least_element(n)) << '\n';
    } else if (*verify) {
      const auto reports = oracle::verify_range(n_min, n_max, limits.oracle_cap);
      bool ok = true;
      for (const auto& report : reports) {
        out << set_name(report.set_kind) << ' ' << report.n << ": ";
        if (report.passed()) {
          out << "ok (" << report.expected.size() << ")\n";
          continue;
        }
        ok = false;
        const auto& first = report.mismatches.front();
        out << "MISMATCH at " << first.position << ": expected "
            << (first.expected ? to_text(*first.expected) : "<none>") << ", got "
            << (first.actual ? to_text(*first.actual) : "<none>") << '\n';
      }
      if (!ok) {
        err << "error: verification mismatch\n";
        return kExitMismatch;
      }
    } else if (*bench) {
      require_within_cap(n, limits.enumeration_cap);
      oracle::require_oracle_cap(n, limits.oracle_cap);
      using clock = std::chrono::steady_clock;
      std::size_t adjacency_count = 0;
      std::size_t oracle_count = 0;
      const auto t0 = clock::now();
      for (std::size_t rep = 0; rep < repeat; ++rep) {
        adjacency_count = 0;
        for (const auto& a : enumerate_Ln(n, Direction::Ascending, limits.enumeration_cap)) {
          (void)a;
          ++adjacency_count;
        }
      }
      const auto t1 = clock::now();
      for (std::size_t rep = 0; rep < repeat; ++rep) {
        oracle_count = oracle::oracle_Ln(n, limits.oracle_cap).size();
      }
      const auto t2 = clock::now();
      const double adj_s = std::chrono::duration<double>(t1 - t0).count();
      const double ora_s = std::chrono::duration<double>(t2 - t1).count();
      const double total = static_cast<double>(adjacency_count * repeat);
      out << "n=" << n << " repeat=" << repeat << '\n';
      out << "adjacency: count=" << adjacency_count << " seconds=" << adj_s
          << " elements/s=" << (adj_s > 0 ? total / adj_s : 0.0) << '\n';
      out << "oracle:    count=" << oracle_count << " seconds=" << ora_s
          << " elements/s=" << (ora_s > 0 ? total / ora_s : 0.0) << '\n';
      if (adjacency_count != oracle_count) {
        err << "error: counts differ\n";
        return kExitMismatch;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitDomain;
  }
  return kExitOk;
}

}  // namespace alphaseq::cli
