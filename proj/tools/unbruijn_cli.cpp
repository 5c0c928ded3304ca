// Command-line front end for the unbruijn shared library.  All core work
// goes through the C API in unbruijn.h; this file only parses arguments and
// formats output.  Output is deterministic: identical invocations produce
// identical bytes.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unbruijn.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotCover = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitLimit = 3;

int exit_code_for(int status) {
  switch (status) {
    case UNB_OK: return kExitOk;
    case UNB_ERR_LIMIT: return kExitLimit;
    default: return kExitBadInput;
  }
}

int report_error(int status) {
  const char* msg = unb_last_error();
  std::cerr << "error: " << (msg ? msg : "unknown failure") << "\n";
  return exit_code_for(status);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  unb_string_free(s);
  return out;
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string decimal(std::uint64_t num, std::uint64_t den) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

int cmd_generate(int k, int n, std::uint64_t cap, bool as_json) {
  char* out = nullptr;
  if (int st = unb_generate(k, n, cap, &out)) return report_error(st);
  std::string text = take_string(out);
  if (as_json) {
    std::cout << text << "\n";
    return kExitOk;
  }
  json j = json::parse(text);
  std::cout << j["sequence"].get<std::string>() << "\n";
  if (j["optimal"].get<bool>()) {
    std::cout << "optimal (length " << j["length"] << " = l(" << k << "," << n << "))\n";
  } else {
    std::cout << "suboptimal (length " << j["length"] << ", optimal " << j["optimal_length"]
              << ", duplicated classes " << j["duplicates"] << ", bound extra "
              << j["eulerization"]["bound"] << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& word, int k, int n, std::uint64_t cap, bool as_json) {
  char* out = nullptr;
  if (int st = unb_verify(word.c_str(), k, n, cap, &out)) return report_error(st);
  std::string text = take_string(out);
  json j = json::parse(text);
  bool cover = j["cover"].get<bool>();
  if (as_json) {
    std::cout << text << "\n";
    return cover ? kExitOk : kExitNotCover;
  }
  std::cout << "cover: " << (cover ? "yes" : "no") << "\n";
  if (cover) {
    bool optimal = j["optimal"].get<bool>();
    std::uint64_t l = 0;
    unb_optimal_length(k, n, &l);
    std::cout << "optimal: " << (optimal ? "yes" : "no") << " (length " << j["length"]
              << ", l(" << k << "," << n << ") = " << l << ")\n";
    if (!j["duplicated"].empty()) {
      std::cout << "duplicated:";
      for (const auto& c : j["duplicated"]) std::cout << " " << c.get<std::string>();
      std::cout << "\n";
    }
  } else {
    std::cout << "missing " << j["missing"].size() << " classes:";
    std::size_t shown = 0;
    for (const auto& c : j["missing"]) {
      if (shown++ == 8) {
        std::cout << " ...";
        break;
      }
      std::cout << " " << c.get<std::string>();
    }
    std::cout << "\n";
  }
  return cover ? kExitOk : kExitNotCover;
}

int cmd_stats(int kmax, int nmax, bool as_csv, bool as_json) {
  struct Row {
    int k, n;
    std::uint64_t l, ov, extra, num, den;
    int opt;
  };
  std::vector<Row> rows;
  for (int k = 2; k <= kmax; ++k)
    for (int n = 2; n <= nmax; ++n) {
      Row r{k, n, 0, 0, 0, 0, 1, 0};
      int st = unb_optimal_length(k, n, &r.l);
      if (!st) st = unb_ov_count(k, n, &r.ov);
      if (!st) st = unb_bound_extra(k, n, &r.extra);
      if (!st) st = unb_ratio(k, n, &r.num, &r.den);
      if (!st) st = unb_optimal_exists(k, n, &r.opt);
      if (st) return report_error(st);
      rows.push_back(r);
    }

  if (as_json) {
    json j;
    j["kmax"] = kmax;
    j["nmax"] = nmax;
    j["rows"] = json::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"k", r.k},
                           {"n", r.n},
                           {"l", r.l},
                           {"ov", r.ov},
                           {"bound_extra", r.extra},
                           {"r", {{"num", r.num}, {"den", r.den}}},
                           {"r_decimal", static_cast<double>(r.num) / static_cast<double>(r.den)},
                           {"optimal", r.opt != 0}});
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  if (as_csv) {
    std::cout << "k,n,l,ov,bound_extra,r,optimal\n";
    for (const Row& r : rows)
      std::cout << r.k << "," << r.n << "," << r.l << "," << r.ov << "," << r.extra << ","
                << decimal(r.num, r.den) << "," << (r.opt ? "true" : "false") << "\n";
    return kExitOk;
  }
  std::printf("%4s %4s %12s %10s %12s %16s %8s\n", "k", "n", "l", "ov", "bound_extra", "r",
              "optimal");
  for (const Row& r : rows)
    std::printf("%4d %4d %12" PRIu64 " %10" PRIu64 " %12" PRIu64 " %8s %7s %8s\n", r.k, r.n,
                r.l, r.ov, r.extra, fraction(r.num, r.den).c_str(),
                decimal(r.num, r.den).c_str(), r.opt ? "yes" : "no");
  return kExitOk;
}

int cmd_export_dot(int k, int n, std::uint64_t cap, const std::string& path) {
  unb_graph* g = nullptr;
  if (int st = unb_graph_build(k, n, cap, &g)) return report_error(st);
  char* dot = nullptr;
  int st = unb_graph_dot(g, &dot);
  std::uint64_t vertices = 0, edges = 0, odd = 0;
  if (!st) st = unb_graph_counts(g, &vertices, &edges, &odd);
  unb_graph_free(g);
  if (st) return report_error(st);
  std::string text = take_string(dot);
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitBadInput;
    }
    out << text;
    std::cout << "wrote " << path << " (" << vertices << " vertices, " << edges
              << " edge classes, " << odd << " odd)\n";
  }
  return kExitOk;
}

int cmd_search(int k, int n, std::uint64_t budget, bool as_json) {
  char* out = nullptr;
  if (int st = unb_search_min_cover(k, n, budget, &out)) return report_error(st);
  std::string text = take_string(out);
  json j = json::parse(text);
  bool found = j["found"].get<bool>();
  if (as_json) {
    std::cout << text << "\n";
    return found ? kExitOk : kExitLimit;
  }
  if (found) {
    std::cout << "min length " << j["min_length"] << "\n";
    std::cout << "witness " << j["witness"].get<std::string>() << "\n";
    std::cout << (j["exhaustive"].get<bool>() ? "exhaustive" : "not exhaustive") << " ("
              << j["nodes"] << " nodes)\n";
    return kExitOk;
  }
  std::uint64_t l = 0;
  unb_optimal_length(k, n, &l);
  std::cout << "inconclusive: budget exhausted at length " << j["floor"] << " after "
            << j["nodes"] << " nodes (analytic floor l(" << k << "," << n << ") = " << l
            << ")\n";
  return kExitLimit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unoriented de Bruijn sequences: generation, verification, graph export,\n"
               "statistics, and exhaustive minimal-cover search.  Deterministic output:\n"
               "identical invocations produce identical bytes (no seeds involved)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", unb_version());

  int k = 0, n = 0;
  std::uint64_t cap = 0, budget = 0;
  bool as_json = false, as_csv = false;
  std::string word, path;
  int kmax = 10, nmax = 10;

  auto add_kn = [&](CLI::App* cmd) {
    cmd->add_option("-k", k, "alphabet size (>= 1)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("-n", n, "subword length (>= 1)")->required()->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("generate", "construct an unoriented de Bruijn sequence");
  add_kn(gen);
  gen->add_flag("--json", as_json, "emit the JSON report");
  gen->add_option("--cap", cap, "size cap on k^n for graph construction (default 2^26)");

  CLI::App* ver = app.add_subcommand("verify", "check a word against the reflected-pair coverage criterion");
  ver->add_option("word", word, "word over the digits 0-9a-z")->required();
  add_kn(ver);
  ver->add_flag("--json", as_json, "emit the JSON coverage report");
  ver->add_option("--cap", cap, "size cap on k^n (default 2^26)");

  CLI::App* st = app.add_subcommand("stats", "table of l, ov, duplicate bound, ratio r, and optimality");
  st->add_option("--kmax", kmax, "largest k (default 10)")->check(CLI::Range(2, 36));
  st->add_option("--nmax", nmax, "largest n (default 10)")->check(CLI::Range(2, 64));
  st->add_flag("--csv", as_csv, "CSV with columns k,n,l,ov,bound_extra,r,optimal");
  st->add_flag("--json", as_json, "JSON rows with exact rationals");

  CLI::App* dot = app.add_subcommand("export-dot", "write uBg(k,n) as Graphviz DOT");
  add_kn(dot);
  dot->add_option("output", path, "output path, or - for stdout")->required();
  dot->add_option("--cap", cap, "size cap on k^n (default 2^26)");

  CLI::App* se = app.add_subcommand("search", "exhaustive search for the minimal cover length");
  add_kn(se);
  se->add_option("--budget", budget, "node budget per length (default 2^27)");
  se->add_flag("--json", as_json, "emit the JSON search result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (gen->parsed()) return cmd_generate(k, n, cap, as_json);
  if (ver->parsed()) return cmd_verify(word, k, n, cap, as_json);
  if (st->parsed()) return cmd_stats(kmax, nmax, as_csv, as_json);
  if (dot->parsed()) return cmd_export_dot(k, n, cap, path);
  if (se->parsed()) return cmd_search(k, n, budget, as_json);
  return kExitBadInput;
}
