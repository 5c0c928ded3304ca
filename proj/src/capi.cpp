#include "unbruijn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "unbruijn/oracle.hpp"
#include "unbruijn/sequence.hpp"

struct unb_graph {
  unbruijn::UGraph g;
};

namespace {

thread_local std::string t_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    t_error.clear();
    return UNB_OK;
  } catch (const unbruijn::limit_error& e) {
    t_error = e.what();
    return UNB_ERR_LIMIT;
  } catch (const std::overflow_error& e) {
    t_error = e.what();
    return UNB_ERR_OVERFLOW;
  } catch (const std::invalid_argument& e) {
    t_error = e.what();
    return UNB_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    t_error = e.what();
    return UNB_ERR_INVALID;
  } catch (const std::exception& e) {
    t_error = e.what();
    return UNB_ERR_INTERNAL;
  }
}

uint64_t cap_or_default(uint64_t cap) { return cap ? cap : unbruijn::kDefaultGraphCap; }

int require(bool ok, const char* what) {
  if (!ok) {
    t_error = what;
    return UNB_ERR_INVALID;
  }
  return UNB_OK;
}

}  // namespace

extern "C" {

const char* unb_version(void) { return "unbruijn 1.0.0"; }

const char* unb_last_error(void) { return t_error.empty() ? nullptr : t_error.c_str(); }

void unb_string_free(char* s) { std::free(s); }

int unb_optimal_length(int k, int n, uint64_t* out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] { *out = unbruijn::optimal_length(k, n); });
}

int unb_ov_count(int k, int n, uint64_t* out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] { *out = unbruijn::ov_formula(k, n); });
}

int unb_optimal_exists(int k, int n, int* out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] { *out = unbruijn::optimal_exists(k, n) ? 1 : 0; });
}

int unb_bound_extra(int k, int n, uint64_t* out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] {
    uint64_t ov = unbruijn::ov_formula(k, n);
    *out = ov <= 2 ? 0
                   : unbruijn::mul_checked(static_cast<uint64_t>(n - 1), ov / 2 - 1);
  });
}

int unb_upper_bound_length(int k, int n, uint64_t* out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] { *out = unbruijn::upper_bound_length(k, n); });
}

int unb_ratio(int k, int n, uint64_t* num, uint64_t* den) {
  if (int e = require(num != nullptr && den != nullptr, "null output pointer")) return e;
  return guarded([&] {
    unbruijn::Ratio r = unbruijn::ratio(k, n);
    *num = r.num;
    *den = r.den;
  });
}

int unb_generate(int k, int n, uint64_t size_cap, char** json_out) {
  if (int e = require(json_out != nullptr, "null output pointer")) return e;
  return guarded([&] {
    *json_out = dup_string(unbruijn::generate(k, n, cap_or_default(size_cap)).to_json());
  });
}

int unb_generate_word(int k, int n, uint64_t size_cap, char** word_out) {
  if (int e = require(word_out != nullptr, "null output pointer")) return e;
  return guarded([&] {
    *word_out = dup_string(unbruijn::generate(k, n, cap_or_default(size_cap)).sequence.str());
  });
}

int unb_verify(const char* word, int k, int n, uint64_t size_cap, char** json_out) {
  if (int e = require(word != nullptr && json_out != nullptr, "null argument")) return e;
  return guarded([&] {
    unbruijn::Word w = unbruijn::Word::parse(k, word);
    *json_out = dup_string(unbruijn::verify(w, k, n, cap_or_default(size_cap)).to_json());
  });
}

int unb_verify_flags(const char* word, int k, int n, uint64_t size_cap, int* is_cover,
                     int* is_optimal) {
  if (int e = require(word != nullptr && is_cover != nullptr && is_optimal != nullptr,
                      "null argument"))
    return e;
  return guarded([&] {
    unbruijn::Word w = unbruijn::Word::parse(k, word);
    unbruijn::CoverageReport r = unbruijn::verify(w, k, n, cap_or_default(size_cap));
    *is_cover = r.cover ? 1 : 0;
    *is_optimal = r.optimal ? 1 : 0;
  });
}

int unb_search_min_cover(int k, int n, uint64_t node_budget, char** json_out) {
  if (int e = require(json_out != nullptr, "null output pointer")) return e;
  return guarded([&] {
    unbruijn::SearchLimits lim;
    if (node_budget) lim.node_budget = node_budget;
    *json_out = dup_string(unbruijn::min_cover_length(k, n, lim).to_json());
  });
}

int unb_graph_build(int k, int n, uint64_t size_cap, unb_graph** out) {
  if (int e = require(out != nullptr, "null output pointer")) return e;
  return guarded([&] {
    *out = new unb_graph{unbruijn::UGraph::build(k, n, cap_or_default(size_cap))};
  });
}

void unb_graph_free(unb_graph* g) { delete g; }

int unb_graph_counts(const unb_graph* g, uint64_t* vertices, uint64_t* edges,
                     uint64_t* odd_vertices) {
  if (int e = require(g != nullptr, "null graph handle")) return e;
  return guarded([&] {
    if (vertices) *vertices = g->g.vertex_count();
    if (edges) *edges = g->g.edge_count();
    if (odd_vertices) *odd_vertices = g->g.odd_vertices().size();
  });
}

int unb_graph_dot(const unb_graph* g, char** dot_out) {
  if (int e = require(g != nullptr && dot_out != nullptr, "null argument")) return e;
  return guarded([&] { *dot_out = dup_string(g->g.to_dot()); });
}

int unb_graph_eulerization(const unb_graph* g, char** json_out) {
  if (int e = require(g != nullptr && json_out != nullptr, "null argument")) return e;
  return guarded([&] { *json_out = dup_string(unbruijn::eulerize(g->g).to_json(g->g)); });
}

}  // extern "C"
