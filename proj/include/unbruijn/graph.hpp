#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "unbruijn/words.hpp"

namespace unbruijn {

/// Incidence type of an edge end at a vertex.  For a vertex class [v] with
/// canonical rep r and an edge class [e] with canonical rep e*: the incidence
/// is TypeI when r is the prefix of e* or reflect(r) its suffix, TypeII when
/// r is the suffix or reflect(r) the prefix.  At palindromic vertices every
/// incidence is Both; a concrete I/II split is chosen later by the balancing
/// step.
enum class IncidenceType : std::uint8_t { TypeI, TypeII, Both };

const char* to_string(IncidenceType t);

/// Directed de Bruijn graph Bg(k,n).  Vertices are the k^(n-1) words of
/// length n-1, edges the k^n words of length n, each running
/// prefix(e) -> suffix(e).  Stored implicitly: vertex v's out-edges are the
/// codes v*k+d.
class DGraph {
 public:
  static DGraph build(int k, int n, std::uint64_t cap = kDefaultGraphCap);

  int k() const { return k_; }
  int n() const { return n_; }
  std::uint64_t vertex_count() const { return vcount_; }
  std::uint64_t edge_count() const { return ecount_; }

  std::uint64_t edge_source(std::uint64_t e) const { return e / static_cast<std::uint64_t>(k_); }
  std::uint64_t edge_target(std::uint64_t e) const { return e % vcount_; }
  std::uint64_t out_edge(std::uint64_t v, int digit) const {
    return v * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(digit);
  }

  Word vertex_word(std::uint64_t v) const { return Word::from_code(k_, n_ - 1, v); }
  Word edge_word(std::uint64_t e) const { return Word::from_code(k_, n_, e); }

 private:
  DGraph(int k, int n, std::uint64_t vcount, std::uint64_t ecount)
      : k_(k), n_(n), vcount_(vcount), ecount_(ecount) {}

  int k_, n_;
  std::uint64_t vcount_, ecount_;
};

/// Unoriented de Bruijn graph uBg(k,n): vertices are the reflected-pair
/// classes of length-(n-1) words, edges the classes of length-n words.  The
/// edge [e] joins [prefix(e)] and [suffix(e)]; when these coincide it is a
/// loop and contributes two incidences.  Vertices and edges are indexed by
/// ascending canonical rep code, which fixes the iteration order.
class UGraph {
 public:
  struct Edge {
    std::uint64_t rep;                    // canonical class word, length n
    std::array<std::uint32_t, 2> vertex;  // end 0 at [prefix(rep)], end 1 at [suffix(rep)]
    std::array<IncidenceType, 2> type;
    bool loop() const { return vertex[0] == vertex[1]; }
  };

  struct Incidence {
    std::uint32_t edge;
    IncidenceType type;
  };

  static UGraph build(int k, int n, std::uint64_t cap = kDefaultGraphCap);

  int k() const { return k_; }
  int n() const { return n_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(vreps_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

  std::uint64_t vertex_rep(std::uint32_t v) const { return vreps_[v]; }
  Word vertex_word(std::uint32_t v) const { return Word::from_code(k_, n_ - 1, vreps_[v]); }
  PairClass vertex_class(std::uint32_t v) const {
    return PairClass{vertex_word(v), vertex_palindrome(v)};
  }
  bool vertex_palindrome(std::uint32_t v) const { return vpal_[v]; }
  std::string vertex_label(std::uint32_t v) const { return "[" + code_str(vreps_[v], k_, n_ - 1) + "]"; }

  const Edge& edge(std::uint32_t e) const { return edges_[e]; }
  PairClass edge_class(std::uint32_t e) const {
    Word w = Word::from_code(k_, n_, edges_[e].rep);
    bool pal = w.is_palindrome();
    return PairClass{std::move(w), pal};
  }
  std::string edge_label(std::uint32_t e) const { return "[" + code_str(edges_[e].rep, k_, n_) + "]"; }

  /// Index of the vertex class containing `member` (any member of the pair).
  /// Throws std::out_of_range for words that are not vertices of this graph.
  std::uint32_t vertex_index(const Word& member) const;
  std::uint32_t vertex_index_code(std::uint64_t member_code) const;
  std::uint32_t edge_index(const Word& member) const;
  std::uint32_t edge_index_code(std::uint64_t member_code) const;

  /// One entry per incidence; a loop yields two entries.
  std::span<const Incidence> incidences(std::uint32_t v) const;

  int degree(std::uint32_t v) const;
  std::vector<std::uint32_t> odd_vertices() const;  ///< ascending by rep
  int loop_count(std::uint32_t v) const;            ///< 0, 1, or 2

  /// Graphviz export: undirected, class labels, TypeI ends marked with an
  /// arrowhead, Both ends with an open dot, loops emitted once with an x2
  /// multiplicity note.
  std::string to_dot() const;

 private:
  UGraph(int k, int n) : k_(k), n_(n) {}

  int k_, n_;
  std::vector<std::uint64_t> vreps_;
  std::vector<bool> vpal_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> inc_offset_;  // CSR over incidences, per vertex
  std::vector<Incidence> inc_;
  std::unordered_map<std::uint64_t, std::uint32_t> vindex_;
  std::unordered_map<std::uint64_t, std::uint32_t> eindex_;
};

/// Closed-form count of odd-degree vertices of uBg(k,n), split by the
/// parities of k and n.  Requires k >= 2, n >= 2.
std::uint64_t ov_formula(int k, int n);

}  // namespace unbruijn
