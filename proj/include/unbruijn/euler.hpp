#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unbruijn/graph.hpp"

namespace unbruijn {

/// Whether an optimal-length unoriented cover exists: trivially for k = 1 or
/// n = 1, otherwise exactly when k is two or odd and n <= 3.
bool optimal_exists(int k, int n);

/// Existence conditions for an alternating Eulerian path.  Conditions 2 and 3
/// hold unconditionally for these graphs; a violation indicates a bug in the
/// incidence typing.
struct ConditionReport {
  int odd_count = 0;
  bool odd_count_ok = false;    // condition 1: 0 or 2 odd-degree vertices
  bool even_balanced = false;   // condition 2: even non-palindromic vertices have #I = #II
  bool odd_off_by_one = false;  // condition 3: odd non-palindromic vertices differ by one
  std::vector<std::uint32_t> odd;

  bool all_ok() const { return odd_count_ok && even_balanced && odd_off_by_one; }
};

/// A UGraph together with duplicated parallel edges; the structure the
/// alternating walker runs on.  Arc ends keep the base edge's incidence
/// types; parallel copies are distinguished by their copy index.
class Multigraph {
 public:
  static constexpr std::uint32_t kVirtualEdge = 0xffffffffu;

  struct Arc {
    std::uint64_t rep;                    // canonical edge word; ~0 for the virtual arc
    std::uint32_t edge;                   // base edge index, or kVirtualEdge
    std::array<std::uint32_t, 2> vertex;  // end 0 = prefix end, end 1 = suffix end
    std::array<IncidenceType, 2> type;
    std::uint16_t copy = 0;
    bool is_virtual() const { return edge == kVirtualEdge; }
    bool loop() const { return vertex[0] == vertex[1]; }
  };

  explicit Multigraph(const UGraph& g);

  const UGraph& base() const { return *base_; }
  std::span<const Arc> arcs() const { return arcs_; }
  void add_duplicate(std::uint32_t edge_index);

  int degree(std::uint32_t v) const;
  std::vector<std::uint32_t> odd_vertices() const;

 private:
  const UGraph* base_;
  std::vector<Arc> arcs_;
  std::vector<std::uint16_t> copies_;  // per base edge, number of copies so far
  std::vector<int> degree_;
};

ConditionReport check_conditions(const UGraph& g);
ConditionReport check_conditions(const Multigraph& g);

/// Resolution of the Both incidences at palindromic vertices into concrete
/// TypeI/TypeII, one entry per arc end.
struct TypeAssignment {
  struct Entry {
    std::uint32_t arc;
    std::uint8_t end;
    IncidenceType type;
  };
  std::vector<Entry> entries;
};

/// Split every palindromic vertex's incidences so the TypeI and TypeII
/// counts balance: loop ends as (I, II) pairs first, then the remaining ends
/// alternately.  Even-degree vertices end up equal; odd-degree ones off by
/// one.
TypeAssignment balance_palindromic_types(const Multigraph& g);

/// An ordered edge traversal.  Each step records the edge class and the
/// orientation taken: `read` is the member of the class actually read, so
/// consecutive steps overlap in n-1 symbols.
struct AlternatingPath {
  struct Step {
    std::uint32_t edge;  // base edge class index
    std::uint64_t read;  // word read at this step
  };

  int k = 0, n = 0;
  std::uint32_t start_vertex = 0;
  std::vector<Step> steps;

  bool closed(const UGraph& g) const;
  std::string reads_string() const;  ///< "000,001,010,..." trace form
};

/// Modified Hierholzer search for an alternating Eulerian circuit or path.
/// Requires 0 or 2 odd-degree vertices and a balancing assignment; with two
/// odd vertices a virtual edge is added internally, the circuit rotated so
/// it sits last, and the edge removed again, which turns the circuit into a
/// path between the odd pair starting at the numerically smaller one.
AlternatingPath alternating_hierholzer(const Multigraph& g, const TypeAssignment& assignment);

/// The two equivalent admissibility checks.  Orientation continuity demands
/// suffix(read_i) = prefix(read_{i+1}); type alternation demands opposite
/// incidence types on entry and exit at every shared non-palindromic vertex
/// (palindromic vertices impose no restriction).  The verdicts agree on any
/// input.
bool check_orientation_continuity(const UGraph& g, const AlternatingPath& p,
                                  std::string* why = nullptr);
bool check_type_alternation(const UGraph& g, const AlternatingPath& p,
                            std::string* why = nullptr);

/// Eulerian circuit of Bg(k,n) as an ordered list of edge codes, starting at
/// vertex 0 with ascending-digit tie-break.
std::vector<std::uint64_t> directed_euler(const DGraph& g);

}  // namespace unbruijn
