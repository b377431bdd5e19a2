#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mapcount/poly.hpp"
#include "mapcount/trunc_series.hpp"

namespace mapcount {

/// Rooted combinatorial map on darts 0..2n-1. The edge involution pairs d with
/// d^1, the root is dart 0 and sigma is the rotation around vertices.
struct CombMap {
  int edges = 0;
  std::vector<int> sigma;

  int darts() const { return 2 * edges; }
  static int alpha(int d) { return d ^ 1; }
  int vertex_count() const;
  int face_count() const;
  /// Vertex index of each dart (vertices numbered by first dart in label order).
  std::vector<int> dart_vertices() const;
};

/// Underlying multigraph; edge i joins the vertices of darts 2i and 2i+1, and
/// edge 0 (when present) is the root edge, directed from its first endpoint.
struct Multigraph {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;
  int root_vertex = 0;

  static Multigraph of(const CombMap& m);
  Multigraph without_edge(std::size_t e) const;
  /// Merges the endpoints of edge e and drops it; a loop is simply dropped.
  Multigraph contracted(std::size_t e) const;
  bool is_loop(std::size_t e) const { return edges[e].first == edges[e].second; }
};

struct MapFlags {
  bool bipartite = false;
  bool two_connected = false;
  bool three_connected = false;
  bool root_edge_is_loop = false;
};

/// All rooted planar maps with n edges, one per rooted-isomorphism class, in
/// canonical labelling. Throws CapExceeded for n > 7.
std::vector<CombMap> enumerate_rooted_maps(int n);
/// Number of rooted maps of any genus generated along the way (for testing).
std::uint64_t count_rooted_maps_all_genera(int n);

MapFlags classify(const CombMap& m);
MapFlags classify(const Multigraph& g);

/// Potts partition function by deletion-contraction at a fixed number of colours.
PolyNu potts_polynomial(const Multigraph& g, int q);
/// Same with q symbolic: coefficient i is the PolyNu multiplying q^i.
Poly<PolyNu> potts_polynomial_symbolic(const Multigraph& g);
/// Direct sum over all q^V colourings; used only to test the recursion.
PolyNu potts_bruteforce(const Multigraph& g, int q);

/// Which maps and which colourings an oracle series counts.
struct Weighting {
  enum class Class { All, Bipartite, TwoConnected, ThreeConnected };
  enum class Root { Any, Mono, Bi, Deleted, Contracted };
  Class cls = Class::All;
  Root root = Root::Any;

  /// Parses names such as "all", "bi_root", "two_conn+mono_root", "del", "con".
  static Weighting parse(const std::string& text);
  std::string name() const;
};

/// Sum over maps with at most n_max edges of the selected colouring weight:
/// colourings with a black root vertex and nu per monochromatic edge (that is
/// half the Ising partition function). The vertex map counts 1 at z^0 when the
/// root condition is Any and the class admits it.
TruncSeries<PolyNu> oracle_series(int n_max, Weighting w);

/// Weight contributed by a single map under the given root condition.
PolyNu colouring_weight(const Multigraph& g, Weighting::Root root);

/// One line: rotation in cycle notation (darts numbered from 1) and flags.
std::string dump_map(const CombMap& m);

}  // namespace mapcount
