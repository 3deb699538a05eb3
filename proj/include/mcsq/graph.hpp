#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcsq/matrix.hpp"

namespace mcsq {

/// Intersection graph of the rows: edge iff the two rows share a column.
struct RowGraph {
    int m = 0;
    std::vector<Bitset> adj;  // adj[i] over m bits, no self loops

    bool edge(RowId i, RowId j) const { return adj[size_t(i)].test(j); }
    Bitset vertices() const { return Bitset::all(m); }
};

/// Vertex-colored bipartite view: black row vertices (with the RowGraph
/// edges) plus white column vertices joined to the rows containing them.
/// Column-column edges do not exist. Owns its matrix copy.
struct RowColGraph {
    BinaryMatrix matrix;
    RowGraph row_graph;

    bool row_col_edge(RowId r, ColId c) const { return matrix.row(r).test(c); }
};

RowGraph build_row_graph(const BinaryMatrix& m);
std::pair<RowGraph, RowColGraph> build_graphs(const BinaryMatrix& m);

/// N(r): rows intersecting r, excluding r itself.
inline Bitset neighborhood(const RowGraph& g, RowId r) { return g.adj[size_t(r)]; }
/// N(r_i, r_j) = N(r_i) & N(r_j).
inline Bitset common_neighborhood(const RowGraph& g, RowId i, RowId j) {
    return g.adj[size_t(i)] & g.adj[size_t(j)];
}
/// L(c): rows containing column c.
Bitset span(const BinaryMatrix& m, ColId c);

// The remaining operations run on an induced subgraph view: the adjacency
// rows of a host graph restricted to a `keep` vertex set. Detector code also
// passes ad-hoc adjacencies with artificial edges through the same calls.

/// Connected components of the view, ordered by their smallest vertex.
std::vector<Bitset> components(const std::vector<Bitset>& adj, const Bitset& keep);

/// Lexicographically least shortest u-v path (a shortest path is chordless),
/// or nullopt when u and v are disconnected in the view.
std::optional<std::vector<int>> shortest_induced_path(const std::vector<Bitset>& adj, const Bitset& keep,
                                                      int u, int v);

/// 4-vertex paths (v0,v1,v2,v3) through r with r internal: the three
/// consecutive edges present and the two short chords (v0,v2), (v1,v3)
/// absent. The extremity pair (v0,v3) may be adjacent, in which case the
/// path closes into a chordless 4-cycle; the cycle search below relies on
/// that. Each path appears once, in its lexicographically smaller
/// orientation, stream sorted ascending.
std::vector<std::array<int, 4>> p4s_through(const std::vector<Bitset>& adj, const Bitset& keep, int r);

/// Seeds every near-P4 through r and tries to close it into an induced
/// chordless cycle of length >= 4 by a shortest path between the extremities
/// that avoids the closed neighborhoods of the two internal vertices.
/// Calls visit with the cyclically ordered vertices of each cycle found;
/// stops early when visit returns true. Returns whether a visit accepted.
bool for_each_induced_cycle_through(const std::vector<Bitset>& adj, const Bitset& keep, int r,
                                    const std::function<bool(const std::vector<int>&)>& visit);

/// Validators used by tests and internal assertions.
bool is_induced_path(const std::vector<Bitset>& adj, const std::vector<int>& verts, bool allow_end_chord = false);
bool is_induced_cycle(const std::vector<Bitset>& adj, const std::vector<int>& verts);

/// Debug output: black row vertices, white column vertices.
std::string to_dot(const RowGraph& g);
std::string to_dot(const RowColGraph& g);

}  // namespace mcsq
