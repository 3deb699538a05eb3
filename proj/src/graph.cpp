#include "mcsq/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace mcsq {

RowGraph build_row_graph(const BinaryMatrix& m) {
    RowGraph g;
    g.m = m.m();
    g.adj.assign(size_t(g.m), Bitset(g.m));
    for (int i = 0; i < g.m; ++i)
        for (int j = i + 1; j < g.m; ++j)
            if (m.row(i).intersects(m.row(j))) {
                g.adj[size_t(i)].set(j);
                g.adj[size_t(j)].set(i);
            }
    return g;
}

std::pair<RowGraph, RowColGraph> build_graphs(const BinaryMatrix& m) {
    RowGraph g = build_row_graph(m);
    RowColGraph rc;
    rc.matrix = m;
    rc.row_graph = g;
    return {std::move(g), std::move(rc)};
}

Bitset span(const BinaryMatrix& m, ColId c) {
    Bitset s(m.m());
    for (int r = 0; r < m.m(); ++r)
        if (m.row(r).test(c)) s.set(r);
    return s;
}

std::vector<Bitset> components(const std::vector<Bitset>& adj, const Bitset& keep) {
    std::vector<Bitset> out;
    Bitset seen(keep.width());
    for (int s = keep.first(); s >= 0; s = keep.next(s + 1)) {
        if (seen.test(s)) continue;
        Bitset comp(keep.width());
        std::vector<int> stack{s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset nb = adj[size_t(v)] & keep;
            nb -= comp;
            for (int u = nb.first(); u >= 0; u = nb.next(u + 1)) {
                comp.set(u);
                seen.set(u);
                stack.push_back(u);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::vector<int>> shortest_induced_path(const std::vector<Bitset>& adj, const Bitset& keep,
                                                      int u, int v) {
    assert(u != v && keep.test(u) && keep.test(v));
    std::vector<int> parent(size_t(keep.width()), -2);
    parent[size_t(u)] = -1;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        Bitset nb = adj[size_t(x)] & keep;
        // ascending visit order makes the result the lex-least shortest path
        for (int y = nb.first(); y >= 0; y = nb.next(y + 1)) {
            if (parent[size_t(y)] != -2) continue;
            parent[size_t(y)] = x;
            q.push(y);
        }
    }
    if (parent[size_t(v)] == -2) return std::nullopt;
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[size_t(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::array<int, 4>> p4s_through(const std::vector<Bitset>& adj, const Bitset& keep, int r) {
    std::vector<std::array<int, 4>> out;
    if (!keep.test(r)) return out;
    auto consider = [&](int v0, int v1, int v2, int v3) {
        std::array<int, 4> t{v0, v1, v2, v3};
        std::array<int, 4> rev{v3, v2, v1, v0};
        out.push_back(std::min(t, rev));  // canonical orientation
    };
    // r internal: enumerate (v0, r, v2, v3) — the r-at-third-slot paths are
    // the reversals and come out of the same scan.
    Bitset nr = adj[size_t(r)] & keep;
    for (int v0 = nr.first(); v0 >= 0; v0 = nr.next(v0 + 1)) {
        for (int v2 = nr.first(); v2 >= 0; v2 = nr.next(v2 + 1)) {
            if (v2 == v0 || adj[size_t(v0)].test(v2)) continue;
            Bitset n2 = adj[size_t(v2)] & keep;
            for (int v3 = n2.first(); v3 >= 0; v3 = n2.next(v3 + 1)) {
                if (v3 == r || v3 == v0 || adj[size_t(r)].test(v3)) continue;
                consider(v0, r, v2, v3);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool for_each_induced_cycle_through(const std::vector<Bitset>& adj, const Bitset& keep, int r,
                                    const std::function<bool(const std::vector<int>&)>& visit) {
    for (const auto& p4 : p4s_through(adj, keep, r)) {
        int v0 = p4[0], v1 = p4[1], v2 = p4[2], v3 = p4[3];
        // Drop the closed neighborhoods of the internal vertices but retain
        // the extremities, then close the path between them.
        Bitset allowed = keep;
        allowed -= adj[size_t(v1)];
        allowed -= adj[size_t(v2)];
        allowed.reset(v1);
        allowed.reset(v2);
        allowed.set(v0);
        allowed.set(v3);
        auto path = shortest_induced_path(adj, allowed, v0, v3);
        if (!path) continue;
        // Cyclic order: v1, v2 then the path back from v3 to v0.
        std::vector<int> cycle{v1, v2};
        for (auto it = path->rbegin(); it != path->rend(); ++it) cycle.push_back(*it);
        assert(cycle.size() >= 4);
        assert(is_induced_cycle(adj, cycle));
        if (visit(cycle)) return true;
    }
    return false;
}

bool is_induced_path(const std::vector<Bitset>& adj, const std::vector<int>& verts, bool allow_end_chord) {
    size_t k = verts.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            if (verts[i] == verts[j]) return false;
            bool e = adj[size_t(verts[i])].test(verts[j]);
            if (j == i + 1) {
                if (!e) return false;
            } else if (i == 0 && j == k - 1 && allow_end_chord) {
                continue;
            } else if (e) {
                return false;
            }
        }
    return true;
}

bool is_induced_cycle(const std::vector<Bitset>& adj, const std::vector<int>& verts) {
    size_t k = verts.size();
    if (k < 4) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            if (verts[i] == verts[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (adj[size_t(verts[i])].test(verts[j]) != consecutive) return false;
        }
    return true;
}

std::string to_dot(const RowGraph& g) {
    std::string s = "graph G_R {\n  node [style=filled, fillcolor=black, fontcolor=white];\n";
    for (int i = 0; i < g.m; ++i) s += "  r" + std::to_string(i) + ";\n";
    for (int i = 0; i < g.m; ++i)
        for (int j = i + 1; j < g.m; ++j)
            if (g.edge(i, j)) s += "  r" + std::to_string(i) + " -- r" + std::to_string(j) + ";\n";
    s += "}\n";
    return s;
}

std::string to_dot(const RowColGraph& g) {
    const BinaryMatrix& m = g.matrix;
    std::string s = "graph G_RC {\n";
    for (int i = 0; i < m.m(); ++i)
        s += "  r" + std::to_string(i) + " [style=filled, fillcolor=black, fontcolor=white];\n";
    for (int c = 0; c < m.n_cols; ++c)
        s += "  c" + std::to_string(c) + " [style=filled, fillcolor=white];\n";
    for (int i = 0; i < m.m(); ++i)
        for (int j = i + 1; j < m.m(); ++j)
            if (g.row_graph.edge(i, j)) s += "  r" + std::to_string(i) + " -- r" + std::to_string(j) + ";\n";
    for (int i = 0; i < m.m(); ++i)
        for (int c = m.row(i).first(); c >= 0; c = m.row(i).next(c + 1))
            s += "  r" + std::to_string(i) + " -- c" + std::to_string(c) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace mcsq
