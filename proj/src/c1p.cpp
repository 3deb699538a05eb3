#include "mcsq/c1p.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mcsq/errors.hpp"

namespace mcsq {

// The decision procedure works on the strict-overlap structure of the rows.
//
// Rows of one overlap-connected component force their column order: the
// component's columns fall into cells (equal-membership classes) whose
// left-to-right order is unique up to reversal. The order is built by
// inserting the rows in an order where each new row overlaps an already
// placed one; each insertion must cover a contiguous run of cells, may split
// the two end cells of its run, and may append its new columns as a fresh
// cell at a free end of the sequence. Any violation is a certificate that
// the selected rows are not C1P.
//
// Rows outside the component relate to it in exactly one of three ways:
// disjoint from its union, containing its union, or contained in one of its
// rows. The first two kinds move to an outer subproblem where the whole
// component collapses to a single marker column; the third kind either
// descends into a single cell or pins a prefix/suffix block inside the run's
// end cells. Pinning is encoded with two fresh pseudo-columns forced to the
// ends of the cell's internal arrangement. Each subproblem strictly shrinks
// the set of real columns, and flattening the recursion tree yields an
// explicit witness permutation.

namespace {

// cell/run relation of a set against a cell
enum class Rel { none, partial, full };

Rel relation(const Bitset& cell, const Bitset& y) {
    if (!cell.intersects(y)) return Rel::none;
    return cell.subset_of(y) ? Rel::full : Rel::partial;
}

struct Run {
    int s = -1, t = -1;  // touched cell range
    bool ok = false;     // contiguous, interior cells full
};

Run touched_run(const std::vector<Bitset>& cells, const Bitset& y, std::vector<Rel>& rel) {
    int p = int(cells.size());
    rel.resize(size_t(p));
    Run run;
    for (int i = 0; i < p; ++i) {
        rel[size_t(i)] = relation(cells[size_t(i)], y);
        if (rel[size_t(i)] != Rel::none) {
            if (run.s < 0) run.s = i;
            run.t = i;
        }
    }
    if (run.s < 0) return run;
    for (int i = run.s; i <= run.t; ++i) {
        if (rel[size_t(i)] == Rel::none) return run;                      // gap
        if (i != run.s && i != run.t && rel[size_t(i)] != Rel::full) return run;  // partial interior
    }
    run.ok = true;
    return run;
}

// Splits cells[i] into (cell - y, cell & y) or the mirror or appends, per
// the insertion rules. Returns false when the row cannot be realized.
bool insert_row(std::vector<Bitset>& cells, Bitset& placed, const Bitset& y) {
    Bitset outP = y - placed;
    std::vector<Rel> rel;
    Run run = touched_run(cells, y, rel);
    assert(run.s >= 0);  // y overlaps a placed row, so it meets some cell
    if (!run.ok) return false;
    int p = int(cells.size());
    auto split_left_end = [&](int i) {  // partial cell at run start: out-part stays left
        Bitset in = cells[size_t(i)] & y;
        Bitset out = cells[size_t(i)] - y;
        cells[size_t(i)] = out;
        cells.insert(cells.begin() + i + 1, in);
    };
    auto split_right_end = [&](int i) {  // partial cell at run end: out-part stays right
        Bitset in = cells[size_t(i)] & y;
        Bitset out = cells[size_t(i)] - y;
        cells[size_t(i)] = in;
        cells.insert(cells.begin() + i + 1, out);
    };
    if (outP.none()) {
        // y within the placed columns; a component row overlapping a placed
        // row cannot sit inside a single cell
        if (run.s == run.t) throw std::logic_error("component row confined to one cell");
        if (rel[size_t(run.t)] == Rel::partial) split_right_end(run.t);
        if (rel[size_t(run.s)] == Rel::partial) split_left_end(run.s);
        placed |= y;
        return true;
    }
    bool left_touch = run.s == 0, right_touch = run.t == p - 1;
    if (!left_touch && !right_touch) return false;  // new columns have no free end
    if (run.s == run.t) {
        // single-cell run; split (if partial) with the in-part facing the
        // appended columns
        int i = run.s;
        bool go_right = right_touch;  // covers the p == 1 first insertion
        if (rel[size_t(i)] == Rel::full) {
            cells.insert(go_right ? cells.end() : cells.begin(), outP);
        } else if (go_right) {
            split_left_end(i);  // (out, in)
            cells.insert(cells.end(), outP);
        } else {
            split_right_end(i);  // (in, out)
            cells.insert(cells.begin(), outP);
        }
        placed |= y;
        return true;
    }
    // run of two or more cells: appending past a partially covered end cell
    // would leave that cell's out-part stranded inside the new row's block
    bool can_right = right_touch && rel[size_t(run.t)] == Rel::full;
    bool can_left = left_touch && rel[size_t(run.s)] == Rel::full;
    if (!can_right && !can_left) return false;
    // both ends full would mean y covers every placed column, impossible for
    // a row overlapping a placed one
    if (can_right && can_left) throw std::logic_error("component row covers all placed columns");
    if (can_right) {
        if (rel[size_t(run.s)] == Rel::partial) split_left_end(run.s);
        cells.insert(cells.end(), outP);
    } else {
        if (rel[size_t(run.t)] == Rel::partial) split_right_end(run.t);
        cells.insert(cells.begin(), outP);
    }
    placed |= y;
    return true;
}

// Insertion order: each row overlaps an earlier one (BFS over the strict
// overlap relation from the smallest index).
std::vector<int> bfs_overlap_order(const std::vector<Bitset>& rows, const std::vector<int>& comp) {
    size_t k = comp.size();
    std::vector<Bitset> adj(k, Bitset(int(k)));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            if (overlap(rows[size_t(comp[a])], rows[size_t(comp[b])])) {
                adj[a].set(int(b));
                adj[b].set(int(a));
            }
    std::vector<int> order;
    Bitset seen{int(k)};
    std::vector<int> queue{0};
    seen.set(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.erase(queue.begin());
        order.push_back(comp[size_t(v)]);
        Bitset nb = adj[size_t(v)] - seen;
        for (int u = nb.first(); u >= 0; u = nb.next(u + 1)) {
            seen.set(u);
            queue.push_back(u);
        }
    }
    assert(order.size() == k);
    return order;
}

std::vector<std::vector<int>> overlap_components(const std::vector<Bitset>& rows) {
    int k = int(rows.size());
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(size_t(k), false);
    for (int s = 0; s < k; ++s) {
        if (seen[size_t(s)]) continue;
        std::vector<int> comp{s};
        seen[size_t(s)] = true;
        for (size_t head = 0; head < comp.size(); ++head) {
            for (int o = 0; o < k; ++o)
                if (!seen[size_t(o)] && overlap(rows[size_t(comp[head])], rows[size_t(o)])) {
                    seen[size_t(o)] = true;
                    comp.push_back(o);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Bitset remap(const Bitset& z, const std::vector<int>& parent_bits, int width) {
    Bitset out(width);
    for (size_t j = 0; j < parent_bits.size(); ++j)
        if (z.test(parent_bits[j])) out.set(int(j));
    return out;
}

// ids: distinct column labels (negative = pseudo pins of enclosing levels);
// rows: bitsets over ids' positions. Returns a permutation of ids realizing
// every row as a contiguous block, or nullopt.
std::optional<std::vector<int>> solve(const std::vector<int>& ids, const std::vector<Bitset>& rows) {
    int W = int(ids.size());
    std::vector<Bitset> active;
    for (const Bitset& r : rows) {
        int c = r.count();
        if (c >= 2 && c < W) active.push_back(r);
    }
    if (active.empty()) return ids;

    auto comps = overlap_components(active);
    std::vector<Bitset> unions;
    unions.reserve(comps.size());
    for (const auto& comp : comps) {
        Bitset u(W);
        for (int idx : comp) u |= active[size_t(idx)];
        unions.push_back(std::move(u));
    }
    // a maximal component: its union strictly contained in no other union
    size_t kpick = comps.size();
    for (size_t i = 0; i < comps.size() && kpick == comps.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < comps.size() && !dominated; ++j)
            if (j != i && unions[i] != unions[j] && unions[i].subset_of(unions[j])) dominated = true;
        if (!dominated) kpick = i;
    }
    assert(kpick < comps.size());
    const std::vector<int>& kcomp = comps[kpick];
    const Bitset& U = unions[kpick];

    std::vector<Bitset> cells;
    if (kcomp.size() == 1) {
        cells.push_back(active[size_t(kcomp[0])]);
    } else {
        std::vector<int> order = bfs_overlap_order(active, kcomp);
        cells.push_back(active[size_t(order[0])]);
        Bitset placed = active[size_t(order[0])];
        for (size_t i = 1; i < order.size(); ++i)
            if (!insert_row(cells, placed, active[size_t(order[i])])) return std::nullopt;
        assert(placed == U);
    }
    int p = int(cells.size());
    int ustar = U.first();

    const auto cell_count = size_t(p);
    std::vector<Bitset> outer_raw;
    std::vector<std::vector<Bitset>> inner(cell_count);
    std::vector<std::vector<Bitset>> pin_suffix(cell_count), pin_prefix(cell_count);
    Bitset in_k{int(active.size())};
    for (int idx : kcomp) in_k.set(idx);
    for (size_t zi = 0; zi < active.size(); ++zi) {
        if (in_k.test(int(zi))) continue;
        const Bitset& z = active[zi];
        Bitset zU = z & U;
        if (zU.none()) {
            outer_raw.push_back(z);
            continue;
        }
        if (U.subset_of(z)) {
            Bitset zo = z - U;
            zo.set(ustar);
            outer_raw.push_back(std::move(zo));
            continue;
        }
        // contained in one component row: constrains the spine interior
        assert(z.subset_of(U));
        std::vector<Rel> rel;
        Run run = touched_run(cells, z, rel);
        if (!run.ok) return std::nullopt;
        if (run.s == run.t) {
            if (rel[size_t(run.s)] == Rel::partial) inner[size_t(run.s)].push_back(z);
            // full single cell: no constraint beyond the cell block itself
        } else {
            if (rel[size_t(run.s)] == Rel::partial) pin_suffix[size_t(run.s)].push_back(z & cells[size_t(run.s)]);
            if (rel[size_t(run.t)] == Rel::partial) pin_prefix[size_t(run.t)].push_back(z & cells[size_t(run.t)]);
        }
    }

    // flatten the spine: each cell solved recursively
    std::vector<int> expansion;
    for (int ci = 0; ci < p; ++ci) {
        std::vector<int> cell_bits = cells[size_t(ci)].indices();
        std::vector<int> cell_ids;
        cell_ids.reserve(cell_bits.size() + 2);
        for (int b : cell_bits) cell_ids.push_back(ids[size_t(b)]);
        bool anchored = !pin_suffix[size_t(ci)].empty() || !pin_prefix[size_t(ci)].empty();
        if (!anchored && inner[size_t(ci)].empty()) {
            expansion.insert(expansion.end(), cell_ids.begin(), cell_ids.end());
            continue;
        }
        int wsub = int(cell_bits.size());
        std::vector<Bitset> sub_rows;
        if (!anchored) {
            for (const Bitset& z : inner[size_t(ci)]) sub_rows.push_back(remap(z, cell_bits, wsub));
            auto sub = solve(cell_ids, sub_rows);
            if (!sub) return std::nullopt;
            expansion.insert(expansion.end(), sub->begin(), sub->end());
            continue;
        }
        int fresh = 0;
        for (int id : cell_ids) fresh = std::min(fresh, id);
        int alpha = fresh - 1, omega = fresh - 2;
        cell_ids.push_back(alpha);
        cell_ids.push_back(omega);
        int wpin = wsub + 2;
        auto lift = [&](const Bitset& z, int extra) {
            Bitset out = remap(z, cell_bits, wpin);
            if (extra >= 0) out.set(extra);
            return out;
        };
        for (const Bitset& z : inner[size_t(ci)]) sub_rows.push_back(lift(z, -1));
        for (const Bitset& a : pin_suffix[size_t(ci)]) sub_rows.push_back(lift(a, wsub + 1));  // + omega
        for (const Bitset& a : pin_prefix[size_t(ci)]) sub_rows.push_back(lift(a, wsub));      // + alpha
        Bitset all_but_omega = Bitset::all(wpin);
        all_but_omega.reset(wsub + 1);
        Bitset all_but_alpha = Bitset::all(wpin);
        all_but_alpha.reset(wsub);
        sub_rows.push_back(all_but_omega);  // forces omega to an end
        sub_rows.push_back(all_but_alpha);  // forces alpha to the other
        auto sub = solve(cell_ids, sub_rows);
        if (!sub) return std::nullopt;
        std::vector<int> arr = *sub;
        if (arr.front() == omega || arr.back() == alpha) std::reverse(arr.begin(), arr.end());
        assert(arr.front() == alpha && arr.back() == omega);
        expansion.insert(expansion.end(), arr.begin() + 1, arr.end() - 1);
    }

    // outer subproblem: the component collapses to its marker column
    Bitset outer_bits_set = Bitset::all(W) - U;
    outer_bits_set.set(ustar);
    std::vector<int> outer_bits = outer_bits_set.indices();
    std::vector<int> outer_ids;
    outer_ids.reserve(outer_bits.size());
    for (int b : outer_bits) outer_ids.push_back(ids[size_t(b)]);
    std::vector<Bitset> outer_rows;
    outer_rows.reserve(outer_raw.size());
    for (const Bitset& z : outer_raw) outer_rows.push_back(remap(z, outer_bits, int(outer_bits.size())));
    auto out = solve(outer_ids, outer_rows);
    if (!out) return std::nullopt;

    std::vector<int> result;
    result.reserve(size_t(W));
    int marker = ids[size_t(ustar)];
    for (int g : *out) {
        if (g == marker)
            result.insert(result.end(), expansion.begin(), expansion.end());
        else
            result.push_back(g);
    }
    return result;
}

std::vector<RowId> to_row_list(const Bitset& rows) { return rows.indices(); }

bool row_contiguous(const RowSet& row, const std::vector<int>& pos_of_col) {
    int lo = -1, hi = -1, cnt = 0;
    for (int c = row.first(); c >= 0; c = row.next(c + 1)) {
        int p = pos_of_col[size_t(c)];
        if (lo < 0 || p < lo) lo = p;
        if (p > hi) hi = p;
        ++cnt;
    }
    return cnt == 0 || hi - lo + 1 == cnt;
}

}  // namespace

bool witness_valid(const BinaryMatrix& m, const std::vector<RowId>& rows, const std::vector<ColId>& perm) {
    if (int(perm.size()) != m.n_cols) return false;
    std::vector<int> pos(size_t(m.n_cols), -1);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= m.n_cols || pos[size_t(perm[i])] != -1) return false;
        pos[size_t(perm[i])] = int(i);
    }
    for (RowId r : rows)
        if (!row_contiguous(m.row(r), pos)) return false;
    return true;
}

C1PResult is_c1p(const BinaryMatrix& m, const Bitset& rows) {
    std::vector<int> ids(size_t(m.n_cols));
    for (int c = 0; c < m.n_cols; ++c) ids[size_t(c)] = c;
    std::vector<Bitset> sel;
    for (int r = rows.first(); r >= 0; r = rows.next(r + 1)) sel.push_back(m.row(r));
    auto arr = solve(ids, sel);
    if (!arr) return {false, std::nullopt};
    bool valid = witness_valid(m, to_row_list(rows), *arr);
    assert(valid);
    if (!valid) throw std::logic_error("consecutive-ones witness failed validation");
    return {true, std::move(*arr)};
}

C1PResult is_c1p(const BinaryMatrix& m, const std::vector<RowId>& rows) {
    Bitset sel(m.m());
    for (RowId r : rows) {
        if (r < 0 || r >= m.m()) throw std::invalid_argument("row id out of range");
        sel.set(r);
    }
    return is_c1p(m, sel);
}

C1PResult is_c1p_all(const BinaryMatrix& m) { return is_c1p(m, Bitset::all(m.m())); }

C1PResult is_c1p_bruteforce(const BinaryMatrix& m, const Bitset& rows, int max_cols) {
    Bitset occ(m.n_cols);
    for (int r = rows.first(); r >= 0; r = rows.next(r + 1)) occ |= m.row(r);
    if (occ.count() > max_cols)
        throw LimitError("brute-force consecutive-ones test refused: too many occupied columns", max_cols);
    std::vector<int> cols = occ.indices();
    std::vector<int> pos(size_t(m.n_cols), -1);
    std::vector<RowId> row_list = to_row_list(rows);
    std::sort(cols.begin(), cols.end());
    do {
        for (size_t i = 0; i < cols.size(); ++i) pos[size_t(cols[i])] = int(i);
        bool all_ok = true;
        for (RowId r : row_list)
            if (!row_contiguous(m.row(r), pos)) {
                all_ok = false;
                break;
            }
        if (all_ok) {
            std::vector<int> witness = cols;
            for (int c = 0; c < m.n_cols; ++c)
                if (!occ.test(c)) witness.push_back(c);
            return {true, std::move(witness)};
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    return {false, std::nullopt};
}

C1PResult is_c1p_bruteforce(const BinaryMatrix& m, const std::vector<RowId>& rows, int max_cols) {
    Bitset sel(m.m());
    for (RowId r : rows) sel.set(r);
    return is_c1p_bruteforce(m, sel, max_cols);
}

}  // namespace mcsq
