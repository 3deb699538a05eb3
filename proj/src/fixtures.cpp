#include "mcsq/fixtures.hpp"

#include <stdexcept>

namespace mcsq {

BinaryMatrix fixture_cyc4() {
    return make_matrix(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

BinaryMatrix fixture_v3() {
    return make_matrix(3, {{0, 1}, {0, 2}, {1, 2}});
}

BinaryMatrix fixture_iv3() {
    return make_matrix(4, {{0, 1}, {1, 2}, {1, 3}});
}

BinaryMatrix fixture_ii4() {
    return make_matrix(6, {{0, 1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

BinaryMatrix fixture_iii4() {
    // Frozen hit of the seeded fixture search (m=4, n=7, density=0.45,
    // seed0=1, budget=2000); tests/test_detectors.cpp re-runs the search and
    // checks it still lands here.
    return make_matrix(7, {{0, 2, 3, 4, 5}, {5, 6}, {0, 1, 2, 4, 5, 6}, {0, 1, 2}});
}

BinaryMatrix fixture_nest() {
    return make_matrix(3, {{0}, {0, 1}, {0, 1, 2}});
}

BinaryMatrix fixture_fig1(int m) {
    if (m < 3) throw std::invalid_argument("fig1 requires m >= 3");
    // Column ids: pairs (i,j), i < j, in ascending lexicographic order.
    int n = m * (m - 1) / 2;
    BinaryMatrix out;
    out.n_cols = n;
    out.rows.assign(size_t(m), RowSet(n));
    int col = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            out.rows[size_t(i)].set(col);
            out.rows[size_t(j)].set(col);
            ++col;
        }
    return out;
}

BinaryMatrix fixture_fig2(int k) {
    if (k < 2) throw std::invalid_argument("fig2 requires k >= 2");
    int n = 2 * k;
    BinaryMatrix out;
    out.n_cols = n;
    for (int i = 0; i < n; ++i) {
        RowSet r(n);
        r.set(i);
        r.set((i + 1) % n);
        out.rows.push_back(std::move(r));
    }
    // Duplicate every second consecutive pair.
    for (int i = 0; i < n; i += 2) out.rows.push_back(out.rows[size_t(i)]);
    return out;
}

BinaryMatrix fixture_by_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    long param = -1;
    if (colon != std::string::npos) {
        try {
            size_t used = 0;
            param = std::stol(spec.substr(colon + 1), &used);
            if (used != spec.size() - colon - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad fixture parameter in \"" + spec + "\"");
        }
    }
    if (name == "cyc4") return fixture_cyc4();
    if (name == "v3") return fixture_v3();
    if (name == "iv3") return fixture_iv3();
    if (name == "ii4") return fixture_ii4();
    if (name == "iii4") return fixture_iii4();
    if (name == "nest") return fixture_nest();
    if (name == "fig1") {
        if (param < 0) throw std::invalid_argument("fig1 needs a parameter, e.g. fig1:4");
        return fixture_fig1(int(param));
    }
    if (name == "fig2") {
        if (param < 0) throw std::invalid_argument("fig2 needs a parameter, e.g. fig2:3");
        return fixture_fig2(int(param));
    }
    throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

}  // namespace mcsq
