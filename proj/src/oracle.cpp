#include "mcsq/oracle.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "mcsq/c1p.hpp"
#include "mcsq/errors.hpp"

namespace mcsq {

namespace {

using Mask = uint64_t;

Bitset mask_to_bitset(Mask mask, int m) {
    Bitset s(m);
    for (int r = 0; r < m; ++r)
        if (mask >> r & 1) s.set(r);
    return s;
}

std::vector<RowId> mask_to_rows(Mask mask, int m) {
    std::vector<RowId> rows;
    for (int r = 0; r < m; ++r)
        if (mask >> r & 1) rows.push_back(r);
    return rows;
}

// lexicographic k-combinations of {0..m-1}
struct ComboGen {
    int m, k;
    std::vector<int> cur;
    bool done = false;

    ComboGen(int m_, int k_) : m(m_), k(k_) {
        if (k > m) {
            done = true;
            return;
        }
        cur.resize(size_t(k));
        for (int i = 0; i < k; ++i) cur[size_t(i)] = i;
    }
    Mask mask() const {
        Mask x = 0;
        for (int i : cur) x |= Mask{1} << i;
        return x;
    }
    void advance() {
        int i = k - 1;
        while (i >= 0 && cur[size_t(i)] == m - k + i) --i;
        if (i < 0) {
            done = true;
            return;
        }
        ++cur[size_t(i)];
        for (int j = i + 1; j < k; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
    }
};

void check_limits(const BinaryMatrix& m, const OracleLimits& limits) {
    if (m.m() > 62) throw std::invalid_argument("exhaustive enumeration supports at most 62 rows");
    if (!limits.force && m.m() > limits.max_rows)
        throw LimitError("exhaustive enumeration refused: matrix has " + std::to_string(m.m()) + " rows", limits.max_rows);
}

OracleReport finish_report(const BinaryMatrix& m, std::vector<Mask> found) {
    OracleReport rep;
    rep.digest = matrix_digest(m);
    rep.per_row_membership.assign(size_t(m.m()), false);
    Mask member = 0;
    for (Mask f : found) {
        rep.mcs_list.push_back(mask_to_rows(f, m.m()));
        member |= f;
    }
    for (int r = 0; r < m.m(); ++r) rep.per_row_membership[size_t(r)] = (member >> r & 1) != 0;
    return rep;
}

bool contains_found(const std::vector<Mask>& found, Mask s) {
    for (Mask f : found)
        if ((s & f) == f) return true;
    return false;
}

OracleReport enumerate_impl(const BinaryMatrix& m, const OracleLimits& limits, bool parallel) {
    check_limits(m, limits);
    std::vector<Mask> found;
    constexpr size_t kBlock = 4096;
    for (int k = 1; k <= m.m(); ++k) {
        ComboGen gen(m.m(), k);
        std::vector<Mask> block;
        block.reserve(kBlock);
        auto flush = [&]() {
            if (block.empty()) return;
            std::vector<char> conflicting(block.size(), 0);
            if (parallel) {
#pragma omp parallel for schedule(dynamic)
                for (long i = 0; i < long(block.size()); ++i)
                    conflicting[size_t(i)] = !is_c1p(m, mask_to_bitset(block[size_t(i)], m.m())).holds;
            } else {
                for (size_t i = 0; i < block.size(); ++i)
                    conflicting[i] = !is_c1p(m, mask_to_bitset(block[i], m.m())).holds;
            }
            // merge in subset order: a surviving non-C1P subset contains no
            // smaller conflicting set, hence is minimal
            for (size_t i = 0; i < block.size(); ++i)
                if (conflicting[i]) found.push_back(block[i]);
            block.clear();
        };
        while (!gen.done) {
            Mask s = gen.mask();
            if (!contains_found(found, s)) {
                block.push_back(s);
                if (block.size() == kBlock) flush();
            }
            gen.advance();
        }
        flush();
    }
    return finish_report(m, std::move(found));
}

}  // namespace

std::string matrix_digest(const BinaryMatrix& m) {
    std::string text = serialize_matrix(m, MatrixFormat::dense);
    uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[size_t(i)] = hex[h & 15];
        h >>= 4;
    }
    return out;
}

OracleReport enumerate_mcs(const BinaryMatrix& m, const OracleLimits& limits) {
    return enumerate_impl(m, limits, true);
}

OracleReport enumerate_mcs_serial(const BinaryMatrix& m, const OracleLimits& limits) {
    return enumerate_impl(m, limits, false);
}

OracleReport enumerate_mcs_noprune(const BinaryMatrix& m, const OracleLimits& limits) {
    check_limits(m, limits);
    std::vector<Mask> found;
    for (int k = 1; k <= m.m(); ++k) {
        for (ComboGen gen(m.m(), k); !gen.done; gen.advance()) {
            Mask s = gen.mask();
            if (is_c1p(m, mask_to_bitset(s, m.m())).holds) continue;
            bool minimal = true;
            for (int r = 0; r < m.m() && minimal; ++r)
                if (s >> r & 1) {
                    Mask sub = s & ~(Mask{1} << r);
                    if (sub && !is_c1p(m, mask_to_bitset(sub, m.m())).holds) minimal = false;
                }
            if (minimal) found.push_back(s);
        }
    }
    return finish_report(m, std::move(found));
}

std::string to_json(const OracleReport& r) {
    nlohmann::ordered_json j;
    j["digest"] = r.digest;
    j["mcs"] = r.mcs_list;
    j["membership"] = r.per_row_membership;
    return j.dump();
}

BinaryMatrix random_matrix(int m, int n, double density, uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("random_matrix: dimensions must be positive");
    if (!(density > 0.0 && density < 1.0))
        throw std::invalid_argument("random_matrix: density must lie strictly between 0 and 1");
    std::mt19937_64 gen(seed);
    BinaryMatrix out;
    out.n_cols = n;
    out.rows.assign(size_t(m), RowSet(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            double u = double(gen() >> 11) * 0x1.0p-53;
            if (u < density) out.rows[size_t(i)].set(j);
        }
    return out;
}

std::optional<BinaryMatrix> search_fixture(
    const std::function<bool(const BinaryMatrix&, const OracleReport&)>& predicate, const SearchParams& params) {
    for (int t = 0; t < params.budget; ++t) {
        BinaryMatrix m = random_matrix(params.m, params.n, params.density, params.seed0 + uint64_t(t));
        OracleReport rep = enumerate_mcs(m);
        if (predicate(m, rep)) return m;
    }
    return std::nullopt;
}

}  // namespace mcsq
