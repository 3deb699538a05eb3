#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcsq/matrix.hpp"

namespace mcsq {

struct OracleLimits {
    int max_rows = 16;
    bool force = false;
};

/// Ground truth for one matrix: every minimal conflicting set, listed in
/// increasing cardinality and lexicographic order within a cardinality.
struct OracleReport {
    std::string digest;
    std::vector<std::vector<RowId>> mcs_list;
    std::vector<bool> per_row_membership;

    bool operator==(const OracleReport& o) const = default;
};

/// FNV-1a 64 of the dense serialization, as 16 lowercase hex digits.
std::string matrix_digest(const BinaryMatrix& m);

/// Exhaustive minimal-conflicting-set enumeration. Subsets are visited in
/// increasing cardinality; supersets of an already found conflicting set are
/// pruned, which preserves exactness. Refuses matrices beyond
/// limits.max_rows unless limits.force. The default entry point shards each
/// cardinality level across OpenMP threads and merges in subset order, so
/// its report is identical to the serial reference implementation's.
OracleReport enumerate_mcs(const BinaryMatrix& m, const OracleLimits& limits = {});
OracleReport enumerate_mcs_serial(const BinaryMatrix& m, const OracleLimits& limits = {});

/// Pruning-free variant for cross-checking the pruning logic on tiny
/// instances: decides each subset literally against the definition.
OracleReport enumerate_mcs_noprune(const BinaryMatrix& m, const OracleLimits& limits = {});

/// {"digest":…,"mcs":[[…]…],"membership":[…]}.
std::string to_json(const OracleReport& r);

/// Deterministic random 0-1 matrix: entries drawn row-major from
/// std::mt19937_64 seeded with `seed`; entry (i,j) is 1 iff the draw's top
/// 53 bits, scaled to [0,1), fall below density. Identical on every
/// platform. density must lie strictly between 0 and 1.
BinaryMatrix random_matrix(int m, int n, double density, uint64_t seed);

struct SearchParams {
    int m = 4;
    int n = 7;
    double density = 0.45;
    uint64_t seed0 = 1;
    int budget = 2000;
};

/// Seeded scan over random matrices; returns the first whose oracle report
/// satisfies the predicate, or nullopt when the budget is exhausted.
std::optional<BinaryMatrix> search_fixture(
    const std::function<bool(const BinaryMatrix&, const OracleReport&)>& predicate, const SearchParams& params);

}  // namespace mcsq
