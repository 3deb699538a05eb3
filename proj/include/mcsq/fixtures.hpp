#pragma once

#include "mcsq/matrix.hpp"

namespace mcsq {

// Canonical small instances used across tests, docs and the CLI generator.

/// Four rows chained in a cycle: the unique minimal conflict is the whole
/// matrix, witnessed by a chordless 4-cycle of rows.
BinaryMatrix fixture_cyc4();

/// Three rows pairwise sharing a private column: one size-3 conflict where
/// every pair of rows shares a column missing from the third.
BinaryMatrix fixture_v3();

/// Three rows through one shared column, each with a private column: one
/// size-3 conflict of the complementary pattern.
BinaryMatrix fixture_iv3();

/// A hub row overlapped by three pairwise disjoint rows: one size-4 conflict
/// whose kernel is row 0.
BinaryMatrix fixture_ii4();

/// Frozen result of a seeded random search (see oracle search_fixture): a
/// 4-row matrix whose unique minimal conflict is caught only by the
/// two-kernel missing-edge pattern at size 4.
BinaryMatrix fixture_iii4();

/// Nested intervals; no conflict at all.
BinaryMatrix fixture_nest();

/// m rows over C(m,2) columns, one column per unordered row pair, row i
/// containing exactly the columns labelled by pairs with i. Every 3 rows
/// form a minimal conflict. Requires m >= 3.
BinaryMatrix fixture_fig1(int m);

/// 2k columns on a cycle, rows are the 2k consecutive column pairs plus one
/// duplicate of every second pair (3k rows). The minimal conflicts are the
/// 2^k chordless row cycles. Requires k >= 2.
BinaryMatrix fixture_fig2(int k);

/// Lookup by CLI spec string, e.g. "cyc4", "fig1:4", "fig2:3".
/// Throws std::invalid_argument for unknown names or bad parameters.
BinaryMatrix fixture_by_spec(const std::string& spec);

}  // namespace mcsq
