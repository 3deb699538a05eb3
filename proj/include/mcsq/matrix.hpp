#pragma once

#include <string>
#include <vector>

#include "mcsq/bitset.hpp"

namespace mcsq {

using RowId = int;
using ColId = int;

/// A row is the set of columns holding a 1.
using RowSet = Bitset;

enum class MatrixFormat { dense, sparse };

/// 0-1 matrix as an ordered family of column sets. Row order is identity:
/// duplicate rows are distinct family members. Immutable after construction.
struct BinaryMatrix {
    int n_cols = 0;
    std::vector<RowSet> rows;

    int m() const { return int(rows.size()); }
    const RowSet& row(RowId r) const { return rows[size_t(r)]; }

    bool operator==(const BinaryMatrix& o) const { return n_cols == o.n_cols && rows == o.rows; }
};

BinaryMatrix make_matrix(int n_cols, const std::vector<std::vector<int>>& row_cols);

/// Two rows overlap when they intersect and neither contains the other.
bool overlap(const RowSet& a, const RowSet& b);

/// Parses the dense or sparse text format (see README). Throws ParseError
/// with the offending 1-based line number.
BinaryMatrix parse_matrix(const std::string& text, MatrixFormat format);

/// Byte-exact emitters: '\n' terminators, no trailing spaces.
std::string serialize_matrix(const BinaryMatrix& m, MatrixFormat format);

}  // namespace mcsq
