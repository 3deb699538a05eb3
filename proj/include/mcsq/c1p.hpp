#pragma once

#include <optional>
#include <vector>

#include "mcsq/matrix.hpp"

namespace mcsq {

struct C1PResult {
    bool holds = false;
    /// Permutation of all n columns making every selected row contiguous;
    /// present iff holds.
    std::optional<std::vector<ColId>> witness;
};

/// Decides the consecutive ones property for the selected rows (empty
/// selection allowed, trivially true). Polynomial time; the accepted answer
/// carries a witness permutation which is re-checked before returning.
C1PResult is_c1p(const BinaryMatrix& m, const Bitset& rows);
C1PResult is_c1p(const BinaryMatrix& m, const std::vector<RowId>& rows);
C1PResult is_c1p_all(const BinaryMatrix& m);

/// Exhaustive check over the permutations of the columns that occur in the
/// selected rows (unused columns are appended). Refuses with LimitError when
/// more than max_cols columns would have to be permuted.
C1PResult is_c1p_bruteforce(const BinaryMatrix& m, const std::vector<RowId>& rows, int max_cols = 8);
C1PResult is_c1p_bruteforce(const BinaryMatrix& m, const Bitset& rows, int max_cols = 8);

/// True iff every selected row occupies consecutive positions of perm.
bool witness_valid(const BinaryMatrix& m, const std::vector<RowId>& rows, const std::vector<ColId>& perm);

}  // namespace mcsq
