#pragma once

#include <vector>

#include "mcsq/c1p.hpp"
#include "mcsq/graph.hpp"
#include "mcsq/matrix.hpp"

namespace mcsq {

enum class FormLabel { I, II, III, IV, V };

const char* to_string(FormLabel f);

/// True iff the row set is a minimal conflicting set: not C1P, while every
/// proper subset is (C1P is closed under row deletion, so checking the
/// cardinality-minus-one subsets suffices). Throws on an empty set.
bool verify_mcs(const BinaryMatrix& m, const std::vector<RowId>& s);
bool verify_mcs(const BinaryMatrix& m, const Bitset& s);

struct Classification {
    FormLabel form;
    std::vector<RowId> kernels;  // rows of s intersecting all other rows of s
};

/// Recomputes the obstruction form of a verified minimal conflicting set
/// from its kernel count, size and the pattern conditions, independently of
/// whichever detector produced it. Throws ClassifyError when no signature
/// matches (a bug, not an input condition).
Classification classify_certificate(const BinaryMatrix& m, const std::vector<RowId>& s);

/// Rows of s intersecting every other row of s.
std::vector<RowId> kernels_of(const BinaryMatrix& m, const std::vector<RowId>& s);

}  // namespace mcsq
