#pragma once

#include <optional>
#include <vector>

#include "mcsq/graph.hpp"
#include "mcsq/matrix.hpp"
#include "mcsq/verify.hpp"

namespace mcsq {

enum class RowRole { cycle_member, kernel, kernel_1, kernel_2, non_kernel };

const char* to_string(RowRole r);

/// A claimed minimal conflicting set containing the queried row. Every
/// certificate a detector emits has already passed verify_mcs.
struct MCSCertificate {
    std::vector<RowId> rows;  // ascending
    FormLabel form = FormLabel::I;
    RowId queried_row = -1;
    RowRole role = RowRole::cycle_member;
    std::optional<std::vector<ColId>> witness_columns;
};

/// Matrix plus its row graph, built once per query batch. Owns its matrix
/// copy so the context never outlives its input.
struct QueryContext {
    BinaryMatrix matrix;
    RowGraph graph;

    explicit QueryContext(BinaryMatrix m) : matrix(std::move(m)), graph(build_row_graph(matrix)) {}
    const RowSet& row(RowId r) const { return matrix.row(r); }
    bool edge(RowId i, RowId j) const { return graph.edge(i, j); }
};

/// True iff {a,b,c} is a size-3 minimal conflicting set: pairwise
/// overlapping and matching one of the two size-3 obstruction patterns.
bool is_size3_mcs(const BinaryMatrix& m, RowId a, RowId b, RowId c);

// Each detector searches one obstruction family for a minimal conflicting
// set containing r, scanning candidates in ascending lexicographic order of
// the candidate tuple. Candidates failing the verify gate are skipped and
// the scan continues; absence is a value, not an error. The cascade calls
// them in a fixed order so each may assume the earlier stages found nothing,
// but calling one directly is always safe thanks to the gate.

std::optional<MCSCertificate> check_form_I(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_size3(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_II_size4(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_III_size4(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_IV_size4(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_IV_kernel(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_IV_nonkernel(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_V_size4(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_V_size5(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_V_kernel(const QueryContext& ctx, RowId r);
std::optional<MCSCertificate> check_form_V_nonkernel(const QueryContext& ctx, RowId r);

}  // namespace mcsq
