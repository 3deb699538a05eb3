#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcsq/detectors.hpp"

namespace mcsq {

struct StageOutcome {
    std::string name;
    bool hit = false;
};

struct MembershipAnswer {
    bool member = false;
    RowId row = -1;
    std::optional<MCSCertificate> certificate;  // present iff member
    std::vector<StageOutcome> stage_trace;      // stages actually executed, in order
};

/// Runs the six-step cascade: the chordless-cycle search, the size-3 scan,
/// then the size-4 patterns and the kernel/non-kernel path reductions for
/// the two open-ended families. Detectors run in a fixed order so each may
/// rely on the earlier ones having found nothing; the first verified
/// certificate wins.
MembershipAnswer mcs_membership(const QueryContext& ctx, RowId r);
MembershipAnswer mcs_membership(const BinaryMatrix& m, RowId r);

/// Membership of every row. Queries are independent and run in parallel
/// when OpenMP is enabled; results are positionally ordered, so the output
/// does not depend on the schedule.
std::vector<MembershipAnswer> mcs_membership_all(const BinaryMatrix& m);

/// {"row":…,"member":…,"mcs":[…],"form":"…","role":"…",
///  "witness_columns":[…]?,"stages":[{"name":…,"hit":…}…]} with absent
/// optionals omitted and fields in exactly that order.
std::string to_json(const MembershipAnswer& a);

}  // namespace mcsq
