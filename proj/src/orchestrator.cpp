#include "mcsq/orchestrator.hpp"

#include <json.hpp>

namespace mcsq {

namespace {

using Detector = std::optional<MCSCertificate> (*)(const QueryContext&, RowId);

struct Stage {
    const char* name;
    Detector run;
};

constexpr Stage kCascade[] = {
    {"check_form_I", check_form_I},
    {"check_size3", check_size3},
    {"check_form_II_size4", check_form_II_size4},
    {"check_form_III_size4", check_form_III_size4},
    {"check_form_IV_size4", check_form_IV_size4},
    {"check_form_IV_kernel", check_form_IV_kernel},
    {"check_form_IV_nonkernel", check_form_IV_nonkernel},
    {"check_form_V_size4", check_form_V_size4},
    {"check_form_V_size5", check_form_V_size5},
    {"check_form_V_kernel", check_form_V_kernel},
    {"check_form_V_nonkernel", check_form_V_nonkernel},
};

}  // namespace

MembershipAnswer mcs_membership(const QueryContext& ctx, RowId r) {
    MembershipAnswer ans;
    ans.row = r;
    for (const Stage& stage : kCascade) {
        auto cert = stage.run(ctx, r);
        ans.stage_trace.push_back({stage.name, cert.has_value()});
        if (cert) {
            ans.member = true;
            ans.certificate = std::move(cert);
            break;
        }
    }
    return ans;
}

MembershipAnswer mcs_membership(const BinaryMatrix& m, RowId r) {
    QueryContext ctx(m);
    return mcs_membership(ctx, r);
}

std::vector<MembershipAnswer> mcs_membership_all(const BinaryMatrix& m) {
    QueryContext ctx(m);
    std::vector<MembershipAnswer> out(size_t(m.m()));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < m.m(); ++r) out[size_t(r)] = mcs_membership(ctx, r);
    return out;
}

std::string to_json(const MembershipAnswer& a) {
    nlohmann::ordered_json j;
    j["row"] = a.row;
    j["member"] = a.member;
    if (a.certificate) {
        const MCSCertificate& c = *a.certificate;
        j["mcs"] = c.rows;
        j["form"] = to_string(c.form);
        j["role"] = to_string(c.role);
        if (c.witness_columns) j["witness_columns"] = *c.witness_columns;
    }
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const StageOutcome& s : a.stage_trace) {
        nlohmann::ordered_json e;
        e["name"] = s.name;
        e["hit"] = s.hit;
        stages.push_back(std::move(e));
    }
    j["stages"] = std::move(stages);
    return j.dump();
}

}  // namespace mcsq
