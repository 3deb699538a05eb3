// mcsq: decide whether a row of a 0-1 matrix lies in a minimal conflicting
// set for the consecutive ones property, with verified certificates, an
// exhaustive oracle, and instance generators.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcsq/c1p.hpp"
#include "mcsq/errors.hpp"
#include "mcsq/fixtures.hpp"
#include "mcsq/oracle.hpp"
#include "mcsq/orchestrator.hpp"
#include "mcsq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBadId = 3;
constexpr int kExitInternal = 4;
constexpr int kExitRefused = 5;

struct Fail {
    int code;
    std::string message;
};

mcsq::BinaryMatrix load_matrix(const std::string& path, const std::string& fixture) {
    if (!fixture.empty()) {
        try {
            return mcsq::fixture_by_spec(fixture);
        } catch (const std::invalid_argument& e) {
            throw Fail{kExitParse, e.what()};
        }
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Fail{kExitParse, "cannot open " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    // sparse files start with "n=", possibly after comment lines
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        if (!line.empty() && line[0] != '#') {
            auto format = line.rfind("n=", 0) == 0 ? mcsq::MatrixFormat::sparse : mcsq::MatrixFormat::dense;
            try {
                return mcsq::parse_matrix(text, format);
            } catch (const mcsq::ParseError& e) {
                throw Fail{kExitParse, path + ": " + e.what()};
            }
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    throw Fail{kExitParse, path + ": empty input"};
}

std::vector<int> parse_row_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Fail{kExitParse, "bad row list entry \"" + tok + "\""};
        }
    }
    if (out.empty()) throw Fail{kExitParse, "empty row list"};
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_check(const mcsq::BinaryMatrix& m, int row, const std::string& format) {
    if (row < 0 || row >= m.m()) {
        std::cerr << "row " << row << " out of range [0," << m.m() << ")\n";
        return kExitBadId;
    }
    mcsq::MembershipAnswer ans = mcsq::mcs_membership(m, row);
    if (ans.member) {
        // re-check before reporting; a failure here is a bug, not bad input
        try {
            if (!mcsq::verify_mcs(m, ans.certificate->rows)) throw mcsq::ClassifyError("certificate rejected");
            auto cls = mcsq::classify_certificate(m, ans.certificate->rows);
            if (cls.form != ans.certificate->form) throw mcsq::ClassifyError("certificate label mismatch");
        } catch (const std::exception& e) {
            std::cerr << "internal verification failure: " << e.what() << "\n";
            return kExitInternal;
        }
    }
    if (format == "json") {
        std::cout << mcsq::to_json(ans) << "\n";
    } else if (ans.member) {
        const mcsq::MCSCertificate& c = *ans.certificate;
        std::cout << "row " << row << ": in an MCS of size " << c.rows.size() << " (form "
                  << mcsq::to_string(c.form) << ", role " << mcsq::to_string(c.role) << ")\n"
                  << "rows: " << join_ints(c.rows) << "\n";
        if (c.witness_columns) std::cout << "witness columns: " << join_ints(*c.witness_columns) << "\n";
    } else {
        std::cout << "row " << row << ": not in any MCS\n";
    }
    return kExitOk;
}

int cmd_enumerate(const mcsq::BinaryMatrix& m, int max_rows, bool force, const std::string& format) {
    mcsq::OracleReport rep;
    try {
        rep = mcsq::enumerate_mcs(m, {max_rows, force});
    } catch (const mcsq::LimitError& e) {
        std::cerr << e.what() << " — pass --force to run anyway\n";
        return kExitRefused;
    }
    if (format == "json") {
        std::cout << mcsq::to_json(rep) << "\n";
    } else {
        std::cout << "digest: " << rep.digest << "\n" << rep.mcs_list.size() << " MCS\n";
        for (const auto& s : rep.mcs_list) std::cout << "  {" << join_ints(s, ", ") << "}\n";
        std::cout << "member rows:";
        for (int r = 0; r < m.m(); ++r)
            if (rep.per_row_membership[size_t(r)]) std::cout << " " << r;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const mcsq::BinaryMatrix& m, const std::vector<int>& rows, const std::string& format) {
    for (int r : rows)
        if (r < 0 || r >= m.m()) {
            std::cerr << "row " << r << " out of range [0," << m.m() << ")\n";
            return kExitBadId;
        }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    auto full = mcsq::is_c1p(m, rows);
    std::string text;
    if (full.holds) {
        j["mcs"] = false;
        j["reason"] = "c1p";
        j["witness"] = *full.witness;
        text = "MCS: no — set is C1P, witness: " + join_ints(*full.witness);
    } else {
        // shrink from the top so the reported subset is the lexicographically
        // least minimal one
        std::vector<int> sub = rows;
        std::sort(sub.begin(), sub.end());
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (int i = int(sub.size()) - 1; i >= 0; --i) {
                std::vector<int> cand = sub;
                cand.erase(cand.begin() + i);
                if (!cand.empty() && !mcsq::is_c1p(m, cand).holds) {
                    sub = std::move(cand);
                    shrunk = true;
                    break;
                }
            }
        }
        if (sub.size() == rows.size()) {
            j["mcs"] = true;
            text = "MCS: yes";
        } else {
            j["mcs"] = false;
            j["reason"] = "non_minimal";
            j["subset"] = sub;
            text = "MCS: no — proper subset {" + join_ints(sub, ",") + "} is non-C1P";
        }
    }
    if (format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
    return kExitOk;
}

int cmd_c1p(const mcsq::BinaryMatrix& m, const std::vector<int>& rows, bool rows_given,
            const std::string& format) {
    std::vector<int> sel = rows;
    if (!rows_given) {
        sel.clear();
        for (int r = 0; r < m.m(); ++r) sel.push_back(r);
    }
    for (int r : sel)
        if (r < 0 || r >= m.m()) {
            std::cerr << "row " << r << " out of range [0," << m.m() << ")\n";
            return kExitBadId;
        }
    auto res = mcsq::is_c1p(m, sel);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["holds"] = res.holds;
        if (res.witness) j["witness"] = *res.witness;
        std::cout << j.dump() << "\n";
    } else if (res.holds) {
        std::cout << "C1P: yes, witness:";
        for (int c : *res.witness) std::cout << " c" << c;
        std::cout << "\n";
    } else {
        std::cout << "C1P: no\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal conflicting set queries for the consecutive ones property"};
    app.require_subcommand(1);

    std::string matrix_path, fixture_spec, format = "text", rows_arg, out_path;
    int row = -1, max_rows = 16;
    bool force = false;

    auto add_input = [&](CLI::App* cmd) {
        auto* mopt = cmd->add_option("--matrix", matrix_path, "matrix file (dense or sparse format)");
        auto* fopt = cmd->add_option("--fixture", fixture_spec,
                                     "built-in instance, e.g. cyc4, v3, iv3, ii4, iii4, nest, fig1:4, fig2:3");
        mopt->excludes(fopt);
        fopt->excludes(mopt);
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "is the row in at least one MCS?");
    add_input(check);
    add_format(check);
    check->add_option("--row", row, "queried row id")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list every MCS of a small matrix");
    add_input(enumerate);
    add_format(enumerate);
    enumerate->add_option("--max-rows", max_rows, "refusal bound on the row count (default 16)");
    enumerate->add_flag("--force", force, "run past the row bound");

    CLI::App* verify = app.add_subcommand("verify", "is the given row set an MCS?");
    add_input(verify);
    add_format(verify);
    verify->add_option("--rows", rows_arg, "comma-separated row ids")->required();

    CLI::App* gen = app.add_subcommand("gen", "write a generated matrix in dense format");
    std::string kind;
    int gm = -1, gn = -1, gk = -1;
    double density = 0.5;
    uint64_t seed = 0;
    gen->add_option("kind", kind, "fig1|fig2|cyc4|v3|iv3|ii4|nest|random")->required();
    gen->add_option("--m", gm, "rows (fig1, random)");
    gen->add_option("--n", gn, "columns (random)");
    gen->add_option("--k", gk, "cycle parameter (fig2)");
    gen->add_option("--density", density, "one-probability (random)");
    gen->add_option("--seed", seed, "generator seed (random)");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* c1p = app.add_subcommand("c1p", "test the consecutive ones property");
    add_input(c1p);
    add_format(c1p);
    auto* rows_opt = c1p->add_option("--rows", rows_arg, "comma-separated row ids (default: all rows)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            mcsq::BinaryMatrix m;
            try {
                if (kind == "fig1") {
                    if (gm < 0) throw std::invalid_argument("fig1 requires --m");
                    m = mcsq::fixture_fig1(gm);
                } else if (kind == "fig2") {
                    if (gk < 0) throw std::invalid_argument("fig2 requires --k");
                    m = mcsq::fixture_fig2(gk);
                } else if (kind == "random") {
                    if (gm < 0 || gn < 0) throw std::invalid_argument("random requires --m and --n");
                    m = mcsq::random_matrix(gm, gn, density, seed);
                } else {
                    m = mcsq::fixture_by_spec(kind);
                }
            } catch (const std::invalid_argument& e) {
                throw Fail{kExitParse, e.what()};
            }
            std::string text = mcsq::serialize_matrix(m, mcsq::MatrixFormat::dense);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw Fail{kExitParse, "cannot write " + out_path};
                out << text;
            }
            return kExitOk;
        }

        if (matrix_path.empty() && fixture_spec.empty()) throw Fail{kExitParse, "need --matrix or --fixture"};
        mcsq::BinaryMatrix m = load_matrix(matrix_path, fixture_spec);

        if (check->parsed()) return cmd_check(m, row, format);
        if (enumerate->parsed()) return cmd_enumerate(m, max_rows, force, format);
        if (verify->parsed()) return cmd_verify(m, parse_row_list(rows_arg), format);
        if (c1p->parsed()) return cmd_c1p(m, rows_arg.empty() ? std::vector<int>{} : parse_row_list(rows_arg),
                                          rows_opt->count() > 0, format);
    } catch (const Fail& f) {
        std::cerr << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
