#include "mcsq/matrix.hpp"

#include <cassert>
#include <sstream>

#include "mcsq/errors.hpp"

namespace mcsq {

namespace {

// Splits into lines; a final '\n' does not produce a phantom empty line.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t') return false;
    return true;
}

bool is_comment(const std::string& s) { return !s.empty() && s[0] == '#'; }

BinaryMatrix parse_dense(const std::vector<std::string>& lines) {
    size_t i = 0;
    while (i < lines.size() && (is_blank(lines[i]) || is_comment(lines[i]))) ++i;
    if (i == lines.size()) throw ParseError(int(lines.size()), "missing header");
    long m = -1, n = -1;
    {
        std::istringstream hs(lines[i]);
        std::string extra;
        if (!(hs >> m >> n) || (hs >> extra) || m < 1 || n < 1)
            throw ParseError(int(i + 1), "malformed header, expected \"m n\"");
    }
    BinaryMatrix out;
    out.n_cols = int(n);
    ++i;
    while (int(out.rows.size()) < m) {
        if (i >= lines.size()) throw ParseError(int(lines.size()), "expected " + std::to_string(m) + " rows");
        const std::string& line = lines[i];
        if (is_blank(line) || is_comment(line)) {
            ++i;
            continue;
        }
        RowSet row(out.n_cols);
        int col = 0;
        for (char c : line) {
            if (c == ' ') continue;
            if (c != '0' && c != '1') throw ParseError(int(i + 1), std::string("invalid character '") + c + "'");
            if (col >= out.n_cols) throw ParseError(int(i + 1), "row longer than " + std::to_string(n) + " columns");
            if (c == '1') row.set(col);
            ++col;
        }
        if (col != out.n_cols)
            throw ParseError(int(i + 1), "row has " + std::to_string(col) + " columns, expected " + std::to_string(n));
        out.rows.push_back(std::move(row));
        ++i;
    }
    return out;
}

BinaryMatrix parse_sparse(const std::vector<std::string>& lines) {
    size_t i = 0;
    while (i < lines.size() && is_comment(lines[i])) ++i;
    if (i == lines.size()) throw ParseError(int(lines.size()), "missing \"n=<n>\" header");
    long n = -1;
    {
        const std::string& h = lines[i];
        if (h.rfind("n=", 0) != 0) throw ParseError(int(i + 1), "malformed header, expected \"n=<n>\"");
        std::istringstream hs(h.substr(2));
        std::string extra;
        if (!(hs >> n) || (hs >> extra) || n < 1) throw ParseError(int(i + 1), "malformed header, expected \"n=<n>\"");
    }
    BinaryMatrix out;
    out.n_cols = int(n);
    for (++i; i < lines.size(); ++i) {
        if (is_comment(lines[i])) continue;
        RowSet row(out.n_cols);
        std::istringstream ls(lines[i]);
        long col;
        long prev = -1;
        while (ls >> col) {
            if (col < 0 || col >= n)
                throw ParseError(int(i + 1), "column index " + std::to_string(col) + " out of range [0," + std::to_string(n) + ")");
            if (col <= prev) throw ParseError(int(i + 1), "column indices must be strictly ascending");
            row.set(int(col));
            prev = col;
        }
        if (!ls.eof()) throw ParseError(int(i + 1), "invalid column index");
        out.rows.push_back(std::move(row));
    }
    if (out.rows.empty()) throw ParseError(int(lines.size()), "matrix must have at least one row");
    return out;
}

}  // namespace

BinaryMatrix make_matrix(int n_cols, const std::vector<std::vector<int>>& row_cols) {
    BinaryMatrix m;
    m.n_cols = n_cols;
    m.rows.reserve(row_cols.size());
    for (const auto& cols : row_cols) {
        RowSet r(n_cols);
        for (int c : cols) r.set(c);
        m.rows.push_back(std::move(r));
    }
    return m;
}

bool overlap(const RowSet& a, const RowSet& b) {
    return a.intersects(b) && !a.subset_of(b) && !b.subset_of(a);
}

BinaryMatrix parse_matrix(const std::string& text, MatrixFormat format) {
    auto lines = split_lines(text);
    return format == MatrixFormat::dense ? parse_dense(lines) : parse_sparse(lines);
}

std::string serialize_matrix(const BinaryMatrix& m, MatrixFormat format) {
    std::string out;
    if (format == MatrixFormat::dense) {
        out += std::to_string(m.m()) + " " + std::to_string(m.n_cols) + "\n";
        for (const RowSet& r : m.rows) {
            for (int c = 0; c < m.n_cols; ++c) out += r.test(c) ? '1' : '0';
            out += '\n';
        }
    } else {
        out += "n=" + std::to_string(m.n_cols) + "\n";
        for (const RowSet& r : m.rows) {
            bool first = true;
            for (int c = r.first(); c >= 0; c = r.next(c + 1)) {
                if (!first) out += ' ';
                out += std::to_string(c);
                first = false;
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace mcsq
