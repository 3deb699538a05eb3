#include "mcsq/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcsq/errors.hpp"

namespace mcsq {

const char* to_string(FormLabel f) {
    switch (f) {
        case FormLabel::I: return "I";
        case FormLabel::II: return "II";
        case FormLabel::III: return "III";
        case FormLabel::IV: return "IV";
        case FormLabel::V: return "V";
    }
    return "?";
}

bool verify_mcs(const BinaryMatrix& m, const Bitset& s) {
    if (s.none()) throw std::invalid_argument("verify_mcs: empty row set");
    if (is_c1p(m, s).holds) return false;
    for (int x = s.first(); x >= 0; x = s.next(x + 1)) {
        Bitset sub = s;
        sub.reset(x);
        if (!is_c1p(m, sub).holds) return false;
    }
    return true;
}

bool verify_mcs(const BinaryMatrix& m, const std::vector<RowId>& s) {
    Bitset b(m.m());
    for (RowId r : s) {
        if (r < 0 || r >= m.m()) throw std::invalid_argument("verify_mcs: row id out of range");
        b.set(r);
    }
    return verify_mcs(m, b);
}

std::vector<RowId> kernels_of(const BinaryMatrix& m, const std::vector<RowId>& s) {
    std::vector<RowId> out;
    for (RowId a : s) {
        bool all = true;
        for (RowId b : s)
            if (b != a && !m.row(a).intersects(m.row(b))) {
                all = false;
                break;
            }
        if (all) out.push_back(a);
    }
    return out;
}

namespace {

bool edge(const BinaryMatrix& m, RowId a, RowId b) { return m.row(a).intersects(m.row(b)); }

bool induces_chordless_cycle(const BinaryMatrix& m, const std::vector<RowId>& s) {
    if (s.size() < 4) return false;
    // connected and 2-regular within s means exactly one chordless cycle
    size_t k = s.size();
    std::vector<int> deg(k, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (edge(m, s[i], s[j])) {
                ++deg[i];
                ++deg[j];
            }
    for (int d : deg)
        if (d != 2) return false;
    std::vector<bool> seen(k, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t cnt = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t u = 0; u < k; ++u)
            if (!seen[u] && edge(m, s[v], s[u])) {
                seen[u] = true;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == k;
}

// size-3 obstruction conditions; the shared-column pattern is tested before
// the private-column pattern so that triples realizing both are labelled V
bool v3_pattern(const RowSet& a, const RowSet& b, const RowSet& c) {
    return ((a & b) - c).any() && ((a & c) - b).any() && ((b & c) - a).any();
}
bool iv3_pattern(const RowSet& a, const RowSet& b, const RowSet& c) {
    return (a - (b | c)).any() && (b - (a | c)).any() && (c - (a | b)).any();
}
bool pairwise_overlapping(const RowSet& a, const RowSet& b, const RowSet& c) {
    return overlap(a, b) && overlap(a, c) && overlap(b, c);
}

// set-level shapes of the size-4 obstructions, over all role assignments

bool ii4_shape(const BinaryMatrix& m, const std::vector<RowId>& s, const std::vector<RowId>& kernels) {
    if (kernels.size() != 1) return false;
    std::vector<RowId> rest;
    for (RowId r : s)
        if (r != kernels[0]) rest.push_back(r);
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
            if (edge(m, rest[i], rest[j])) return false;
    for (RowId r : rest)
        if (!overlap(m.row(kernels[0]), m.row(r))) return false;
    return true;
}

bool iii4_shape(const BinaryMatrix& m, const std::vector<RowId>& s) {
    // kernel_1 overlaps everything; kernel_2 shares a column with each
    // non-kernel away from kernel_1; the non-kernels are non-adjacent
    for (RowId k1 : s)
        for (RowId k2 : s) {
            if (k2 == k1) continue;
            for (RowId n1 : s) {
                if (n1 == k1 || n1 == k2) continue;
                for (RowId n2 : s) {
                    if (n2 == k1 || n2 == k2 || n2 >= n1) continue;  // n1/n2 symmetric
                    const RowSet &K1 = m.row(k1), &K2 = m.row(k2), &N1 = m.row(n1), &N2 = m.row(n2);
                    if (overlap(N1, K1) && overlap(N2, K1) && overlap(K2, K1) &&
                        (K1 - (N1 & K2 & N2)).any() && !edge(m, n1, n2) && ((N1 & K2) - K1).any() &&
                        ((K2 & N2) - K1).any())
                        return true;
                }
            }
        }
    return false;
}

bool iv4_shape(const BinaryMatrix& m, const std::vector<RowId>& s) {
    for (RowId k1 : s)
        for (RowId k2 : s) {
            if (k2 == k1) continue;
            for (RowId n1 : s) {
                if (n1 == k1 || n1 == k2) continue;
                for (RowId n2 : s) {
                    if (n2 == k1 || n2 == k2 || n2 >= n1) continue;
                    const RowSet &K1 = m.row(k1), &K2 = m.row(k2), &N1 = m.row(n1), &N2 = m.row(n2);
                    if (edge(m, n1, k1) && edge(m, k2, k1) && edge(m, n2, k1) &&
                        (K1 - (N1 & K2 & N2)).any() && !edge(m, n1, n2) && (N1 & K2).any() &&
                        (K2 & N2).any() && (N1 - (K1 | K2)).any() && (N2 - (K1 | K2)).any())
                        return true;
                }
            }
        }
    return false;
}

bool v4_shape(const BinaryMatrix& m, const std::vector<RowId>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!edge(m, s[i], s[j])) return false;
    // three couples: two disjoint ones and one bridging them, each sharing a
    // column private to the couple
    std::vector<RowId> p(s);
    std::sort(p.begin(), p.end());
    do {
        const RowSet &A = m.row(p[0]), &B = m.row(p[1]), &C = m.row(p[2]), &D = m.row(p[3]);
        if (((A & B) - (C | D)).any() && ((C & D) - (A | B)).any() && ((B & C) - (A | D)).any()) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

Classification classify_certificate(const BinaryMatrix& m, const std::vector<RowId>& s) {
    if (!verify_mcs(m, s)) throw std::invalid_argument("classify_certificate: set is not a minimal conflicting set");
    std::vector<RowId> kernels = kernels_of(m, s);
    size_t k = s.size();

    if (kernels.empty()) {
        if (induces_chordless_cycle(m, s)) return {FormLabel::I, kernels};
        throw ClassifyError("kernel-free conflicting set does not induce a chordless cycle");
    }
    if (k == 3) {
        const RowSet &a = m.row(s[0]), &b = m.row(s[1]), &c = m.row(s[2]);
        if (!pairwise_overlapping(a, b, c))
            throw ClassifyError("size-3 conflicting set is not pairwise overlapping");
        if (v3_pattern(a, b, c)) return {FormLabel::V, kernels};
        if (iv3_pattern(a, b, c)) return {FormLabel::IV, kernels};
        throw ClassifyError("size-3 conflicting set matches neither size-3 pattern");
    }
    if (k == 4) {
        if (ii4_shape(m, s, kernels)) return {FormLabel::II, kernels};
        if (iii4_shape(m, s)) return {FormLabel::III, kernels};
        if (iv4_shape(m, s)) return {FormLabel::IV, kernels};
        if (v4_shape(m, s)) return {FormLabel::V, kernels};
        throw ClassifyError("size-4 conflicting set matches no obstruction shape");
    }
    // larger sets: the kernel count separates the remaining families
    if (kernels.size() == 1) return {FormLabel::IV, kernels};
    if (k == 5 && kernels.size() == 3) return {FormLabel::V, kernels};
    if (k >= 6 && kernels.size() == 2) return {FormLabel::V, kernels};
    throw ClassifyError("conflicting set of size " + std::to_string(k) + " with " +
                        std::to_string(kernels.size()) + " kernels matches no obstruction shape");
}

}  // namespace mcsq
