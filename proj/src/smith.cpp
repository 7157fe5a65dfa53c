#include "frobkit/smith.hpp"

namespace frobkit {

size_t rank_of(std::vector<IntVec> vecs) {
    if (vecs.empty()) return 0;
    const size_t n = vecs[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < vecs.size(); ++col) {
        size_t piv = rank;
        while (piv < vecs.size() && vecs[piv][col] == 0) ++piv;
        if (piv == vecs.size()) continue;
        std::swap(vecs[rank], vecs[piv]);
        for (size_t i = rank + 1; i < vecs.size(); ++i) {
            if (vecs[i][col] == 0) continue;
            // integer cross-multiplication keeps everything exact
            const BigInt a = vecs[rank][col], b = vecs[i][col];
            for (size_t j = col; j < n; ++j)
                vecs[i][j] = a * vecs[i][j] - b * vecs[rank][j];
        }
        ++rank;
    }
    return rank;
}

BigInt determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw InputError("determinant: not square");
    const size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

namespace {

// Locate the entry of minimal |value| != 0 in the trailing block; false if all zero.
bool min_abs_pivot(const IntMatrix& s, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    BigInt best;
    for (size_t i = t; i < s.rows(); ++i)
        for (size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            BigInt a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix& s, size_t t) {
    for (size_t i = t + 1; i < s.rows(); ++i)
        if (s(i, t) != 0) return false;
    for (size_t j = t + 1; j < s.cols(); ++j)
        if (s(t, j) != 0) return false;
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition dec;
    dec.u = IntMatrix::identity(a.rows());
    dec.v = IntMatrix::identity(a.cols());
    dec.s = a;
    IntMatrix& s = dec.s;

    const size_t steps = std::min(a.rows(), a.cols());
    for (size_t t = 0; t < steps; ++t) {
        size_t pi = t, pj = t;
        if (!min_abs_pivot(s, t, pi, pj)) break;  // trailing block is zero
        for (;;) {
            s.swap_rows(t, pi);
            dec.u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            dec.v.swap_cols(t, pj);

            for (size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                BigInt k = floor_div(s(i, t), s(t, t));
                s.add_row(i, t, -k);
                dec.u.add_row(i, t, -k);
            }
            for (size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                BigInt k = floor_div(s(t, j), s(t, t));
                s.add_col(j, t, -k);
                dec.v.add_col(j, t, -k);
            }
            if (!row_col_clear(s, t)) {
                min_abs_pivot(s, t, pi, pj);
                continue;
            }
            // pivot is lone; enforce the divisibility chain
            bool divides_all = true;
            for (size_t i = t + 1; i < s.rows() && divides_all; ++i)
                for (size_t j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row(t, i, 1);
                        dec.u.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            pi = t;
            pj = t;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            dec.u.negate_row(t);
        }
    }
    return dec;
}

}  // namespace frobkit
