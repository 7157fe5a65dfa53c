#ifndef FROBKIT_SMITH_HPP
#define FROBKIT_SMITH_HPP

#include "frobkit/matrix.hpp"

namespace frobkit {

/// U * A * V = S with U, V unimodular and S diagonal, entries
/// non-negative and forming a divisibility chain d1 | d2 | ...
struct SmithDecomposition {
    IntMatrix u, s, v;

    std::vector<BigInt> diagonal() const {
        size_t n = std::min(s.rows(), s.cols());
        std::vector<BigInt> d(n);
        for (size_t i = 0; i < n; ++i) d[i] = s(i, i);
        return d;
    }
};

/// Elementary row/column reduction with pivoting on the minimal
/// absolute value; fine for desk-scale matrices.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace frobkit

#endif
