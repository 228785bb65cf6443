#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel transform k_n = det[a_{i+j}]_{0<=i,j<=n} and its scaling under L^(h,y).
 *
 * Under the operator the transform obeys H(L^(h,y)(a))_n = h^(n(n+1)) k_n,
 * independently of y.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/operator.hpp"
#include "binterp/rational.hpp"
#include "binterp/sequences.hpp"

namespace binterp {

struct HankelResult {
    std::vector<Rational> determinants;

    friend bool operator==(const HankelResult&, const HankelResult&) = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational{1};
    Rational sign{1};
    Rational prev_pivot{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Rational{0};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// k_0..k_m with m = floor((N-1)/2); k_n needs a_0..a_{2n}.
inline HankelResult hankel_transform(const SequencePrefix& a) {
    const std::size_t m = (a.size() - 1) / 2;
    HankelResult out;
    out.determinants.reserve(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        std::vector<std::vector<Rational>> mat(n + 1, std::vector<Rational>(n + 1));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) mat[i][j] = a[i + j];
        out.determinants.push_back(bareiss_determinant(std::move(mat)));
    }
    return out;
}

/// H(L^(h,y)(a))_n == h^(n(n+1)) H(a)_n for every computable n.
inline bool hankel_scaling_check(const SequencePrefix& a, const Rational& h, const Rational& y) {
    const HankelResult base = hankel_transform(a);
    const HankelResult image = hankel_transform(apply({h, y}, a));
    for (std::size_t n = 0; n < base.determinants.size(); ++n)
        if (image.determinants[n] != ipow(h, n * (n + 1)) * base.determinants[n]) return false;
    return true;
}

}  // namespace binterp
