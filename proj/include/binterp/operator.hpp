#pragma once

/**
 * @file operator.hpp
 * @brief The generalized binomial interpolated operator L^(h,y).
 *
 *     L^(h,y)(a) = b,   b_n = sum_{i=0}^{n} binom(n,i) h^i y^(n-i) a_i.
 *
 * With 0^0 = 1 the single formula also yields the degenerate operators
 * L^(0,y)(a) = (y^n a_0), L^(h,0)(a) = (h^n a_n) and L^(0,0)(a) = (a_0, 0, 0, ...).
 *
 * Composition: L^(h,y) o L^(k,w) = L^(hk, y + wh). Operators with h != 0 form
 * a group with identity L^(1,0) and inverse L^(1/h, -y/h).
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/polynomial.hpp"
#include "binterp/rational.hpp"
#include "binterp/sequences.hpp"

namespace binterp {

struct BinomialOperator {
    Rational h{1};
    Rational y{0};

    static BinomialOperator identity() { return {Rational{1}, Rational{0}}; }

    bool invertible() const { return h != 0; }

    friend bool operator==(const BinomialOperator&, const BinomialOperator&) = default;
};

/// Termwise action on a prefix. O(N^2) multiplications; output has the input's length.
inline SequencePrefix apply(const BinomialOperator& op, const SequencePrefix& a) {
    const std::size_t n_terms = a.size();
    const auto hp = powers(op.h, n_terms);
    const auto yp = powers(op.y, n_terms);

    // h^i a_i does not depend on n
    std::vector<Rational> scaled(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) scaled[i] = hp[i] * a[i];

    std::vector<Rational> b(n_terms);
    std::vector<Integer> row{Integer{1}};
    for (std::size_t n = 0; n < n_terms; ++n) {
        if (n > 0) {
            std::vector<Integer> next(n + 1);
            next[0] = next[n] = 1;
            for (std::size_t k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
            row = std::move(next);
        }
        Rational acc;
        for (std::size_t i = 0; i <= n; ++i) {
            if (scaled[i] == 0) continue;
            acc += Rational{row[i]} * yp[n - i] * scaled[i];
        }
        b[n] = std::move(acc);
    }
    return SequencePrefix(std::move(b));
}

/// outer o inner = L^(h k, y + w h).
inline BinomialOperator compose(const BinomialOperator& outer, const BinomialOperator& inner) {
    return {outer.h * inner.h, outer.y + inner.y * outer.h};
}

inline BinomialOperator inverse(const BinomialOperator& op) {
    if (op.h == 0) throw degenerate_operator("operator with h = 0 is not invertible");
    return {Rational(1 / op.h), Rational(-op.y / op.h)};
}

/**
 * Recurrence satisfied by L^(h,y)(a) when a follows rec: same order, charpoly
 * with roots h*alpha + y, initial terms obtained by applying the operator to
 * the first r source terms.
 *
 * h = 0 is rejected; the image is then the geometric sequence (y^n a_0).
 */
inline LinearRecurrence transform_recurrence(const BinomialOperator& op, const LinearRecurrence& rec) {
    if (op.h == 0)
        throw degenerate_operator("transform_recurrence: h = 0 maps every sequence to a geometric one of order 1");
    const std::size_t r = rec.order();
    MonicPolynomial g = shift_scale_poly(rec.charpoly(), op.h, op.y);
    SequencePrefix start = apply(op, generate(rec, r));
    return LinearRecurrence(std::move(g), start.terms());
}

inline bool is_fixed_prefix(const BinomialOperator& op, const SequencePrefix& a) { return apply(op, a) == a; }

}  // namespace binterp
