#pragma once

/**
 * @file fixed_points.hpp
 * @brief Sequences left unchanged by L^(h,y).
 *
 * Known families:
 *  - geometric: a_n = (y / (1 - h))^n a_0 is fixed by L^(h,y) whenever 1 - h != 0;
 *  - a_0 = 1: only (1, 0) and (-1, 2 a_1) can fix the first three terms;
 *  - W(delta, gamma, p, q) is fixed by L^(-1,p) iff gamma = p delta / 2, and then
 *    L^(h,y)(a) = L^(-h, y + p h)(a) for every (h, y);
 *  - charpoly (t^2 - p t + q)^m is preserved by L^(-1,p).
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/operator.hpp"
#include "binterp/polynomial.hpp"
#include "binterp/rational.hpp"
#include "binterp/sequences.hpp"

namespace binterp {

struct FixedPointReport {
    BinomialOperator op;
    std::size_t verified_length = 0;
    bool fixed = false;
    std::optional<std::size_t> first_mismatch;

    friend bool operator==(const FixedPointReport&, const FixedPointReport&) = default;
};

inline FixedPointReport check_fixed(const BinomialOperator& op, const SequencePrefix& a) {
    auto mismatch = first_mismatch(apply(op, a), a);
    return {op, a.size(), !mismatch.has_value(), mismatch};
}

inline SequencePrefix geometric_fixed_sequence(const Rational& h, const Rational& y, const Rational& a0,
                                               std::size_t n) {
    if (h == 1) throw degenerate_operator("geometric_fixed_sequence: 1 - h is not invertible");
    if (n == 0) throw invalid_argument("geometric_fixed_sequence: n must be at least 1");
    const Rational ratio = y / (1 - h);
    std::vector<Rational> a(n);
    a[0] = a0;
    for (std::size_t i = 1; i < n; ++i) a[i] = a[i - 1] * ratio;
    return SequencePrefix(std::move(a));
}

/// Candidate operators fixing a sequence that starts with a_0 = 1.
inline std::vector<BinomialOperator> unit_start_fixed_params(const Rational& a1) {
    return {BinomialOperator::identity(), {Rational{-1}, Rational(2 * a1)}};
}

inline bool has_fixing_reflection(const Degree2Spec& spec) { return spec.gamma * 2 == spec.p * spec.delta; }

/**
 * Operators among {(1,0), (-1,p)} that fix W(delta, gamma, p, q).
 *
 * This is the degree-2 characterization; it says nothing about sequences that
 * actually satisfy a shorter recurrence (e.g. constants or zero), which have
 * further fixing operators from the geometric family.
 */
inline std::vector<BinomialOperator> degree2_fixed_test(const Degree2Spec& spec) {
    std::vector<BinomialOperator> out{BinomialOperator::identity()};
    if (has_fixing_reflection(spec)) out.push_back({Rational{-1}, spec.p});
    return out;
}

namespace detail {
inline void require_reflection(const Degree2Spec& spec, const char* who) {
    if (!has_fixing_reflection(spec))
        throw invalid_argument(std::string(who) + ": requires gamma = p * delta / 2");
}
}  // namespace detail

/// L^(h,y)(a) == L^(-h, y + p h)(a) on n terms.
inline bool mirrored_operator_identity_check(const Degree2Spec& spec, const Rational& h, const Rational& y,
                                             std::size_t n) {
    detail::require_reflection(spec, "mirrored_operator_identity_check");
    const SequencePrefix a = generate(spec, n);
    return apply({h, y}, a) == apply({Rational(-h), Rational(y + spec.p * h)}, a);
}

/// sum_{i=0}^{n-1} binom(n,i) (-1)^i p^(n-i) a_i; 0 for even n and 2 a_n for odd n.
inline Rational alternating_sum_identity(const Degree2Spec& spec, std::size_t n) {
    detail::require_reflection(spec, "alternating_sum_identity");
    if (n == 0) throw invalid_argument("alternating_sum_identity: n must be at least 1");
    const SequencePrefix a = generate(spec, n);
    const auto row = binomial_row(n);
    const auto pp = powers(spec.p, n);
    Rational acc;
    for (std::size_t i = 0; i < n; ++i) acc += Rational{row[i]} * sign_power(i) * pp[n - i] * a[i];
    return acc;
}

/**
 * For a recurrence with charpoly (t^2 - p t + q)^m: true iff L^(-1,p) maps it to
 * a recurrence with the same charpoly, and the termwise image of an n-term
 * prefix satisfies that charpoly.
 */
inline bool charpoly_power_preservation(const Rational& p, const Rational& q, std::size_t m,
                                        const std::vector<Rational>& initial, std::size_t n) {
    if (m == 0) throw invalid_argument("charpoly_power_preservation: m must be at least 1");
    const MonicPolynomial f = power(MonicPolynomial({Rational(-p), q}), m);
    const LinearRecurrence rec(f, initial);
    const BinomialOperator reflection{Rational{-1}, p};
    const LinearRecurrence image = transform_recurrence(reflection, rec);
    if (image.charpoly() != f) return false;
    return n == 0 || satisfies(apply(reflection, generate(rec, n)), f);
}

}  // namespace binterp
