#pragma once

/**
 * @file decimation.hpp
 * @brief Extracting (a_{kn}) from a degree-2 recurrence with one operator application.
 *
 * For a = W(delta, gamma, p, q), u = W(0, 1, p, q) and v = W(2, p, p, q):
 *
 *     (a_{kn}) = L^(u_k, -q u_{k-1})(a)   and   (a_{kn}) = W(a_0, a_k, v_k, q^k).
 */

#include <cstddef>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/operator.hpp"
#include "binterp/rational.hpp"
#include "binterp/sequences.hpp"

namespace binterp {

/// The fundamental solutions u = W(0,1,p,q) and v = W(2,p,p,q), n terms each.
struct LucasPair {
    Rational p;
    Rational q;
    SequencePrefix u;
    SequencePrefix v;
};

inline LucasPair lucas_pair(const Rational& p, const Rational& q, std::size_t n) {
    return {p, q, generate(Degree2Spec{0, 1, p, q}, n), generate(Degree2Spec{2, p, p, q}, n)};
}

inline BinomialOperator decimation_operator(const Rational& p, const Rational& q, std::size_t k) {
    if (k == 0) throw invalid_argument("decimation_operator: k must be at least 1");
    const SequencePrefix u = generate(Degree2Spec{0, 1, p, q}, k + 1);
    return {u[k], Rational(-q * u[k - 1])};
}

/// (a_0, a_k, a_2k, ...) as far as a reaches.
inline SequencePrefix decimate_prefix(const SequencePrefix& a, std::size_t k) {
    if (k == 0) throw invalid_argument("decimate_prefix: k must be at least 1");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < a.size(); i += k) out.push_back(a[i]);
    return SequencePrefix(std::move(out));
}

inline LinearRecurrence decimated_recurrence(const Degree2Spec& spec, std::size_t k) {
    if (k == 0) throw invalid_argument("decimated_recurrence: k must be at least 1");
    const SequencePrefix a = generate(spec, k + 1);
    const SequencePrefix v = generate(Degree2Spec{2, spec.p, spec.p, spec.q}, k + 1);
    return Degree2Spec{a[0], a[k], v[k], ipow(spec.q, k)}.recurrence();
}

}  // namespace binterp
