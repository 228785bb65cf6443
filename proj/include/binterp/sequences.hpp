#pragma once

/**
 * @file sequences.hpp
 * @brief Finite sequence prefixes, linear recurrences, and the shift/sign operators.
 *
 * Sequences are always finite prefixes a_0..a_{N-1}. Two sequences are "equal"
 * when they agree on the overlap that is being compared; the library never
 * pretends to hold an infinite object.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/polynomial.hpp"
#include "binterp/rational.hpp"

namespace binterp {

class SequencePrefix {
   public:
    explicit SequencePrefix(std::vector<Rational> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw invalid_argument("a sequence prefix needs at least one term");
    }
    SequencePrefix(std::initializer_list<Rational> terms) : SequencePrefix(std::vector<Rational>(terms)) {}

    std::size_t size() const noexcept { return terms_.size(); }
    const Rational& operator[](std::size_t n) const { return terms_[n]; }
    const Rational& at(std::size_t n) const { return terms_.at(n); }
    const std::vector<Rational>& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// First n terms; n must not exceed size().
    SequencePrefix prefix(std::size_t n) const {
        if (n == 0 || n > size()) throw invalid_argument("prefix length out of range");
        return SequencePrefix(std::vector<Rational>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    friend bool operator==(const SequencePrefix&, const SequencePrefix&) = default;

   private:
    std::vector<Rational> terms_;
};

/// Smallest index where the overlapping ranges of a and b differ.
inline std::optional<std::size_t> first_mismatch(const SequencePrefix& a, const SequencePrefix& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

inline bool agree_on_overlap(const SequencePrefix& a, const SequencePrefix& b) { return !first_mismatch(a, b); }

/**
 * A sequence obeying a_n = -(c_1 a_{n-1} + ... + c_r a_{n-r}) for
 * charpoly t^r + c_1 t^(r-1) + ... + c_r, with initial terms a_0..a_{r-1}.
 * The charpoly need not be minimal.
 */
class LinearRecurrence {
   public:
    LinearRecurrence(MonicPolynomial charpoly, std::vector<Rational> initial)
        : charpoly_(std::move(charpoly)), initial_(std::move(initial)) {
        if (charpoly_.degree() == 0) throw invalid_argument("recurrence order must be at least 1");
        if (initial_.size() != charpoly_.degree())
            throw invalid_argument("recurrence of order " + std::to_string(charpoly_.degree()) + " needs exactly " +
                                   std::to_string(charpoly_.degree()) + " initial terms, got " +
                                   std::to_string(initial_.size()));
    }

    std::size_t order() const noexcept { return charpoly_.degree(); }
    const MonicPolynomial& charpoly() const noexcept { return charpoly_; }
    const std::vector<Rational>& initial() const noexcept { return initial_; }

    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;

   private:
    MonicPolynomial charpoly_;
    std::vector<Rational> initial_;
};

/// W(delta, gamma, p, q): a_0 = delta, a_1 = gamma, a_n = p a_{n-1} - q a_{n-2}.
struct Degree2Spec {
    Rational delta;
    Rational gamma;
    Rational p;
    Rational q;

    /// Stored with charpoly t^2 - p t + q.
    LinearRecurrence recurrence() const {
        return LinearRecurrence(MonicPolynomial({Rational(-p), q}), {delta, gamma});
    }

    friend bool operator==(const Degree2Spec&, const Degree2Spec&) = default;
};

/// First n terms of rec; for n <= order this is a prefix of the initial terms.
inline SequencePrefix generate(const LinearRecurrence& rec, std::size_t n) {
    if (n == 0) throw invalid_argument("generate: n must be at least 1");
    const std::size_t r = rec.order();
    const auto& c = rec.charpoly().trailing();
    std::vector<Rational> a(rec.initial().begin(), rec.initial().begin() + static_cast<std::ptrdiff_t>(std::min(n, r)));
    a.reserve(n);
    for (std::size_t k = r; k < n; ++k) {
        Rational next;
        for (std::size_t i = 1; i <= r; ++i) next -= c[i - 1] * a[k - i];
        a.push_back(std::move(next));
    }
    return SequencePrefix(std::move(a));
}

inline SequencePrefix generate(const Degree2Spec& spec, std::size_t n) { return generate(spec.recurrence(), n); }

/// True iff every index n >= order of a satisfies the recurrence given by charpoly.
inline bool satisfies(const SequencePrefix& a, const MonicPolynomial& charpoly) {
    const std::size_t r = charpoly.degree();
    for (std::size_t n = r; n < a.size(); ++n) {
        Rational acc = a[n];
        for (std::size_t i = 1; i <= r; ++i) acc += charpoly.coefficient(i) * a[n - i];
        if (acc != 0) return false;
    }
    return true;
}

/// sigma: (a_1, a_2, ...). Needs at least two terms.
inline SequencePrefix right_shift(const SequencePrefix& a) {
    if (a.size() < 2) throw invalid_argument("right_shift: a one-term prefix leaves nothing");
    return SequencePrefix(std::vector<Rational>(a.begin() + 1, a.end()));
}

/// epsilon: ((-1)^n a_n).
inline SequencePrefix epsilon(const SequencePrefix& a) {
    std::vector<Rational> out(a.terms());
    for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
    return SequencePrefix(std::move(out));
}

/// a_{n+1} = sum_{i=0}^{n} binom(n,i) h^i y^(n-i) a_i, seeded with a_0.
inline SequencePrefix variant_sequence(const Rational& h, const Rational& y, const Rational& a0, std::size_t n) {
    if (n == 0) throw invalid_argument("variant_sequence: n must be at least 1");
    const auto hp = powers(h, n);
    const auto yp = powers(y, n);
    std::vector<Rational> a{a0};
    a.reserve(n);
    for (std::size_t m = 0; a.size() < n; ++m) {
        const auto row = binomial_row(m);
        Rational next;
        for (std::size_t i = 0; i <= m; ++i) next += Rational{row[i]} * hp[i] * yp[m - i] * a[i];
        a.push_back(std::move(next));
    }
    return SequencePrefix(std::move(a));
}

}  // namespace binterp
