#pragma once

/**
 * @file polynomial.hpp
 * @brief Monic polynomials over Rational and the root shift/scale transform.
 *
 * A MonicPolynomial of degree r stores only c_1..c_r of
 *
 *     f(t) = t^r + c_1 t^(r-1) + ... + c_r.
 *
 * The elementary symmetric functions of the roots are sigma_i = (-1)^i c_i.
 * Text form is expanded monic notation in the variable t, e.g. "t^2-6t+1".
 */

#include <cctype>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binterp/error.hpp"
#include "binterp/rational.hpp"

namespace binterp {

class MonicPolynomial {
   public:
    /// The constant polynomial 1 (degree 0).
    MonicPolynomial() = default;

    /// From c_1..c_r.
    explicit MonicPolynomial(std::vector<Rational> trailing) : trailing_(std::move(trailing)) {}

    /// From the dense list [1, c_1, ..., c_r]; anything not led by 1 is rejected.
    static MonicPolynomial from_coefficients(std::span<const Rational> coeffs) {
        if (coeffs.empty()) throw invalid_argument("polynomial needs at least a leading coefficient");
        if (coeffs.front() != 1)
            throw invalid_argument("polynomial is not monic (leading coefficient " + to_string(coeffs.front()) + ")");
        return MonicPolynomial(std::vector<Rational>(coeffs.begin() + 1, coeffs.end()));
    }

    /// From sigma_1..sigma_r, c_i = (-1)^i sigma_i.
    static MonicPolynomial from_sigmas(std::span<const Rational> sigmas) {
        std::vector<Rational> c(sigmas.size());
        for (std::size_t i = 0; i < sigmas.size(); ++i) c[i] = sign_power(i + 1) * sigmas[i];
        return MonicPolynomial(std::move(c));
    }

    /// prod (t - root).
    static MonicPolynomial from_roots(std::span<const Rational> roots) {
        MonicPolynomial f;
        for (const Rational& root : roots) f = f * MonicPolynomial({-root});
        return f;
    }

    std::size_t degree() const noexcept { return trailing_.size(); }
    const std::vector<Rational>& trailing() const noexcept { return trailing_; }

    /// c_i with c_0 = 1.
    Rational coefficient(std::size_t i) const { return i == 0 ? Rational{1} : trailing_.at(i - 1); }

    /// sigma_i = (-1)^i c_i; sigma_0 = 1.
    Rational sigma(std::size_t i) const { return sign_power(i) * coefficient(i); }

    std::vector<Rational> sigmas() const {
        std::vector<Rational> s(degree());
        for (std::size_t i = 1; i <= degree(); ++i) s[i - 1] = sigma(i);
        return s;
    }

    /// [1, c_1, ..., c_r].
    std::vector<Rational> coefficients() const {
        std::vector<Rational> out;
        out.reserve(degree() + 1);
        out.emplace_back(1);
        out.insert(out.end(), trailing_.begin(), trailing_.end());
        return out;
    }

    Rational operator()(const Rational& t) const {
        Rational acc{1};
        for (const Rational& c : trailing_) acc = acc * t + c;
        return acc;
    }

    friend MonicPolynomial operator*(const MonicPolynomial& a, const MonicPolynomial& b) {
        std::vector<Rational> ca = a.coefficients(), cb = b.coefficients();
        std::vector<Rational> prod(ca.size() + cb.size() - 1);
        for (std::size_t i = 0; i < ca.size(); ++i)
            for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
        return from_coefficients(prod);
    }

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

   private:
    std::vector<Rational> trailing_;
};

inline MonicPolynomial power(const MonicPolynomial& f, std::size_t m) {
    MonicPolynomial out;
    for (std::size_t i = 0; i < m; ++i) out = out * f;
    return out;
}

/**
 * g(t) = h^r f((t - y) / h): the monic polynomial whose roots are h*alpha + y
 * for the roots alpha of f.
 *
 * Expanded as sum_j c_j h^j (t - y)^(r-j) using successive products with
 * (t - y); this is deliberately a different route from symmetric_coeffs().
 */
inline MonicPolynomial shift_scale_poly(const MonicPolynomial& f, const Rational& h, const Rational& y) {
    if (h == 0) throw degenerate_operator("shift_scale_poly: h = 0 collapses the degree");
    const std::size_t r = f.degree();

    // shifted[m] holds the dense coefficients of (t - y)^m, highest power first.
    std::vector<std::vector<Rational>> shifted(r + 1);
    shifted[0] = {Rational{1}};
    for (std::size_t m = 1; m <= r; ++m) {
        const auto& prev = shifted[m - 1];
        std::vector<Rational> next(m + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] += prev[i];
            next[i + 1] -= y * prev[i];
        }
        shifted[m] = std::move(next);
    }

    std::vector<Rational> g(r + 1);
    Rational hj{1};
    for (std::size_t j = 0; j <= r; ++j) {
        const Rational scale = f.coefficient(j) * hj;
        const auto& term = shifted[r - j];
        for (std::size_t i = 0; i < term.size(); ++i) g[j + i] += scale * term[i];
        hj *= h;
    }
    return MonicPolynomial::from_coefficients(g);
}

/**
 * sigma-bar_1..sigma-bar_r of the transformed polynomial:
 *
 *     sigma-bar_i = sum_{k=0}^{i} binom(r-k, i-k) h^k y^(i-k) sigma_k,  sigma_0 = 1.
 *
 * Well defined for h = 0 as well (then every root maps to y).
 */
inline std::vector<Rational> symmetric_coeffs(const MonicPolynomial& f, const Rational& h, const Rational& y) {
    const std::size_t r = f.degree();
    const auto hp = powers(h, r);
    const auto yp = powers(y, r);
    std::vector<Rational> out(r);
    for (std::size_t i = 1; i <= r; ++i) {
        Rational acc;
        for (std::size_t k = 0; k <= i; ++k)
            acc += Rational{binomial(r - k, i - k)} * hp[k] * yp[i - k] * f.sigma(k);
        out[i - 1] = acc;
    }
    return out;
}

// Text form --------------------------------------------------------------

inline std::string to_string(const MonicPolynomial& f) {
    const std::size_t r = f.degree();
    auto monomial = [](std::size_t e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return "t";
        return "t^" + std::to_string(e);
    };
    if (r == 0) return "1";
    std::string out = monomial(r);
    for (std::size_t i = 1; i <= r; ++i) {
        const Rational& c = f.coefficient(i);
        if (c == 0) continue;
        const std::size_t e = r - i;
        const Rational mag = c < 0 ? Rational(-c) : c;
        out += c < 0 ? '-' : '+';
        if (e == 0) {
            out += to_string(mag);
        } else if (mag != 1) {
            out += to_string(mag);
            if (!is_integer(mag)) out += '*';
            out += monomial(e);
        } else {
            out += monomial(e);
        }
    }
    return out;
}

/// Parses expanded monic text such as "t^2-6t+1", "t^3 - 1/2*t + 2", "t-3". Like powers are summed.
inline MonicPolynomial parse_polynomial(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw parse_error("empty polynomial");

    auto fail = [&](const std::string& why) -> parse_error {
        return parse_error("malformed polynomial '" + std::string(text) + "': " + why);
    };

    std::map<std::size_t, Rational> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-'");
        }
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        Rational coeff{1};
        const bool has_coeff = pos > start;
        if (has_coeff) coeff = parse_rational(std::string_view(s).substr(start, pos - start));
        if (pos < s.size() && s[pos] == '*') {
            if (!has_coeff) throw fail("'*' without coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 't') throw fail("expected 't' after '*'");
        }
        std::size_t exponent = 0;
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == estart) throw fail("missing exponent");
                exponent = std::stoul(s.substr(estart, pos - estart));
            }
        } else if (!has_coeff) {
            throw fail("empty term");
        }
        terms[exponent] += negative ? Rational(-coeff) : coeff;
    }

    std::size_t degree = 0;
    for (const auto& [e, c] : terms)
        if (c != 0) degree = std::max(degree, e);
    std::vector<Rational> dense(degree + 1);
    for (const auto& [e, c] : terms)
        if (e <= degree) dense[degree - e] = c;
    return MonicPolynomial::from_coefficients(dense);
}

}  // namespace binterp
