#pragma once

#include <map>
#include <optional>
#include <string>

#include "ihq/rational.hpp"

namespace ihq {

// Graded dimension polynomial / truncated power series in one variable t with
// exact rational coefficients. Degrees are nonnegative integers; a missing
// degree means coefficient zero. An optional truncation degree marks
// "coefficients above this degree are unknown" -- truncation is explicit
// metadata, never silent, so a truncated series can not be confused with an
// exact polynomial.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;

    static PoincarePolynomial zero() { return {}; }
    static PoincarePolynomial one() { return monomial(0, Rational(1)); }
    static PoincarePolynomial monomial(int degree, const Rational& c);
    // 1 + t^2 + ... + t^{2 complex_dim}
    static PoincarePolynomial projective_space(int complex_dim);
    static PoincarePolynomial from_coefficients(std::map<int, Rational> coeffs);
    static PoincarePolynomial from_coefficients(std::map<int, Rational> coeffs, int truncation);

    const std::map<int, Rational>& coefficients() const { return coeff_; }

    // Throws computation_error when asked for a coefficient above the
    // truncation degree.
    Rational coefficient(int degree) const;

    std::optional<int> truncation() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    // no nonzero coefficient stored (for a truncated series: zero as far as known)
    bool is_zero() const { return coeff_.empty(); }
    // largest stored degree, -1 when no nonzero coefficient is stored
    int degree() const { return coeff_.empty() ? -1 : coeff_.rbegin()->first; }

    // exact polynomials only
    Rational value_at_one() const;

    // restrict knowledge to degrees <= degree (combined with any existing truncation)
    PoincarePolynomial truncate(int degree) const;

    friend PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b);
    friend PoincarePolynomial operator-(const PoincarePolynomial& a, const PoincarePolynomial& b);
    friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
    PoincarePolynomial scaled(const Rational& c) const;

    // Strict identity: same coefficients and same truncation metadata.
    friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        return a.coeff_ == b.coeff_ && a.trunc_ == b.trunc_;
    }

    // "1 + 2 t^2 + t^4", with "+ O(t^k)" tail when truncated
    std::string str() const;

private:
    std::map<int, Rational> coeff_;
    std::optional<int> trunc_;

    void normalize();
};

struct SeriesQuotient {
    PoincarePolynomial quotient;
    // True when the input was exact and the series quotient is itself a
    // polynomial (zero remainder); the quotient is then returned untruncated.
    bool exact = false;
};

// Power-series division by (1 - t^2), computed up to out_truncation.
SeriesQuotient divide_by_one_minus_t2(const PoincarePolynomial& p, int out_truncation);

// coefficient(k) == coefficient(top_degree - k) for all k. Throws
// computation_error when p is truncated below top_degree (undecidable).
// A nonzero coefficient above top_degree yields false.
bool is_palindromic(const PoincarePolynomial& p, int top_degree);

// Equality up to the smaller truncation degree (full equality when both are
// exact). Comparing a truncated series against an exact polynomial that has
// content beyond the truncation throws computation_error: such an equality can
// neither be accepted nor refuted.
bool agree(const PoincarePolynomial& a, const PoincarePolynomial& b);

// Coefficientwise equality for all degrees <= degree; both operands must be
// known at least that far (throws computation_error otherwise).
bool equal_up_to(const PoincarePolynomial& a, const PoincarePolynomial& b, int degree);

}  // namespace ihq
