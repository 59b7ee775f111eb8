#pragma once

#include <map>
#include <string>

#include "ihq/rational.hpp"

namespace ihq {

// Finite Laurent polynomial in the equivariant parameter beta: exact rational
// coefficients, finitely many terms, negative exponents allowed. Fixed-point
// localization terms live here.
class LaurentSeriesBeta {
public:
    LaurentSeriesBeta() = default;

    static LaurentSeriesBeta monomial(int exponent, const Rational& c);

    const std::map<int, Rational>& coefficients() const { return coeff_; }
    Rational coefficient(int exponent) const;

    bool is_zero() const { return coeff_.empty(); }
    bool has_negative_exponents() const {
        return !coeff_.empty() && coeff_.begin()->first < 0;
    }

    LaurentSeriesBeta& operator+=(const LaurentSeriesBeta& o);
    friend LaurentSeriesBeta operator+(LaurentSeriesBeta a, const LaurentSeriesBeta& b) {
        a += b;
        return a;
    }
    friend LaurentSeriesBeta operator-(const LaurentSeriesBeta& a, const LaurentSeriesBeta& b) {
        return a + b.scaled(Rational(-1));
    }
    friend LaurentSeriesBeta operator*(const LaurentSeriesBeta& a, const LaurentSeriesBeta& b);
    LaurentSeriesBeta scaled(const Rational& c) const;
    LaurentSeriesBeta shifted(int exponent_delta) const;  // multiply by beta^delta

    friend bool operator==(const LaurentSeriesBeta& a, const LaurentSeriesBeta& b) {
        return a.coeff_ == b.coeff_;
    }

    std::string str() const;  // "1/2 b^-1 + 3 b^2"

private:
    std::map<int, Rational> coeff_;
};

}  // namespace ihq
