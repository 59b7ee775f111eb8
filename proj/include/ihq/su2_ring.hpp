#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ihq/laurent.hpp"
#include "ihq/rational.hpp"

namespace ihq {

// Element of the torus-equivariant cohomology of (P^1)^n in normal form:
// linear combination of monomials alpha_S beta^k with S a subset of the
// factors (square-free in the alphas, every alpha_i^2 rewritten to beta^2) and
// k >= 0. Keys are (subset bitmask, beta exponent); degree is 2(|S| + k).
// The class is Weyl-invariant exactly when only even k occur.
struct SU2Class {
    std::map<std::pair<std::uint32_t, int>, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
};

SU2Class su2_add(const SU2Class& a, const SU2Class& b);
SU2Class su2_sub(const SU2Class& a, const SU2Class& b);
SU2Class su2_scale(const SU2Class& a, const Rational& c);

// The ring Q[alpha_1..alpha_n, beta] / (alpha_i^2 = beta^2) for the diagonal
// action on (P^1)^n; alpha_i restricts to a_i beta at the torus-fixed point
// with sign vector a.
class SU2Ring {
public:
    explicit SU2Ring(int n);

    int n() const { return n_; }

    SU2Class zero() const { return {}; }
    SU2Class one() const;
    SU2Class alpha(int i) const;  // 0-based factor index
    SU2Class beta() const;
    SU2Class omega() const;  // sum of the alphas (the Kaehler class)

    SU2Class mul(const SU2Class& a, const SU2Class& b) const;
    SU2Class pow(const SU2Class& a, int exponent) const;

    // normal form of a raw monomial with arbitrary alpha exponents
    SU2Class monomial(const std::vector<int>& alpha_exps, int beta_exp, const Rational& c) const;

    bool is_weyl_invariant(const SU2Class& c) const;
    std::optional<int> homogeneous_degree(const SU2Class& c) const;

    // substitute alpha_i -> a_i beta; the result is a polynomial in beta
    LaurentSeriesBeta restrict_to_fixed(const SU2Class& c, const std::vector<int>& signs) const;

private:
    int n_;
};

}  // namespace ihq
