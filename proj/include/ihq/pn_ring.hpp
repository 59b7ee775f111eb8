#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ihq/rational.hpp"

namespace ihq {

// Element of the circle-equivariant cohomology of a projective space in the
// presentation by the hyperplane class x and the equivariant parameter beta
// (both of degree 2). Stored in canonical normal form: x-exponent at most the
// projective dimension. The keys are (x exponent, beta exponent).
struct PnClass {
    std::map<std::pair<int, int>, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
};

// Polynomial in a component's own hyperplane class xi (nilpotent) and beta;
// the result type of restricting a class to a fixed component. Keys are
// (xi exponent, beta exponent).
struct XiBetaPoly {
    std::map<std::pair<int, int>, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
};

// total degree 2(k + l) when all monomials share it
std::optional<int> homogeneous_degree(const PnClass& c);

PnClass pn_add(const PnClass& a, const PnClass& b);
PnClass pn_sub(const PnClass& a, const PnClass& b);
PnClass pn_scale(const PnClass& a, const Rational& c);

// The ring Q[x, beta] / (product over weight values a of (x - a beta)^{m_a})
// for a linear circle action with the given weights; x restricts to a beta on
// the component at weight value a.
class PnRing {
public:
    explicit PnRing(std::vector<int> weights);

    int projective_dim() const { return n_; }
    const std::vector<int>& weights() const { return weights_; }

    PnClass zero() const { return {}; }
    PnClass one() const { return monomial(0, 0, Rational(1)); }
    PnClass x() const { return monomial(1, 0, Rational(1)); }
    PnClass beta() const { return monomial(0, 1, Rational(1)); }
    PnClass monomial(int x_exp, int beta_exp, const Rational& c) const;

    PnClass mul(const PnClass& a, const PnClass& b) const;
    PnClass pow(const PnClass& a, int exponent) const;

    // reduce arbitrary (x_exp, beta_exp) data modulo the defining relation
    PnClass normal_form(const std::map<std::pair<int, int>, Rational>& raw) const;

    // Substitute x -> xi + a beta and reduce modulo xi^multiplicity: the
    // restriction to the component at weight value a of multiplicity m.
    XiBetaPoly restrict_to_value(const PnClass& c, int weight_value, int multiplicity) const;

private:
    int n_;
    std::vector<int> weights_;  // sorted
    // x^{n+1} = sum_k relation_[k] x^k beta^{n+1-k}, k = 0..n
    std::vector<Rational> relation_;
};

}  // namespace ihq
