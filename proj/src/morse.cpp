#include "ihq/morse.hpp"

namespace ihq {

namespace {

void require_even_degrees(const PoincarePolynomial& p, const std::string& what) {
    for (const auto& [d, c] : p.coefficients())
        if (d % 2 != 0)
            throw computation_error(what + " has an odd-degree coefficient (t^" +
                                    std::to_string(d) + "); only even degrees occur here");
}

}  // namespace

int morse_index(const FixedComponent& f) {
    if (f.moment_value.is_zero())
        throw computation_error("morse_index: component '" + f.label +
                                "' lies at moment zero (minimum stratum, no index)");
    int mu_sign = f.moment_value.sign();
    int count = 0;
    for (int w : f.normal_weights)
        if (w * mu_sign < 0) ++count;
    return 2 * count;
}

int default_truncation(const CircleSpace& space) { return 2 * (2 * space.half_dim - 2) + 4; }

PoincarePolynomial equivariant_series_Z(const CircleSpace& space, int out_truncation) {
    const int dim_reduction = 2 * space.half_dim - 2;
    if (out_truncation < dim_reduction)
        throw computation_error("equivariant_series_Z: truncation " + std::to_string(out_truncation) +
                                " below the reduction dimension " + std::to_string(dim_reduction));
    require_even_degrees(space.ambient_poincare, "ambient Poincare polynomial");
    PoincarePolynomial numerator = space.ambient_poincare;
    for (const auto& f : space.components) {
        if (f.moment_value.is_zero()) continue;
        require_even_degrees(f.poincare, "component '" + f.label + "'");
        numerator = numerator - PoincarePolynomial::monomial(morse_index(f), Rational(1)) * f.poincare;
    }
    PoincarePolynomial series = divide_by_one_minus_t2(numerator, out_truncation).quotient;
    for (const auto& [d, c] : series.coefficients())
        if (!c.is_integer() || c.sign() < 0)
            throw computation_error("equivariant series of Z has a negative or non-integral "
                                    "coefficient " + c.str() + " at degree " + std::to_string(d) +
                                    ": Morse data is inconsistent");
    return series;
}

PoincarePolynomial equivariant_series_M(const CircleSpace& space, int out_truncation) {
    if (out_truncation < 0) throw computation_error("equivariant_series_M: negative truncation");
    return divide_by_one_minus_t2(space.ambient_poincare, out_truncation).quotient;
}

}  // namespace ihq
