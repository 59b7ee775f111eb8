#include "ihq/circle_ih.hpp"

#include <algorithm>

#include "ihq/linalg.hpp"
#include "ihq/morse.hpp"

namespace ihq {

SingularityData singularity_data(const FixedComponent& f) {
    if (!f.moment_value.is_zero())
        throw computation_error("singularity_data: component '" + f.label +
                                "' has nonzero moment value");
    int p = f.positive_weight_count();
    int q = f.negative_weight_count();
    if (p == 0 || q == 0)
        throw computation_error("singularity_data: component '" + f.label +
                                "' has normal weights of one sign only; the zero level has no "
                                "finite-stabilizer points near it");
    SingularityData s;
    s.component_label = f.label;
    s.d = std::min(p, q);
    s.e = std::max(p, q);
    s.perversity_n = 2 * s.d - 1;
    return s;
}

std::vector<SingularityData> singularity_table(const CircleSpace& space) {
    std::vector<SingularityData> table;
    for (const auto& f : components_in_Z(space)) table.push_back(singularity_data(f));
    return table;
}

PoincarePolynomial intersection_poincare_circle(const CircleSpace& space) {
    const int top = 2 * space.half_dim - 2;
    const int guard = top + 2 * space.half_dim;
    PoincarePolynomial result = equivariant_series_Z(space, guard);
    for (const auto& f : components_in_Z(space)) {
        SingularityData s = singularity_data(f);
        PoincarePolynomial correction =
            divide_by_one_minus_t2(PoincarePolynomial::monomial(2 * s.d, Rational(1)) * f.poincare,
                                   guard)
                .quotient;
        result = result - correction;
    }
    for (const auto& [d, c] : result.coefficients()) {
        if (d > top && d <= guard && !c.is_zero())
            throw computation_error("non-polynomial result: coefficient " + c.str() +
                                    " at degree " + std::to_string(d) + " beyond the expected top " +
                                    std::to_string(top) + "; input data is inconsistent");
        if (d <= top && (!c.is_integer() || c.sign() < 0))
            throw computation_error("intersection Poincare polynomial has a negative or "
                                    "non-integral coefficient " + c.str() + " at degree " +
                                    std::to_string(d) + "; input data is inconsistent");
    }
    std::map<int, Rational> coeffs(result.coefficients().begin(), result.coefficients().end());
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = (it->first > top) ? coeffs.erase(it) : ++it;
    return PoincarePolynomial::from_coefficients(std::move(coeffs));
}

PoincarePolynomial closed_form_intersection_poincare(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 0)
        throw computation_error("closed form requires at least one weight of each sign");
    if (p > q) std::swap(p, q);
    PoincarePolynomial numerator =
        (PoincarePolynomial::one() - PoincarePolynomial::monomial(2 * p, Rational(1))) *
        (PoincarePolynomial::one() - PoincarePolynomial::monomial(2 * (q + r), Rational(1)));
    SeriesQuotient first = divide_by_one_minus_t2(numerator, 2 * (p + q + r));
    if (!first.exact) throw computation_error("closed form: first division not exact");
    SeriesQuotient second = divide_by_one_minus_t2(first.quotient, 2 * (p + q + r));
    if (!second.exact) throw computation_error("closed form: second division not exact");
    return second.quotient;
}

PnRing linear_ring(const CircleSpace& space) {
    auto weights = linear_model_weights(space);
    if (!weights)
        throw computation_error("this space is not a linear projective model; "
                                "no equivariant ring presentation is available");
    return PnRing(*weights);
}

namespace {

struct ZComponentModel {
    int weight_value = 0;
    int multiplicity = 0;
    int d = 0;
};

std::vector<ZComponentModel> zero_level_models(const CircleSpace& space) {
    std::vector<ZComponentModel> models;
    for (const auto& f : components_in_Z(space)) {
        SingularityData s = singularity_data(f);
        ZComponentModel m;
        m.weight_value = static_cast<int>(f.moment_value.numerator());
        m.multiplicity = f.poincare.degree() / 2 + 1;
        m.d = s.d;
        models.push_back(m);
    }
    return models;
}

}  // namespace

bool v_membership_circle(const CircleSpace& space, const PnClass& eta) {
    PnRing ring = linear_ring(space);
    if (!homogeneous_degree(eta))
        throw computation_error("v_membership: class is not homogeneous");
    for (const auto& m : zero_level_models(space)) {
        XiBetaPoly restriction = ring.restrict_to_value(eta, m.weight_value, m.multiplicity);
        for (const auto& [key, c] : restriction.coeff)
            if (key.second > m.d - 1) return false;
    }
    return true;
}

PoincarePolynomial v_dimension_series(const CircleSpace& space, std::optional<int> out_truncation) {
    PnRing ring = linear_ring(space);
    const int n = ring.projective_dim();
    const int top = out_truncation ? *out_truncation : 2 * space.half_dim - 2;
    if (top < 0) throw computation_error("v_dimension_series: negative truncation");
    PoincarePolynomial series_z = equivariant_series_Z(space, std::max(top, 2 * space.half_dim - 2));
    auto models = zero_level_models(space);

    std::map<int, Rational> dims;
    for (int degree = 0; degree <= top; degree += 2) {
        const int g = degree / 2;
        const int max_x = std::min(g, n);
        // basis of the degree slice upstairs: x^k beta^{g-k}, k = 0..max_x
        std::vector<PnClass> basis;
        for (int k = 0; k <= max_x; ++k) basis.push_back(ring.monomial(k, g - k, Rational(1)));

        // rows: for each zero-level component and each allowed xi-exponent i,
        // the coefficient of the forbidden monomial xi^i beta^{g-i}
        Matrix conditions;
        for (const auto& m : models) {
            std::vector<XiBetaPoly> restrictions;
            restrictions.reserve(basis.size());
            for (const auto& b : basis)
                restrictions.push_back(ring.restrict_to_value(b, m.weight_value, m.multiplicity));
            for (int i = 0; i <= std::min(m.multiplicity - 1, g - m.d); ++i) {
                std::vector<Rational> row;
                row.reserve(basis.size());
                for (const auto& r : restrictions) {
                    auto it = r.coeff.find({i, g - i});
                    row.push_back(it == r.coeff.end() ? Rational(0) : it->second);
                }
                conditions.push_back(std::move(row));
            }
        }
        Rational image_dim = series_z.coefficient(degree);
        long long v_dim = image_dim.numerator() - matrix_rank(conditions);
        if (v_dim < 0)
            throw computation_error("v_dimension_series: negative dimension at degree " +
                                    std::to_string(degree) + "; input data is inconsistent");
        if (v_dim > 0) dims[degree] = Rational(v_dim);
    }
    return PoincarePolynomial::from_coefficients(std::move(dims), top);
}

}  // namespace ihq
