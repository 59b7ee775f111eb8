#include "ihq/space_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace ihq {

int FixedComponent::positive_weight_count() const {
    return static_cast<int>(std::count_if(normal_weights.begin(), normal_weights.end(),
                                          [](int w) { return w > 0; }));
}

int FixedComponent::negative_weight_count() const {
    return static_cast<int>(std::count_if(normal_weights.begin(), normal_weights.end(),
                                          [](int w) { return w < 0; }));
}

namespace {

void validate_component_poincare(const FixedComponent& f) {
    if (!f.poincare.is_exact())
        throw computation_error("component '" + f.label + "': Poincare polynomial must be exact");
    for (const auto& [d, c] : f.poincare.coefficients())
        if (!c.is_integer() || c.sign() < 0)
            throw computation_error("component '" + f.label +
                                    "': Poincare coefficients must be nonnegative integers");
    if (f.poincare.coefficient(0) < Rational(1))
        throw computation_error("component '" + f.label + "': Poincare constant term must be >= 1");
}

}  // namespace

CircleSpace make_circle_space(PoincarePolynomial ambient, std::vector<FixedComponent> components,
                              int half_dim) {
    CircleSpace space;
    space.ambient_poincare = std::move(ambient);
    space.components = std::move(components);
    space.half_dim = half_dim;

    if (!space.ambient_poincare.is_exact())
        throw computation_error("ambient Poincare polynomial must be exact");

    std::set<std::string> labels;
    bool has_zero = false, has_pos = false, has_neg = false;
    for (auto& f : space.components) {
        if (f.label.empty()) throw computation_error("component labels must be nonempty");
        if (!labels.insert(f.label).second)
            throw computation_error("duplicate component label '" + f.label + "'");
        validate_component_poincare(f);
        std::sort(f.normal_weights.begin(), f.normal_weights.end());
        for (int w : f.normal_weights)
            if (w == 0)
                throw computation_error("component '" + f.label +
                                        "': normal weights must be nonzero");
        int top = f.poincare.degree();
        if (top % 2 != 0)
            throw computation_error("component '" + f.label +
                                    "': Poincare polynomial has odd top degree");
        if (top / 2 + static_cast<int>(f.normal_weights.size()) != half_dim)
            throw computation_error("component '" + f.label + "': dimension bookkeeping fails (" +
                                    std::to_string(top / 2) + " + " +
                                    std::to_string(f.normal_weights.size()) +
                                    " != " + std::to_string(half_dim) + ")");
        int s = f.moment_value.sign();
        has_zero |= (s == 0);
        has_pos |= (s > 0);
        has_neg |= (s < 0);
    }
    if (!has_zero && !(has_pos && has_neg))
        throw computation_error("zero level of the moment map is empty "
                                "(no component at moment zero and moment values of one sign only)");

    std::sort(space.components.begin(), space.components.end(),
              [](const FixedComponent& a, const FixedComponent& b) {
                  return std::tie(a.moment_value, a.normal_weights, a.label) <
                         std::tie(b.moment_value, b.normal_weights, b.label);
              });
    return space;
}

CircleSpace linear_pn(const std::vector<int>& weights) {
    if (weights.empty()) throw computation_error("linear_pn: empty weight list");
    bool all_pos = std::all_of(weights.begin(), weights.end(), [](int w) { return w > 0; });
    bool all_neg = std::all_of(weights.begin(), weights.end(), [](int w) { return w < 0; });
    if (all_pos || all_neg)
        throw computation_error("linear_pn: all weights have the same strict sign, "
                                "the zero level of the moment map is empty");

    std::map<int, int> multiplicity;
    for (int w : weights) ++multiplicity[w];

    const int n = static_cast<int>(weights.size()) - 1;
    std::vector<FixedComponent> components;
    for (const auto& [a, m] : multiplicity) {
        FixedComponent f;
        f.label = "F(" + std::to_string(a) + ")";
        f.poincare = PoincarePolynomial::projective_space(m - 1);
        f.moment_value = Rational(a);
        for (const auto& [b, mb] : multiplicity) {
            if (b == a) continue;
            f.normal_weights.insert(f.normal_weights.end(), mb, b - a);
        }
        components.push_back(std::move(f));
    }
    return make_circle_space(PoincarePolynomial::projective_space(n), std::move(components), n);
}

std::vector<FixedComponent> components_in_Z(const CircleSpace& space) {
    std::vector<FixedComponent> result;
    for (const auto& f : space.components)
        if (f.moment_value.is_zero()) result.push_back(f);
    return result;
}

std::optional<std::vector<int>> linear_model_weights(const CircleSpace& space) {
    std::vector<int> weights;
    for (const auto& f : space.components) {
        if (!f.moment_value.is_integer()) return std::nullopt;
        int top = f.poincare.degree();
        int m = top / 2 + 1;
        weights.insert(weights.end(), m,
                       static_cast<int>(f.moment_value.numerator()));
    }
    if (weights.empty()) return std::nullopt;
    // rebuild and compare everything except labels
    CircleSpace rebuilt;
    try {
        rebuilt = linear_pn(weights);
    } catch (const computation_error&) {
        return std::nullopt;
    }
    if (rebuilt.half_dim != space.half_dim ||
        !(rebuilt.ambient_poincare == space.ambient_poincare) ||
        rebuilt.components.size() != space.components.size())
        return std::nullopt;
    for (std::size_t i = 0; i < space.components.size(); ++i) {
        const auto& a = space.components[i];
        const auto& b = rebuilt.components[i];
        if (!(a.poincare == b.poincare) || a.moment_value != b.moment_value ||
            a.normal_weights != b.normal_weights)
            return std::nullopt;
    }
    return weights;
}

SU2ProductSpace product_p1_su2(int n) {
    if (n < 1) throw computation_error("product_p1_su2: n must be >= 1");
    if (n > 24) throw computation_error("product_p1_su2: n too large for fixed-point enumeration");
    return SU2ProductSpace{n};
}

std::vector<std::vector<int>> sign_vectors(const SU2ProductSpace& space) {
    std::vector<std::vector<int>> result;
    result.reserve(std::size_t(1) << space.n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << space.n); ++mask) {
        std::vector<int> a(space.n);
        for (int i = 0; i < space.n; ++i) a[i] = (mask >> i) & 1 ? 1 : -1;
        result.push_back(std::move(a));
    }
    return result;
}

std::vector<std::vector<int>> balanced_sign_vectors(const SU2ProductSpace& space) {
    std::vector<std::vector<int>> result;
    for (auto& a : sign_vectors(space)) {
        int sum = 0;
        for (int ai : a) sum += ai;
        if (sum == 0) result.push_back(std::move(a));
    }
    return result;
}

}  // namespace ihq
