#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihq/poincare.hpp"

namespace ihq {

// One fixed-point component of a Hamiltonian circle space: its Poincare
// polynomial, moment value and the multiset of nonzero integer weights of the
// circle on the normal fibre.
struct FixedComponent {
    std::string label;
    PoincarePolynomial poincare;   // exact, nonnegative integer coefficients
    Rational moment_value;
    std::vector<int> normal_weights;  // sorted ascending, all nonzero

    int positive_weight_count() const;
    int negative_weight_count() const;
};

// Combinatorial model of a Hamiltonian circle space: ambient Poincare
// polynomial, fixed components, and the complex dimension of the ambient
// manifold. Components are kept sorted by (moment value, weight multiset) so
// every downstream output is reproducible.
struct CircleSpace {
    PoincarePolynomial ambient_poincare;
    std::vector<FixedComponent> components;
    int half_dim = 0;
};

// Validates the component bookkeeping (half_dim = top(P_F)/2 + #weights for
// every component, nonzero weights, unique labels) and that the zero level is
// nonempty (a component at moment zero, or moment values of both signs).
// Throws computation_error on violation; sorts components.
CircleSpace make_circle_space(PoincarePolynomial ambient, std::vector<FixedComponent> components,
                              int half_dim);

// Linear circle action on projective space: one component per distinct weight
// value a, a copy of P^{m_a - 1} at moment value a with normal weights
// {b - a, each repeated m_b}. The moment map is normalized so that the
// component at weight value a sits exactly at moment a. Rejects weight lists
// of a single strict sign (empty zero level).
CircleSpace linear_pn(const std::vector<int>& weights);

// Components lying in the zero level of the moment map.
std::vector<FixedComponent> components_in_Z(const CircleSpace& space);

// Recovers the weight list of a linear projective model, if this space is one
// (up to labels). Used by the engines that need the equivariant ring.
std::optional<std::vector<int>> linear_model_weights(const CircleSpace& space);

// (P^1)^n with the diagonal SU(2) action; torus-fixed points are sign vectors.
struct SU2ProductSpace {
    int n = 0;
};

SU2ProductSpace product_p1_su2(int n);  // n >= 1

// All 2^n sign vectors in deterministic order.
std::vector<std::vector<int>> sign_vectors(const SU2ProductSpace& space);
// Sign vectors with zero sum (nonempty only for even n).
std::vector<std::vector<int>> balanced_sign_vectors(const SU2ProductSpace& space);

}  // namespace ihq
