#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihq/pn_ring.hpp"
#include "ihq/space_model.hpp"

namespace ihq {

// Singularity bookkeeping for a fixed component in the zero level: d and e are
// the minimum and maximum of the counts of positive and negative normal
// weights, and the attached perversity value is 2d - 1.
struct SingularityData {
    std::string component_label;
    int d = 0;
    int e = 0;
    int perversity_n = 0;
};

// Requires moment value zero and weights of both signs (a one-signed normal
// fibre means the quotient has no finite-stabilizer points near the component,
// which the circle theory here assumes).
SingularityData singularity_data(const FixedComponent& f);

// Rows for every component in the zero level, in component order.
std::vector<SingularityData> singularity_table(const CircleSpace& space);

// Intersection Poincare polynomial of the reduction at zero:
//   equivariant series of Z  minus  sum over components F in the zero level of
//   t^{2 d(F)} P(F) / (1 - t^2),
// certified to be an exact polynomial supported in degrees [0, 2 half_dim - 2]
// by checking a guard band of 2 half_dim further degrees. A nonzero guard-band
// coefficient throws computation_error("non-polynomial result ..."), flagging
// inconsistent abstract input.
PoincarePolynomial intersection_poincare_circle(const CircleSpace& space);

// (1 - t^{2p})(1 - t^{2q + 2r}) / (1 - t^2)^2 with p := min, q := max of the
// two sign counts. Closed form of the polynomial above for a linear action
// with p positive, q negative and r zero weights; an independent route used
// for cross-checking.
PoincarePolynomial closed_form_intersection_poincare(int p, int q, int r);

// Equivariant ring of the linear model underlying this space. Throws when the
// space is not one.
PnRing linear_ring(const CircleSpace& space);

// Membership in the subspace of the equivariant cohomology of Z realizing the
// intersection cohomology of the reduction: the restriction of eta to each
// component F in the zero level may only involve beta-exponents l <= d(F) - 1.
// eta must be homogeneous; the space must be a linear model.
bool v_membership_circle(const CircleSpace& space, const PnClass& eta);

// Dimension, degree by degree, of the membership subspace inside the
// equivariant cohomology of Z, computed by exact linear algebra on the
// monomial basis upstairs and the Morse-series dimensions of the image.
// Returned truncated at out_truncation (default: 2 half_dim - 2).
PoincarePolynomial v_dimension_series(const CircleSpace& space,
                                      std::optional<int> out_truncation = std::nullopt);

}  // namespace ihq
