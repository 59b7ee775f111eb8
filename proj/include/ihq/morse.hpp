#pragma once

#include "ihq/space_model.hpp"

namespace ihq {

// Morse index of the norm-square of the moment map along a fixed component
// away from the zero level: twice the number of normal weights pointing
// against the moment value. Rejects components at moment zero (they belong to
// the minimum stratum).
int morse_index(const FixedComponent& f);

// Default working truncation for the series below.
int default_truncation(const CircleSpace& space);

// Equivariant Poincare series of the zero level Z of the moment map,
//   (P(M) - sum over components with nonzero moment of t^{index} P(F)) / (1 - t^2),
// truncated at out_truncation (>= 2 half_dim - 2). Every coefficient must come
// out a nonnegative integer (perfection of the Morse stratification); a
// violation throws computation_error, flagging inconsistent input data.
PoincarePolynomial equivariant_series_Z(const CircleSpace& space, int out_truncation);

// Equivariant Poincare series of the ambient space, P(M) / (1 - t^2).
// Diagnostic companion to the series above.
PoincarePolynomial equivariant_series_M(const CircleSpace& space, int out_truncation);

}  // namespace ihq
