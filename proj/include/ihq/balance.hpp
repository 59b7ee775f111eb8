#pragma once

#include <string>
#include <vector>

#include "ihq/space_model.hpp"

namespace ihq {

// One row of a balance-condition check for a fixed component in the zero
// level. With p positive and q negative normal weights the condition C(j)
// reads  2(p + q - 1) + j < 4 min(p, q):  the left side is the real dimension
// of the normal-fibre reduction plus j, the right side twice the real
// codimension of the locus whose orbit closure meets the origin.
struct BalanceRow {
    std::string label;
    int positive_count = 0;
    int negative_count = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

struct BalanceVerdict {
    std::vector<BalanceRow> per_component;
    bool overall = true;  // conjunction; vacuously true for an empty zero-level fixed set
};

BalanceRow check_cj_weights(const std::string& label, const std::vector<int>& weights, int j);

// Evaluates C(j) at every fixed component lying in the zero level.
BalanceVerdict check_cj(const CircleSpace& space, int j);

// C(0); at the circle level this is equivalent to an equal number of positive
// and negative normal weights at each component in the zero level.
bool is_almost_balanced(const CircleSpace& space);

}  // namespace ihq
