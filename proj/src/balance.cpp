#include "ihq/balance.hpp"

#include <algorithm>

namespace ihq {

BalanceRow check_cj_weights(const std::string& label, const std::vector<int>& weights, int j) {
    BalanceRow row;
    row.label = label;
    for (int w : weights) {
        if (w > 0) ++row.positive_count;
        if (w < 0) ++row.negative_count;
    }
    row.lhs = 2LL * (row.positive_count + row.negative_count - 1) + j;
    row.rhs = 4LL * std::min(row.positive_count, row.negative_count);
    row.holds = row.lhs < row.rhs;
    return row;
}

BalanceVerdict check_cj(const CircleSpace& space, int j) {
    BalanceVerdict verdict;
    for (const auto& f : space.components) {
        if (!f.moment_value.is_zero()) continue;
        verdict.per_component.push_back(check_cj_weights(f.label, f.normal_weights, j));
        verdict.overall = verdict.overall && verdict.per_component.back().holds;
    }
    return verdict;
}

bool is_almost_balanced(const CircleSpace& space) { return check_cj(space, 0).overall; }

}  // namespace ihq
