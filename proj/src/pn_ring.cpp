#include "ihq/pn_ring.hpp"

#include <algorithm>

namespace ihq {

namespace {

void add_term(std::map<std::pair<int, int>, Rational>& m, int a, int b, const Rational& c) {
    auto key = std::make_pair(a, b);
    auto it = m.find(key);
    if (it == m.end()) {
        if (!c.is_zero()) m.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

}  // namespace

std::optional<int> homogeneous_degree(const PnClass& c) {
    std::optional<int> deg;
    for (const auto& [key, v] : c.coeff) {
        int d = 2 * (key.first + key.second);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

PnClass pn_add(const PnClass& a, const PnClass& b) {
    PnClass r = a;
    for (const auto& [key, v] : b.coeff) add_term(r.coeff, key.first, key.second, v);
    return r;
}

PnClass pn_sub(const PnClass& a, const PnClass& b) { return pn_add(a, pn_scale(b, Rational(-1))); }

PnClass pn_scale(const PnClass& a, const Rational& c) {
    PnClass r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : a.coeff) r.coeff[key] = v * c;
    return r;
}

PnRing::PnRing(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw computation_error("PnRing: empty weight list");
    std::sort(weights_.begin(), weights_.end());
    n_ = static_cast<int>(weights_.size()) - 1;

    // expand product over weights w of (x - w beta); poly[k] = coefficient of
    // x^k (times beta^{deg - k})
    std::vector<Rational> poly{Rational(1)};
    for (int w : weights_) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * Rational(w);
        }
        poly = std::move(next);
    }
    // poly has degree n+1 and is monic; move everything below the top across
    relation_.assign(poly.begin(), poly.end() - 1);
    for (auto& c : relation_) c = -c;
}

PnClass PnRing::monomial(int x_exp, int beta_exp, const Rational& c) const {
    if (x_exp < 0 || beta_exp < 0) throw computation_error("PnRing: negative exponent");
    std::map<std::pair<int, int>, Rational> raw;
    raw[{x_exp, beta_exp}] = c;
    return normal_form(raw);
}

PnClass PnRing::normal_form(const std::map<std::pair<int, int>, Rational>& raw) const {
    std::map<std::pair<int, int>, Rational> work = raw;
    PnClass out;
    while (!work.empty()) {
        // keys are ordered by x exponent first; take the largest
        auto it = std::prev(work.end());
        auto [key, c] = *it;
        work.erase(it);
        if (c.is_zero()) continue;
        auto [k, l] = key;
        if (k <= n_) {
            add_term(out.coeff, k, l, c);
            continue;
        }
        // x^k = x^{k-(n+1)} * sum_j relation_[j] x^j beta^{n+1-j}
        for (int j = 0; j <= n_; ++j) {
            if (relation_[j].is_zero()) continue;
            add_term(work, k - (n_ + 1) + j, l + (n_ + 1) - j, c * relation_[j]);
        }
    }
    return out;
}

PnClass PnRing::mul(const PnClass& a, const PnClass& b) const {
    std::map<std::pair<int, int>, Rational> raw;
    for (const auto& [ka, ca] : a.coeff)
        for (const auto& [kb, cb] : b.coeff)
            add_term(raw, ka.first + kb.first, ka.second + kb.second, ca * cb);
    return normal_form(raw);
}

PnClass PnRing::pow(const PnClass& a, int exponent) const {
    if (exponent < 0) throw computation_error("PnRing: negative power");
    PnClass r = one();
    for (int i = 0; i < exponent; ++i) r = mul(r, a);
    return r;
}

XiBetaPoly PnRing::restrict_to_value(const PnClass& c, int weight_value, int multiplicity) const {
    if (multiplicity < 1) throw computation_error("PnRing: multiplicity must be >= 1");
    // powers of (xi + a beta) modulo xi^multiplicity, built incrementally
    std::vector<XiBetaPoly> powers(1);
    powers[0].coeff[{0, 0}] = Rational(1);
    int max_k = 0;
    for (const auto& [key, v] : c.coeff) max_k = std::max(max_k, key.first);
    for (int k = 1; k <= max_k; ++k) {
        XiBetaPoly next;
        for (const auto& [key, v] : powers[k - 1].coeff) {
            auto [i, l] = key;
            if (i + 1 < multiplicity) add_term(next.coeff, i + 1, l, v);
            add_term(next.coeff, i, l + 1, v * Rational(weight_value));
        }
        powers.push_back(std::move(next));
    }
    XiBetaPoly out;
    for (const auto& [key, v] : c.coeff) {
        auto [k, l] = key;
        for (const auto& [pkey, pv] : powers[k].coeff)
            add_term(out.coeff, pkey.first, pkey.second + l, pv * v);
    }
    return out;
}

}  // namespace ihq
