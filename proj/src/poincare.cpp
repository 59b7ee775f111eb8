#include "ihq/poincare.hpp"

#include <algorithm>
#include <sstream>

namespace ihq {

void PoincarePolynomial::normalize() {
    for (auto it = coeff_.begin(); it != coeff_.end();) {
        if (it->first < 0) throw computation_error("poincare: negative degree");
        if (it->second.is_zero() || (trunc_ && it->first > *trunc_))
            it = coeff_.erase(it);
        else
            ++it;
    }
    if (trunc_ && *trunc_ < 0) throw computation_error("poincare: negative truncation degree");
}

PoincarePolynomial PoincarePolynomial::monomial(int degree, const Rational& c) {
    PoincarePolynomial p;
    p.coeff_[degree] = c;
    p.normalize();
    return p;
}

PoincarePolynomial PoincarePolynomial::projective_space(int complex_dim) {
    if (complex_dim < 0) throw computation_error("poincare: negative projective dimension");
    PoincarePolynomial p;
    for (int k = 0; k <= complex_dim; ++k) p.coeff_[2 * k] = Rational(1);
    return p;
}

PoincarePolynomial PoincarePolynomial::from_coefficients(std::map<int, Rational> coeffs) {
    PoincarePolynomial p;
    p.coeff_ = std::move(coeffs);
    p.normalize();
    return p;
}

PoincarePolynomial PoincarePolynomial::from_coefficients(std::map<int, Rational> coeffs, int truncation) {
    PoincarePolynomial p;
    p.coeff_ = std::move(coeffs);
    p.trunc_ = truncation;
    p.normalize();
    return p;
}

Rational PoincarePolynomial::coefficient(int degree) const {
    if (trunc_ && degree > *trunc_)
        throw computation_error("poincare: coefficient of degree " + std::to_string(degree) +
                                " requested above truncation degree " + std::to_string(*trunc_));
    auto it = coeff_.find(degree);
    return it == coeff_.end() ? Rational(0) : it->second;
}

Rational PoincarePolynomial::value_at_one() const {
    if (trunc_) throw computation_error("poincare: cannot evaluate a truncated series at t=1");
    Rational sum(0);
    for (const auto& [d, c] : coeff_) sum += c;
    return sum;
}

PoincarePolynomial PoincarePolynomial::truncate(int degree) const {
    PoincarePolynomial p = *this;
    p.trunc_ = trunc_ ? std::min(*trunc_, degree) : degree;
    p.normalize();
    return p;
}

namespace {

std::optional<int> min_truncation(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

}  // namespace

PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    std::map<int, Rational> coeffs = a.coeff_;
    for (const auto& [d, c] : b.coeff_) coeffs[d] += c;
    PoincarePolynomial p;
    p.coeff_ = std::move(coeffs);
    p.trunc_ = min_truncation(a.trunc_, b.trunc_);
    p.normalize();
    return p;
}

PoincarePolynomial operator-(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a + b.scaled(Rational(-1));
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    // an exact zero annihilates even unknown tails
    if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) return PoincarePolynomial::zero();
    PoincarePolynomial p;
    p.trunc_ = min_truncation(a.trunc_, b.trunc_);
    for (const auto& [da, ca] : a.coeff_)
        for (const auto& [db, cb] : b.coeff_) {
            int d = da + db;
            if (p.trunc_ && d > *p.trunc_) continue;
            p.coeff_[d] += ca * cb;
        }
    p.normalize();
    return p;
}

PoincarePolynomial PoincarePolynomial::scaled(const Rational& c) const {
    PoincarePolynomial p;
    p.trunc_ = trunc_;
    for (const auto& [d, v] : coeff_) p.coeff_[d] = v * c;
    p.normalize();
    return p;
}

std::string PoincarePolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeff_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational mag = c.abs();
        if (mag != Rational(1) || d == 0) os << mag.str();
        if (d != 0) {
            if (mag != Rational(1)) os << " ";
            os << "t^" << d;
        }
    }
    if (first) os << "0";
    if (trunc_) os << " + O(t^" << (*trunc_ + 1) << ")";
    return os.str();
}

SeriesQuotient divide_by_one_minus_t2(const PoincarePolynomial& p, int out_truncation) {
    if (out_truncation < 0) throw computation_error("divide_by_one_minus_t2: negative output truncation");
    if (p.is_exact() && p.is_zero()) return {PoincarePolynomial::zero(), true};

    const int input_degree = p.degree();
    int limit = out_truncation;
    if (p.is_exact())
        limit = std::max(limit, input_degree);
    else
        limit = std::min(limit, *p.truncation());

    // q_k = p_k + q_{k-2}
    std::map<int, Rational> q;
    Rational even(0), odd(0);
    for (int k = 0; k <= limit; ++k) {
        Rational& acc = (k % 2 == 0) ? even : odd;
        acc += p.coefficient(k);
        if (!acc.is_zero()) q[k] = acc;
    }

    if (p.is_exact()) {
        // The recurrence is eventually constant in each parity (no input
        // coefficients remain past input_degree <= limit); the quotient is a
        // polynomial exactly when both stabilized tails vanish.
        bool exact = even.is_zero() && odd.is_zero();
        if (exact) {
            for (auto it = q.begin(); it != q.end();)
                it = (it->first > input_degree - 2) ? q.erase(it) : ++it;
            return {PoincarePolynomial::from_coefficients(std::move(q)), true};
        }
        return {PoincarePolynomial::from_coefficients(std::move(q), out_truncation), false};
    }
    return {PoincarePolynomial::from_coefficients(std::move(q), limit), false};
}

bool is_palindromic(const PoincarePolynomial& p, int top_degree) {
    if (top_degree < 0) throw computation_error("is_palindromic: negative top degree");
    if (p.truncation() && *p.truncation() < top_degree)
        throw computation_error("is_palindromic: series truncated at degree " +
                                std::to_string(*p.truncation()) + ", cannot decide up to degree " +
                                std::to_string(top_degree));
    if (p.degree() > top_degree) return false;
    for (int k = 0; k <= top_degree / 2; ++k)
        if (p.coefficient(k) != p.coefficient(top_degree - k)) return false;
    return true;
}

bool agree(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    if (a.is_exact() && b.is_exact()) return a.coefficients() == b.coefficients();
    int limit = a.is_exact() ? *b.truncation()
                             : (b.is_exact() ? *a.truncation() : std::min(*a.truncation(), *b.truncation()));
    // An exact operand with content beyond the other's truncation can neither
    // be accepted nor rejected against unknown coefficients.
    if (a.is_exact() && a.degree() > limit)
        throw computation_error("agree: exact polynomial has degree " + std::to_string(a.degree()) +
                                " beyond the comparison truncation " + std::to_string(limit));
    if (b.is_exact() && b.degree() > limit)
        throw computation_error("agree: exact polynomial has degree " + std::to_string(b.degree()) +
                                " beyond the comparison truncation " + std::to_string(limit));
    for (int k = 0; k <= limit; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

bool equal_up_to(const PoincarePolynomial& a, const PoincarePolynomial& b, int degree) {
    for (int k = 0; k <= degree; ++k)
        if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
}

}  // namespace ihq
