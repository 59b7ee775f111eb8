#include "ihq/rational.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>

namespace ihq {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw computation_error("rational: 64-bit overflow after reduction");
    return static_cast<std::int64_t>(v);
}

}  // namespace

void Rational::assign(i128 num, i128 den) {
    if (den == 0) throw computation_error("rational: zero denominator");
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), u128(den));
    num_ = narrow(num / i128(g));
    den_ = narrow(den / i128(g));
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        if (num_ == 0) throw computation_error("rational: negative power of zero");
        return Rational(1) / pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= base;
        base = (e > 1) ? base * base : base;
        e >>= 1;
    }
    return result;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw parse_error("invalid rational: '" + text + "'");
            return Rational(n);
        }
        std::int64_t n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw parse_error("invalid rational: '" + text + "'");
        std::string den_text = text.substr(slash + 1);
        std::int64_t d = std::stoll(den_text, &used);
        if (used != den_text.size() || d == 0) throw parse_error("invalid rational: '" + text + "'");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid rational: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: '" + text + "'");
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ihq
