#include "ihq/laurent.hpp"

#include <sstream>

namespace ihq {

LaurentSeriesBeta LaurentSeriesBeta::monomial(int exponent, const Rational& c) {
    LaurentSeriesBeta s;
    if (!c.is_zero()) s.coeff_[exponent] = c;
    return s;
}

Rational LaurentSeriesBeta::coefficient(int exponent) const {
    auto it = coeff_.find(exponent);
    return it == coeff_.end() ? Rational(0) : it->second;
}

LaurentSeriesBeta& LaurentSeriesBeta::operator+=(const LaurentSeriesBeta& o) {
    for (const auto& [e, c] : o.coeff_) {
        auto it = coeff_.find(e);
        if (it == coeff_.end()) {
            coeff_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }
    return *this;
}

LaurentSeriesBeta operator*(const LaurentSeriesBeta& a, const LaurentSeriesBeta& b) {
    LaurentSeriesBeta r;
    for (const auto& [ea, ca] : a.coeff_)
        for (const auto& [eb, cb] : b.coeff_) r += LaurentSeriesBeta::monomial(ea + eb, ca * cb);
    return r;
}

LaurentSeriesBeta LaurentSeriesBeta::scaled(const Rational& c) const {
    LaurentSeriesBeta r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
    return r;
}

LaurentSeriesBeta LaurentSeriesBeta::shifted(int exponent_delta) const {
    LaurentSeriesBeta r;
    for (const auto& [e, v] : coeff_) r.coeff_[e + exponent_delta] = v;
    return r;
}

std::string LaurentSeriesBeta::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational mag = c.abs();
        if (mag != Rational(1) || e == 0) os << mag.str();
        if (e != 0) {
            if (mag != Rational(1)) os << " ";
            os << "b^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ihq
