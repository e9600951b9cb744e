#include "addbasis/rational.hpp"

namespace addbasis {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw InputError(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational Rational::reduced(__int128 num, __int128 den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = checked_narrow(num, "numerator");
    r.den_ = checked_narrow(den, "denominator");
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = reduced(num, den); }

Rational Rational::operator+(const Rational& o) const {
    return reduced(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return reduced(__int128(num_) * o.den_ - __int128(o.num_) * den_, __int128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return reduced(__int128(num_) * o.num_, __int128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw InputError("rational division by zero");
    return reduced(__int128(num_) * o.den_, __int128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = __int128(num_) * o.den_;
    __int128 rhs = __int128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace addbasis
