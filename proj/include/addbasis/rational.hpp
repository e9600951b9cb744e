#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "addbasis/errors.hpp"

namespace addbasis {

// Exact rational number on 64-bit components, kept reduced with a positive
// denominator.  Arithmetic goes through 128-bit intermediates and throws
// InputError if a reduced result no longer fits; the quantities handled here
// (density ratios, bounds) are tiny, so overflow indicates a caller bug.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    [[nodiscard]] double to_double() const { return double(num_) / double(den_); }

    // "85/294", or just "3" when the denominator is 1.
    [[nodiscard]] std::string str() const;

  private:
    static Rational reduced(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace addbasis
