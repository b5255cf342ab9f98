#ifndef SGC_FIXED_H
#define SGC_FIXED_H

#include <compare>
#include <cstdint>
#include <string>

namespace sgc {

/*
  Exact fixed-point decimal with at most six fractional digits, stored as a
  scaled integer in micro-units. All cost/utility arithmetic in the library
  goes through this type; there is no floating point anywhere in the math,
  so equality checks like c(pi') = alpha - u(pi) are exact.
*/
class Fixed {
public:
    static constexpr std::int64_t kScale = 1000000;

    constexpr Fixed() : micros_(0) {}

    static constexpr Fixed from_int(std::int64_t units) {
        return Fixed(units * kScale);
    }
    static constexpr Fixed from_micros(std::int64_t micros) {
        return Fixed(micros);
    }
    // Accepts [-]digits[.digits], up to six fractional digits. Throws Error.
    static Fixed parse(const std::string& text);

    constexpr std::int64_t micros() const { return micros_; }
    constexpr bool is_negative() const { return micros_ < 0; }
    constexpr bool is_zero() const { return micros_ == 0; }

    // Shortest decimal form: "8", "3.5", "-0.000001".
    std::string str() const;

    Fixed operator+(Fixed other) const;
    Fixed operator-(Fixed other) const;
    constexpr Fixed operator-() const { return Fixed(-micros_); }
    Fixed& operator+=(Fixed other) {
        *this = *this + other;
        return *this;
    }
    Fixed& operator-=(Fixed other) {
        *this = *this - other;
        return *this;
    }

    constexpr auto operator<=>(const Fixed&) const = default;

private:
    explicit constexpr Fixed(std::int64_t micros) : micros_(micros) {}

    std::int64_t micros_;
};

using Cost = Fixed;
using Utility = Fixed;

}  // namespace sgc

#endif
