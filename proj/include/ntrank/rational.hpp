#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ntrank {

/// Exact arbitrary-precision fraction, always kept in lowest terms.
///
/// Decimal literals such as "0.4" parse to 2/5 exactly, so sums like
/// 0.4/0.6 + 0.2/0.6 compare equal to 1 without any tolerance.
class Rational {
public:
    using Rep = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;

    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long long>(value)) {}  // NOLINT(google-explicit-constructor)

    /// Throws DomainError when den == 0.
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "[-+]digits[.digits][e[-+]digits]" and "[-+]digits/digits".
    /// Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    double to_double() const;

    /// "p" or "p/q".
    std::string str() const;

    /// Exact decimal expansion when the denominator has no prime factors
    /// other than 2 and 5; nullopt otherwise.
    std::optional<std::string> exact_decimal() const;

    /// Rounded (half away from zero) to `places` fractional digits, trailing zeros trimmed.
    std::string to_decimal(int places) const;

    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(Rep(-x.value_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = lhs.value_.compare(rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

    const Rep& rep() const { return value_; }

private:
    explicit Rational(Rep value) : value_(std::move(value)) {}

    Rep value_;
};

}  // namespace ntrank
