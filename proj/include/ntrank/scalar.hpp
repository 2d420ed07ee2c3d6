#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "ntrank/rational.hpp"

namespace ntrank {

/// Per-backend text conversion. Specialized for Rational (exact) and double (IEEE).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr std::string_view name = "rational";

    static Rational parse(std::string_view text) { return Rational::parse(text); }
    static double to_double(const Rational& x) { return x.to_double(); }
    /// Lossless text: a decimal when one exists, "p/q" otherwise.
    static std::string exact(const Rational& x) {
        if (auto d = x.exact_decimal()) return *d;
        return x.str();
    }
    static std::string display(const Rational& x, int places) { return x.to_decimal(places); }
};

template <>
struct ScalarTraits<double> {
    static constexpr std::string_view name = "float";

    /// Decimal/exponent literals via from_chars; "p/q" is divided in double.
    static double parse(std::string_view text);
    static double to_double(double x) { return x; }
    /// Shortest representation that reads back to the same double.
    static std::string exact(double x);
    static std::string display(double x, int places);
};

/// Numeric contract the library is generic over: field arithmetic, a total
/// order on values, construction from small integers, and text conversion.
template <class T>
concept Scalar = std::regular<T> && requires(const T a, const T b, std::string_view s) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
    { T(2) };
    { ScalarTraits<T>::parse(s) } -> std::same_as<T>;
    { ScalarTraits<T>::exact(a) } -> std::same_as<std::string>;
    { ScalarTraits<T>::to_double(a) } -> std::same_as<double>;
};

/// -1, 0 or +1. Uses only operator<, so no tolerance is ever involved.
template <Scalar S>
int three_way(const S& a, const S& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

template <Scalar S>
S abs_diff(const S& a, const S& b) {
    return a < b ? b - a : a - b;
}

template <Scalar S>
bool in_unit_range(const S& x) {
    // Written so that NaN fails both comparisons.
    return !(x < S(0)) && !(S(1) < x) && x == x;
}

}  // namespace ntrank
