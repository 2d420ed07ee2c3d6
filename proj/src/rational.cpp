#include "ntrank/rational.hpp"

#include <cctype>
#include <ostream>

#include "ntrank/errors.hpp"

namespace ntrank {

namespace {

using boost::multiprecision::cpp_int;

constexpr long kMaxExponent = 1000;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// cpp_int reads a leading 0 as an octal prefix.
cpp_int decimal_int(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return cpp_int(std::string(digits));
}

cpp_int pow10(long n) {
    cpp_int r = 1;
    for (long k = 0; k < n; ++k) r *= 10;
    return r;
}

// Renders |scaled| / 10^places with exactly `places` fractional digits, then trims zeros.
std::string format_scaled(const cpp_int& scaled, long places) {
    const bool negative = scaled < 0;
    std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
    if (places > 0) {
        if (static_cast<long>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places - static_cast<long>(digits.size()) + 1), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
    }
    if (negative && digits != "0") digits.insert(0, 1, '-');
    return digits;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = Rep(cpp_int(num), cpp_int(den));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() -> ParseError { return ParseError("not a decimal or fraction literal: '" + original + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        cpp_int d = decimal_int(den);
        if (d == 0) throw ParseError("zero denominator in '" + original + "'");
        cpp_int n = decimal_int(num);
        Rational r(Rep(negative ? cpp_int(-n) : n, d));
        return r;
    }

    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 4) throw fail();
        exponent = std::stol(std::string(exp_text));
        if (exponent > kMaxExponent) throw ParseError("exponent out of range in '" + original + "'");
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
        if (!frac_part.empty() && !all_digits(frac_part)) throw fail();
    }
    if (!int_part.empty() && !all_digits(int_part)) throw fail();
    if (int_part.empty() && frac_part.empty()) throw fail();

    std::string digits;
    digits.reserve(int_part.size() + frac_part.size());
    digits.append(int_part).append(frac_part);
    cpp_int n = decimal_int(digits);
    if (negative) n = -n;

    const long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) return Rational(Rep(n, pow10(scale)));
    return Rational(Rep(n * pow10(-scale)));
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const {
    const cpp_int num = boost::multiprecision::numerator(value_);
    const cpp_int den = boost::multiprecision::denominator(value_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<std::string> Rational::exact_decimal() const {
    const cpp_int num = boost::multiprecision::numerator(value_);
    cpp_int den = boost::multiprecision::denominator(value_);
    long twos = 0;
    long fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;
    const long places = std::max(twos, fives);
    const cpp_int scaled = num * pow10(places) / boost::multiprecision::denominator(value_);
    return format_scaled(scaled, places);
}

std::string Rational::to_decimal(int places) const {
    const cpp_int num = boost::multiprecision::numerator(value_);
    const cpp_int den = boost::multiprecision::denominator(value_);
    const cpp_int scaled_num = num * pow10(places);
    cpp_int q = scaled_num / den;  // truncates toward zero
    const cpp_int r = scaled_num % den;
    const cpp_int twice = (r < 0 ? cpp_int(-r) : r) * 2;
    if (twice >= den) q += (num < 0 ? -1 : 1);
    return format_scaled(q, places);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace ntrank
