#include "ntrank/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ntrank/errors.hpp"

namespace ntrank {

namespace {

double parse_plain(std::string_view text, std::string_view original) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError("not a decimal or fraction literal: '" + std::string(original) + "'");
    }
    return value;
}

}  // namespace

double ScalarTraits<double>::parse(std::string_view text) {
    if (text.find_first_of("nNiI") != std::string_view::npos) {
        throw ParseError("not a decimal or fraction literal: '" + std::string(text) + "'");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const double num = parse_plain(text.substr(0, slash), text);
        const double den = parse_plain(text.substr(slash + 1), text);
        if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    return parse_plain(text, text);
}

std::string ScalarTraits<double>::exact(double x) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string ScalarTraits<double>::display(double x, int places) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", places, x);
    std::string s(buf.data());
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

}  // namespace ntrank
