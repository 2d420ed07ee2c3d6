#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ntrank/errors.hpp"
#include "ntrank/interval.hpp"
#include "ntrank/ivn.hpp"
#include "ntrank/scalar.hpp"
#include "ntrank/svn.hpp"

namespace ntrank::cli {

/// One top-level item of a command-line literal: a bare number or a bracketed pair.
struct LiteralItem {
    bool bracketed = false;
    std::string lo;  // the number itself when !bracketed
    std::string hi;
};

/// Splits "(0.6, 0.2, 0.3)" or "([0.4,0.5],[0.2,0.3],[0.3,0.4])" into items.
/// Outer parentheses are optional; "(a,b)" inside is read as a closed hull [a,b].
/// Throws ParseError.
std::vector<LiteralItem> split_literal(std::string_view text);

template <Scalar S>
using Literal = std::variant<S, UnitInterval<S>, SvnTriplet<S>, IvnTriplet<S>>;

/// Reads a number, an interval, a single-valued triplet or an interval triplet:
///   "0.4"                          number
///   "[0.2,0.8]", "0.2,0.8"         interval
///   "(0.6,0.2,0.3)"                single-valued triplet
///   "([.4,.5],[.2,.3],[.3,.4])"    interval triplet (also six bare numbers)
/// Throws ParseError for malformed text and DomainError for out-of-range values.
template <Scalar S>
Literal<S> parse_literal(std::string_view text) {
    const auto items = split_literal(text);
    auto number = [](const std::string& s) { return ScalarTraits<S>::parse(s); };
    auto interval = [&](const LiteralItem& it) { return UnitInterval<S>(number(it.lo), number(it.hi)); };

    std::size_t bracketed = 0;
    for (const auto& it : items) bracketed += it.bracketed ? 1 : 0;

    if (bracketed != 0 && bracketed != items.size()) {
        throw ParseError("literal '" + std::string(text) + "' mixes numbers and intervals");
    }
    const bool all_intervals = bracketed == items.size();
    switch (items.size()) {
        case 1:
            if (all_intervals) return interval(items[0]);
            return number(items[0].lo);
        case 2:
            return UnitInterval<S>(number(items[0].lo), number(items[1].lo));
        case 3:
            if (all_intervals) return IvnTriplet<S>(interval(items[0]), interval(items[1]), interval(items[2]));
            return SvnTriplet<S>(number(items[0].lo), number(items[1].lo), number(items[2].lo));
        case 6:
            return IvnTriplet<S>(number(items[0].lo), number(items[1].lo), number(items[2].lo), number(items[3].lo),
                                 number(items[4].lo), number(items[5].lo));
        default:
            throw ParseError("literal '" + std::string(text) + "' has " + std::to_string(items.size()) +
                             " components; expected 1, 2, 3 or 6");
    }
}

/// An interval literal; a bare number n is read as the point interval [n, n].
template <Scalar S>
UnitInterval<S> parse_interval_literal(std::string_view text) {
    auto lit = parse_literal<S>(text);
    if (const auto* iv = std::get_if<UnitInterval<S>>(&lit)) return *iv;
    if (const auto* n = std::get_if<S>(&lit)) return UnitInterval<S>::point(*n);
    throw ParseError("'" + std::string(text) + "' is not an interval");
}

}  // namespace ntrank::cli
