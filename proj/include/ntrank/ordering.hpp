#pragma once

#include <ostream>
#include <string_view>

namespace ntrank {

/// Outcome of comparing two values, read as "lhs is ... rhs".
///
/// Identical means component-wise equal. NeutroEqual means the values sit in
/// the same midpoint class without being identical; single-valued comparators
/// never produce it.
enum class RankOrdering { Greater, Less, Identical, NeutroEqual };

constexpr std::string_view to_string(RankOrdering o) {
    switch (o) {
        case RankOrdering::Greater: return "Greater";
        case RankOrdering::Less: return "Less";
        case RankOrdering::Identical: return "Identical";
        case RankOrdering::NeutroEqual: return "NeutroEqual";
    }
    return "?";
}

constexpr bool is_tie(RankOrdering o) {
    return o == RankOrdering::Identical || o == RankOrdering::NeutroEqual;
}

/// The ordering seen from the other operand.
constexpr RankOrdering reversed(RankOrdering o) {
    switch (o) {
        case RankOrdering::Greater: return RankOrdering::Less;
        case RankOrdering::Less: return RankOrdering::Greater;
        default: return o;
    }
}

inline std::ostream& operator<<(std::ostream& os, RankOrdering o) { return os << to_string(o); }

}  // namespace ntrank
