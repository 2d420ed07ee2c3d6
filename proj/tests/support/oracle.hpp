#pragma once

// Independent oracles. Inputs are integers in thousandths, and every function
// is evaluated on integers scaled so no division happens. Nothing here calls
// the library under test.

#include <array>
#include <cstdint>
#include <tuple>

namespace ntrank::testing::oracle {

struct Milli {
    std::int64_t t, i, f;  // thousandths
};

/// 3000 * score = 2000 + t - i - f (in thousandths).
inline std::int64_t score_x3000(Milli x) { return 2000 + x.t - x.i - x.f; }
inline std::int64_t neg_score_x3000(Milli x) { return 1000 - x.t + x.i + x.f; }
inline std::int64_t accuracy_x1000(Milli x) { return x.t - x.f; }
inline std::int64_t certainty_x1000(Milli x) { return x.t; }

/// -1/0/+1 from the lexicographic integer keys.
inline int compare(Milli a, Milli b) {
    const auto ka = std::make_tuple(score_x3000(a), accuracy_x1000(a), certainty_x1000(a));
    const auto kb = std::make_tuple(score_x3000(b), accuracy_x1000(b), certainty_x1000(b));
    return ka < kb ? -1 : (kb < ka ? 1 : 0);
}

struct MilliInterval {
    std::int64_t lo, hi;
};

/// Possibility degree as an exact fraction num/den (den > 0), or the point-comparison
/// extension when both widths are zero.
struct Fraction {
    std::int64_t num, den;
};

inline Fraction possibility(MilliInterval a, MilliInterval b) {
    const std::int64_t den = (a.hi - a.lo) + (b.hi - b.lo);
    if (den == 0) return a.lo > b.lo ? Fraction{1, 1} : (a.lo < b.lo ? Fraction{0, 1} : Fraction{1, 2});
    // 1 - max(r, 0) clipped at 0, with r = (b.hi - a.lo) / den.
    std::int64_t r = b.hi - a.lo;
    if (r < 0) r = 0;
    std::int64_t p = den - r;
    if (p < 0) p = 0;
    return {p, den};
}

}  // namespace ntrank::testing::oracle
