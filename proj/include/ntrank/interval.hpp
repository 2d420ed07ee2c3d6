#pragma once

#include <algorithm>
#include <concepts>
#include <string>

#include "ntrank/errors.hpp"
#include "ntrank/ordering.hpp"
#include "ntrank/scalar.hpp"

namespace ntrank {

/// Closed interval [lo, hi] with 0 <= lo <= hi <= 1.
///
/// Open and half-open intervals are represented by their closed hulls; every
/// instrument below depends on the endpoints only.
template <Scalar S>
class UnitInterval {
public:
    using value_type = S;

    /// Throws DomainError unless 0 <= lo <= hi <= 1.
    UnitInterval(S lo, S hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (!in_unit_range(lo_) || !in_unit_range(hi_)) {
            throw DomainError("interval [" + ScalarTraits<S>::exact(lo_) + ", " + ScalarTraits<S>::exact(hi_) +
                              "] is not contained in [0,1]");
        }
        if (hi_ < lo_) {
            throw DomainError("interval lower bound " + ScalarTraits<S>::exact(lo_) + " exceeds upper bound " +
                              ScalarTraits<S>::exact(hi_));
        }
    }

    /// The degenerate interval [x, x].
    static UnitInterval point(const S& x) { return UnitInterval(x, x); }

    /// [mid - half_width, mid + half_width].
    static UnitInterval centered(const S& mid, const S& half_width) {
        return UnitInterval(mid - half_width, mid + half_width);
    }

    const S& lo() const { return lo_; }
    const S& hi() const { return hi_; }
    S width() const { return hi_ - lo_; }
    bool is_degenerate() const { return lo_ == hi_; }

    bool contains(const S& x) const { return !(x < lo_) && !(hi_ < x); }

    friend bool operator==(const UnitInterval&, const UnitInterval&) = default;

private:
    S lo_;
    S hi_;
};

/// Closed interval [lo, hi] on the real line; the codomain of the interval-valued
/// score and accuracy functions, whose bounds leave [0,1].
template <Scalar S>
class RealInterval {
public:
    using value_type = S;

    RealInterval(S lo, S hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (hi_ < lo_) throw DomainError("interval lower bound exceeds upper bound");
    }

    const S& lo() const { return lo_; }
    const S& hi() const { return hi_; }

    friend bool operator==(const RealInterval&, const RealInterval&) = default;

private:
    S lo_;
    S hi_;
};

template <class I>
concept ClosedInterval = requires(const I x) {
    typename I::value_type;
    { x.lo() } -> std::convertible_to<typename I::value_type>;
    { x.hi() } -> std::convertible_to<typename I::value_type>;
};

template <ClosedInterval I>
typename I::value_type midpoint(const I& x) {
    using S = typename I::value_type;
    return (x.lo() + x.hi()) / S(2);
}

/// Possibility degree that A >= B:
///   max{ 1 - max((B.hi - A.lo) / (A.hi - A.lo + B.hi - B.lo), 0), 0 }.
///
/// When both intervals are points the denominator vanishes; the result is then
/// 1, 0 or 1/2 by point comparison, which keeps P(A,B) + P(B,A) = 1.
template <Scalar S>
S possibility_degree(const UnitInterval<S>& a, const UnitInterval<S>& b) {
    const S zero(0);
    const S one(1);
    const S denom = a.width() + b.width();
    if (denom == zero) {
        const int c = three_way(a.lo(), b.lo());
        return c > 0 ? one : (c < 0 ? zero : one / S(2));
    }
    const S ratio = (b.hi() - a.lo()) / denom;
    return std::max(one - std::max(ratio, zero), zero);
}

/// Greater/Less by strict midpoint comparison. Equal midpoints give Identical
/// when the bounds also coincide, NeutroEqual otherwise.
template <ClosedInterval I>
RankOrdering compare_by_midpoint(const I& a, const I& b) {
    const int c = three_way(midpoint(a), midpoint(b));
    if (c > 0) return RankOrdering::Greater;
    if (c < 0) return RankOrdering::Less;
    return (a.lo() == b.lo() && a.hi() == b.hi()) ? RankOrdering::Identical : RankOrdering::NeutroEqual;
}

/// A number n in [0,1] ranked against an interval as the point interval [n, n].
template <Scalar S>
RankOrdering compare_scalar_interval(const S& n, const UnitInterval<S>& b) {
    return compare_by_midpoint(UnitInterval<S>::point(n), b);
}

/// Normalized Hamming distance (|A.lo - B.lo| + |A.hi - B.hi|) / 2.
template <Scalar S>
S hamming(const UnitInterval<S>& a, const UnitInterval<S>& b) {
    return (abs_diff(a.lo(), b.lo()) + abs_diff(a.hi(), b.hi())) / S(2);
}

}  // namespace ntrank
