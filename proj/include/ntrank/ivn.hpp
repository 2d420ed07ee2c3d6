#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ntrank/errors.hpp"
#include "ntrank/interval.hpp"
#include "ntrank/ordering.hpp"
#include "ntrank/ranking.hpp"
#include "ntrank/scalar.hpp"
#include "ntrank/svn.hpp"

namespace ntrank {

/// Interval neutrosophic triplet ([tL,tU], [iL,iU], [fL,fU]).
template <Scalar S>
class IvnTriplet {
public:
    using Interval = UnitInterval<S>;

    IvnTriplet(Interval t, Interval i, Interval f) : t_(std::move(t)), i_(std::move(i)), f_(std::move(f)) {}

    /// From the six bounds in tL, tU, iL, iU, fL, fU order. Throws DomainError.
    IvnTriplet(S t_lo, S t_hi, S i_lo, S i_hi, S f_lo, S f_hi)
        : t_(std::move(t_lo), std::move(t_hi)), i_(std::move(i_lo), std::move(i_hi)), f_(std::move(f_lo), std::move(f_hi)) {}

    const Interval& t() const { return t_; }
    const Interval& i() const { return i_; }
    const Interval& f() const { return f_; }

    bool is_degenerate() const { return t_.is_degenerate() && i_.is_degenerate() && f_.is_degenerate(); }

    friend bool operator==(const IvnTriplet&, const IvnTriplet&) = default;

private:
    Interval t_;
    Interval i_;
    Interval f_;
};

/// A finite description of a subset of [0,1]: isolated points plus closed subintervals.
template <Scalar S>
struct SubsetComponent {
    std::vector<S> points;
    std::vector<UnitInterval<S>> intervals;

    bool empty() const { return points.empty() && intervals.empty(); }

    bool contains(const S& x) const {
        return std::any_of(points.begin(), points.end(), [&](const S& p) { return p == x; }) ||
               std::any_of(intervals.begin(), intervals.end(), [&](const auto& iv) { return iv.contains(x); });
    }

    friend bool operator==(const SubsetComponent&, const SubsetComponent&) = default;
};

template <Scalar S>
class SubsetTriplet {
public:
    using Component = SubsetComponent<S>;

    /// Throws EmptyComponent if any component is empty, DomainError for a point outside [0,1].
    SubsetTriplet(Component t, Component i, Component f) : t_(std::move(t)), i_(std::move(i)), f_(std::move(f)) {
        check(t_, "t");
        check(i_, "i");
        check(f_, "f");
    }

    const Component& t() const { return t_; }
    const Component& i() const { return i_; }
    const Component& f() const { return f_; }

    friend bool operator==(const SubsetTriplet&, const SubsetTriplet&) = default;

private:
    static void check(const Component& c, std::string_view name) {
        if (c.empty()) throw EmptyComponent("subset component " + std::string(name) + " is empty");
        for (const S& p : c.points) detail::require_unit(p, name);
    }

    Component t_;
    Component i_;
    Component f_;
};

// Interval-valued score, accuracy and certainty (Zhang, Wang and Chen).

/// [tL + 1 - iU + 1 - fU, tU + 1 - iL + 1 - fL]; bounds lie in [0,3].
template <Scalar S>
RealInterval<S> zhang_score(const IvnTriplet<S>& a) {
    const S two(2);
    return {two + a.t().lo() - a.i().hi() - a.f().hi(), two + a.t().hi() - a.i().lo() - a.f().lo()};
}

/// [min{tL - fL, tU - fU}, max{tL - fL, tU - fU}].
template <Scalar S>
RealInterval<S> zhang_accuracy(const IvnTriplet<S>& a) {
    const S lower = a.t().lo() - a.f().lo();
    const S upper = a.t().hi() - a.f().hi();
    return {std::min(lower, upper), std::max(lower, upper)};
}

template <Scalar S>
UnitInterval<S> zhang_certainty(const IvnTriplet<S>& a) {
    return a.t();
}

// Scalar reductions of the interval functions; their order is the midpoint order
// of the Zhang intervals.

/// (4 + tL + tU - iL - iU - fL - fU) / 6, in [0,1].
template <Scalar S>
S fs_score(const IvnTriplet<S>& a) {
    return (S(4) + a.t().lo() + a.t().hi() - a.i().lo() - a.i().hi() - a.f().lo() - a.f().hi()) / S(6);
}

/// (tL + tU - fL - fU) / 2, in [-1,1].
template <Scalar S>
S fs_accuracy(const IvnTriplet<S>& a) {
    return (a.t().lo() + a.t().hi() - a.f().lo() - a.f().hi()) / S(2);
}

/// (tL + tU) / 2, the midpoint of the truth interval.
template <Scalar S>
S fs_certainty(const IvnTriplet<S>& a) {
    return midpoint(a.t());
}

template <Scalar S>
ScoreKey<S> fs_key(const IvnTriplet<S>& a) {
    return {fs_score(a), fs_accuracy(a), fs_certainty(a)};
}

/// Total order on interval triplets modulo midpoint classes.
///
/// Cascade on (fs_score, fs_accuracy, fs_certainty). A full tie means the
/// three component midpoints coincide pairwise: Identical if all six bounds
/// match, NeutroEqual otherwise.
template <Scalar S>
RankOrdering compare_ivn(const IvnTriplet<S>& a, const IvnTriplet<S>& b) {
    if (auto o = detail::compare_keys(fs_key(a), fs_key(b))) return *o;
    return a == b ? RankOrdering::Identical : RankOrdering::NeutroEqual;
}

template <Scalar S>
CascadeTrace<S> explain_ivn(const IvnTriplet<S>& a, const IvnTriplet<S>& b) {
    return detail::trace_keys(fs_key(a), fs_key(b), a == b ? RankOrdering::Identical : RankOrdering::NeutroEqual);
}

/// The same cascade run on the Zhang intervals, each stage ranked by interval
/// midpoint. Agrees with compare_ivn on every input.
template <Scalar S>
RankOrdering compare_ivn_zhang(const IvnTriplet<S>& a, const IvnTriplet<S>& b) {
    RankOrdering o = compare_by_midpoint(zhang_score(a), zhang_score(b));
    if (!is_tie(o)) return o;
    o = compare_by_midpoint(zhang_accuracy(a), zhang_accuracy(b));
    if (!is_tie(o)) return o;
    o = compare_by_midpoint(zhang_certainty(a), zhang_certainty(b));
    if (!is_tie(o)) return o;
    return a == b ? RankOrdering::Identical : RankOrdering::NeutroEqual;
}

/// Reduces a triplet of point intervals to the single-valued triplet.
/// Throws NotDegenerate if any component has lo < hi.
template <Scalar S>
SvnTriplet<S> collapse(const IvnTriplet<S>& a) {
    if (!a.is_degenerate()) throw NotDegenerate("interval triplet has a component of nonzero width");
    return {a.t().lo(), a.i().lo(), a.f().lo()};
}

/// Smallest closed interval containing the described subset. Throws EmptyComponent.
template <Scalar S>
UnitInterval<S> hull(const SubsetComponent<S>& c) {
    if (c.empty()) throw EmptyComponent("cannot take the hull of an empty subset");
    std::optional<S> lo;
    std::optional<S> hi;
    auto widen = [&](const S& low, const S& high) {
        if (!lo || low < *lo) lo = low;
        if (!hi || *hi < high) hi = high;
    };
    for (const S& p : c.points) widen(p, p);
    for (const auto& iv : c.intervals) widen(iv.lo(), iv.hi());
    return UnitInterval<S>(*lo, *hi);
}

template <Scalar S>
IvnTriplet<S> hull(const SubsetTriplet<S>& s) {
    return {hull(s.t()), hull(s.i()), hull(s.f())};
}

/// Best first under compare_ivn; tied triplets share a rank and are flagged
/// identical or neutro_equal. Throws EmptyInput.
template <Scalar S>
std::vector<RankedEntry<ScoreKey<S>>> rank_ivn(std::span<const Labeled<IvnTriplet<S>>> items) {
    return rank_by<IvnTriplet<S>>(items, [](const IvnTriplet<S>& x) { return fs_key(x); },
                                  [](const IvnTriplet<S>& a, const IvnTriplet<S>& b) { return compare_ivn(a, b); });
}

}  // namespace ntrank
