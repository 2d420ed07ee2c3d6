#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntrank/errors.hpp"
#include "ntrank/ordering.hpp"
#include "ntrank/ranking.hpp"
#include "ntrank/scalar.hpp"

namespace ntrank {

namespace detail {

template <Scalar S>
void require_unit(const S& x, std::string_view what) {
    if (!in_unit_range(x)) {
        throw DomainError(std::string(what) + " = " + ScalarTraits<S>::exact(x) + " is outside [0,1]");
    }
}

}  // namespace detail

/// Single-valued neutrosophic triplet (truth, indeterminacy, falsehood), each in [0,1].
template <Scalar S>
class SvnTriplet {
public:
    /// Throws DomainError if any component lies outside [0,1].
    SvnTriplet(S t, S i, S f) : t_(std::move(t)), i_(std::move(i)), f_(std::move(f)) {
        detail::require_unit(t_, "t");
        detail::require_unit(i_, "i");
        detail::require_unit(f_, "f");
        if (S(3) < t_ + i_ + f_) throw DomainError("t + i + f exceeds 3");
    }

    const S& t() const { return t_; }
    const S& i() const { return i_; }
    const S& f() const { return f_; }

    friend bool operator==(const SvnTriplet&, const SvnTriplet&) = default;

private:
    S t_;
    S i_;
    S f_;
};

/// The lexicographic sort key (score, accuracy, certainty).
template <Scalar S>
struct ScoreKey {
    S score;
    S accuracy;
    S certainty;

    friend bool operator==(const ScoreKey&, const ScoreKey&) = default;
};

/// Average positiveness (2 + t - i - f) / 3, in [0,1].
template <Scalar S>
S score(const SvnTriplet<S>& x) {
    return (S(2) + x.t() - x.i() - x.f()) / S(3);
}

/// t - f, in [-1,1].
template <Scalar S>
S accuracy(const SvnTriplet<S>& x) {
    return x.t() - x.f();
}

template <Scalar S>
S certainty(const SvnTriplet<S>& x) {
    return x.t();
}

/// Average negativeness (1 - t + i + f) / 3; complements score() to 1.
template <Scalar S>
S negative_score(const SvnTriplet<S>& x) {
    return (S(1) - x.t() + x.i() + x.f()) / S(3);
}

/// t - i - f, in [-2,1].
template <Scalar S>
S extended_accuracy(const SvnTriplet<S>& x) {
    return x.t() - x.i() - x.f();
}

template <Scalar S>
ScoreKey<S> score_key(const SvnTriplet<S>& x) {
    return {score(x), accuracy(x), certainty(x)};
}

/// One stage of a score -> accuracy -> certainty cascade.
template <Scalar S>
struct CascadeStage {
    std::string_view name;
    S lhs;
    S rhs;
};

/// Full record of a cascade comparison, for reporting.
template <Scalar S>
struct CascadeTrace {
    std::vector<CascadeStage<S>> stages;
    std::optional<std::size_t> deciding_stage;  // 0-based; nullopt when every stage tied
    RankOrdering result = RankOrdering::Identical;
};

namespace detail {

/// Lexicographic comparison of two keys. Returns nullopt when all three tie.
template <Scalar S>
std::optional<RankOrdering> compare_keys(const ScoreKey<S>& a, const ScoreKey<S>& b) {
    for (auto member : {&ScoreKey<S>::score, &ScoreKey<S>::accuracy, &ScoreKey<S>::certainty}) {
        const int c = three_way(a.*member, b.*member);
        if (c > 0) return RankOrdering::Greater;
        if (c < 0) return RankOrdering::Less;
    }
    return std::nullopt;
}

template <Scalar S>
CascadeTrace<S> trace_keys(const ScoreKey<S>& a, const ScoreKey<S>& b, RankOrdering on_full_tie) {
    CascadeTrace<S> trace;
    trace.stages = {{"score", a.score, b.score},
                    {"accuracy", a.accuracy, b.accuracy},
                    {"certainty", a.certainty, b.certainty}};
    trace.result = on_full_tie;
    for (std::size_t k = 0; k < trace.stages.size(); ++k) {
        const int c = three_way(trace.stages[k].lhs, trace.stages[k].rhs);
        if (c != 0) {
            trace.deciding_stage = k;
            trace.result = c > 0 ? RankOrdering::Greater : RankOrdering::Less;
            break;
        }
    }
    return trace;
}

}  // namespace detail

/// Three-stage total order: score, then accuracy, then certainty.
///
/// A full tie forces t, i and f to be pairwise equal, so the result is then
/// Identical. Never returns NeutroEqual.
template <Scalar S>
RankOrdering compare_svn(const SvnTriplet<S>& x, const SvnTriplet<S>& y) {
    return detail::compare_keys(score_key(x), score_key(y)).value_or(RankOrdering::Identical);
}

template <Scalar S>
CascadeTrace<S> explain_svn(const SvnTriplet<S>& x, const SvnTriplet<S>& y) {
    return detail::trace_keys(score_key(x), score_key(y), RankOrdering::Identical);
}

/// Best first; Identical items keep input order and share a rank. Throws EmptyInput.
template <Scalar S>
std::vector<RankedEntry<ScoreKey<S>>> rank_svn(std::span<const Labeled<SvnTriplet<S>>> items) {
    return rank_by<SvnTriplet<S>>(items, [](const SvnTriplet<S>& x) { return score_key(x); },
                                  [](const SvnTriplet<S>& a, const SvnTriplet<S>& b) { return compare_svn(a, b); });
}

}  // namespace ntrank
