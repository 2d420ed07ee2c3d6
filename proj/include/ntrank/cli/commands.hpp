#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "ntrank/cli/literal.hpp"
#include "ntrank/cli/report.hpp"
#include "ntrank/interval.hpp"
#include "ntrank/ivn.hpp"
#include "ntrank/svn.hpp"

namespace ntrank::cli {

namespace detail {

template <Scalar S>
void print_trace(const CascadeTrace<S>& trace, std::ostream& out) {
    for (std::size_t k = 0; k < trace.stages.size(); ++k) {
        const auto& st = trace.stages[k];
        const bool decides = trace.deciding_stage == k;
        out << "stage " << (k + 1) << ' ' << st.name << ": " << pretty(st.lhs) << " vs " << pretty(st.rhs) << " -> "
            << (decides ? "decides" : "tie") << '\n';
        if (decides) break;
    }
    if (!trace.deciding_stage) out << "all stages tie\n";
    out << "result: " << trace.result << '\n';
}

template <Scalar S>
std::string interval_text(const S& lo, const S& hi) {
    return "[" + pretty(lo) + ", " + pretty(hi) + "]";
}

template <class I>
std::string interval_text(const I& iv) {
    return interval_text(iv.lo(), iv.hi());
}

template <Scalar S>
RankOrdering compare_points_and_intervals(const UnitInterval<S>& a, const UnitInterval<S>& b, std::ostream& out) {
    const RankOrdering verdict = compare_by_midpoint(a, b);
    out << "midpoint: " << pretty(midpoint(a)) << " vs " << pretty(midpoint(b)) << '\n';
    out << "P(A >= B) = " << pretty(possibility_degree(a, b)) << '\n';
    out << "result: " << verdict << '\n';
    return verdict;
}

}  // namespace detail

/// Prints the comparison cascade of two literals of the same kind and returns
/// the verdict. Numbers and intervals may be mixed (a number n is [n, n]).
/// Throws MixedKinds when a single-valued and an interval triplet meet.
template <Scalar S>
RankOrdering cmd_compare(std::string_view lhs, std::string_view rhs, std::ostream& out) {
    const Literal<S> a = parse_literal<S>(lhs);
    const Literal<S> b = parse_literal<S>(rhs);

    auto as_interval = [](const Literal<S>& lit) -> std::optional<UnitInterval<S>> {
        if (const auto* iv = std::get_if<UnitInterval<S>>(&lit)) return *iv;
        if (const auto* n = std::get_if<S>(&lit)) return UnitInterval<S>::point(*n);
        return std::nullopt;
    };

    if (const auto* x = std::get_if<SvnTriplet<S>>(&a)) {
        if (const auto* y = std::get_if<SvnTriplet<S>>(&b)) {
            const auto trace = explain_svn(*x, *y);
            detail::print_trace(trace, out);
            return trace.result;
        }
    } else if (const auto* x = std::get_if<IvnTriplet<S>>(&a)) {
        if (const auto* y = std::get_if<IvnTriplet<S>>(&b)) {
            const auto trace = explain_ivn(*x, *y);
            detail::print_trace(trace, out);
            const RankOrdering zhang = compare_ivn_zhang(*x, *y);
            out << "zhang cascade: " << zhang << (zhang == trace.result ? " (agrees)" : " (DISAGREES)") << '\n';
            return trace.result;
        }
    } else if (auto ia = as_interval(a)) {
        if (auto ib = as_interval(b)) return detail::compare_points_and_intervals(*ia, *ib, out);
    }
    throw MixedKinds("cannot compare '" + std::string(lhs) + "' with '" + std::string(rhs) + "': different kinds");
}

template <Scalar S>
struct PossibilityReport {
    S forward;   // P(A >= B)
    S backward;  // P(B >= A)
    S sum;
    RankOrdering midpoint_verdict;
};

/// Both possibility degrees, their sum and the midpoint verdict for A vs B.
template <Scalar S>
PossibilityReport<S> cmd_possibility(std::string_view lhs, std::string_view rhs, std::ostream& out) {
    const auto a = parse_interval_literal<S>(lhs);
    const auto b = parse_interval_literal<S>(rhs);
    PossibilityReport<S> r{possibility_degree(a, b), possibility_degree(b, a), S(0), compare_by_midpoint(a, b)};
    r.sum = r.forward + r.backward;
    out << "A = " << detail::interval_text(a) << ", B = " << detail::interval_text(b) << '\n';
    out << "P(A >= B) = " << pretty(r.forward) << '\n';
    out << "P(B >= A) = " << pretty(r.backward) << '\n';
    out << "sum = " << pretty(r.sum) << '\n';
    out << "midpoints: " << pretty(midpoint(a)) << " vs " << pretty(midpoint(b)) << " -> " << r.midpoint_verdict
        << '\n';
    return r;
}

/// Prints every function applicable to the literal.
template <Scalar S>
void cmd_score(std::string_view text, std::ostream& out) {
    const Literal<S> lit = parse_literal<S>(text);
    if (const auto* x = std::get_if<SvnTriplet<S>>(&lit)) {
        out << "score: " << pretty(score(*x)) << '\n';
        out << "accuracy: " << pretty(accuracy(*x)) << '\n';
        out << "certainty: " << pretty(certainty(*x)) << '\n';
        out << "negative_score: " << pretty(negative_score(*x)) << '\n';
        out << "extended_accuracy: " << pretty(extended_accuracy(*x)) << '\n';
    } else if (const auto* a = std::get_if<IvnTriplet<S>>(&lit)) {
        out << "fs_score: " << pretty(fs_score(*a)) << '\n';
        out << "fs_accuracy: " << pretty(fs_accuracy(*a)) << '\n';
        out << "fs_certainty: " << pretty(fs_certainty(*a)) << '\n';
        out << "zhang_score: " << detail::interval_text(zhang_score(*a)) << '\n';
        out << "zhang_accuracy: " << detail::interval_text(zhang_accuracy(*a)) << '\n';
        out << "zhang_certainty: " << detail::interval_text(zhang_certainty(*a)) << '\n';
        if (a->is_degenerate()) {
            out << "note: every component is a point; the values equal score, accuracy and certainty of the "
                   "single-valued triplet\n";
        }
    } else {
        const auto iv = parse_interval_literal<S>(text);
        const S zero(0);
        const S one(1);
        out << "midpoint: " << pretty(midpoint(iv)) << '\n';
        out << "hamming to [0,0]: " << pretty(hamming(iv, UnitInterval<S>::point(zero))) << '\n';
        out << "hamming to [1,1]: " << pretty(hamming(iv, UnitInterval<S>::point(one))) << '\n';
    }
}

}  // namespace ntrank::cli
