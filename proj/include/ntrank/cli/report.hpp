#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntrank/cli/dataset.hpp"
#include "ntrank/ivn.hpp"
#include "ntrank/ranking.hpp"
#include "ntrank/svn.hpp"

namespace ntrank::cli {

/// Human-readable value: exact decimals as-is; otherwise six places plus the exact fraction.
template <Scalar S>
std::string pretty(const S& x) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (auto d = x.exact_decimal(); d && d->size() <= 12) return *d;
        return x.to_decimal(6) + " (" + x.str() + ")";
    } else {
        return ScalarTraits<S>::display(x, 6);
    }
}

struct ReportValue {
    double approx = 0.0;
    std::string exact;    // lossless backend text
    std::string display;  // for tables

    template <Scalar S>
    static ReportValue of(const S& x) {
        return {ScalarTraits<S>::to_double(x), ScalarTraits<S>::exact(x), pretty(x)};
    }
};

struct ReportEntry {
    std::size_t rank = 0;
    std::string id;
    ReportValue score;
    ReportValue accuracy;
    ReportValue certainty;
    std::optional<EqualityClass> tie;
};

struct ReportClass {
    std::size_t rank = 0;
    std::vector<std::string> ids;
    EqualityClass flag = EqualityClass::Identical;
};

/// Ranked alternatives, best first. For interval and subset datasets the
/// three values are the interval score, accuracy and certainty.
struct RankReport {
    Kind kind = Kind::Single;
    std::string backend;
    std::vector<ReportEntry> entries;
    std::vector<ReportClass> classes;
    std::vector<std::string> notes;
};

template <Scalar S>
RankReport make_report(Kind kind, const std::vector<RankedEntry<ScoreKey<S>>>& ranked) {
    RankReport report;
    report.kind = kind;
    report.backend = std::string(ScalarTraits<S>::name);
    for (const auto& e : ranked) {
        report.entries.push_back({e.rank, e.label, ReportValue::of(e.key.score), ReportValue::of(e.key.accuracy),
                                  ReportValue::of(e.key.certainty), e.tie});
        if (!e.tie) continue;
        if (report.classes.empty() || report.classes.back().rank != e.rank) {
            report.classes.push_back({e.rank, {}, *e.tie});
        }
        report.classes.back().ids.push_back(e.label);
    }
    return report;
}

/// Ranks a dataset: single-valued records by the score/accuracy/certainty
/// cascade, interval and subset records (by hull) by the interval cascade.
/// Throws EmptyInput.
template <Scalar S>
RankReport cmd_rank(const Dataset<S>& data) {
    if (data.records.empty()) throw EmptyInput();
    if (data.kind == Kind::Single) {
        std::vector<Labeled<SvnTriplet<S>>> items;
        items.reserve(data.records.size());
        for (const auto& r : data.records) items.emplace_back(r.id, std::get<SvnTriplet<S>>(r.payload));
        return make_report<S>(data.kind, rank_svn<S>(items));
    }
    std::vector<Labeled<IvnTriplet<S>>> items;
    items.reserve(data.records.size());
    bool all_degenerate = true;
    for (const auto& r : data.records) {
        items.emplace_back(r.id, interval_view(r));
        all_degenerate = all_degenerate && items.back().second.is_degenerate();
    }
    RankReport report = make_report<S>(data.kind, rank_ivn<S>(items));
    if (data.kind == Kind::Subset) report.notes.emplace_back("subset components were replaced by their closed hulls");
    if (all_degenerate) {
        report.notes.emplace_back(
            "every interval is degenerate; this ranking coincides with the single-valued ranking of the points");
    }
    return report;
}

void render_table(const RankReport& report, std::ostream& out);

/// {"kind", "backend", "entries": [...], "equality_classes": [...], "notes": [...]}.
nlohmann::json report_to_json(const RankReport& report);

}  // namespace ntrank::cli
