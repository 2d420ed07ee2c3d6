#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ntrank/errors.hpp"
#include "ntrank/ivn.hpp"
#include "ntrank/scalar.hpp"
#include "ntrank/svn.hpp"

namespace ntrank::cli {

enum class Kind { Single, Interval, Subset };
enum class Format { Csv, Json };

std::string_view to_string(Kind kind);

// Backend-neutral layer: the readers keep every number as its source text so
// that the chosen backend converts it (exactly, for Rational).

struct RawNumber {
    std::string text;
    std::size_t line = 0;   // CSV only
    std::size_t field = 0;  // CSV only
};

struct RawComponent {
    Kind form = Kind::Single;
    std::vector<RawNumber> values;                           // Single: {x}; Interval: {lo, hi}
    std::vector<RawNumber> points;                           // Subset
    std::vector<std::pair<RawNumber, RawNumber>> intervals;  // Subset
};

struct RawRecord {
    std::string id;
    std::array<RawComponent, 3> components;  // t, i, f
};

struct RawDataset {
    Kind kind = Kind::Single;
    std::vector<RawRecord> records;
};

/// Header `id,t,i,f` or `id,tL,tU,iL,iU,fL,fU`. Throws ParseError, DuplicateId.
RawDataset read_csv(std::istream& in);

/// Top-level array of objects with "id", "t", "i", "f". Throws ParseError,
/// DuplicateId, MixedKinds.
RawDataset read_json(std::istream& in);

RawDataset read_raw(std::istream& in, Format format);

/// Picks the format from the file extension: ".json" is JSON, anything else CSV.
Format format_for_path(std::string_view path);

/// Quotes a CSV field when it contains a separator, quote or surrounding space.
std::string csv_field(std::string_view text);

/// A JSON value for numeric text: bare when it is a JSON number, quoted otherwise ("1/3").
std::string json_numeric(std::string_view text);

std::string json_string(std::string_view text);

template <Scalar S>
using Payload = std::variant<SvnTriplet<S>, IvnTriplet<S>, SubsetTriplet<S>>;

template <Scalar S>
struct AlternativeRecord {
    std::string id;
    Payload<S> payload;

    friend bool operator==(const AlternativeRecord&, const AlternativeRecord&) = default;
};

/// Validated dataset: unique ids, one payload kind for every record.
template <Scalar S>
struct Dataset {
    Kind kind = Kind::Single;
    std::vector<AlternativeRecord<S>> records;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// The interval triplet a record is ranked by; subsets are replaced by their hull.
template <Scalar S>
IvnTriplet<S> interval_view(const AlternativeRecord<S>& r) {
    if (const auto* ivn = std::get_if<IvnTriplet<S>>(&r.payload)) return *ivn;
    if (const auto* sub = std::get_if<SubsetTriplet<S>>(&r.payload)) return hull(*sub);
    throw MixedKinds("record '" + r.id + "' is single-valued");
}

namespace detail {

template <Scalar S>
S convert(const RawNumber& n) {
    try {
        return ScalarTraits<S>::parse(n.text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), n.line, n.field);
    }
}

template <Scalar S>
UnitInterval<S> convert_interval(const RawNumber& lo, const RawNumber& hi) {
    return UnitInterval<S>(convert<S>(lo), convert<S>(hi));
}

template <Scalar S>
Payload<S> convert_payload(const RawRecord& r, Kind kind) {
    const auto& [t, i, f] = r.components;
    switch (kind) {
        case Kind::Single:
            return SvnTriplet<S>(convert<S>(t.values[0]), convert<S>(i.values[0]), convert<S>(f.values[0]));
        case Kind::Interval:
            return IvnTriplet<S>(convert_interval<S>(t.values[0], t.values[1]),
                                 convert_interval<S>(i.values[0], i.values[1]),
                                 convert_interval<S>(f.values[0], f.values[1]));
        case Kind::Subset: {
            auto component = [](const RawComponent& c) {
                SubsetComponent<S> out;
                for (const auto& p : c.points) out.points.push_back(convert<S>(p));
                for (const auto& [lo, hi] : c.intervals) out.intervals.push_back(convert_interval<S>(lo, hi));
                return out;
            };
            SubsetTriplet<S> subset(component(t), component(i), component(f));
            (void)hull(subset);  // hulls are taken on load so bad subsets fail here
            return subset;
        }
    }
    throw MixedKinds("unknown record kind");
}

}  // namespace detail

/// Converts raw text into validated triplets of the chosen backend.
/// Throws ParseError and DomainError, naming the offending record.
template <Scalar S>
Dataset<S> convert_dataset(const RawDataset& raw) {
    Dataset<S> out;
    out.kind = raw.kind;
    out.records.reserve(raw.records.size());
    for (const RawRecord& r : raw.records) {
        try {
            out.records.push_back({r.id, detail::convert_payload<S>(r, raw.kind)});
        } catch (const ParseError& e) {
            throw ParseError("record '" + r.id + "': " + e.what());
        } catch (const DomainError& e) {
            throw DomainError("record '" + r.id + "': " + e.what());
        } catch (const EmptyComponent& e) {
            throw EmptyComponent("record '" + r.id + "': " + e.what());
        }
    }
    return out;
}

template <Scalar S>
Dataset<S> parse_dataset(std::istream& in, Format format) {
    return convert_dataset<S>(read_raw(in, format));
}

namespace detail {

template <Scalar S>
std::string text(const S& x) {
    return ScalarTraits<S>::exact(x);
}

template <Scalar S>
std::string json_interval(const UnitInterval<S>& iv) {
    return "[" + json_numeric(text(iv.lo())) + ", " + json_numeric(text(iv.hi())) + "]";
}

template <Scalar S>
std::string json_subset(const SubsetComponent<S>& c) {
    std::string out = "{\"points\": [";
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        if (k) out += ", ";
        out += json_numeric(text(c.points[k]));
    }
    out += "], \"intervals\": [";
    for (std::size_t k = 0; k < c.intervals.size(); ++k) {
        if (k) out += ", ";
        out += json_interval(c.intervals[k]);
    }
    return out + "]}";
}

}  // namespace detail

/// Writes the dataset as CSV. Subset datasets have no CSV form (std::invalid_argument).
template <Scalar S>
void emit_csv(const Dataset<S>& data, std::ostream& out) {
    using detail::text;
    if (data.kind == Kind::Subset) throw std::invalid_argument("subset-valued datasets can only be written as JSON");
    out << (data.kind == Kind::Single ? "id,t,i,f\n" : "id,tL,tU,iL,iU,fL,fU\n");
    for (const auto& r : data.records) {
        out << csv_field(r.id);
        if (const auto* x = std::get_if<SvnTriplet<S>>(&r.payload)) {
            out << ',' << text(x->t()) << ',' << text(x->i()) << ',' << text(x->f());
        } else {
            const auto& a = std::get<IvnTriplet<S>>(r.payload);
            for (const auto* iv : {&a.t(), &a.i(), &a.f()}) out << ',' << text(iv->lo()) << ',' << text(iv->hi());
        }
        out << '\n';
    }
}

template <Scalar S>
void emit_json(const Dataset<S>& data, std::ostream& out) {
    using detail::text;
    out << "[\n";
    for (std::size_t k = 0; k < data.records.size(); ++k) {
        const auto& r = data.records[k];
        out << "  {\"id\": " << json_string(r.id);
        std::visit(
            [&](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, SvnTriplet<S>>) {
                    out << ", \"t\": " << json_numeric(text(p.t())) << ", \"i\": " << json_numeric(text(p.i()))
                        << ", \"f\": " << json_numeric(text(p.f()));
                } else if constexpr (std::is_same_v<P, IvnTriplet<S>>) {
                    out << ", \"t\": " << detail::json_interval(p.t()) << ", \"i\": " << detail::json_interval(p.i())
                        << ", \"f\": " << detail::json_interval(p.f());
                } else {
                    out << ", \"t\": " << detail::json_subset(p.t()) << ", \"i\": " << detail::json_subset(p.i())
                        << ", \"f\": " << detail::json_subset(p.f());
                }
            },
            r.payload);
        out << "}" << (k + 1 < data.records.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

template <Scalar S>
void emit_dataset(const Dataset<S>& data, std::ostream& out, Format format) {
    if (format == Format::Csv) {
        emit_csv(data, out);
    } else {
        emit_json(data, out);
    }
}

}  // namespace ntrank::cli
