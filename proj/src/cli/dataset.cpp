#include "ntrank/cli/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ntrank::cli {

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::Single: return "single";
        case Kind::Interval: return "interval";
        case Kind::Subset: return "subset";
    }
    return "?";
}

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits one CSV line. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    current += '"';
                    ++k;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!trim(current).empty()) throw ParseError("stray quote", line_no, fields.size() + 1);
            current.clear();
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? current : std::string(trim(current)));
            current.clear();
            was_quoted = false;
        } else {
            current += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no, fields.size() + 1);
    fields.push_back(was_quoted ? current : std::string(trim(current)));
    return fields;
}

void check_unique(const std::vector<RawRecord>& records) {
    std::set<std::string_view> seen;
    for (const auto& r : records) {
        if (!seen.insert(r.id).second) throw DuplicateId("duplicate id '" + r.id + "'");
    }
}

// SAX front end that keeps the source text of every number.
class RawNumberSax {
public:
    explicit RawNumberSax(json& root) : dom_(root) {}

    bool null() { return dom_.null(); }
    bool boolean(bool v) { return dom_.boolean(v); }
    bool number_integer(json::number_integer_t v) {
        auto s = std::to_string(v);
        return dom_.string(s);
    }
    bool number_unsigned(json::number_unsigned_t v) {
        auto s = std::to_string(v);
        return dom_.string(s);
    }
    bool number_float(json::number_float_t /*value*/, const json::string_t& text) {
        auto s = text;
        return dom_.string(s);
    }
    bool string(json::string_t& v) { return dom_.string(v); }
    bool binary(json::binary_t& v) { return dom_.binary(v); }
    bool start_object(std::size_t n) { return dom_.start_object(n); }
    bool key(json::string_t& k) { return dom_.key(k); }
    bool end_object() { return dom_.end_object(); }
    bool start_array(std::size_t n) { return dom_.start_array(n); }
    bool end_array() { return dom_.end_array(); }
    template <class Exception>
    bool parse_error(std::size_t position, const std::string& /*last_token*/, const Exception& ex) {
        std::string what = ex.what();
        if (const auto colon = what.find("syntax error"); colon != std::string::npos) what = what.substr(colon);
        throw ParseError("malformed JSON at byte " + std::to_string(position) + ": " + what);
    }

private:
    nlohmann::detail::json_sax_dom_parser<json> dom_;
};

RawNumber json_number(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a number");
    return {v.get<std::string>(), 0, 0};
}

std::pair<RawNumber, RawNumber> json_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected [lo, hi]");
    return {json_number(v[0], where), json_number(v[1], where)};
}

RawComponent json_component(const json& v, const std::string& where) {
    RawComponent c;
    if (v.is_string()) {
        c.form = Kind::Single;
        c.values.push_back(json_number(v, where));
    } else if (v.is_array()) {
        c.form = Kind::Interval;
        auto [lo, hi] = json_pair(v, where);
        c.values = {std::move(lo), std::move(hi)};
    } else if (v.is_object()) {
        c.form = Kind::Subset;
        for (const auto& [key, value] : v.items()) {
            if (key != "points" && key != "intervals") throw ParseError(where + ": unknown subset key '" + key + "'");
            if (!value.is_array()) throw ParseError(where + "." + key + ": expected an array");
        }
        if (auto p = v.find("points"); p != v.end()) {
            for (const auto& x : *p) c.points.push_back(json_number(x, where + ".points"));
        }
        if (auto iv = v.find("intervals"); iv != v.end()) {
            for (const auto& x : *iv) c.intervals.push_back(json_pair(x, where + ".intervals"));
        }
    } else {
        throw ParseError(where + ": expected a number, [lo, hi] or {points, intervals}");
    }
    return c;
}

}  // namespace

RawDataset read_csv(std::istream& in) {
    RawDataset out;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line, line_no);
        if (!have_header) {
            static const std::vector<std::string> single{"id", "t", "i", "f"};
            static const std::vector<std::string> interval{"id", "tL", "tU", "iL", "iU", "fL", "fU"};
            if (fields == single) {
                out.kind = Kind::Single;
            } else if (fields == interval) {
                out.kind = Kind::Interval;
            } else {
                throw ParseError("expected header 'id,t,i,f' or 'id,tL,tU,iL,iU,fL,fU'", line_no);
            }
            width = fields.size();
            have_header = true;
            continue;
        }
        if (fields.size() != width) {
            throw ParseError("expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()),
                             line_no, std::min(fields.size(), width) + 1);
        }
        if (fields[0].empty()) throw ParseError("empty id", line_no, 1);
        RawRecord r;
        r.id = fields[0];
        for (std::size_t k = 1; k < fields.size(); ++k) {
            if (fields[k].empty()) throw ParseError("empty value", line_no, k + 1);
        }
        auto number = [&](std::size_t k) { return RawNumber{fields[k], line_no, k + 1}; };
        for (std::size_t c = 0; c < 3; ++c) {
            RawComponent& comp = r.components[c];
            comp.form = out.kind;
            if (out.kind == Kind::Single) {
                comp.values = {number(1 + c)};
            } else {
                comp.values = {number(1 + 2 * c), number(2 + 2 * c)};
            }
        }
        out.records.push_back(std::move(r));
    }
    if (!have_header) throw ParseError("missing CSV header", line_no == 0 ? 1 : line_no);
    check_unique(out.records);
    return out;
}

RawDataset read_json(std::istream& in) {
    json root;
    RawNumberSax sax(root);
    json::sax_parse(in, &sax);
    if (!root.is_array()) throw ParseError("JSON dataset must be a top-level array");

    RawDataset out;
    bool kind_set = false;
    std::size_t index = 0;
    for (const auto& obj : root) {
        ++index;
        const std::string where = "record #" + std::to_string(index);
        if (!obj.is_object()) throw ParseError(where + ": expected an object");
        for (const auto& [key, value] : obj.items()) {
            if (key != "id" && key != "t" && key != "i" && key != "f") {
                throw ParseError(where + ": unknown key '" + key + "'");
            }
        }
        const auto id = obj.find("id");
        if (id == obj.end() || !id->is_string() || id->get<std::string>().empty()) {
            throw ParseError(where + ": missing or empty \"id\"");
        }
        RawRecord r;
        r.id = id->get<std::string>();
        const char* names[] = {"t", "i", "f"};
        for (std::size_t c = 0; c < 3; ++c) {
            const auto v = obj.find(names[c]);
            if (v == obj.end()) throw ParseError("record '" + r.id + "': missing \"" + names[c] + "\"");
            r.components[c] = json_component(*v, "record '" + r.id + "'." + names[c]);
        }
        const Kind kind = r.components[0].form;
        if (r.components[1].form != kind || r.components[2].form != kind) {
            throw MixedKinds("record '" + r.id + "' mixes component kinds");
        }
        if (!kind_set) {
            out.kind = kind;
            kind_set = true;
        } else if (kind != out.kind) {
            throw MixedKinds("record '" + r.id + "' is " + std::string(to_string(kind)) + "-valued but the dataset is " +
                             std::string(to_string(out.kind)) + "-valued");
        }
        out.records.push_back(std::move(r));
    }
    check_unique(out.records);
    return out;
}

RawDataset read_raw(std::istream& in, Format format) {
    return format == Format::Csv ? read_csv(in) : read_json(in);
}

Format format_for_path(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return Format::Csv;
    std::string ext(path.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == "json" ? Format::Json : Format::Csv;
}

std::string csv_field(std::string_view text) {
    const bool needs_quotes = text.find_first_of(",\"\n\r") != std::string_view::npos || text != trim(text);
    if (!needs_quotes) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_numeric(std::string_view text) {
    // Backend text is either a JSON number or a "p/q" fraction.
    if (text.find('/') == std::string_view::npos) return std::string(text);
    return json_string(text);
}

std::string json_string(std::string_view text) { return json(std::string(text)).dump(); }

}  // namespace ntrank::cli
