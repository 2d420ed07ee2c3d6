#include "ntrank/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace ntrank::cli {

namespace {

nlohmann::json value_json(const ReportValue& v) { return v.approx; }

}  // namespace

void render_table(const RankReport& report, std::ostream& out) {
    const bool interval = report.kind != Kind::Single;
    const std::vector<std::string> header = {"rank", "id", interval ? "fs_score" : "score",
                                             interval ? "fs_accuracy" : "accuracy",
                                             interval ? "fs_certainty" : "certainty", "tie"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : report.entries) {
        rows.push_back({std::to_string(e.rank), e.id, e.score.display, e.accuracy.display, e.certainty.display,
                        e.tie ? std::string(to_string(*e.tie)) : std::string()});
    }
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].size();
        for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(widths[c], ' ');
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);

    for (const auto& cls : report.classes) {
        out << "\nrank " << cls.rank << " shared (" << to_string(cls.flag) << "):";
        for (const auto& id : cls.ids) out << ' ' << id;
    }
    if (!report.classes.empty()) out << '\n';
    for (const auto& note : report.notes) out << "note: " << note << '\n';
}

nlohmann::json report_to_json(const RankReport& report) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json entry = {{"rank", e.rank},
                      {"id", e.id},
                      {"score", value_json(e.score)},
                      {"accuracy", value_json(e.accuracy)},
                      {"certainty", value_json(e.certainty)},
                      {"exact", {{"score", e.score.exact}, {"accuracy", e.accuracy.exact}, {"certainty", e.certainty.exact}}},
                      {"equality_class", e.tie ? json(std::string(to_string(*e.tie))) : json(nullptr)}};
        entries.push_back(std::move(entry));
    }
    json classes = json::array();
    for (const auto& c : report.classes) {
        classes.push_back({{"rank", c.rank}, {"ids", c.ids}, {"equality_class", std::string(to_string(c.flag))}});
    }
    return {{"kind", std::string(to_string(report.kind))},
            {"backend", report.backend},
            {"entries", std::move(entries)},
            {"equality_classes", std::move(classes)},
            {"notes", report.notes}};
}

}  // namespace ntrank::cli
