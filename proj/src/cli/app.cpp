#include "ntrank/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ntrank/cli/commands.hpp"
#include "ntrank/cli/dataset.hpp"
#include "ntrank/cli/report.hpp"
#include "ntrank/rational.hpp"

namespace ntrank::cli {

namespace {

enum class Backend { Rational, Float };
enum class Output { Table, Json };

template <class F>
auto with_backend(Backend backend, F&& f) {
    if (backend == Backend::Rational) return f(Rational{});
    return f(double{});
}

struct RankOptions {
    std::string file;
    std::optional<Format> format;
    Output output = Output::Table;
};

template <Scalar S>
void run_rank(const RankOptions& opts, std::istream& in, std::ostream& out) {
    const Format format = opts.format.value_or(format_for_path(opts.file));
    Dataset<S> data;
    if (opts.file == "-") {
        data = parse_dataset<S>(in, format);
    } else {
        std::ifstream file(opts.file, std::ios::binary);
        if (!file) throw ParseError("cannot open '" + opts.file + "'");
        data = parse_dataset<S>(file, format);
    }
    const RankReport report = cmd_rank(data);
    if (opts.output == Output::Json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        render_table(report, out);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank neutrosophic triplets by score, accuracy and certainty"};
    app.require_subcommand(1);

    Backend backend = Backend::Rational;
    const std::map<std::string, Backend> backends{{"rational", Backend::Rational}, {"float", Backend::Float}};

    RankOptions rank_opts;
    auto* rank = app.add_subcommand("rank", "Rank every alternative of a CSV or JSON dataset");
    rank->add_option("file", rank_opts.file, "Dataset path, or - for standard input")->required();
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
    rank->add_option("--format", rank_opts.format, "Input format (default: from the file extension)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    const std::map<std::string, Output> outputs{{"table", Output::Table}, {"json", Output::Json}};
    rank->add_option("--output", rank_opts.output, "Report format")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case))
        ->default_str("table");

    std::string lhs;
    std::string rhs;
    auto* compare = app.add_subcommand("compare", "Compare two literals and print the deciding cascade");
    compare->add_option("lhs", lhs, "Number, interval or triplet, e.g. \"(0.6,0.2,0.3)\"")->required();
    compare->add_option("rhs", rhs)->required();

    auto* possibility = app.add_subcommand("possibility", "Possibility degrees of two intervals");
    possibility->add_option("a", lhs, "Interval, e.g. \"[0.4,0.7]\"")->required();
    possibility->add_option("b", rhs)->required();

    auto* score_cmd = app.add_subcommand("score", "Every applicable function of one literal");
    score_cmd->add_option("literal", lhs)->required();

    for (auto* sub : {rank, compare, possibility, score_cmd}) {
        sub->add_option("--backend", backend, "Arithmetic: exact rationals or IEEE doubles")
            ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case))
            ->default_str("rational");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*rank) {
            with_backend(backend, [&](auto tag) { run_rank<decltype(tag)>(rank_opts, in, out); });
        } else if (*compare) {
            with_backend(backend, [&](auto tag) { cmd_compare<decltype(tag)>(lhs, rhs, out); });
        } else if (*possibility) {
            with_backend(backend, [&](auto tag) { cmd_possibility<decltype(tag)>(lhs, rhs, out); });
        } else if (*score_cmd) {
            with_backend(backend, [&](auto tag) { cmd_score<decltype(tag)>(lhs, out); });
        }
    } catch (const EmptyInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitEmptyInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace ntrank::cli
