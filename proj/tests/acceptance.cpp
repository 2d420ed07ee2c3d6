// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntrank/cli/app.hpp"
#include "ntrank/cli/dataset.hpp"
#include "ntrank/cli/report.hpp"
#include "ntrank/ntrank.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace ntrank;
using ntrank::testing::Gen;
using ntrank::testing::q;

namespace {

using Iv = UnitInterval<Rational>;
using Svn = SvnTriplet<Rational>;
using Ivn = IvnTriplet<Rational>;

constexpr int kFuzz = 10'000;
constexpr int kConstructed = 1'000;

Iv iv(const char* lo, const char* hi) { return {q(lo), q(hi)}; }

/// Collects failed checks of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
    bool ok() const { return failures.empty(); }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<void(Check&)> body;
};

template <class T>
std::string show(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

bool at_least(RankOrdering o) { return o == RankOrdering::Greater || is_tie(o); }

// Criterion bodies ---------------------------------------------------------

void possibility_golden(Check& c) {
    const Iv a = iv("0.4", "0.7");
    const Iv b = iv("0.3", "0.6");
    const Rational ab = possibility_degree(a, b);
    const Rational ba = possibility_degree(b, a);
    c.expect(ab == Rational(2, 3), "P(A>=B) = " + show(ab));
    c.expect(ba == Rational(1, 3), "P(B>=A) = " + show(ba));
    c.expect(ab + ba == Rational(1), "sum = " + show(ab + ba));
    c.expect(q("0.4") / q("0.6") + q("0.2") / q("0.6") == Rational(1), "0.4/0.6 + 0.2/0.6");
}

void midpoint_golden(Check& c) {
    c.expect(midpoint(iv("0.4", "0.7")) == q("0.55"), "midpoint [0.4,0.7]");
    c.expect(midpoint(iv("0.3", "0.6")) == q("0.45"), "midpoint [0.3,0.6]");
    c.expect(compare_by_midpoint(iv("0.4", "0.7"), iv("0.3", "0.6")) == RankOrdering::Greater, "[0.4,0.7] > [0.3,0.6]");

    const Iv x = iv("0.1", "0.7");
    const Iv y = iv("0.3", "0.5");
    c.expect(compare_by_midpoint(x, y) == RankOrdering::NeutroEqual, "[0.1,0.7] =N [0.3,0.5]");
    c.expect(possibility_degree(x, y) == q("0.5"), "P([0.1,0.7] >= [0.3,0.5])");
    c.expect(possibility_degree(y, x) == q("0.5"), "P([0.3,0.5] >= [0.1,0.7])");

    const Iv u = iv("0.3", "0.5");
    const Iv v = iv("0.2", "0.6");
    c.expect(possibility_degree(u, v) == q("0.5"), "P([0.3,0.5] >= [0.2,0.6])");
    c.expect(possibility_degree(v, u) == q("0.5"), "P([0.2,0.6] >= [0.3,0.5])");
}

void scalar_interval_golden(Check& c) {
    c.expect(compare_scalar_interval(q("0.4"), iv("0.2", "0.8")) == RankOrdering::Less, "0.4 vs [0.2,0.8]");
    c.expect(compare_scalar_interval(q("0.7"), iv("0.5", "0.8")) == RankOrdering::Greater, "0.7 vs [0.5,0.8]");
}

void svn_order_laws(Check& c) {
    Gen gen(1001);
    for (int k = 0; k < kFuzz; ++k) {
        const bool coarse = gen.coin(0.5);
        const Svn a = gen.svn<Rational>(coarse);
        const Svn b = gen.coin(0.1) ? a : gen.svn<Rational>(coarse);
        const Svn d = gen.svn<Rational>(coarse);
        const RankOrdering ab = compare_svn(a, b);
        const RankOrdering ba = compare_svn(b, a);
        c.expect(ab != RankOrdering::NeutroEqual, "totality: NeutroEqual from a single-valued compare");
        c.expect(ba == reversed(ab), "antisymmetry");
        c.expect((ab == RankOrdering::Identical) == (a == b), "Identical iff equal components");
        if (at_least(ab) && at_least(compare_svn(b, d))) c.expect(at_least(compare_svn(a, d)), "transitivity");
    }
}

void complementarity(Check& c) {
    Gen gen(1002);
    for (int k = 0; k < kFuzz; ++k) {
        const Svn x = gen.svn<Rational>();
        c.expect(score(x) + negative_score(x) == Rational(1), "rational: s + s- = 1");
        const auto y = gen.svn<double>();
        c.expect(std::abs(score(y) + negative_score(y) - 1.0) <= 1e-12, "float: |s + s- - 1| <= 1e-12");
    }
}

void possibility_midpoint_equivalence(Check& c) {
    Gen gen(1003);
    std::size_t same_mid = 0;
    std::size_t degenerate = 0;
    for (int k = 0; k < kFuzz; ++k) {
        const Iv a = gen.integer(0, 9) == 0 ? Iv::point(gen.unit<Rational>()) : gen.interval<Rational>();
        Iv b = gen.interval<Rational>();
        switch (gen.integer(0, 3)) {
            case 0: b = gen.centered_at(midpoint(a)); break;
            case 1: b = Iv::point(gen.unit<Rational>()); break;
            default: break;
        }
        same_mid += midpoint(a) == midpoint(b) ? 1 : 0;
        degenerate += a.is_degenerate() || b.is_degenerate() ? 1 : 0;

        const Rational p = possibility_degree(a, b);
        const int by_p = Rational(1, 2) < p ? 1 : (p < Rational(1, 2) ? -1 : 0);
        const RankOrdering m = compare_by_midpoint(a, b);
        const int by_m = m == RankOrdering::Greater ? 1 : (m == RankOrdering::Less ? -1 : 0);
        c.expect(by_p == by_m, "P classification vs midpoint for [" + show(a.lo()) + "," + show(a.hi()) + "] vs [" +
                                   show(b.lo()) + "," + show(b.hi()) + "]");
    }
    // The oracle over thousandths agrees with the library's possibility degree.
    for (int k = 0; k < kFuzz; ++k) {
        std::int64_t a0 = gen.integer(0, 1000), a1 = gen.integer(0, 1000);
        std::int64_t b0 = gen.integer(0, 1000), b1 = gen.integer(0, 1000);
        if (a1 < a0) std::swap(a0, a1);
        if (b1 < b0) std::swap(b0, b1);
        if (gen.coin(0.1)) b1 = b0;
        const auto f = testing::oracle::possibility({a0, a1}, {b0, b1});
        const Iv a(Rational(a0, 1000), Rational(a1, 1000));
        const Iv b(Rational(b0, 1000), Rational(b1, 1000));
        c.expect(possibility_degree(a, b) == Rational(f.num, f.den), "possibility vs integer oracle");
    }
    c.expect(same_mid >= 1000, "same-midpoint constructions exercised");
    c.expect(degenerate >= 1000, "degenerate intervals exercised");
}

Ivn same_midpoints_as(Gen& gen, const Ivn& a) {
    return {gen.centered_at(midpoint(a.t())), gen.centered_at(midpoint(a.i())), gen.centered_at(midpoint(a.f()))};
}

void fs_zhang_equivalence(Check& c) {
    Gen gen(1004);
    for (int k = 0; k < kFuzz; ++k) {
        const Ivn a = gen.coin(0.1) ? gen.degenerate_ivn<Rational>() : gen.ivn<Rational>();
        Ivn b = gen.ivn<Rational>();
        switch (gen.integer(0, 4)) {
            case 0: b = same_midpoints_as(gen, a); break;
            case 1: b = a; break;
            default: break;
        }
        c.expect(compare_ivn(a, b) == compare_ivn_zhang(a, b), "compare_ivn vs compare_ivn_zhang");
        for (const Ivn* x : {&a, const_cast<const Ivn*>(&b)}) {
            c.expect(midpoint(zhang_score(*x)) == Rational(3) * fs_score(*x), "midpoint of zhang_score = 3 fs_score");
            c.expect(midpoint(zhang_accuracy(*x)) == fs_accuracy(*x), "midpoint of zhang_accuracy = fs_accuracy");
            c.expect(midpoint(zhang_certainty(*x)) == fs_certainty(*x), "midpoint of zhang_certainty = fs_certainty");
        }
    }
}

/// Moves the midpoint of one interval by `delta` and keeps the half width where room allows.
Iv shifted(const Iv& x, const Rational& delta) {
    const Rational m = midpoint(x) + delta;
    Rational half = x.width() / Rational(2);
    const Rational room = m < Rational(1) - m ? m : Rational(1) - m;
    if (room < half) half = room;
    return Iv::centered(m, half);
}

void tie_characterization(Check& c) {
    Gen gen(1005);
    int constructed = 0;
    while (constructed < kConstructed) {
        const Ivn a = gen.ivn<Rational>();
        const Ivn b = same_midpoints_as(gen, a);
        if (b == a) continue;
        ++constructed;
        c.expect(compare_ivn(a, b) == RankOrdering::NeutroEqual, "equal midpoints, different bounds");

        // Nonzero rational shift, kept inside [0,1].
        const int component = static_cast<int>(gen.integer(0, 2));
        const Iv& target = component == 0 ? b.t() : (component == 1 ? b.i() : b.f());
        const Rational m = midpoint(target);
        const std::int64_t den = gen.integer(1, 1000);
        Rational delta(gen.integer(1, den), den * gen.integer(1, 7));
        const bool up = m < Rational(1, 2) ? true : (Rational(1, 2) < m ? false : gen.coin());
        const Rational room = up ? Rational(1) - m : m;
        if (room < delta) delta = room;
        if (!up) delta = -delta;
        if (delta == Rational(0)) continue;

        const Ivn moved{component == 0 ? shifted(b.t(), delta) : b.t(), component == 1 ? shifted(b.i(), delta) : b.i(),
                        component == 2 ? shifted(b.f(), delta) : b.f()};
        const RankOrdering o = compare_ivn(moved, a);
        // Raising truth helps; raising indeterminacy or falsehood hurts.
        const bool helps = (component == 0) == (Rational(0) < delta);
        c.expect(o == (helps ? RankOrdering::Greater : RankOrdering::Less),
                 "perturbed midpoint of component " + std::to_string(component) + " by " + show(delta));
    }
}

void collapse_commutes(Check& c) {
    Gen gen(1006);
    for (int k = 0; k < kFuzz; ++k) {
        const Ivn a = gen.degenerate_ivn<Rational>();
        const Ivn b = gen.coin(0.1) ? a : gen.degenerate_ivn<Rational>();
        const Svn x = collapse(a);
        const Svn y = collapse(b);
        c.expect(fs_score(a) == score(x), "fs_score = score");
        c.expect(fs_accuracy(a) == accuracy(x), "fs_accuracy = accuracy");
        c.expect(fs_certainty(a) == certainty(x), "fs_certainty = certainty");
        const RankOrdering single = compare_svn(x, y);
        c.expect(compare_ivn(a, b) == single, "compare_ivn = compare_svn after collapse");
        c.expect(compare_ivn_zhang(a, b) == single, "compare_ivn_zhang = compare_svn after collapse");
    }
}

// Alternatives built from the intervals of the golden criteria; c and d have
// equal midpoints in every component.
constexpr const char* kDataset = R"([
  {"id": "a", "t": [0.4, 0.7], "i": [0.1, 0.7], "f": [0.3, 0.6]},
  {"id": "b", "t": [0.3, 0.6], "i": [0.3, 0.5], "f": [0.4, 0.7]},
  {"id": "c", "t": [0.1, 0.7], "i": [0.2, 0.4], "f": [0.3, 0.5]},
  {"id": "d", "t": [0.3, 0.5], "i": [0.1, 0.5], "f": [0.2, 0.6]},
  {"id": "e", "t": [0.2, 0.8], "i": [0.4, 0.4], "f": [0.5, 0.8]},
  {"id": "g", "t": [0.7, 0.7], "i": [0.2, 0.6], "f": [0.2, 0.8]}
])";

void cli_end_to_end(Check& c) {
    using nlohmann::json;
    auto run_json = [&](const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"rank", "-", "--format", "json", "--output", "json"}, in, out, err);
        c.expect(code == cli::kExitOk, "exit code " + std::to_string(code) + ": " + err.str());
        return code == cli::kExitOk ? json::parse(out.str()) : json();
    };

    const json first = run_json(kDataset);
    for (int k = 0; k < 5; ++k) c.expect(run_json(kDataset) == first, "repeated runs give the same report");

    std::vector<std::string> order;
    std::vector<std::size_t> ranks;
    if (first.contains("entries")) {
        for (const auto& e : first.at("entries")) {
            order.push_back(e.at("id").get<std::string>());
            ranks.push_back(e.at("rank").get<std::size_t>());
        }
    }
    c.expect(order == std::vector<std::string>{"g", "a", "c", "d", "b", "e"}, "ranking order");
    c.expect(ranks == std::vector<std::size_t>{1, 2, 3, 3, 5, 6}, "competition ranks");
    const json expected_class = {{"rank", 3}, {"ids", {"c", "d"}}, {"equality_class", "neutro_equal"}};
    c.expect(first.value("equality_classes", json()) == json::array({expected_class}), "neutro_equal class");

    std::istringstream in(kDataset);
    const auto data = cli::parse_dataset<Rational>(in, cli::Format::Json);
    for (cli::Format format : {cli::Format::Json, cli::Format::Csv}) {
        std::ostringstream emitted;
        cli::emit_dataset(data, emitted, format);
        std::istringstream back(emitted.str());
        const auto again = cli::parse_dataset<Rational>(back, format);
        c.expect(again == data, "emit/parse round trip");
        c.expect(cli::report_to_json(cli::cmd_rank(again)) == first, "report survives the round trip");
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "possibility degree golden values", 0, possibility_golden},
        {2, "midpoint and neutro-equal golden values", 0, midpoint_golden},
        {3, "number versus interval golden values", 0, scalar_interval_golden},
        {4, "single-valued comparator order laws", 10.0, svn_order_laws},
        {5, "score and negative score are complementary", 0, complementarity},
        {6, "possibility degree agrees with midpoint comparison", 0, possibility_midpoint_equivalence},
        {7, "interval cascade agrees with the Zhang cascade", 0, fs_zhang_equivalence},
        {8, "ties are exactly the equal-midpoint triplets", 0, tie_characterization},
        {9, "collapse commutes with every function", 0, collapse_commutes},
        {10, "CLI end to end", 1.0, cli_end_to_end},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
            check.failures.push_back("took " + std::to_string(seconds) + " s");
        }
        std::ostringstream timing;
        timing.precision(3);
        timing << std::fixed << seconds;
        std::cout << "criterion " << criterion.number << ": " << (check.ok() ? "PASS" : "FAIL") << "  "
                  << criterion.title << " (" << check.count << " checks, " << timing.str() << " s)\n";
        for (const auto& f : check.failures) std::cout << "    " << f << '\n';
        failed += check.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
