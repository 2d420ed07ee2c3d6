#include "ntrank/cli/literal.hpp"

#include <cctype>

namespace ntrank::cli {

namespace {

bool is_open(char c) { return c == '(' || c == '['; }
bool is_close(char c) { return c == ')' || c == ']'; }

// Index of the bracket closing the one at `open`, or npos.
std::size_t matching(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < s.size(); ++k) {
        if (is_open(s[k])) ++depth;
        if (is_close(s[k]) && --depth == 0) return k;
    }
    return std::string::npos;
}

}  // namespace

std::vector<LiteralItem> split_literal(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    const std::string original(text);
    auto fail = [&](const std::string& why) { return ParseError("bad literal '" + original + "': " + why); };
    if (s.empty()) throw fail("empty");

    if (s.front() == '(' && matching(s, 0) == s.size() - 1) s = s.substr(1, s.size() - 2);

    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : s) {
        if (is_open(c)) ++depth;
        if (is_close(c) && --depth < 0) throw fail("unbalanced brackets");
        if (c == ',' && depth == 0) {
            parts.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (depth != 0) throw fail("unbalanced brackets");
    parts.push_back(std::move(current));

    std::vector<LiteralItem> items;
    for (const auto& p : parts) {
        if (p.empty()) throw fail("empty component");
        LiteralItem item;
        if (is_open(p.front())) {
            if (!is_close(p.back()) || matching(p, 0) != p.size() - 1) throw fail("malformed interval '" + p + "'");
            const std::string inner = p.substr(1, p.size() - 2);
            const auto comma = inner.find(',');
            if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos ||
                inner.find_first_of("()[]") != std::string::npos) {
                throw fail("interval '" + p + "' needs exactly two bounds");
            }
            item.bracketed = true;
            item.lo = inner.substr(0, comma);
            item.hi = inner.substr(comma + 1);
            if (item.lo.empty() || item.hi.empty()) throw fail("interval '" + p + "' has an empty bound");
        } else {
            if (p.find_first_of("()[]") != std::string::npos) throw fail("unexpected bracket in '" + p + "'");
            item.lo = p;
        }
        items.push_back(std::move(item));
    }
    return items;
}

}  // namespace ntrank::cli
