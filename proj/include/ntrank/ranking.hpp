#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntrank/errors.hpp"
#include "ntrank/ordering.hpp"

namespace ntrank {

enum class EqualityClass { Identical, NeutroEqual };

constexpr std::string_view to_string(EqualityClass c) {
    return c == EqualityClass::Identical ? "identical" : "neutro_equal";
}

template <class Key>
struct RankedEntry {
    std::size_t rank = 0;  // 1-based competition rank ("1-1-3")
    std::string label;
    Key key;
    std::optional<EqualityClass> tie;  // set when the rank is shared
};

template <class T>
using Labeled = std::pair<std::string, T>;

/// Stable descending sort under `compare` with competition ranking of ties.
///
/// `compare(a, b)` must be a total preorder expressed as RankOrdering; items
/// that tie keep their input order and share the rank of the first of them.
template <class Item, class KeyFn, class Compare>
auto rank_by(std::span<const Labeled<Item>> items, KeyFn key_of, Compare compare)
    -> std::vector<RankedEntry<decltype(key_of(std::declval<const Item&>()))>> {
    using Key = decltype(key_of(std::declval<const Item&>()));
    if (items.empty()) throw EmptyInput();

    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare(items[a].second, items[b].second) == RankOrdering::Greater;
    });

    std::vector<RankedEntry<Key>> out;
    out.reserve(items.size());
    std::size_t group_start = 0;
    while (group_start < order.size()) {
        const Item& head = items[order[group_start]].second;
        std::size_t group_end = group_start + 1;
        bool all_identical = true;
        while (group_end < order.size()) {
            const RankOrdering o = compare(head, items[order[group_end]].second);
            if (!is_tie(o)) break;
            all_identical = all_identical && o == RankOrdering::Identical;
            ++group_end;
        }
        std::optional<EqualityClass> tie;
        if (group_end - group_start > 1) {
            tie = all_identical ? EqualityClass::Identical : EqualityClass::NeutroEqual;
        }
        for (std::size_t k = group_start; k < group_end; ++k) {
            const auto& [label, item] = items[order[k]];
            out.push_back({group_start + 1, label, key_of(item), tie});
        }
        group_start = group_end;
    }
    return out;
}

}  // namespace ntrank
