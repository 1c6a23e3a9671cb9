#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hva {

enum class Outcome { accept, reject, inconclusive };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::accept:
        return "accept";
    case Outcome::reject:
        return "reject";
    case Outcome::inconclusive:
        return "inconclusive";
    }
    return "?";
}

struct RunOptions {
    std::uint64_t budget = 1'000'000; // max configurations expanded; enforced only when epsilon moves exist
    bool want_trace = true;
    bool dedup = true;
};

struct RunStats {
    std::uint64_t configurations_expanded = 0;
    std::uint64_t max_frontier = 0;
};

/// Result of a configuration-graph search. `path` lists (edge label, configuration reached).
template <class Config>
struct SearchResult {
    Outcome outcome = Outcome::reject;
    std::vector<std::pair<std::size_t, Config>> path;
    RunStats stats;
};

/// Breadth-first search by number of moves from `start`.
///
/// `successors(config, emit)` calls `emit(label, next)` for each move in label
/// order. The first accepting configuration generated ends the search, so the
/// returned path is the lexicographically-first among the shortest ones. With
/// `enforce_budget` the search gives up (inconclusive) after `budget`
/// expansions; otherwise it runs until the frontier is exhausted.
template <class Config, class Successors, class Accepting, class Hash = std::hash<Config>>
SearchResult<Config> breadth_first_search(Config start, Successors&& successors, Accepting&& accepting,
                                          const RunOptions& opts, bool enforce_budget) {
    struct Node {
        Config config;
        std::size_t parent;
        std::size_t label;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

    std::vector<Node> nodes;
    auto node_hash = [&nodes](std::size_t i) { return Hash{}(nodes[i].config); };
    auto node_eq = [&nodes](std::size_t a, std::size_t b) { return nodes[a].config == nodes[b].config; };
    std::unordered_set<std::size_t, decltype(node_hash), decltype(node_eq)> seen(64, node_hash, node_eq);

    SearchResult<Config> result;
    auto finish = [&](std::size_t last, Outcome outcome) {
        result.outcome = outcome;
        if (outcome == Outcome::accept && opts.want_trace) {
            for (std::size_t i = last; nodes[i].parent != kRoot; i = nodes[i].parent)
                result.path.emplace_back(nodes[i].label, nodes[i].config);
            std::reverse(result.path.begin(), result.path.end());
        }
        return result;
    };

    nodes.push_back(Node{std::move(start), kRoot, 0});
    if (opts.dedup)
        seen.insert(0);
    if (accepting(nodes[0].config))
        return finish(0, Outcome::accept);

    std::deque<std::size_t> frontier{0};
    result.stats.max_frontier = 1;
    while (!frontier.empty()) {
        if (enforce_budget && result.stats.configurations_expanded >= opts.budget)
            return finish(0, Outcome::inconclusive);
        std::size_t current = frontier.front();
        frontier.pop_front();
        ++result.stats.configurations_expanded;

        std::optional<std::size_t> hit;
        const Config here = nodes[current].config; // nodes may reallocate while emitting
        successors(here, [&](std::size_t label, Config next) {
            if (hit)
                return;
            nodes.push_back(Node{std::move(next), current, label});
            std::size_t id = nodes.size() - 1;
            if (opts.dedup && !seen.insert(id).second) {
                nodes.pop_back();
                return;
            }
            if (accepting(nodes[id].config)) {
                hit = id;
                return;
            }
            frontier.push_back(id);
        });
        if (hit)
            return finish(*hit, Outcome::accept);
        result.stats.max_frontier = std::max<std::uint64_t>(result.stats.max_frontier, frontier.size());
    }
    return finish(0, Outcome::reject);
}

} // namespace hva
