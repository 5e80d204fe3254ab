#pragma once

#include <cstdint>
#include <optional>

#include "packing/colorer.hpp"
#include "packing/graph.hpp"

namespace packing {

struct Violation {
    int class_index = 0; // 1-based
    int u = -1;
    int v = -1;
    int distance = 0;
};

struct Verdict {
    bool valid = false;
    std::optional<Violation> violation;
};

/**
 * Checks that same-class vertices of class i sit at pairwise distance at
 * least s_i + 1, using one truncated multi-source BFS per class (never an
 * all-pairs matrix). Reports the first violation in lexicographic
 * (class, u, v) order. Throws std::invalid_argument on a partial coloring
 * or a class index outside the sequence.
 */
Verdict verify_coloring(const Graph& g, const PackingSequence& s, const Coloring& c);

enum class SearchStatus { yes, no, budget_exceeded };

inline const char* search_status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::yes:
        return "yes";
    case SearchStatus::no:
        return "no";
    case SearchStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "?";
}

struct ExactResult {
    SearchStatus status = SearchStatus::no;
    std::optional<Coloring> witness; // present exactly when status == yes
    uint64_t nodes = 0;              // assignment attempts spent
};

inline constexpr uint64_t kDefaultOracleBudget = 10'000'000;

/**
 * Exhaustive backtracking over vertices in descending-degree order
 * (ties: ascending id), with incremental feasibility via truncated BFS
 * and symmetry pruning among empty classes of equal threshold. Budget is
 * a bound on assignment attempts. A yes-witness is verified before it is
 * returned.
 */
ExactResult exact_colorable(const Graph& g, const PackingSequence& s,
                            uint64_t budget = kDefaultOracleBudget);

struct MinPackingResult {
    SearchStatus status = SearchStatus::no; // yes: k holds; no: none within k_max
    int k = 0;
    std::optional<Coloring> witness;
};

/// Smallest k with a (1, 2, ..., k)-packing coloring, tried in ascending
/// order; budget applies to each k separately and budget-exceeded is
/// propagated.
MinPackingResult min_packing_k(const Graph& g, int k_max,
                               uint64_t budget = kDefaultOracleBudget);

} // namespace packing
