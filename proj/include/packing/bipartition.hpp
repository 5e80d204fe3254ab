#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "packing/graph.hpp"

namespace packing {

enum class Side : uint8_t { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// Cut size paired with the number of same-side edges that have a
/// degree-2 end, compared lexicographically. Every move the engine
/// applies must strictly increase this value.
struct Potential {
    int cut = 0;
    int e1 = 0;
    auto operator<=>(const Potential&) const = default;
};

enum class MoveKind {
    flip,                      // one vertex crosses to the other side
    pair_swap,                 // an adjacent cross pair swaps sides
    triple_exchange,           // a common neighbor crosses over while its
                               // two bad neighbors cross back
    rewire_swap,               // cut-preserving exchange that grows E1
    composite_flip_then_triple // cut-neutral flip fused with the triple
                               // exchange it enables
};

/**
 * A side reassignment of up to four vertices. Applying a move toggles the
 * side of every vertex in toggled(); rewire_swap records one extra vertex
 * (the private neighbor y1) that does not move.
 */
struct Move {
    MoveKind kind = MoveKind::flip;
    std::array<int, 4> verts{-1, -1, -1, -1};

    static Move flip(int v);
    static Move pair_swap(int x, int y);
    static Move triple_exchange(int y, int x1, int x2);
    static Move rewire_swap(int u, int v, int y, int y1);
    static Move composite_flip_then_triple(int v, int y, int x1, int x2);

    int arity() const;
    std::span<const int> participants() const; // all recorded vertices
    std::span<const int> toggled() const;      // vertices that change side
    std::string_view kind_name() const;

    bool operator==(const Move&) const = default;
};

/**
 * A two-sided vertex partition with cached cut size and E1 count. The
 * caches are maintained incrementally by apply_move; audit() recomputes
 * them from scratch and fails loudly on divergence.
 */
struct Bipartition {
    std::vector<Side> side;
    int cut_size = 0;
    int e1_count = 0;
    long generation = 0;

    Potential potential() const { return {cut_size, e1_count}; }
};

/// Snapshot of everything the move scan and the colorer need to know
/// about same-side edges.
struct SameSideStructure {
    std::vector<Edge> e_x; // edges with both ends in X, sorted
    std::vector<Edge> e_y; // edges with both ends in Y, sorted
    std::vector<int> bad;  // endpoints of e_x / e_y edges, sorted
    std::vector<Edge> e1;  // same-side edges with a degree-2 end
    std::vector<Edge> e2;  // the remaining same-side edges

    bool is_bad(int v) const;
};

struct MoveRecord {
    Move move;
    Potential before;
    Potential after;
};

/// Ordered log of the moves one run applied.
struct RepairTrace {
    std::vector<MoveRecord> records;
};

/// Builds a partition from explicit sides and recomputes both caches.
Bipartition bipartition_from_sides(const Graph& g, std::vector<Side> side);

/// Places vertices in seeded random order, each on the side holding fewer
/// of its already-placed neighbors (ties go to X).
Bipartition greedy_init(const Graph& g, uint64_t seed);

/// Recomputes cut and E1 from scratch; throws InvariantError("cache
/// divergence") if the cached values disagree.
Potential audit(const Graph& g, const Bipartition& b);

SameSideStructure same_side_structure(const Graph& g, const Bipartition& b);

/**
 * Deterministic first-improvement scan. Move kinds are tried in the order
 * flip, pair_swap, triple_exchange, rewire_swap, composite_flip_then_triple;
 * within a kind, candidates are enumerated by ascending vertex id. The
 * returned move strictly increases the Potential; flip, pair_swap and
 * triple_exchange must raise the cut, rewire_swap must keep the cut and
 * raise E1.
 */
std::optional<Move> find_improving_move(const Graph& g, const Bipartition& b);

/// Applies the move and updates both caches incrementally. Throws
/// InvariantError("stale move ...") when the move's structural
/// preconditions do not hold against the current sides.
void apply_move(const Graph& g, Bipartition& b, const Move& m);

/// Runs find_improving_move/apply_move to a fixpoint. Throws
/// InvariantError on a non-monotone move or when more than
/// |E| * (|E| + 1) moves apply (either signals a broken move
/// implementation).
std::pair<Bipartition, RepairTrace> local_optimize(const Graph& g, Bipartition b);

/**
 * Asserts every structural fact a fixpoint must satisfy: caches agree,
 * 2 * cross_degree(v) >= degree(v) for all v, both same-side subgraphs
 * are matchings, bad vertices have degree at least two, and E2 edges
 * have two degree-3 ends. With three_irregular_input set it also checks
 * that E2 is empty and no edge joins a bad X vertex to a bad Y vertex.
 * Throws InvariantError on the first failure.
 */
void check_fixpoint(const Graph& g, const Bipartition& b,
                    const SameSideStructure& s, bool three_irregular_input);

} // namespace packing
