#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packing/bipartition.hpp"
#include "packing/graph.hpp"

namespace packing {

/// Which input class the pipeline targets: 3-irregular graphs get a
/// (1,1,3)-coloring, 1-saturated graphs a (1,1,2)-coloring.
enum class ColorMode { irregular3, saturated1 };

inline const char* color_mode_name(ColorMode m)
{
    return m == ColorMode::irregular3 ? "t1" : "t2";
}

PackingSequence sequence_for(ColorMode m);

/// Transversal of the same-side edges: one endpoint per edge, which
/// becomes the widest-spaced color class. provenance maps each member to
/// the edge it covers.
struct TSet {
    std::vector<int> members;                      // sorted
    std::vector<std::pair<int, Edge>> provenance;  // sorted by member

    bool contains(int v) const;
};

/// Every same-side edge contributes a degree-2 endpoint (both degree 2:
/// the smaller id). Throws InvariantError("no degree-2 end") when an edge
/// has none, which signals a non-3-irregular input or a missed move.
TSet build_t_3irregular(const Graph& g, const SameSideStructure& s);

/// Which endpoint an E2 edge contributes.
enum class E2EndRule { smaller_id, larger_id };

/// E1 edges contribute a degree-2 endpoint (ties: smaller id); E2 edges
/// contribute one endpoint picked by rule. Throws InvariantError on an E1
/// edge without a degree-2 end.
TSet build_t_1saturated(const Graph& g, const SameSideStructure& s,
                        E2EndRule rule = E2EndRule::smaller_id);

struct TViolation {
    int u = -1;
    int v = -1;
    int dist = 0;
};

/// First pair of members closer than threshold, in lexicographic (u, v)
/// order, found by per-member BFS truncated at threshold - 1. Threshold
/// is 4 for (1,1,3) runs and 3 for (1,1,2) runs.
std::optional<TViolation> check_t_distances(const Graph& g, const TSet& t, int threshold);

/**
 * Maps a distance violation between members of T to the exchange move
 * that repairs it: the cross-side distance-3 pattern u-y-x-v yields a
 * composite_flip_then_triple, the same-side common-neighbor pattern
 * yields a rewire_swap. The returned move strictly increases the
 * Potential. Any other shape throws UnmatchedViolationError.
 */
Move diagnose_violation(const Graph& g, const Bipartition& b, const TSet& t,
                        const TViolation& violation, ColorMode mode);

/// Total assignment of classes 1..k to vertices (0 marks unassigned and
/// is rejected by the verifier).
struct Coloring {
    std::vector<int> assignment;
    PackingSequence sequence;
};

struct ColorOutcome {
    std::optional<Coloring> coloring;
    /// JSON certificate emitted instead of a coloring when a forced run
    /// hits a violation no repair pattern matches.
    std::optional<std::string> failure_certificate;
    RepairTrace trace;
    Bipartition bipartition;   // final state
    SameSideStructure structure;
    TSet tset;
    int repair_iterations = 0;
};

/**
 * Full pipeline: class check, greedy init, then alternate local_optimize
 * with verifier-guided repairs until the transversal passes its distance
 * check; classes are X minus T, Y minus T, T. The emitted coloring is
 * re-verified before it is returned. Out-of-class inputs throw
 * ClassMismatchError unless force is set, in which case the run proceeds
 * and may return a failure certificate.
 */
ColorOutcome color(const Graph& g, ColorMode mode, uint64_t seed, bool force = false);

} // namespace packing
