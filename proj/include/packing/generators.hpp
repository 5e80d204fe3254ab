#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packing/graph.hpp"

namespace packing {

/// Proposes 3n uniform random vertex pairs and keeps each one that is not
/// a loop or duplicate while both endpoints still have degree below 3.
/// Deterministic per (n, seed).
Graph gen_random_subcubic(int n, uint64_t seed);

/// Subdivision of gen_random_subcubic(n_base, seed); always 3-irregular.
Graph gen_3_irregular(int n_base, uint64_t seed);

/// Builds a random cubic base on 2 * n_pairs vertices carrying the
/// distinguished perfect matching {(0,1), (2,3), ...}, fills the
/// remaining degree by a random stub pairing, then subdivides every edge
/// outside the matching. Degree-3 vertices survive only in matched
/// adjacent pairs, so the result is 1-saturated. Resamples the pairing
/// up to 100 times when it produces loops or duplicates and throws
/// GenerationError("generation failed after retries") past that;
/// n_pairs == 1 always fails because no simple cubic graph exists on two
/// vertices. n_pairs == 0 yields the empty graph.
Graph gen_1_saturated(int n_pairs, uint64_t seed);

/// Fixed corpus: "K4", "C3".."C12", "P2".."P12", "petersen", "prism",
/// "cube-q3", "subdivided-k4", "subdivided-petersen". Cycles and paths
/// number vertices 0..n-1 along the walk; petersen is the outer 5-cycle
/// 0..4, the inner pentagram 5..9 and spokes i-(i+5); prism is the
/// triangles 0,1,2 and 3,4,5 joined by i-(i+3); cube-q3 joins ids that
/// differ in one bit. Throws std::invalid_argument on unknown keys.
Graph named_graph(const std::string& key);

std::vector<std::string> named_graph_keys();

} // namespace packing
