#pragma once

#include "gramvol/graph.hpp"
#include "gramvol/simplex.hpp"
#include "gramvol/sym_matrix.hpp"
#include "gramvol/volume.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gramvol {

struct Permutation {
  std::vector<int> image;  // 1-based, slot 0 unused; image[k] = sigma(k)

  int n() const { return static_cast<int>(image.size()) - 1; }
  int of(int k) const { return image[k]; }
  int parity() const;  // +1 or -1
};

// Multiset of cycle lengths; fixed points count as length-1 cycles.
struct CycleType {
  std::vector<int> lengths;  // decreasing

  int n() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& sigma);

// A permutation sigma with {k, sigma(k)} an edge for every k (loops allow
// fixed points), lexicographically smallest, optionally restricted to the
// given parity. Guarded at 10 vertices.
std::optional<Permutation> adjacency_permutation(const Graph& g,
                                                 std::optional<int> required_parity = {});

// Invertible signature carried by the block sum of weighted cycles of the
// given lengths: 2p = n - (#fixed points) - (#cycles of length 1 mod 4,
// length >= 5) + (#cycles of length 3 mod 4), q = n - p.
Signature signature_from_cycle_type(const CycleType& ct);

// Classification of H^1(C_n, R): dimension and signatures per stratum,
// each verified against an exact representative matrix.
struct CycleClassStratum {
  std::string label;  // "all", "nonzero", or "zero"
  Signature sig;
};

struct CycleClassTable {
  int n = 0;
  int h1_dim = 0;
  std::vector<CycleClassStratum> strata;
};

CycleClassTable cycle_class_table(int n);

// Realizes the cochain that equals the canonical invertible cycle
// representative on the edges {k, sigma(k)} and epsilon on every other
// edge of the graph, and compares the resulting signature with the
// cycle-type prediction (expected to match for small epsilon).
struct PerturbationResult {
  std::optional<MarkedSimplex> simplex;  // nullopt: degenerate at this epsilon
  Signature expected;
  Signature realized;  // zero-initialised when degenerate
  bool matches = false;
};

PerturbationResult perturbation_realize(const Graph& g, const Permutation& sigma,
                                        const Rational& epsilon);

// All 2^10 loopless labelled graphs on 5 vertices: counts the graphs
// carrying a fixed-point-free adjacency permutation of parity +1 (such a
// permutation is necessarily a 5-cycle) and lists any of them whose volume
// verdict is infinite. The expected list is empty.
struct H22CensusReport {
  int total = 0;
  int five_cycle_count = 0;
  std::vector<std::uint32_t> counterexamples;  // graph encodings
};

H22CensusReport h22_ideal_census();

// One row per labelled graph: adjacency-permutation existence by parity,
// signatures predicted from adjacency cycle types, signatures realized by
// sampled cochains (values from {1, 1/2, 2, 1/3, 3}), and the volume
// verdict. Rows are ordered by graph encoding regardless of worker count.
struct CensusRow {
  std::uint64_t encoding = 0;
  Graph graph{1};
  bool perm_even_exists = false;
  bool perm_odd_exists = false;
  std::vector<Signature> predicted;  // sorted, deduplicated
  std::vector<Signature> realized;   // sorted, deduplicated
  VolumeVerdict verdict;
};

// Labelled-graph census: with loops up to n = 5, loopless up to n = 6.
std::vector<CensusRow> run_census(int n, bool loopless, int threads = 1);

// Graph encoding used by the census: bit k of the mask selects the k-th
// vertex pair in lexicographic order ((1,1),(1,2),...,(n,n) with loops;
// (1,2),(1,3),...,(n-1,n) without).
Graph graph_from_encoding(int n, bool loopless, std::uint64_t mask);
std::uint64_t graph_encoding(const Graph& g, bool loopless);

// Unmarked isometry: quantifies marked isometry over all relabellings that
// are graph isomorphisms. Brute force, guarded at 7 vertices.
bool isometric_unmarked(const MarkedSimplex& a, const MarkedSimplex& b);

// An ideal simplex of infinite volume in H^{p,q}, p >= 3, q >= 1: the
// orthogonal sum of the two-point ideal simplex with an ideal simplex of
// H^{p-1,q-1} found by randomized rational isotropic vectors (rejection
// until the Gram matrix is complete, negative off the diagonal, and of
// signature (p-1, q)). Deterministic for a fixed seed.
MarkedSimplex ideal_infinite_example(int p, int q, std::uint64_t seed = 2024);

}  // namespace gramvol
