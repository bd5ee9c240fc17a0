#pragma once

#include "gramvol/graph.hpp"
#include "gramvol/simplex.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gramvol {

// Thrown when an input exceeds an enumeration guard.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A non-empty stable vertex set I with |I| >= |boundary|; certifies
// infinite volume.
struct StableSetCertificate {
  std::vector<int> inner;     // I, increasing
  std::vector<int> boundary;  // vertices outside I adjacent to I, increasing
};

// Integer weights p* in {-1,0,1}^n with p*_i + p*_j <= 0 on every edge
// (2 p*_i <= 0 on loops) and sum >= 0; the dual certificate.
struct WeightCertificate {
  std::vector<int> weights;  // 1-based, slot 0 unused
};

struct VolumeVerdict {
  bool finite = true;
  std::optional<StableSetCertificate> stable;
  std::optional<WeightCertificate> weight;
};

// The combinatorial volume criterion: infinite iff some non-empty stable I
// has |I| >= |boundary(I)|. Branch-and-bound over independent sets of the
// loop-free vertices, returning a maximum-cardinality qualifying set (so
// e.g. crowns report the full one-per-pair set). The weight certificate is
// derived from I: +1 on I, -1 on its boundary, 0 elsewhere. Throws
// capacity_error above 30 vertices.
VolumeVerdict finiteness_verdict(const Graph& g);
VolumeVerdict decide_finiteness(const MarkedSimplex& s);

// Independent oracle: full enumeration of p in {-1,0,1}^n \ {0}. Throws
// capacity_error above 14 vertices.
VolumeVerdict brute_force_weight_oracle(const Graph& g);
VolumeVerdict brute_force_weight_oracle(const MarkedSimplex& s);

// Second independent oracle, via exact linear programming on the cone
// P = {p : p_i + p_j <= 0 on edges}: returns true ("bounded", finite
// volume) iff no nonzero p in P has sum(p) >= 0. Equivalently the slice
// {p in P : sum(p) = -1} is a bounded cross-section of all of P. Any
// nonzero lineality direction of P settles the question immediately;
// otherwise one feasibility LP per coordinate decides whether a qualifying
// p with p_k = 1 exists.
bool cone_slice_bounded(const Graph& g);
bool cone_slice_bounded(const MarkedSimplex& s);

// Re-validation of certificates from the raw edge list.
bool verify_stable_certificate(const Graph& g, const StableSetCertificate& c);
bool verify_weight_certificate(const Graph& g, const WeightCertificate& c);

struct VolumeEstimate {
  double truncation_radius = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of n |det alpha| Vol{ t in (0,R]^n : f(t) <= 1 }
// with f(t) = -t^T G t evaluated from the (positive-lift) Gram matrix and
// |det alpha| = sqrt(|det G|). Uniform sampling of the box; hits are
// counted per sample index with a counter-based generator, so the result
// is bit-identical for any worker count. The reported standard error uses
// the Jeffreys-adjusted binomial rate (h + 1/2)/(N + 1), which stays
// honest when no sample lands in the region.
VolumeEstimate mc_volume_estimate(const MarkedSimplex& s, double truncation_radius,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads = 1);

// Vol( {t in (0,R]^n : t_i t_j <= 1 on all edges} ), same sampling scheme.
// Depends only on the graph.
VolumeEstimate delta_region_estimate(const Graph& g, double truncation_radius,
                                     std::uint64_t samples, std::uint64_t seed,
                                     int threads = 1);
VolumeEstimate delta_region_estimate(const MarkedSimplex& s, double truncation_radius,
                                     std::uint64_t samples, std::uint64_t seed,
                                     int threads = 1);

// The same volume in exponential coordinates: integral of e^{sum(p)} over
// P intersected with the box [-lower, log R]^n. Block-ordered reduction
// keeps the result independent of the worker count.
VolumeEstimate delta_exponential_estimate(const Graph& g, double lower,
                                          double truncation_radius,
                                          std::uint64_t samples, std::uint64_t seed,
                                          int threads = 1);

}  // namespace gramvol
