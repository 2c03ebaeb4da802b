#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cutlab/caps.hpp"

namespace cutlab {

// Version stamped into every emitted report.
std::string artifact_version();

// Report preamble every CSV starts with: artifact version, run configuration,
// and seed — the reproduction recipe — followed by the column line.
std::string csv_head(const std::string& config, std::uint64_t seed, const std::string& columns);

// One experiment run: a machine-readable CSV (leading `#` lines carry the
// artifact version, the configuration, and the master seed, so a report can
// be reproduced bit-identically), a one-line human summary, and raw counters
// for callers that need finer-grained verdicts than `pass`.
struct ExpResult {
  bool pass = false;
  std::string summary;
  std::string csv;
  std::map<std::string, long> stats;
};

// Cut generators (rounding, mixed-integer rounding, corner cuts from optimal
// tableau rows, knapsack hulls, subadditive functions) on random bounded
// instances; every emitted cut is checked against the exact validity oracle,
// and every tableau-derived corner cut must miss the fractional vertex by
// exactly one in tableau space.
ExpResult exp_cut_validity(std::uint64_t seed, int instances = 100, int min_cuts = 500,
                           const Caps& caps = {});

// Distance from the sparse closure to random 0/1 polytopes, certified against
// the closed-form bound with outward interval arithmetic for every k.
ExpResult exp_theorem1(std::uint64_t seed, int polytopes = 50, const Caps& caps = {});

// Randomized sparsification of a separating cut on a crafted family: success
// rate within the draw budget plus exact re-validation of every returned cut.
ExpResult exp_sparsifier(std::uint64_t seed, int inputs = 20, int max_draws = 1000);

// Two-stage packing instances: the twin-point certificate chain, the factor-2
// bound on single-node-support sparse cuts, and the star graph's fractional
// chromatic number.
ExpResult exp_two_stage(std::uint64_t seed, int instances = 30, const Caps& caps = {});

// Partitioned packing instances: sparse-closure value within the fractional
// chromatic number times the integer optimum, exactly.
ExpResult exp_partitioned(std::uint64_t seed, int instances = 30, const Caps& caps = {});

// Pre-processed packing instances: LP value within twice the integer optimum,
// and the LP / aggregation-closure-outer / integer-hull sandwich.
ExpResult exp_thm_agg(std::uint64_t seed, int instances = 200, const Caps& caps = {});

// Market-split instances: mean gap closed by aggregated rounding cuts must
// strictly exceed the mean gap closed by single-row rounding cuts.
ExpResult exp_cg_compare(std::uint64_t seed, int instances = 10, const Caps& caps = {});

// Cut pools and scoring policies: cardinality and parallelism limits,
// scale invariance of the ranking, determinism, and the depth-vs-dominance
// inversion regression.
ExpResult exp_selection(std::uint64_t seed, int pools = 1000);

// Rounding-cut loop on bounded pure-integer instances against brute-force
// enumeration; iteration-cap hits must stay under ten percent.
ExpResult exp_gomory(std::uint64_t seed, int runs = 50, const Caps& caps = {});

// One-parameter family where the best single-row bound stays near the LP
// value while one aggregated row collapses it: frozen exact values and a
// separation ratio that grows with the parameter.
ExpResult exp_cancel_family(std::uint64_t seed, const Caps& caps = {});

}  // namespace cutlab
