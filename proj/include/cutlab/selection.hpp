#pragma once

#include "cutlab/cuts.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutlab {

// Insertion-ordered cut pool; every stored cut separates a recorded point.
struct CutPool {
  std::vector<Cut> cuts;
  std::vector<QVec> xstars;

  // Rejects cuts that separate none of the recorded points.
  void add(Cut c);
};

// Squared depth of cut: (violation)^2 / |alpha|^2 when the cut is violated at
// xstar, else 0. Squaring keeps the value rational; ranking is unchanged.
Rational sq_depth(const Cut& c, const QVec& xstar);

// (a1.a2)^2 / (|a1|^2 |a2|^2) in [0,1]; 1 iff the normals are parallel.
Rational sq_parallelism(const Cut& c1, const Cut& c2);

// max |alpha_j| / min over the support; >= 1 always.
Rational dynamism(const Cut& c);

// User-facing policy; unset fields fall back to documented defaults.
struct Policy {
  std::optional<Rational> w_depth, w_sparsity, w_dynamism, tau, d_max;
  std::optional<int> k_max;

  static Policy from_json(const std::string& text);
  std::string to_json() const;
};

struct ResolvedPolicy {
  Rational w_depth, w_sparsity, w_dynamism;  // composite score weights
  Rational tau;                              // parallelism threshold in [0,1]
  Rational d_max;                            // dynamism filter bound
  int k_max = 0;                             // selection size cap
};

// Defaults: w_depth 1, w_sparsity 1/n, w_dynamism 0, tau 9/10, K 10, D 1000.
ResolvedPolicy resolve_policy(const Policy& p, int n);

struct ScoredCut {
  Cut cut;
  Rational sq_depth_v;
  Rational dynamism_v;
  int sparsity = 0;
  Rational composite;
  Rational max_sq_par_to_selected;
};

// Three stages: keep cuts separating xstar; drop dynamism > D; greedy scan in
// composite order (w_depth*sq_depth - w_sparsity*sparsity -
// w_dynamism*(dynamism-1), ties by insertion order), skipping any cut with
// sq_parallelism > tau^2 against an already-selected one; stop at K. The
// optional objective adds w_objpar * sq_parallelism(cut, objective) to the
// score and defaults off.
std::vector<ScoredCut> select(const CutPool& pool, const QVec& xstar, const ResolvedPolicy& pol,
                              const QVec* objective = nullptr,
                              const Rational& w_objpar = Rational(0));

}  // namespace cutlab
