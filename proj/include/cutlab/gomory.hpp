#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/cuts.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/simplex.hpp"

namespace cutlab {

struct GomoryResult {
  enum class Status { optimal, infeasible, cap_hit };
  Status status = Status::cap_hit;
  Rational optimum;       // meaningful when optimal
  QVec solution;          // integral optimizer when optimal
  std::vector<Cut> cuts;  // x-space fractional cuts, in the order added
  int iterations = 0;     // LP solves performed
};

// Gomory's fractional cutting-plane loop for bounded pure-integer instances.
// Each round solves the LP exactly, takes the lowest-index fractional
// structural variable's tableau row, and adds its fractional cut. All working
// rows are rescaled to integer data so slack variables stay integer-valued,
// which is what makes the tableau cut valid. The iteration cap is part of the
// contract: a capped run reports cap_hit with its partial trace, never an
// optimum.
GomoryResult gomory_loop(const MilpInstance& inst, Opt sense = Opt::max, const Caps& caps = {});

}  // namespace cutlab
