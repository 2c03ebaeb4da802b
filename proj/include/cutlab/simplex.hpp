#pragma once

#include "cutlab/instance.hpp"
#include "cutlab/rational.hpp"

#include <vector>

namespace cutlab {

struct HPolytope {
  int dim = 0;
  std::vector<LinearRow> rows;

  bool contains(const QVec& x) const;
};

struct VPolytope {
  int dim = 0;
  std::vector<QVec> points;
};

enum class LpStatus { optimal, infeasible, unbounded };
enum class Opt { max, min };

// Column identity in the final tableau: original variable or slack of a row.
struct TableauCol {
  enum Kind { structural, slack } kind;
  int index;  // variable index or row index
};

struct TableauRowData {
  int basic_col;   // column basic in this row
  QVec coeffs;     // over all tableau columns, identity on basic ones
  Rational rhs;    // current value of the basic variable (>= 0)
};

struct Tableau {
  std::vector<TableauCol> cols;
  std::vector<TableauRowData> rows;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  QVec x;
  Tableau tableau;  // populated for optimal solves with nonneg = true
};

// Exact two-phase tableau simplex, Bland's rule (lowest eligible index enters,
// ratio ties broken by lowest basic index), terminating and deterministic.
// nonneg = false splits free variables internally; no tableau in that case.
LpResult solve_lp(const HPolytope& poly, bool nonneg, const QVec& objective, Opt sense);

// LP relaxation rows of an instance: rows + finite bound rows (lb rows only
// when lb != 0). Variables are nonnegative by instance contract.
HPolytope lp_relaxation(const MilpInstance& inst);

// Convenience: optimize over the instance relaxation.
LpResult solve_relaxation(const MilpInstance& inst, Opt sense = Opt::max);

}  // namespace cutlab
