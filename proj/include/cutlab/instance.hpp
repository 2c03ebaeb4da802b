#pragma once

#include "cutlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutlab {

enum class Sense { le, ge, eq };

std::string sense_str(Sense s);
Sense sense_from_str(const std::string& s);

struct LinearRow {
  QVec coeffs;
  Sense sense = Sense::le;
  Rational rhs;

  // signed slack b - ax for <=, ax - b for >=, |ax - b| ... callers branch on sense
  Rational eval(const QVec& x) const { return dot(coeffs, x); }
  bool satisfied_by(const QVec& x) const;
};

enum class VarKind { integer, continuous };

struct Variable {
  VarKind kind = VarKind::integer;
  Rational lb;                      // >= 0
  std::optional<Rational> ub;      // nullopt = +inf
};

// Immutable after construction in practice; ops take it by const reference.
struct MilpInstance {
  std::string name;
  int n = 0;
  std::vector<Variable> vars;
  std::vector<LinearRow> rows;
  QVec objective;
  std::vector<std::string> tags;

  void validate() const;  // dimensions consistent, lb <= ub, lb >= 0
  bool pure_integer() const;
  bool all_bounded() const;
};

// Structural tags derived from constraint data: pure-integer / mixed,
// packing (all <= rows, A >= 0, b >= 0), covering, equality-form,
// sign-pattern (each column one sign across rows).
std::vector<std::string> classify(const MilpInstance& inst);

struct PreprocessReport {
  std::vector<int> fixed_zero;     // variables removed (forced to 0)
  std::vector<int> kept;           // old index of each surviving variable
};

// Packing pre-step: any column with A_ij > b_i for some row forces x_j = 0;
// such variables are removed. Post: 0 <= A_ij <= b_i everywhere.
MilpInstance preprocess_packing(const MilpInstance& inst, PreprocessReport* report = nullptr);

// Variable partition into disjoint blocks covering all variables.
struct Partition {
  std::vector<std::vector<int>> blocks;

  void validate(int n) const;
  int block_of(int var) const;
};

}  // namespace cutlab
