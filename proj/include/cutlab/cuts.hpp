#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/simplex.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cutlab {

struct Provenance {
  std::string generator;         // "aggregation", "cg", "mir", "gmic", ...
  QVec multipliers;              // aggregation multipliers, empty when none
  std::vector<int> source_rows;  // instance/polytope row ids feeding the cut
  int basic_var = -1;            // gmic: structural basic variable
  std::string note;              // embedding name, shortcut flags, iteration
};

// Valid inequality for the instance's (mixed-)integer feasible set.
struct Cut {
  QVec coeffs;
  Sense sense = Sense::le;  // le or ge only, never eq
  Rational rhs;
  Provenance provenance;

  std::vector<int> support() const;
  LinearRow as_row() const { return {coeffs, sense, rhs}; }
  bool satisfied_by(const QVec& x) const { return as_row().satisfied_by(x); }
};

// Positive iff x violates the cut; exact signed violation amount.
Rational cut_violation(const Cut& c, const QVec& x);

std::string cut_to_json(const Cut& c);
Cut cut_from_json(const std::string& text);
std::string cuts_to_json(const std::vector<Cut>& cuts);

// Nonnegative combination of the instance rows, oriented into `orientation`
// (rows of the opposite sense are negated in). Equality rows admit any-sign
// multipliers only when equality_any_sign is set.
Cut aggregate(const MilpInstance& inst, const QVec& lambda, Sense orientation = Sense::le,
              bool equality_any_sign = false);

// (floor(a), <=, floor(b)) for a le row, (ceil(a), >=, ceil(b)) for a ge row.
// Every support variable must be integer-kind; equality rows must be oriented
// by the caller first.
Cut cg_cut(const LinearRow& row, const std::vector<Variable>& vars);

// Caller-supplied embedding of a valid inequality into the basic mixed set
// {x integral, y >= 0 : x + y >= b}: x = int_part . v, y = cont_part . v.
struct MirEmbedding {
  QVec int_part;   // integral coefficients, integer-kind variables only
  QVec cont_part;  // componentwise >= 0 (so y >= 0 on the nonnegative orthant)
  Rational rhs;    // b with frac(b) > 0
  std::string name;
};

// int_part.v + (1/f) cont_part.v >= ceil(b) with f = frac(b).
Cut mir_cut(const MirEmbedding& emb, const std::vector<Variable>& vars);

// The two embeddings shipped: a ge row split into integral and remainder
// terms, and a le row negated whole (recovers the ceil-form CG cut).
MirEmbedding mir_embed_ge_row(const LinearRow& row, const std::vector<Variable>& vars);
MirEmbedding mir_embed_le_complement(const LinearRow& row, const std::vector<Variable>& vars);

// Coefficient formula on one equality row sum_j a_j t_j = b over nonnegative
// terms with the given kinds: integer terms get min{f_j/f_0, (1-f_j)/(1-f_0)},
// continuous ones max{g_j/f_0, -g_j/(1-f_0)}; the cut is coeffs . t >= 1.
QVec gmic_coeffs(const QVec& a, const std::vector<VarKind>& kinds, const Rational& b);

struct GmicResult {
  Cut cut;              // x-space, sense ge
  QVec tableau_coeffs;  // aligned with tab.cols; the tableau-space cut has rhs 1
};

// Cut from tableau row `row` of an optimal solve over `relaxation`. The basic
// variable must be a structural integer variable with fractional value; slack
// terms are treated as continuous and substituted out via their defining rows.
GmicResult gmic(const MilpInstance& inst, const HPolytope& relaxation, const Tableau& tab, int row);

struct SubadditiveFn {
  int m = 0;  // domain dimension
  std::function<Rational(const QVec&)> eval;
  std::string name;
};

struct SubadditiveCheck {
  bool pass = true;
  std::string condition;  // failed condition: "f(0)=0" | "monotone" | "subadditive"
  QVec witness_u, witness_v;
};

// Verifies f(0)=0 exactly, then monotonicity and subadditivity on all pairs
// from probes plus seeded extra points inside the probes' bounding box.
SubadditiveCheck check_subadditive(const SubadditiveFn& f, const std::vector<QVec>& probes,
                                   std::uint64_t seed);

// sum_j f(A^j) x_j >= f(b) for an all-ge pure-integer instance; f is checked
// on the columns, rhs, and seeded probes first (witness carried on failure).
Cut subadditive_cut(const SubadditiveFn& f, const MilpInstance& inst, std::uint64_t seed);

// Exact validity oracle: no integer-feasible point (pure case) or integer-hull
// vertex (mixed case) violates the cut.
bool cut_valid(const MilpInstance& inst, const Cut& c, const Caps& caps = {});

}  // namespace cutlab
