#include "cutlab/gomory.hpp"

#include "cutlab/error.hpp"

namespace cutlab {

namespace {

// Smallest positive scale making every coefficient and the rhs integral.
LinearRow integerize(LinearRow row) {
  mpz_class l = row.rhs.den();
  for (const auto& a : row.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
  Rational s{Rational(l)};
  for (auto& a : row.coeffs) a *= s;
  row.rhs *= s;
  return row;
}

}  // namespace

GomoryResult gomory_loop(const MilpInstance& inst, Opt sense, const Caps& caps) {
  inst.validate();
  if (!inst.pure_integer()) throw domain_error("gomory_loop: pure-integer instances only");

  // Integer row data keeps every slack integer-valued on integer x, so the
  // tableau fractional cut is valid for the integer-feasible set.
  HPolytope poly = lp_relaxation(inst);
  for (auto& row : poly.rows) row = integerize(row);

  GomoryResult res;
  while (res.iterations < caps.gomory_iters) {
    ++res.iterations;
    LpResult lp = solve_lp(poly, true, inst.objective, sense);
    if (lp.status == LpStatus::infeasible) {
      res.status = GomoryResult::Status::infeasible;
      return res;
    }
    if (lp.status == LpStatus::unbounded)
      throw domain_error("gomory_loop: unbounded relaxation");

    int frac_var = -1;
    for (int j = 0; j < inst.n; ++j)
      if (!frac(lp.x[j]).is_zero()) { frac_var = j; break; }
    if (frac_var < 0) {
      res.status = GomoryResult::Status::optimal;
      res.optimum = lp.value;
      res.solution = lp.x;
      return res;
    }

    // Fractional value => basic; structural columns are tableau cols 0..n-1.
    int row = -1;
    for (std::size_t i = 0; i < lp.tableau.rows.size(); ++i)
      if (lp.tableau.rows[i].basic_col == frac_var) { row = static_cast<int>(i); break; }
    if (row < 0)
      throw Error(Error::Code::internal, "gomory_loop: fractional variable not basic");
    const TableauRowData& tr = lp.tableau.rows[row];

    // Tableau cut sum_j frac(a_j) t_j >= frac(b); substitute slacks back out.
    Cut cut;
    cut.sense = Sense::ge;
    cut.rhs = frac(tr.rhs);
    cut.coeffs.assign(inst.n, Rational(0));
    cut.provenance.generator = "gomory-fractional";
    cut.provenance.basic_var = frac_var;
    cut.provenance.note = "iteration " + std::to_string(res.iterations);
    for (std::size_t j = 0; j < lp.tableau.cols.size(); ++j) {
      if (static_cast<int>(j) == tr.basic_col) continue;
      Rational fj = frac(tr.coeffs[j]);
      if (fj.is_zero()) continue;
      const TableauCol& col = lp.tableau.cols[j];
      if (col.kind == TableauCol::structural) {
        cut.coeffs[col.index] += fj;
      } else {
        const LinearRow& src = poly.rows[col.index];
        Rational sgn = src.sense == Sense::le ? Rational(-1) : Rational(1);
        for (int v = 0; v < inst.n; ++v) cut.coeffs[v] += fj * sgn * src.coeffs[v];
        cut.rhs += fj * sgn * src.rhs;
        cut.provenance.source_rows.push_back(col.index);
      }
    }
    res.cuts.push_back(cut);
    poly.rows.push_back(integerize(cut.as_row()));
  }
  res.status = GomoryResult::Status::cap_hit;
  return res;
}

}  // namespace cutlab
