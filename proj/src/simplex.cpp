#include "cutlab/simplex.hpp"

#include "cutlab/error.hpp"
#include "cutlab/linalg.hpp"

#include <algorithm>

namespace cutlab {

bool HPolytope::contains(const QVec& x) const {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const LinearRow& r) { return r.satisfied_by(x); });
}

namespace {

// Dense tableau kept in B^-1 A form; rhs stays >= 0 throughout.
struct Dict {
  QMat rows;
  QVec rhs;
  std::vector<int> basis;
  int ncols = 0;

  void pivot(int r, int c) {
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (int j = 0; j < ncols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }
};

enum class RunStatus { optimal, unbounded };

// Bland's rule throughout: lowest-index improving column enters; ratio ties
// leave by lowest basic column index. Finite for any input.
RunStatus run_simplex(Dict& d, const QVec& cost, int active_cols) {
  for (;;) {
    int enter = -1;
    for (int j = 0; j < active_cols; ++j) {
      Rational rc = cost[j];
      for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const Rational& cb = cost[d.basis[i]];
        if (!cb.is_zero() && !d.rows[i][j].is_zero()) rc -= cb * d.rows[i][j];
      }
      if (rc.sign() > 0) { enter = j; break; }
    }
    if (enter < 0) return RunStatus::optimal;

    int leave = -1;
    Rational best;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      if (d.rows[i][enter].sign() <= 0) continue;
      Rational ratio = d.rhs[i] / d.rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && d.basis[i] < d.basis[leave]))
        { leave = static_cast<int>(i); best = ratio; }
    }
    if (leave < 0) return RunStatus::unbounded;
    d.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const HPolytope& poly, bool nonneg, const QVec& objective, Opt sense) {
  int n = poly.dim;
  if (static_cast<int>(objective.size()) != n)
    throw domain_error("solve_lp: objective size != polytope dim");
  int nstruct = nonneg ? n : 2 * n;  // free vars split as x = u - v

  QVec obj(nstruct);
  for (int j = 0; j < n; ++j) {
    Rational c = sense == Opt::max ? objective[j] : -objective[j];
    obj[j] = c;
    if (!nonneg) obj[n + j] = -c;
  }

  // Assemble equality-form rows with rhs >= 0; remember slack columns.
  struct BuildRow { QVec a; Rational b; int slack_col; };
  std::vector<BuildRow> build;
  std::vector<int> slack_of_row(poly.rows.size(), -1);
  int ncols = nstruct;
  for (std::size_t i = 0; i < poly.rows.size(); ++i) {
    const LinearRow& row = poly.rows[i];
    if (static_cast<int>(row.coeffs.size()) != n)
      throw domain_error("solve_lp: row dimension mismatch");
    bool zero = std::all_of(row.coeffs.begin(), row.coeffs.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (zero) {
      bool ok = row.sense == Sense::le   ? Rational(0) <= row.rhs
                : row.sense == Sense::ge ? Rational(0) >= row.rhs
                                         : row.rhs.is_zero();
      if (!ok) return {LpStatus::infeasible, Rational(0), {}, {}};
      continue;
    }
    BuildRow br;
    br.a.assign(nstruct, Rational(0));
    for (int j = 0; j < n; ++j) {
      br.a[j] = row.coeffs[j];
      if (!nonneg) br.a[n + j] = -row.coeffs[j];
    }
    br.b = row.rhs;
    br.slack_col = -1;
    Rational slack_sign;
    if (row.sense != Sense::eq) {
      br.slack_col = ncols++;
      slack_sign = row.sense == Sense::le ? Rational(1) : Rational(-1);
      slack_of_row[i] = br.slack_col;
    }
    if (br.b.sign() < 0) {
      for (auto& x : br.a) x = -x;
      br.b = -br.b;
      slack_sign = -slack_sign;
    }
    br.a.resize(ncols);  // grow for slack columns added so far
    if (br.slack_col >= 0) br.a[br.slack_col] = slack_sign;
    build.push_back(std::move(br));
  }

  int m = static_cast<int>(build.size());
  Dict d;
  d.rhs.resize(m);
  d.basis.assign(m, -1);
  int nonart_cols = ncols;

  // Slack with +1 coefficient serves as the initial basic variable; other
  // rows get artificials.
  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i) {
    build[i].a.resize(nonart_cols);
    if (build[i].slack_col >= 0 && build[i].a[build[i].slack_col] == Rational(1))
      d.basis[i] = build[i].slack_col;
    else
      art_rows.push_back(i);
  }
  int total_cols = nonart_cols + static_cast<int>(art_rows.size());
  d.ncols = total_cols;
  d.rows.assign(m, QVec(total_cols));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nonart_cols; ++j) d.rows[i][j] = build[i].a[j];
    d.rhs[i] = build[i].b;
  }
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    int i = art_rows[k];
    int col = nonart_cols + static_cast<int>(k);
    d.rows[i][col] = Rational(1);
    d.basis[i] = col;
  }

  if (!art_rows.empty()) {
    QVec phase1(total_cols);
    for (int c = nonart_cols; c < total_cols; ++c) phase1[c] = Rational(-1);
    run_simplex(d, phase1, total_cols);
    Rational art_sum;
    for (int i = 0; i < m; ++i)
      if (d.basis[i] >= nonart_cols) art_sum += d.rhs[i];
    if (!art_sum.is_zero()) return {LpStatus::infeasible, Rational(0), {}, {}};

    // Drive basic artificials out; an all-zero row is redundant and dropped.
    for (int i = m - 1; i >= 0; --i) {
      if (d.basis[i] < nonart_cols) continue;
      int col = -1;
      for (int j = 0; j < nonart_cols; ++j)
        if (!d.rows[i][j].is_zero()) { col = j; break; }
      if (col >= 0) {
        d.pivot(i, col);
      } else {
        d.rows.erase(d.rows.begin() + i);
        d.rhs.erase(d.rhs.begin() + i);
        d.basis.erase(d.basis.begin() + i);
        --m;
      }
    }
    for (auto& row : d.rows) row.resize(nonart_cols);
    d.ncols = nonart_cols;
  }

  obj.resize(nonart_cols);
  if (run_simplex(d, obj, nonart_cols) == RunStatus::unbounded)
    return {LpStatus::unbounded, Rational(0), {}, {}};

  QVec full(nonart_cols);
  for (int i = 0; i < m; ++i) full[d.basis[i]] = d.rhs[i];
  QVec x(n);
  for (int j = 0; j < n; ++j) x[j] = nonneg ? full[j] : full[j] - full[n + j];

  LpResult res;
  res.status = LpStatus::optimal;
  res.x = x;
  res.value = dot(objective, x);

  if (nonneg) {
    Tableau t;
    for (int j = 0; j < n; ++j) t.cols.push_back({TableauCol::structural, j});
    std::vector<int> col_map(nonart_cols, -1);
    for (int j = 0; j < n; ++j) col_map[j] = j;
    for (std::size_t i = 0; i < poly.rows.size(); ++i)
      if (slack_of_row[i] >= 0) {
        col_map[slack_of_row[i]] = static_cast<int>(t.cols.size());
        t.cols.push_back({TableauCol::slack, static_cast<int>(i)});
      }
    for (int i = 0; i < m; ++i) {
      TableauRowData tr;
      tr.basic_col = col_map[d.basis[i]];
      tr.rhs = d.rhs[i];
      tr.coeffs.assign(t.cols.size(), Rational(0));
      for (int j = 0; j < nonart_cols; ++j)
        if (col_map[j] >= 0) tr.coeffs[col_map[j]] = d.rows[i][j];
      t.rows.push_back(std::move(tr));
    }
    res.tableau = std::move(t);
  }
  return res;
}

HPolytope lp_relaxation(const MilpInstance& inst) {
  HPolytope p;
  p.dim = inst.n;
  p.rows = inst.rows;
  for (int j = 0; j < inst.n; ++j) {
    if (!inst.vars[j].lb.is_zero()) {
      LinearRow r;
      r.coeffs.assign(inst.n, Rational(0));
      r.coeffs[j] = Rational(1);
      r.sense = Sense::ge;
      r.rhs = inst.vars[j].lb;
      p.rows.push_back(std::move(r));
    }
    if (inst.vars[j].ub) {
      LinearRow r;
      r.coeffs.assign(inst.n, Rational(0));
      r.coeffs[j] = Rational(1);
      r.sense = Sense::le;
      r.rhs = *inst.vars[j].ub;
      p.rows.push_back(std::move(r));
    }
  }
  return p;
}

LpResult solve_relaxation(const MilpInstance& inst, Opt sense) {
  return solve_lp(lp_relaxation(inst), true, inst.objective, sense);
}

}  // namespace cutlab
