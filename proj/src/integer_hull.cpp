#include "cutlab/error.hpp"
#include "cutlab/polytope.hpp"

#include <algorithm>

namespace cutlab {

namespace {

struct IntRange { mpz_class lo, hi; };

IntRange var_range(const Variable& v, const std::string& who) {
  if (!v.ub) throw Error(Error::Code::unbounded, who + ": variable without upper bound");
  IntRange r;
  r.lo = ceil(v.lb).num();
  r.hi = floor(*v.ub).num();
  return r;
}

void check_cells(const std::vector<IntRange>& ranges, const Caps& caps, const std::string& who) {
  mpz_class cells(1);
  for (const auto& r : ranges) {
    if (r.hi < r.lo) return;  // empty box, nothing to enumerate
    cells *= r.hi - r.lo + 1;
    if (cells > caps.hull_box_cells)
      throw cap_error(who + ": integer box exceeds cell cap " +
                      std::to_string(caps.hull_box_cells));
  }
}

// Odometer over the integer box; f gets the current point.
template <typename F>
void scan_box(const std::vector<IntRange>& ranges, F f) {
  int n = static_cast<int>(ranges.size());
  for (const auto& r : ranges)
    if (r.hi < r.lo) return;
  std::vector<mpz_class> cur(n);
  for (int j = 0; j < n; ++j) cur[j] = ranges[j].lo;
  for (;;) {
    QVec p;
    p.reserve(n);
    for (int j = 0; j < n; ++j) p.push_back(Rational(cur[j]));
    f(p);
    int j = n - 1;
    while (j >= 0 && cur[j] == ranges[j].hi) { cur[j] = ranges[j].lo; --j; }
    if (j < 0) return;
    ++cur[j];
  }
}

}  // namespace

std::vector<QVec> integer_points(const MilpInstance& inst, const Caps& caps) {
  inst.validate();
  if (!inst.pure_integer())
    throw domain_error("integer_points: instance '" + inst.name + "' has continuous variables");
  std::vector<IntRange> ranges;
  for (const auto& v : inst.vars) ranges.push_back(var_range(v, "integer_points"));
  check_cells(ranges, caps, "integer_points");

  std::vector<QVec> pts;
  scan_box(ranges, [&](const QVec& p) {
    for (const auto& row : inst.rows)
      if (!row.satisfied_by(p)) return;
    pts.push_back(p);
  });
  return pts;
}

VPolytope integer_hull(const MilpInstance& inst, const Caps& caps) {
  inst.validate();
  if (inst.pure_integer()) {
    auto pts = integer_points(inst, caps);
    return canonicalize({inst.n, std::move(pts)});
  }

  // Mixed case: enumerate integer assignments, take the continuous slice's
  // vertices for each, and canonicalize the union.
  std::vector<int> int_vars, cont_vars;
  for (int j = 0; j < inst.n; ++j)
    (inst.vars[j].kind == VarKind::integer ? int_vars : cont_vars).push_back(j);

  std::vector<IntRange> ranges;
  for (int j : int_vars) ranges.push_back(var_range(inst.vars[j], "integer_hull"));
  check_cells(ranges, caps, "integer_hull");

  int nc = static_cast<int>(cont_vars.size());
  std::vector<QVec> pts;
  scan_box(ranges, [&](const QVec& assign) {
    HPolytope slice;
    slice.dim = nc;
    for (const auto& row : inst.rows) {
      LinearRow r;
      r.sense = row.sense;
      r.rhs = row.rhs;
      for (std::size_t k = 0; k < int_vars.size(); ++k)
        r.rhs -= row.coeffs[int_vars[k]] * assign[k];
      for (int c : cont_vars) r.coeffs.push_back(row.coeffs[c]);
      slice.rows.push_back(std::move(r));
    }
    for (int k = 0; k < nc; ++k) {
      const Variable& v = inst.vars[cont_vars[k]];
      LinearRow lo;
      lo.coeffs.assign(nc, Rational(0));
      lo.coeffs[k] = Rational(1);
      lo.sense = Sense::ge;
      lo.rhs = v.lb;
      slice.rows.push_back(std::move(lo));
      if (!v.ub) throw Error(Error::Code::unbounded, "integer_hull: unbounded continuous variable");
      LinearRow hi;
      hi.coeffs.assign(nc, Rational(0));
      hi.coeffs[k] = Rational(1);
      hi.sense = Sense::le;
      hi.rhs = *v.ub;
      slice.rows.push_back(std::move(hi));
    }
    VPolytope sv = enumerate_vertices(slice, caps);
    for (const auto& y : sv.points) {
      QVec full(inst.n);
      for (std::size_t k = 0; k < int_vars.size(); ++k) full[int_vars[k]] = assign[k];
      for (int k = 0; k < nc; ++k) full[cont_vars[k]] = y[k];
      pts.push_back(std::move(full));
    }
  });
  return canonicalize({inst.n, std::move(pts)});
}

}  // namespace cutlab
