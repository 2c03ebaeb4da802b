#include "cutlab/generators.hpp"

#include "cutlab/aggregation.hpp"
#include "cutlab/error.hpp"
#include "cutlab/rng.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace cutlab {

namespace {

void check_range(const char* what, long v, long lo, long hi) {
  if (v < lo || v > hi)
    throw domain_error(std::string(what) + "=" + std::to_string(v) + " outside [" +
                       std::to_string(lo) + "," + std::to_string(hi) + "]");
}

std::string seeded_name(const std::string& stem, std::uint64_t seed) {
  return stem + "-s" + std::to_string(seed);
}

// Rows with empty support say nothing; plant one entry so every row is real.
void force_nonzero(QVec& coeffs, Rng& rng, long lo, long hi, int sign = +1) {
  for (const auto& a : coeffs)
    if (a.sign() != 0) return;
  int j = static_cast<int>(rng.below(coeffs.size()));
  coeffs[j] = Rational(sign * rng.range(lo, hi));
}

void force_nonzero_objective(QVec& c) {
  for (const auto& a : c)
    if (a.sign() != 0) return;
  c[0] = Rational(1);
}

MilpInstance finish(MilpInstance inst, std::vector<std::string> extra_tags = {}) {
  inst.tags = classify(inst);
  for (auto& t : extra_tags) inst.tags.push_back(std::move(t));
  inst.validate();
  return inst;
}

std::vector<Variable> integer_box_vars(int n, Rng& rng, long ub_lo, long ub_hi) {
  std::vector<Variable> vars;
  vars.reserve(n);
  for (int j = 0; j < n; ++j)
    vars.push_back({VarKind::integer, Rational(0), Rational(rng.range(ub_lo, ub_hi))});
  return vars;
}

}  // namespace

std::string partition_tag(const Partition& part) {
  std::ostringstream os;
  os << "blocks:";
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    if (b) os << ';';
    for (std::size_t i = 0; i < part.blocks[b].size(); ++i) {
      if (i) os << ',';
      os << part.blocks[b][i];
    }
  }
  return os.str();
}

bool has_partition_tag(const MilpInstance& inst) {
  for (const auto& t : inst.tags)
    if (t.rfind("blocks:", 0) == 0) return true;
  return false;
}

Partition partition_from_tag(const MilpInstance& inst) {
  for (const auto& t : inst.tags) {
    if (t.rfind("blocks:", 0) != 0) continue;
    Partition part;
    std::string body = t.substr(7);
    std::istringstream is(body);
    std::string block;
    while (std::getline(is, block, ';')) {
      std::vector<int> ids;
      std::istringstream bs(block);
      std::string id;
      while (std::getline(bs, id, ','))
        try {
          ids.push_back(std::stoi(id));
        } catch (const std::exception&) {
          throw parse_error("bad variable id '" + id + "' in tag '" + t + "'");
        }
      part.blocks.push_back(std::move(ids));
    }
    part.validate(inst.n);
    return part;
  }
  throw parse_error("instance '" + inst.name + "' carries no blocks: tag");
}

MilpInstance gen_preprocessed_packing(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 8);
  check_range("m", m, 1, 8);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("prepack-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  inst.vars = integer_box_vars(n, rng, 1, 3);
  for (int i = 0; i < m; ++i) {
    long b = rng.range(2, 9);
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(0, b));
    force_nonzero(coeffs, rng, 1, b);
    inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

MilpInstance gen_random_packing(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 8);
  check_range("m", m, 1, 8);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("packing-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  inst.vars = integer_box_vars(n, rng, 1, 3);
  for (int i = 0; i < m; ++i) {
    long b = rng.range(0, 9);
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(0, 9));
    force_nonzero(coeffs, rng, 1, 9);
    inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

MilpInstance gen_random_bounded_milp(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 6);
  check_range("m", m, 1, 6);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("milp-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  QVec xhat(n);
  for (int j = 0; j < n; ++j) {
    VarKind kind = rng.below(4) < 3 ? VarKind::integer : VarKind::continuous;
    long ub = rng.range(1, 3);
    inst.vars.push_back({kind, Rational(0), Rational(ub)});
    xhat[j] = kind == VarKind::integer ? Rational(rng.range(0, ub))
                                       : Rational(rng.range(0, 2 * ub), 2);
  }
  for (int i = 0; i < m; ++i) {
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(-4, 4));
    force_nonzero(coeffs, rng, 1, 4, rng.coin() ? +1 : -1);
    Rational v = dot(coeffs, xhat);
    switch (rng.below(3)) {
      case 0: inst.rows.push_back({std::move(coeffs), Sense::le, v + Rational(rng.range(0, 3))}); break;
      case 1: inst.rows.push_back({std::move(coeffs), Sense::ge, v - Rational(rng.range(0, 3))}); break;
      default: inst.rows.push_back({std::move(coeffs), Sense::eq, v}); break;
    }
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(-5, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

MilpInstance gen_random_pure_ip(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 4);
  check_range("m", m, 1, 6);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("pureip-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  QVec xhat(n);
  for (int j = 0; j < n; ++j) {
    long ub = rng.range(2, 4);
    inst.vars.push_back({VarKind::integer, Rational(0), Rational(ub)});
    xhat[j] = Rational(rng.range(0, ub));
  }
  for (int i = 0; i < m; ++i) {
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(-4, 4));
    force_nonzero(coeffs, rng, 1, 4, rng.coin() ? +1 : -1);
    Rational v = dot(coeffs, xhat);
    if (rng.coin())
      inst.rows.push_back({std::move(coeffs), Sense::le, v + Rational(rng.range(0, 3))});
    else
      inst.rows.push_back({std::move(coeffs), Sense::ge, v - Rational(rng.range(0, 3))});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(-5, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

MilpInstance gen_random_covering(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 6);
  check_range("m", m, 1, 6);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("covering-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  inst.vars = integer_box_vars(n, rng, 1, 3);
  for (int i = 0; i < m; ++i) {
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(0, 5));
    force_nonzero(coeffs, rng, 1, 5);
    // a . ub bounds the achievable row value, so rhs in [1, a . ub] keeps the
    // all-upper-bounds point feasible.
    Rational cap(0);
    for (int j = 0; j < n; ++j) cap += coeffs[j] * *inst.vars[j].ub;
    long rhs = rng.range(1, cap.num().get_si());
    inst.rows.push_back({std::move(coeffs), Sense::ge, Rational(rhs)});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

namespace {

void check_2ssp_params(int k, const std::vector<int>& sizes) {
  check_range("k", k, 1, 6);
  if (static_cast<int>(sizes.size()) != k + 1)
    throw domain_error("sizes must have k+1 entries (first stage + one per scenario)");
  for (int s : sizes) check_range("block size", s, 1, 4);
}

}  // namespace

Partition two_stage_partition(int k, const std::vector<int>& sizes) {
  check_2ssp_params(k, sizes);
  Partition part;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> block(s);
    for (int& v : block) v = next++;
    part.blocks.push_back(std::move(block));
  }
  return part;
}

MilpInstance gen_two_stage_packing(int k, const std::vector<int>& sizes, std::uint64_t seed) {
  check_2ssp_params(k, sizes);
  Partition part = two_stage_partition(k, sizes);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("2ssp-k" + std::to_string(k), seed);
  inst.n = 0;
  for (int s : sizes) inst.n += s;
  inst.vars = integer_box_vars(inst.n, rng, 1, 3);

  const auto& hub = part.blocks[0];
  // Pre-processed packing rows (0 <= A_ij <= b_i): optional hub-only rows plus
  // one or two coupling rows per scenario, each touching the hub and exactly
  // one scenario block -- the interaction graph is the star K_{1,k}.
  long hub_rows = rng.range(0, 1);
  for (long r = 0; r < hub_rows; ++r) {
    long b = rng.range(2, 9);
    QVec coeffs(inst.n);
    for (int j : hub) coeffs[j] = Rational(rng.range(0, b));
    coeffs[hub[rng.below(hub.size())]] = Rational(rng.range(1, b));
    inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
  }
  for (int i = 1; i <= k; ++i) {
    const auto& blk = part.blocks[i];
    long rows_i = rng.range(1, 2);
    for (long r = 0; r < rows_i; ++r) {
      long b = rng.range(2, 9);
      QVec coeffs(inst.n);
      for (int j : hub) coeffs[j] = Rational(rng.range(0, b));
      for (int j : blk) coeffs[j] = Rational(rng.range(0, b));
      coeffs[hub[rng.below(hub.size())]] = Rational(rng.range(1, b));
      coeffs[blk[rng.below(blk.size())]] = Rational(rng.range(1, b));
      inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
    }
  }
  inst.objective.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst), {"two-stage", partition_tag(part)});
}

MilpInstance gen_market_split(int m, int n, std::uint64_t seed) {
  check_range("m", m, 1, 3);
  check_range("n", n, 2, 8);
  for (std::uint64_t attempt = 0; attempt < 500; ++attempt) {
    Rng rng(task_seed(seed, attempt));
    MilpInstance inst;
    inst.name = seeded_name("msplit-m" + std::to_string(m) + "-n" + std::to_string(n), seed);
    inst.n = n;
    for (int j = 0; j < n; ++j)
      inst.vars.push_back({VarKind::integer, Rational(0), Rational(1)});
    // Plant a half-weight 0/1 point so the instance is feasible; the equality
    // right-hand sides then sit near half the row sums as usual for this
    // family, and the planted point seeds the exact optimum scan below.
    unsigned long planted = 0;
    while (std::popcount(planted) < (n + 1) / 2)
      planted |= 1UL << rng.below(static_cast<std::uint64_t>(n));
    std::vector<std::vector<long>> a(m, std::vector<long>(n));
    std::vector<long> rhs(m);
    for (int i = 0; i < m; ++i) {
      long planted_sum = 0;
      QVec coeffs(n);
      for (int j = 0; j < n; ++j) {
        a[i][j] = rng.range(0, 99);
        if (planted & (1UL << j)) planted_sum += a[i][j];
        coeffs[j] = Rational(a[i][j]);
      }
      rhs[i] = planted_sum;
      inst.rows.push_back({std::move(coeffs), Sense::eq, Rational(rhs[i])});
    }
    inst.objective.assign(n, Rational(1));

    // Exact integer optimum by 0/1 scan; skip seeds with no feasible point.
    long best = -1;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        long v = 0;
        for (int j = 0; j < n; ++j)
          if (mask & (1UL << j)) v += a[i][j];
        ok = v == rhs[i];
      }
      if (ok) best = std::max<long>(best, std::popcount(mask));
    }
    if (best < 0) continue;
    inst = finish(std::move(inst));
    LpResult lp = solve_relaxation(inst, Opt::max);
    if (lp.status != LpStatus::optimal) continue;
    if (lp.value > Rational(best)) return inst;  // genuine integrality gap
  }
  throw Error(Error::Code::internal, "market-split: no gap instance in 500 derived seeds");
}

MilpInstance gen_random_equality(int n, int m, std::uint64_t seed) {
  check_range("n", n, 1, 6);
  check_range("m", m, 1, 4);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("eq-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  QVec xhat(n);
  for (int j = 0; j < n; ++j) {
    long ub = rng.range(1, 3);
    inst.vars.push_back({VarKind::integer, Rational(0), Rational(ub)});
    xhat[j] = Rational(rng.range(0, ub));
  }
  for (int i = 0; i < m; ++i) {
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(rng.range(-5, 5));
    force_nonzero(coeffs, rng, 1, 5, rng.coin() ? +1 : -1);
    Rational v = dot(coeffs, xhat);
    inst.rows.push_back({std::move(coeffs), Sense::eq, v});
  }
  inst.objective.assign(n, Rational(1));
  return finish(std::move(inst));
}

MilpInstance gen_sign_pattern(int n, int m, std::uint64_t seed) {
  check_range("n", n, 2, 6);
  check_range("m", m, 1, 5);
  Rng rng(seed);
  MilpInstance inst;
  inst.name = seeded_name("signpat-n" + std::to_string(n) + "-m" + std::to_string(m), seed);
  inst.n = n;
  std::vector<int> sign(n);
  for (int j = 0; j < n; ++j) sign[j] = rng.coin() ? +1 : -1;
  sign[0] = +1;
  sign[n - 1] = -1;  // keep the family genuinely mixed-sign
  QVec xhat(n);
  for (int j = 0; j < n; ++j) {
    long ub = rng.range(1, 3);
    inst.vars.push_back({VarKind::integer, Rational(0), Rational(ub)});
    xhat[j] = Rational(rng.range(0, ub));
  }
  for (int i = 0; i < m; ++i) {
    QVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rational(sign[j] * rng.range(0, 5));
    bool zero = true;
    for (const auto& c : coeffs) zero = zero && c.sign() == 0;
    if (zero) {
      int j = static_cast<int>(rng.below(n));
      coeffs[j] = Rational(sign[j] * rng.range(1, 5));
    }
    Rational v = dot(coeffs, xhat);
    inst.rows.push_back({std::move(coeffs), Sense::le, v + Rational(rng.range(0, 3))});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  return finish(std::move(inst));
}

MilpInstance gen_partitioned_packing(int q, int bs, std::uint64_t seed, Partition* part) {
  check_range("q", q, 2, 4);
  check_range("bs", bs, 1, 2);
  Rng rng(seed);
  Partition p;
  int n = q * bs;
  for (int b = 0; b < q; ++b) {
    std::vector<int> block(bs);
    for (int i = 0; i < bs; ++i) block[i] = b * bs + i;
    p.blocks.push_back(std::move(block));
  }
  MilpInstance inst;
  inst.name = seeded_name("partpack-q" + std::to_string(q) + "-b" + std::to_string(bs), seed);
  inst.n = n;
  inst.vars = integer_box_vars(n, rng, 1, 3);
  for (int bl = 0; bl < q; ++bl) {
    long b = rng.range(2, 9);
    QVec coeffs(n);
    for (int j : p.blocks[bl]) coeffs[j] = Rational(rng.range(0, b));
    coeffs[p.blocks[bl][rng.below(bs)]] = Rational(rng.range(1, b));
    inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
  }
  long couples = rng.range(1, q);
  for (long r = 0; r < couples; ++r) {
    int b1 = static_cast<int>(rng.below(q));
    int b2 = static_cast<int>(rng.below(q - 1));
    if (b2 >= b1) ++b2;
    long b = rng.range(2, 9);
    QVec coeffs(n);
    for (int j : p.blocks[b1]) coeffs[j] = Rational(rng.range(0, b));
    for (int j : p.blocks[b2]) coeffs[j] = Rational(rng.range(0, b));
    coeffs[p.blocks[b1][rng.below(bs)]] = Rational(rng.range(1, b));
    coeffs[p.blocks[b2][rng.below(bs)]] = Rational(rng.range(1, b));
    inst.rows.push_back({std::move(coeffs), Sense::le, Rational(b)});
  }
  inst.objective.resize(n);
  for (int j = 0; j < n; ++j) inst.objective[j] = Rational(rng.range(0, 5));
  force_nonzero_objective(inst.objective);
  if (part) *part = p;
  return finish(std::move(inst), {partition_tag(p)});
}

VPolytope gen_01_vpolytope(int n, int t, std::uint64_t seed) {
  check_range("n", n, 1, 10);
  check_range("t", t, 1, 1L << n);
  Rng rng(seed);
  std::set<std::uint64_t> used;
  VPolytope P;
  P.dim = n;
  while (static_cast<int>(P.points.size()) < t) {
    std::uint64_t mask = rng.below(1ULL << n);
    if (!used.insert(mask).second) continue;
    QVec pt(n);
    for (int j = 0; j < n; ++j) pt[j] = Rational((mask >> j) & 1);
    P.points.push_back(std::move(pt));
  }
  return P;
}

SparsifierInput gen_sparsifier_spec(int index, std::uint64_t seed) {
  if (index < 0) throw domain_error("negative sparsifier spec index");
  const int n = 16;
  static const int ks[3] = {10, 12, 14};
  int k = ks[index % 3];
  int t = 1 + (index / 3) % 6;
  Rng rng(task_seed(seed, static_cast<std::uint64_t>(index)));

  QVec v(n);
  std::vector<int> sign(n);
  for (int j = 0; j < n; ++j) {
    v[j] = Rational(1 + static_cast<long>(rng.below(3)), 4);  // {1/4, 1/2, 3/4}
    sign[j] = rng.coin() ? +1 : -1;
  }
  QVec u(n);
  for (int j = 0; j < n; ++j) u[j] = v[j] + Rational(10 * sign[j]);

  // Points move from v against the direction to u, so v stays the unique
  // nearest point and the squared margin is exactly |10 * sign|^2 = 1600;
  // 16 * 1600 = 160^2 keeps the sampled cut's root rational.
  VPolytope P;
  P.dim = n;
  P.points.push_back(v);
  std::set<std::uint64_t> used = {0};
  while (static_cast<int>(P.points.size()) < t) {
    std::uint64_t mask = rng.below(1ULL << n);
    if (!used.insert(mask).second) continue;
    QVec pt(n);
    for (int j = 0; j < n; ++j)
      pt[j] = v[j] - ((mask >> j) & 1 ? Rational(sign[j], 4) : Rational(0));
    P.points.push_back(std::move(pt));
  }
  return make_sparsifier_input(P, u, k);
}

CutPool gen_cut_pool(int n, int size, std::uint64_t seed) {
  check_range("n", n, 2, 8);
  check_range("size", size, 1, 5000);
  Rng rng(seed);
  CutPool pool;
  for (int p = 0; p < 2; ++p) {
    QVec x(n);
    for (int j = 0; j < n; ++j) x[j] = Rational(rng.range(0, 4), 4);
    pool.xstars.push_back(std::move(x));
  }
  while (static_cast<int>(pool.cuts.size()) < size) {
    Cut c;
    c.provenance.generator = "pool";
    if (!pool.cuts.empty() && rng.below(4) == 0) {
      // Scaled copy of an earlier cut with a slightly tighter rhs: exactly
      // parallel, still violated wherever the original was.
      const Cut& base = pool.cuts[rng.below(pool.cuts.size())];
      long s = rng.range(1, 2);
      c.coeffs = scale(base.coeffs, Rational(s));
      Rational eps(rng.range(0, 2), 4);
      c.sense = base.sense;
      c.rhs = base.sense == Sense::le ? Rational(s) * base.rhs - eps : Rational(s) * base.rhs + eps;
      c.provenance.note = "parallel copy";
    } else {
      c.coeffs.assign(n, Rational(0));
      for (int j = 0; j < n; ++j) c.coeffs[j] = Rational(rng.range(-3, 3));
      force_nonzero(c.coeffs, rng, 1, 3, rng.coin() ? +1 : -1);
      if (rng.below(10) == 0) {
        // One huge coefficient drives max/min ratio past any sane dynamism cap.
        std::vector<int> sup;
        for (int j = 0; j < n; ++j)
          if (c.coeffs[j].sign() != 0) sup.push_back(j);
        int j = sup[rng.below(sup.size())];
        c.coeffs[j] *= Rational(2000);
        c.provenance.note = "wild scaling";
      } else {
        c.provenance.note = "fresh";
      }
      const QVec& target = pool.xstars[rng.coin() ? 1 : 0];
      Rational viol(rng.range(1, 8), 4);
      c.sense = rng.coin() ? Sense::le : Sense::ge;
      Rational v = dot(c.coeffs, target);
      c.rhs = c.sense == Sense::le ? v - viol : v + viol;
    }
    pool.add(std::move(c));
  }
  return pool;
}

MilpInstance generate(const std::string& kind, const std::map<std::string, long>& params,
                      std::uint64_t seed) {
  auto get = [&params](const char* key, long def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };
  auto check_keys = [&params, &kind](std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
      (void)value;
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) throw domain_error("kind '" + kind + "' does not take param '" + key + "'");
    }
  };

  if (kind == "2ssp") {
    check_keys({"k", "size"});
    long k = get("k", 2);
    long size = get("size", 2);
    check_range("k", k, 1, 6);
    check_range("size", size, 1, 4);
    return gen_two_stage_packing(static_cast<int>(k),
                                 std::vector<int>(k + 1, static_cast<int>(size)), seed);
  }
  if (kind == "market-split") {
    check_keys({"m", "n"});
    return gen_market_split(static_cast<int>(get("m", 2)), static_cast<int>(get("n", 6)), seed);
  }
  if (kind == "random-equality") {
    check_keys({"n", "m"});
    return gen_random_equality(static_cast<int>(get("n", 4)), static_cast<int>(get("m", 2)), seed);
  }
  if (kind == "random-packing") {
    check_keys({"n", "m"});
    return gen_random_packing(static_cast<int>(get("n", 3)), static_cast<int>(get("m", 2)), seed);
  }
  if (kind == "preprocessed-packing") {
    check_keys({"n", "m"});
    return gen_preprocessed_packing(static_cast<int>(get("n", 4)), static_cast<int>(get("m", 3)),
                                    seed);
  }
  if (kind == "sign-pattern") {
    check_keys({"n", "m"});
    return gen_sign_pattern(static_cast<int>(get("n", 4)), static_cast<int>(get("m", 3)), seed);
  }
  if (kind == "random-milp") {
    check_keys({"n", "m"});
    return gen_random_bounded_milp(static_cast<int>(get("n", 4)), static_cast<int>(get("m", 3)),
                                   seed);
  }
  if (kind == "pure-ip") {
    check_keys({"n", "m"});
    return gen_random_pure_ip(static_cast<int>(get("n", 3)), static_cast<int>(get("m", 3)), seed);
  }
  if (kind == "covering") {
    check_keys({"n", "m"});
    return gen_random_covering(static_cast<int>(get("n", 4)), static_cast<int>(get("m", 3)), seed);
  }
  if (kind == "partitioned-packing") {
    check_keys({"q", "bs"});
    return gen_partitioned_packing(static_cast<int>(get("q", 3)), static_cast<int>(get("bs", 2)),
                                   seed, nullptr);
  }
  if (kind == "cancel-family") {
    check_keys({"M"});
    long M = get("M", 4);
    return family_1row_vs_agg(M);
  }
  throw domain_error("unknown instance kind '" + kind + "'");
}

}  // namespace cutlab
