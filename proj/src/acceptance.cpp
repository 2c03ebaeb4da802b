#include "cutlab/acceptance.hpp"

#include <sstream>

#include "cutlab/experiments.hpp"
#include "cutlab/rng.hpp"

namespace cutlab {

namespace {

void push(AcceptanceResult& out, const std::function<void(const CriterionResult&)>& progress,
          int id, const std::string& name, bool pass, const std::string& summary,
          const std::string& csv) {
  out.criteria.push_back({id, name, pass, summary, csv});
  if (progress) progress(out.criteria.back());
}

}  // namespace

AcceptanceResult run_acceptance(std::uint64_t seed, const Caps& caps,
                                const std::function<void(const CriterionResult&)>& progress) {
  AcceptanceResult out;
  out.seed = seed;

  // One sweep backs the two cut criteria: overall validity and the exact
  // unit violation of tableau corner cuts.
  {
    ExpResult e = exp_cut_validity(task_seed(seed, 1), 100, 500, caps);
    bool c1 = e.stats["cuts"] >= 500 && e.stats["invalid"] == 0 && e.stats["cross_bad"] == 0 &&
              e.stats["in_time"] == 1;
    push(out, progress, 1, "cut-validity", c1, e.summary, e.csv);
    bool c2 = e.stats["gmic_rows"] > 0 && e.stats["gmic_bad"] == 0;
    std::ostringstream s2;
    s2 << "corner cuts: " << e.stats["gmic_rows"] << " fractional tableau rows, "
       << e.stats["gmic_bad"] << " off-by-one failures";
    push(out, progress, 2, "corner-cut-unit-violation", c2, s2.str(), e.csv);
  }
  {
    ExpResult e = exp_theorem1(task_seed(seed, 3), 50, caps);
    push(out, progress, 3, "sparse-closure-distance-bound", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_sparsifier(task_seed(seed, 4), 20, 1000);
    push(out, progress, 4, "sparsifier-success-rate", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_two_stage(task_seed(seed, 5), 30, caps);
    push(out, progress, 5, "two-stage-factor-two", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_partitioned(task_seed(seed, 6), 30, caps);
    push(out, progress, 6, "partitioned-eta-bound", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_thm_agg(task_seed(seed, 7), 200, caps);
    push(out, progress, 7, "packing-factor-two-sandwich", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_cg_compare(task_seed(seed, 8), 10, caps);
    push(out, progress, 8, "market-split-aggregated-gap", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_selection(task_seed(seed, 9), 1000);
    push(out, progress, 9, "selection-invariants", e.pass, e.summary, e.csv);
  }
  {
    ExpResult e = exp_gomory(task_seed(seed, 10), 50, caps);
    push(out, progress, 10, "rounding-loop-vs-brute-force", e.pass, e.summary, e.csv);
  }

  out.all_pass = true;
  for (const auto& c : out.criteria) out.all_pass = out.all_pass && c.pass;
  return out;
}

}  // namespace cutlab
