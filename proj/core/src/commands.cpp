#include "dslab/commands.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dslab/approx_sets.hpp"
#include "dslab/counting.hpp"
#include "dslab/monte_carlo.hpp"
#include "dslab/partition.hpp"
#include "dslab/prop_checks.hpp"
#include "dslab/variance.hpp"

namespace dslab {

using nlohmann::json;

namespace {

json hiprec_json(const DirectedReal& v) {
  json out;
  out["dec"] = v.dec_mid();
  out["lo"] = v.dec_lo();
  out["hi"] = v.dec_hi();
  out["prec_bits"] = static_cast<int>(DirectedReal::kPrecision);
  return out;
}

json bound_report_json(const BoundReport& rep) {
  json out;
  out["record"] = "bound_report";
  out["name"] = rep.name;
  out["lhs"] = rat_str(rep.lhs);
  out["rhs_main"] = hiprec_json(rep.rhs_main);
  out["ratio"] = hiprec_json(rep.ratio);
  out["params"] = rep.params;
  out["metadata"] = rep.metadata;
  out["borderline_count"] = rep.borderline_count;
  return out;
}

json variance_report_json(const VarianceReport& rep) {
  json out;
  out["record"] = "variance_report";
  out["Q"] = rep.Q;
  out["k"] = rep.k;
  out["psi_mass"] = rat_str(rep.psi_mass);
  out["overlap_sum"] = rat_str(rep.overlap_sum);
  out["variance"] = rat_str(rep.variance);
  out["excess"] = rat_str(rep.excess);
  return out;
}

json dyadic_cell_json(const DyadicCell& cell, bool with_weighted) {
  json out;
  out["count"] = cell.count;
  out["lambda_mass"] = rat_str(cell.lambda_mass);
  if (with_weighted) out["weighted"] = hiprec_json(cell.weighted);
  return out;
}

json partition_report_json(const PartitionReport& rep) {
  static const char* names[4] = {"disjoint", "e1", "e2", "e3"};
  json out;
  out["record"] = "partition_report";
  out["Q"] = rep.Q;
  out["k"] = rep.k;
  out["epsilon"] = rat_str(rep.epsilon);
  out["psi_mass"] = rat_str(rep.psi_mass);
  json counts, lmass, omass;
  for (int c = 0; c < 4; ++c) {
    counts[names[c]] = rep.count_by_class[c];
    lmass[names[c]] = rat_str(rep.lambda_mass_by_class[c]);
    omass[names[c]] = rat_str(rep.overlap_mass_by_class[c]);
  }
  out["counts"] = counts;
  out["lambda_mass"] = lmass;
  out["overlap_mass"] = omass;
  out["I"] = rep.I;
  json dy = json::array();
  for (size_t i = 0; i < rep.dyadic_R.size(); ++i) {
    json cell = dyadic_cell_json(rep.dyadic_R[i], true);
    cell["i"] = static_cast<int>(i);
    dy.push_back(cell);
  }
  out["dyadic_R"] = dy;
  out["tail_R_prime"] = dyadic_cell_json(rep.tail_R_prime, true);
  json e2 = json::array();
  for (const auto& [key, cell] : rep.e2_buckets) {
    json c = dyadic_cell_json(cell, false);
    c["i"] = key.first;
    c["j"] = key.second;
    e2.push_back(c);
  }
  out["e2_buckets"] = e2;
  json e3 = json::array();
  for (const auto& [key, cell] : rep.e3_buckets) {
    json c = dyadic_cell_json(cell, false);
    c["i"] = key;
    e3.push_back(c);
  }
  out["e3_buckets"] = e3;
  out["borderline_count"] = rep.borderline_count;
  return out;
}

json montecarlo_report_json(const MonteCarloReport& rep) {
  json out;
  out["record"] = "monte_carlo_report";
  out["Q"] = rep.Q;
  out["k"] = rep.k;
  out["samples"] = rep.samples;
  out["seed"] = rep.seed;
  out["sample_mean"] = rat_str(rep.sample_mean);
  out["sample_variance"] = rat_str(rep.sample_variance);
  out["psi_mass"] = rat_str(rep.psi_mass);
  out["mean_error"] = rat_str(rep.mean_error);
  json ps = json::array();
  for (const Rat& s : rep.power_sums) ps.push_back(rat_str(s));
  out["power_sums"] = ps;
  return out;
}

json audit_json(const PartitionAudit& audit) {
  static const char* names[4] = {"disjoint", "e1", "e2", "e3"};
  json out;
  out["record"] = "partition_audit";
  out["reconciled"] = audit.reconciled;
  out["diagonal_mass"] = rat_str(audit.diagonal_mass);
  out["off_diagonal_overlap"] = rat_str(audit.off_diagonal_overlap);
  out["overlap_sum_expected"] = rat_str(audit.overlap_sum_expected);
  json ratios;
  for (int c = 0; c < 4; ++c) ratios[names[c]] = hiprec_json(audit.ratio_vs_psi_power[c]);
  out["overlap_ratio_vs_psi_power"] = ratios;
  out["borderline_count"] = audit.borderline_count;
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<uint32_t> dyadic_ladder(uint32_t Q) {
  std::vector<uint32_t> out;
  for (uint32_t v = 1; v <= Q; v *= 2) {
    out.push_back(v);
    if (v > Q / 2) break;
  }
  if (out.back() != Q) out.push_back(Q);
  return out;
}

}  // namespace

CommandResult cmd_measure(const ExperimentConfig& config) {
  Timer timer;
  CommandResult res;
  res.envelope = make_envelope_line(config);
  FactorSieve sieve(config.Q);
  PsiTable psi = config.build_psi(sieve);
  std::ostringstream payload;
  std::ostringstream csv;
  csv << "q,exact,closed_form,equal\n";
  uint64_t mismatches = 0;
  for (uint32_t q = 1; q <= config.Q; ++q) {
    Rat exact = build_Aq(q, psi, sieve).measure();
    Rat closed = closed_form_mass(q, psi, sieve, 1);
    bool equal = exact == closed;
    if (!equal) ++mismatches;
    json row;
    row["record"] = "measure_row";
    row["q"] = q;
    row["exact"] = rat_str(exact);
    row["closed_form"] = rat_str(closed);
    row["equal"] = equal;
    payload << row.dump() << "\n";
    csv << q << "," << rat_str(exact) << "," << rat_str(closed) << "," << (equal ? 1 : 0) << "\n";
  }
  json summary;
  summary["record"] = "measure_summary";
  summary["rows"] = config.Q;
  summary["mismatches"] = mismatches;
  payload << summary.dump() << "\n";
  res.payload = payload.str();
  res.csv = csv.str();
  res.timing = make_timing_line(timer.seconds());
  if (mismatches > 0) {
    res.exit_code = kExitInvariant;
    res.error = std::to_string(mismatches) + " measure rows violate the closed form";
  }
  return res;
}

CommandResult cmd_variance(const ExperimentConfig& config) {
  Timer timer;
  CommandResult res;
  res.envelope = make_envelope_line(config);
  FactorSieve sieve(config.Q);
  PsiTable psi = config.build_psi(sieve);
  std::vector<uint32_t> ladder = dyadic_ladder(config.Q);
  std::vector<VarianceReport> rows = exact_variance_ladder(
      config.Q, psi, sieve, config.k, ladder, config.threads, config.pair_sweep_budget);
  PartitionReport part = classify_pairs(config.Q, psi, sieve, config.k, config.epsilon,
                                        config.threads, config.pair_sweep_budget);
  PartitionAudit audit = partition_audit(part, rows.back());

  std::ostringstream payload;
  payload << variance_report_json(rows.back()).dump() << "\n";
  payload << partition_report_json(part).dump() << "\n";
  payload << audit_json(audit).dump() << "\n";
  json series;
  series["record"] = "variance_series";
  json srows = json::array();
  std::ostringstream csv;
  csv << "Q,psi_mass,psi_mass_dec,variance,variance_dec\n";
  for (const VarianceReport& r : rows) {
    srows.push_back({r.Q, rat_str(r.psi_mass), rat_str(r.variance)});
    csv << r.Q << "," << rat_str(r.psi_mass) << "," << rat_decimal(r.psi_mass) << ","
        << rat_str(r.variance) << "," << rat_decimal(r.variance) << "\n";
  }
  series["rows"] = srows;
  payload << series.dump() << "\n";
  res.payload = payload.str();
  res.csv = csv.str();
  res.timing = make_timing_line(timer.seconds());
  if (!audit.reconciled) {
    res.exit_code = kExitInvariant;
    res.error = "partition masses do not reconcile with the exact variance sweep";
  }
  return res;
}

CommandResult cmd_montecarlo(const ExperimentConfig& config) {
  Timer timer;
  CommandResult res;
  res.envelope = make_envelope_line(config);
  FactorSieve sieve(config.Q);
  PsiTable psi = config.build_psi(sieve);
  MonteCarloReport rep = monte_carlo(config.Q, psi, sieve, config.k, config.samples, config.seed,
                                     config.threads);
  std::ostringstream payload;
  payload << montecarlo_report_json(rep).dump() << "\n";
  res.payload = payload.str();
  res.timing = make_timing_line(timer.seconds());
  return res;
}

CommandResult cmd_bounds(const ExperimentConfig& config) {
  Timer timer;
  CommandResult res;
  res.envelope = make_envelope_line(config);
  FactorSieve sieve(config.Q);
  PsiTable psi = config.build_psi(sieve);
  const BoundsParams& bp = config.bounds;
  std::ostringstream payload;
  switch (*config.bounds_kind) {
    case BoundsKind::Prop1: {
      BoundReport rep = check_prop1(config.Q, psi, sieve, config.k, config.epsilon, bp.y,
                                    config.threads, config.pair_sweep_budget);
      payload << bound_report_json(rep).dump() << "\n";
      break;
    }
    case BoundsKind::Prop2: {
      BoundReport rep = check_prop2(config.Q, psi, sieve, config.k, config.epsilon, bp.y, bp.t,
                                    bp.s, bp.C, config.threads, config.pair_sweep_budget);
      payload << bound_report_json(rep).dump() << "\n";
      break;
    }
    case BoundsKind::Prop3: {
      BoundReport rep = check_prop3(config.Q, psi, sieve, config.k, config.epsilon, bp.y, bp.t,
                                    bp.kappa, bp.C, config.threads, config.pair_sweep_budget);
      payload << bound_report_json(rep).dump() << "\n";
      break;
    }
    case BoundsKind::Lemma31:
    case BoundsKind::Lemma32: {
      WeightTable scaled = rescale(psi, config.k, bp.y);
      WeightFunctionSpec f{config.k};
      BilinearWeights weights{scaled, scaled, f, f};
      BoundReport rep = *config.bounds_kind == BoundsKind::Lemma31
                            ? check_lemma31(weights, bp.t, bp.K, config.epsilon, sieve)
                            : check_lemma32(weights, bp.t, bp.K, config.epsilon, bp.C, sieve);
      rep.metadata["psi_rescale_y"] = rat_str(bp.y);
      payload << bound_report_json(rep).dump() << "\n";
      break;
    }
    case BoundsKind::OverlapSweep: {
      OverlapSweepReport rep = overlap_sweep(config.Q, psi, sieve, config.k, config.threads,
                                             config.pair_sweep_budget);
      json out;
      out["record"] = "overlap_sweep_report";
      out["Q"] = rep.Q;
      out["k"] = rep.k;
      out["pairs_swept"] = rep.pairs_swept;
      out["disjoint_pairs"] = rep.disjoint_pairs;
      out["zero_violations"] = rep.zero_violations;
      out["max_ratio"] = hiprec_json(rep.max_ratio);
      out["max_pair"] = {rep.max_q, rep.max_r};
      payload << out.dump() << "\n";
      if (rep.zero_violations > 0) {
        res.exit_code = kExitInvariant;
        res.error = "disjoint pairs with nonzero overlap detected";
      }
      break;
    }
  }
  res.payload = payload.str();
  res.timing = make_timing_line(timer.seconds());
  return res;
}

CommandResult run_command(const ExperimentConfig& config) {
  CommandResult res;
  std::vector<std::string> errs = config.validate();
  if (!errs.empty()) {
    res.exit_code = kExitValidation;
    std::string joined;
    for (const std::string& e : errs) joined += e + "\n";
    res.error = joined;
    return res;
  }
  try {
    switch (config.command) {
      case Command::Measure: return cmd_measure(config);
      case Command::Variance: return cmd_variance(config);
      case Command::MonteCarlo: return cmd_montecarlo(config);
      case Command::Bounds: return cmd_bounds(config);
    }
    res.exit_code = kExitValidation;
    res.error = "unknown command";
  } catch (const InvariantViolation& e) {
    res.exit_code = kExitInvariant;
    res.error = e.what();
  } catch (const std::ios_base::failure& e) {
    res.exit_code = kExitIo;
    res.error = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kExitValidation;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.exit_code = kExitInvariant;
    res.error = e.what();
  }
  return res;
}

int write_outputs(const CommandResult& result, const ExperimentConfig& config) {
  if (!result.error.empty()) {
    std::cerr << "error: " << result.error;
    if (result.error.back() != '\n') std::cerr << "\n";
  }
  if (result.exit_code == kExitValidation && result.payload.empty()) return result.exit_code;
  if (config.out_path.empty()) {
    std::cout << result.full_text();
    if (!result.csv.empty()) std::cout << result.csv;
    return result.exit_code;
  }
  std::ofstream out(config.out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << config.out_path << "\n";
    return kExitIo;
  }
  out << result.full_text();
  if (!out) return kExitIo;
  if (!result.csv.empty()) {
    std::ofstream csv(config.out_path + ".csv");
    if (!csv) {
      std::cerr << "error: cannot open CSV file " << config.out_path << ".csv\n";
      return kExitIo;
    }
    csv << result.csv;
    if (!csv) return kExitIo;
  }
  return result.exit_code;
}

}  // namespace dslab
