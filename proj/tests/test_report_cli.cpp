#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dslab/commands.hpp"

using namespace dslab;
using nlohmann::json;

namespace {

ExperimentConfig base_config(Command cmd) {
  ExperimentConfig c;
  c.command = cmd;
  c.Q = 24;
  c.k = 1;
  c.epsilon = frac(1, 2);
  c.psi_preset = PsiPreset::Const;
  c.psi_param = frac(1, 2);
  c.samples = 500;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("config validation catches bad inputs") {
  ExperimentConfig c = base_config(Command::MonteCarlo);
  c.samples = 1;
  CHECK_FALSE(c.validate().empty());

  ExperimentConfig f = base_config(Command::Measure);
  f.psi_preset = PsiPreset::File;
  CHECK_FALSE(f.validate().empty());

  ExperimentConfig big = base_config(Command::Variance);
  big.Q = big.pair_sweep_budget + 1;
  CHECK_FALSE(big.validate().empty());

  ExperimentConfig eps = base_config(Command::Bounds);
  eps.bounds_kind = BoundsKind::Lemma31;
  eps.epsilon = frac(1, 2);  // above 2/5
  CHECK_FALSE(eps.validate().empty());

  ExperimentConfig cp = base_config(Command::Measure);
  cp.psi_param = frac(2, 3);
  CHECK_FALSE(cp.validate().empty());

  CHECK(base_config(Command::Measure).validate().empty());
}

TEST_CASE("cmd_measure emits equal rows and a CSV") {
  ExperimentConfig c = base_config(Command::Measure);
  c.Q = 10;
  c.psi_param = frac(1, 4);
  CommandResult res = run_command(c);
  CHECK(res.exit_code == kExitOk);
  // 10 rows + summary
  std::istringstream lines(res.payload);
  std::string line;
  int rows = 0;
  bool summary_seen = false;
  while (std::getline(lines, line)) {
    json rec = json::parse(line);
    if (rec["record"] == "measure_row") {
      CHECK(rec["equal"] == true);
      ++rows;
    } else if (rec["record"] == "measure_summary") {
      CHECK(rec["mismatches"] == 0);
      summary_seen = true;
    }
  }
  CHECK(rows == 10);
  CHECK(summary_seen);
  CHECK(res.csv.substr(0, res.csv.find('\n')) == "q,exact,closed_form,equal");

  ExperimentConfig z = base_config(Command::Measure);
  z.Q = 1;
  z.psi_param = Rat(0);
  CommandResult rz = run_command(z);
  CHECK(rz.exit_code == kExitOk);
  json first = json::parse(rz.payload.substr(0, rz.payload.find('\n')));
  CHECK(first["exact"] == "0/1");
  CHECK(first["closed_form"] == "0/1");
}

TEST_CASE("malformed psi file surfaces the line number and exit 1") {
  std::string path = "bad_psi_table.txt";
  {
    std::ofstream out(path);
    out << "Q=5\n2 1/2\n3 oops\n";
  }
  ExperimentConfig c = base_config(Command::Measure);
  c.Q = 5;
  c.psi_preset = PsiPreset::File;
  c.psi_file = path;
  CommandResult res = run_command(c);
  CHECK(res.exit_code == kExitValidation);
  CHECK(res.error.find("line 3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("variance command payload carries the spot value") {
  ExperimentConfig c = base_config(Command::Variance);
  c.Q = 2;
  CommandResult res = run_command(c);
  CHECK(res.exit_code == kExitOk);
  json rec = json::parse(res.payload.substr(0, res.payload.find('\n')));
  CHECK(rec["record"] == "variance_report");
  CHECK(rec["variance"] == "1/4");
  // ladder CSV has header + rows for Q' = 1, 2
  int newlines = 0;
  for (char ch : res.csv)
    if (ch == '\n') ++newlines;
  CHECK(newlines == 3);
}

TEST_CASE("commands are deterministic across reruns and thread counts") {
  for (Command cmd : {Command::Measure, Command::Variance, Command::MonteCarlo}) {
    ExperimentConfig c = base_config(cmd);
    CommandResult a = run_command(c);
    CommandResult b = run_command(c);
    CHECK(a.deterministic_text() == b.deterministic_text());
    CHECK(a.csv == b.csv);
    ExperimentConfig c4 = c;
    c4.threads = 4;
    CommandResult d = run_command(c4);
    // thread count is echoed in the envelope but never changes the records
    CHECK(a.payload == d.payload);
    CHECK(a.csv == d.csv);
  }
  ExperimentConfig mc = base_config(Command::MonteCarlo);
  CommandResult a = run_command(mc);
  mc.seed = 43;
  CommandResult b = run_command(mc);
  CHECK(a.payload != b.payload);
}

TEST_CASE("bounds command dispatch") {
  ExperimentConfig c = base_config(Command::Bounds);
  c.bounds_kind = BoundsKind::Prop1;
  c.epsilon = frac(3, 10);
  c.bounds.y = Rat(2);
  CommandResult res = run_command(c);
  CHECK(res.exit_code == kExitOk);
  json rec = json::parse(res.payload.substr(0, res.payload.find('\n')));
  CHECK(rec["record"] == "bound_report");
  CHECK(rec["name"] == "prop1");

  // lemma32 with K above pi(t): empty class set
  ExperimentConfig l = base_config(Command::Bounds);
  l.bounds_kind = BoundsKind::Lemma32;
  l.epsilon = frac(2, 5);
  l.bounds.t = Rat(3);
  l.bounds.K = Rat(5);
  CommandResult lres = run_command(l);
  json lrec = json::parse(lres.payload.substr(0, lres.payload.find('\n')));
  CHECK(lrec["lhs"] == "0/1");

  ExperimentConfig sweep = base_config(Command::Bounds);
  sweep.bounds_kind = BoundsKind::OverlapSweep;
  CommandResult sres = run_command(sweep);
  CHECK(sres.exit_code == kExitOk);
  json srec = json::parse(sres.payload.substr(0, sres.payload.find('\n')));
  CHECK(srec["zero_violations"] == 0);
}

TEST_CASE("envelope round trips and replays identically") {
  ExperimentConfig c = base_config(Command::Bounds);
  c.bounds_kind = BoundsKind::Prop3;
  c.epsilon = frac(3, 10);
  c.bounds.y = Rat(4);
  c.bounds.t = Rat(16);
  c.bounds.kappa = frac(1, 20);
  c.bounds.C = Rat(2);
  CommandResult first = run_command(c);
  ExperimentConfig back = config_from_envelope_line(first.envelope);
  CommandResult second = run_command(back);
  CHECK(first.deterministic_text() == second.deterministic_text());

  ExperimentConfig mc = base_config(Command::MonteCarlo);
  CommandResult m1 = run_command(mc);
  CommandResult m2 = run_command(config_from_envelope_line(m1.envelope));
  CHECK(m1.deterministic_text() == m2.deterministic_text());
}

TEST_CASE("exception mapping to exit codes") {
  // unknown psi file -> I/O error
  ExperimentConfig c = base_config(Command::Measure);
  c.psi_preset = PsiPreset::File;
  c.psi_file = "definitely_missing_psi_table.txt";
  CommandResult res = run_command(c);
  CHECK(res.exit_code == kExitIo);
}
