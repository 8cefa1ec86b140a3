// Copyright 2026 The Regional Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regional/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "regional/algorithms.hpp"
#include "regional/corpus.hpp"
#include "regional/harness.hpp"
#include "regional/regions.hpp"
#include "regional/report_io.hpp"
#include "regional/trajectory_io.hpp"

namespace regional {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kFooter = R"(File formats:
  trajectory-csv/1     k,x0..x{n-1},f,grad_norm,lambda_minus,nu,delta,
                       step_norm,accepted,region,delta_f
  regional.trajectory/1  trajectory JSON written next to the CSV
  region-scan-csv/1    x0..x{n-1},label,delta_f,grad_norm,lambda_minus
  report-summary-csv/1 k,region,region_next,class,ratio_bound,regime,
                       observed,applicable,satisfied
  regional.report/1    verification report JSON
Reals carry 17 significant digits; absent values are empty fields.

Exit codes: 0 ok, 1 verification violations, 2 usage or input error,
3 diverged (partial trajectory written), 4 numerical failure.)";

struct RunOptions {
  std::string obj;
  std::string algo;
  std::string x0;
  std::uint64_t seed = 0;
  std::string spectrum;
  std::uint64_t rotation_seed = 0;
  AlgoConfig config;
  std::string nu_reset = "clamp";
  double nu0 = 0.0;
  double eps_f = 0.0;
  double eps_1 = 0.0;
  double eps_2 = 0.0;
  double divergence_floor = 0.0;
  double kappa = 0.0;
  double f_ref = 0.0;
  std::string out;

  CLI::Option* nu0_opt = nullptr;
  CLI::Option* eps_f_opt = nullptr;
  CLI::Option* eps_1_opt = nullptr;
  CLI::Option* eps_2_opt = nullptr;
  CLI::Option* floor_opt = nullptr;
  CLI::Option* kappa_opt = nullptr;
  CLI::Option* f_ref_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

void add_run_options(CLI::App* app, RunOptions& o) {
  app->add_option("--obj", o.obj, "Objective id from the corpus")->required();
  app->add_option("--algo", o.algo, "rg, rg_a, tr_g, tr_h, rn or rn_a")
      ->required();
  app->add_option("--x0", o.x0,
                  "Start point as a comma list, or 'zero' or 'random'")
      ->required();
  app->add_option("--seed", o.seed, "Seed for --x0 random");
  app->add_option("--spectrum", o.spectrum,
                  "quad_sc eigenvalues as a comma list (default 1,1)");
  app->add_option("--rotation-seed", o.rotation_seed,
                  "quad_sc rotation seed; 0 keeps the eigenbasis");
  app->add_option("--l1", o.config.l1, "Fixed gradient regularization");
  app->add_option("--l2", o.config.l2, "Fixed cubic regularization");
  app->add_option("--eta", o.config.eta, "Acceptance threshold");
  app->add_option("--psi", o.config.psi, "Rejection growth factor");
  app->add_option("--nu-min", o.config.nu_min);
  app->add_option("--nu-max", o.config.nu_max);
  o.nu0_opt = app->add_option("--nu0", o.nu0, "Initial nu (default nu-min)");
  app->add_option("--nu-reset", o.nu_reset, "clamp or min")
      ->check(CLI::IsMember({"clamp", "min"}));
  app->add_option("--max-iters", o.config.max_iters);
  o.eps_f_opt = app->add_option("--eps-f", o.eps_f,
                                "Stop once f - f_inf <= eps-f");
  o.eps_1_opt = app->add_option("--eps-1", o.eps_1, "Stop once ||g|| <= eps-1");
  o.eps_2_opt = app->add_option("--eps-2", o.eps_2,
                                "With eps-1, also require lambda_minus <= eps-2");
  o.floor_opt = app->add_option("--divergence-floor", o.divergence_floor);
  o.kappa_opt = app->add_option("--kappa", o.kappa,
                                "Region kappa (default: corpus value)");
  o.f_ref_opt = app->add_option("--f-ref", o.f_ref,
                                "Region f_ref (default: corpus value)");
  o.out_opt = app->add_option("--out", o.out,
                              "Output prefix; writes PREFIX.csv, PREFIX.json");
}

Vec parse_list(const std::string& text, const char* what) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size() &&
          item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad ") + what + ": " + text);
    }
  }
  if (vals.empty()) throw InputError(std::string("empty ") + what);
  return Eigen::Map<Vec>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

CorpusEntry load_entry(const RunOptions& o) {
  if (o.obj == "quad_sc" && !o.spectrum.empty()) {
    return make_quad_sc(parse_list(o.spectrum, "spectrum"), o.rotation_seed);
  }
  if (!o.spectrum.empty()) {
    throw InputError("--spectrum only applies to quad_sc");
  }
  if (o.obj == "quad_sc" && o.rotation_seed != 0) {
    return make_quad_sc(Vec::Ones(2), o.rotation_seed);
  }
  return corpus_entry(o.obj);
}

Vec make_x0(const RunOptions& o, const Objective& obj) {
  const int n = obj.n();
  if (o.x0 == "zero") return Vec::Zero(n);
  if (o.x0 == "random") {
    std::mt19937_64 rng(o.seed);
    const Box& b = obj.scan_domain();
    const bool boxed = b.lo.size() == n && b.hi.size() == n &&
                       b.lo.allFinite() && b.hi.allFinite();
    Vec x(n);
    for (int i = 0; i < n; ++i) {
      const double lo = boxed ? b.lo(i) : -1.0;
      const double hi = boxed ? b.hi(i) : 1.0;
      x(i) = std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    return x;
  }
  Vec x = parse_list(o.x0, "x0");
  if (x.size() != n) {
    throw InputError("x0 has dimension " + std::to_string(x.size()) +
                     ", objective " + obj.id() + " has " + std::to_string(n));
  }
  return x;
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  body(f);
  if (!f) throw InputError("write failed: " + path);
}

std::string summary_line(const Trajectory& t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", t.records.back().delta_f);
  return "iterations=" + std::to_string(t.records.size() - 1) +
         " termination=" + termination_name(t.termination) +
         " final_delta_f=" + buf;
}

// Runs one spec and writes its outputs. Returns the exit code.
int execute_run(RunOptions o, const std::string& default_out, std::ostream& out) {
  const CorpusEntry entry = load_entry(o);
  AlgoConfig cfg = o.config;
  cfg.algo = algo_from_name(o.algo);
  cfg.nu_reset = o.nu_reset == "min" ? NuReset::kToMin : NuReset::kClamp;
  if (o.nu0_opt->count()) cfg.nu0 = o.nu0;
  if (o.eps_f_opt->count()) cfg.termination.eps_f = o.eps_f;
  if (o.eps_1_opt->count()) cfg.termination.eps_1 = o.eps_1;
  if (o.eps_2_opt->count()) cfg.termination.eps_2 = o.eps_2;
  if (o.floor_opt->count()) cfg.divergence_floor = o.divergence_floor;
  RegionParams rp{entry.recommended.kappa, entry.recommended.f_ref};
  if (o.kappa_opt->count()) rp.kappa = o.kappa;
  if (o.f_ref_opt->count()) rp.f_ref = o.f_ref;

  const Vec x0 = make_x0(o, entry.objective);
  const Trajectory t = run(entry.objective, cfg, rp, x0);
  const std::string prefix = o.out_opt->count() ? o.out : default_out;
  write_file(prefix + ".csv",
             [&](std::ostream& os) { write_trajectory_csv(t, os); });
  write_file(prefix + ".json", [&](std::ostream& os) {
    os << trajectory_to_json(t).dump(2) << '\n';
  });
  out << summary_line(t) << '\n';
  return t.termination == TerminationReason::kDiverged ? kExitDiverged : kExitOk;
}

// Converts library exceptions to exit codes.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// One batch spec: a config file parsed as if passed to `run --config`.
// Relative output prefixes resolve against the config's directory.
int run_config_file(const fs::path& cfg, std::ostream& out, std::ostream& err) {
  CLI::App app;
  RunOptions o;
  add_run_options(&app, o);
  app.set_config("--config");
  const std::string cfg_str = cfg.string();
  const std::vector<const char*> argv{"run", "--config", cfg_str.c_str()};
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    err << cfg_str << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.out_opt->count() && fs::path(o.out).is_relative()) {
    o.out = (cfg.parent_path() / o.out).string();
  }
  fs::path def = cfg;
  def.replace_extension();
  return guarded([&] { return execute_run(o, def.string(), out); }, err);
}

int run_batch(const std::string& dir, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) {
    err << "error: not a directory: " << dir << '\n';
    return kExitUsage;
  }
  std::vector<fs::path> specs;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".cfg") {
      specs.push_back(e.path());
    }
  }
  std::sort(specs.begin(), specs.end());
  if (specs.empty()) {
    err << "error: no .cfg files in " << dir << '\n';
    return kExitUsage;
  }
  std::vector<std::ostringstream> outs(specs.size());
  std::vector<std::ostringstream> errs(specs.size());
  std::vector<int> codes(specs.size(), 0);
  std::atomic<size_t> next{0};
  const unsigned workers = std::max(
      1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                             static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < specs.size(); i = next++) {
        codes[i] = run_config_file(specs[i], outs[i], errs[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
  int code = kExitOk;
  for (size_t i = 0; i < specs.size(); ++i) {
    out << specs[i].filename().string() << ": " << outs[i].str();
    err << errs[i].str();
    code = std::max(code, codes[i]);
  }
  return code;
}

// Parses `args`; returns an exit code when parsing ends the command.
std::optional<int> parse(CLI::App& app, const std::vector<std::string>& args,
                         std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"regional"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  return std::nullopt;
}

int cmd_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Run one algorithm", "regional run"};
  app.footer(kFooter);
  RunOptions o;
  add_run_options(&app, o);
  app.set_config("--config", "", "Key-value config file; flags override it");
  std::string batch_dir;
  app.add_option("--batch", batch_dir,
                 "Run every *.cfg in DIR in parallel; outputs go next to each "
                 "file");
  if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
    for (const char* name : {"--obj", "--algo", "--x0"}) {
      app.get_option(name)->required(false);
    }
  }
  if (const auto code = parse(app, args, out, err)) return *code;
  if (!batch_dir.empty()) return run_batch(batch_dir, out, err);
  return guarded(
      [&] { return execute_run(o, o.obj + "_" + o.algo, out); }, err);
}

json corpus_manifest() {
  json entries = json::array();
  for (const auto& id : corpus_ids()) {
    const CorpusEntry e = corpus_entry(id);
    const Objective& o = e.objective;
    json tags = json::array();
    for (ClassTag t : e.tags) tags.push_back(tag_name(t));
    json lo = json::array();
    json hi = json::array();
    for (Eigen::Index i = 0; i < o.scan_domain().lo.size(); ++i) {
      lo.push_back(o.scan_domain().lo(i));
      hi.push_back(o.scan_domain().hi(i));
    }
    const auto& c = o.constants();
    auto opt = [](const std::optional<double>& v) {
      return v ? json(*v) : json(nullptr);
    };
    entries.push_back({
        {"id", id},
        {"n", o.n()},
        {"tags", tags},
        {"recommended",
         {{"kappa", e.recommended.kappa}, {"f_ref", e.recommended.f_ref}}},
        {"f_inf", opt(o.f_inf())},
        {"smoothness_order", o.smoothness_order()},
        {"hessian_available", o.hessian_available()},
        {"scan_domain", {{"lo", lo}, {"hi", hi}}},
        {"constants",
         {{"L1", opt(c.L1)}, {"L2", opt(c.L2)}, {"M1", opt(c.M1)},
          {"M2", opt(c.M2)}}},
    });
  }
  return json{{"schema_version", "regional.corpus/1"}, {"entries", entries}};
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Region-based convergence analysis toolkit", "regional"};
  app.footer(kFooter);
  app.require_subcommand(1);

  // Parsed by cmd_run; listed here for the top-level help.
  app.add_subcommand("run", "Run one algorithm");
  if (!args.empty() && args.front() == "run") {
    return cmd_run({args.begin() + 1, args.end()}, out, err);
  }

  CLI::App* scan_cmd = app.add_subcommand("scan", "Label a grid over the domain");
  std::string scan_obj;
  double scan_kappa = 0.0;
  double scan_f_ref = 0.0;
  int scan_res = 101;
  std::string scan_out;
  scan_cmd->add_option("--obj", scan_obj)->required();
  auto* sk = scan_cmd->add_option("--kappa", scan_kappa);
  auto* sf = scan_cmd->add_option("--f-ref", scan_f_ref);
  scan_cmd->add_option("--res", scan_res, "Points per axis (>= 2)");
  scan_cmd->add_option("--out", scan_out, "CSV path (default OBJ_scan.csv)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a trajectory against the rate bounds");
  std::string traj_path;
  std::string report_out;
  std::string summary_csv;
  std::string kappa_source = "trajectory";
  double v_kappa = 0.0;
  double v_zeta = 0.0;
  int v_m = 1;
  double v_eps_1 = 0.0;
  double v_eps_2 = 0.0;
  verify_cmd->add_option("trajectory", traj_path, "Trajectory JSON")->required();
  verify_cmd->add_option("--out", report_out,
                         "Report path (default TRAJ.report.json)");
  verify_cmd->add_option("--summary-csv", summary_csv);
  verify_cmd->add_option("--kappa-source", kappa_source)
      ->check(CLI::IsMember({"trajectory", "recommended"}));
  auto* vk = verify_cmd->add_option("--kappa", v_kappa, "Explicit kappa");
  auto* vz = verify_cmd->add_option("--zeta", v_zeta, "Override every zeta");
  auto* vm = verify_cmd->add_option("--m", v_m, "Override m");
  auto* ve1 = verify_cmd->add_option("--eps-1", v_eps_1);
  auto* ve2 = verify_cmd->add_option("--eps-2", v_eps_2);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Print the corpus manifest");
  std::string corpus_out;
  corpus_cmd->add_option("--out", corpus_out, "Write the manifest to a file");

  if (const auto code = parse(app, args, out, err)) return *code;

  if (scan_cmd->parsed()) {
    return guarded(
        [&] {
          const CorpusEntry e = corpus_entry(scan_obj);
          RegionParams rp{e.recommended.kappa, e.recommended.f_ref};
          if (sk->count()) rp.kappa = scan_kappa;
          if (sf->count()) rp.f_ref = scan_f_ref;
          const RegionScan s = region_scan(e.objective, scan_res, rp);
          const std::string path =
              scan_out.empty() ? scan_obj + "_scan.csv" : scan_out;
          write_file(path, [&](std::ostream& os) { write_scan_csv(s, os); });
          std::map<Region, long> hist;
          for (const auto& l : s.labels) ++hist[l.region];
          for (const auto& [r, c] : hist) {
            out << region_name(r) << ' ' << c << '\n';
          }
          return kExitOk;
        },
        err);
  }

  if (verify_cmd->parsed()) {
    return guarded(
        [&] {
          std::ifstream f(traj_path);
          if (!f) throw InputError("cannot read " + traj_path);
          json j;
          try {
            j = json::parse(f);
          } catch (const json::exception& e) {
            throw InputError(std::string("invalid JSON: ") + e.what());
          }
          const Trajectory t = trajectory_from_json(j);
          VerifyOptions opts;
          opts.kappa_source = kappa_source == "recommended"
                                  ? KappaSource::kRecommended
                                  : KappaSource::kTrajectory;
          if (vk->count()) opts.kappa = v_kappa;
          if (vz->count()) opts.zeta = v_zeta;
          if (vm->count()) opts.m = v_m;
          if (ve1->count()) opts.eps_1 = v_eps_1;
          if (ve2->count()) opts.eps_2 = v_eps_2;
          const VerificationReport rep = verify_run(t, t.region_params, opts);
          std::vector<EnvelopePoint> env;
          if (t.f_inf) env = envelope_compare(t, rep);
          std::string path = report_out;
          if (path.empty()) {
            fs::path p(traj_path);
            p.replace_extension(".report.json");
            path = p.string();
          }
          write_file(path, [&](std::ostream& os) {
            os << report_to_json(rep, env).dump(2) << '\n';
          });
          if (!summary_csv.empty()) {
            write_file(summary_csv,
                       [&](std::ostream& os) { write_summary_csv(rep, os); });
          }
          out << "checks=" << rep.applicable_checks
              << " violations=" << rep.violations.size() << '\n';
          for (const auto& v : rep.violations) {
            out << "  k=" << v.k << ' ' << v.kind << ": " << v.detail << '\n';
          }
          return rep.violations.empty() ? kExitOk : kExitViolations;
        },
        err);
  }

  if (corpus_cmd->parsed()) {
    return guarded(
        [&] {
          const std::string text = corpus_manifest().dump(2);
          if (corpus_out.empty()) {
            out << text << '\n';
          } else {
            write_file(corpus_out, [&](std::ostream& os) { os << text << '\n'; });
          }
          return kExitOk;
        },
        err);
  }
  return kExitUsage;
}

}  // namespace regional
