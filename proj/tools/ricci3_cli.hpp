#pragma once

// Command-line front end for the ricci3 solver.
//
//   ricci3 solve so3 --T 1,1,1
//   ricci3 classify sl2 --T -3,-2,1
//   ricci3 certify h3 --T 1,-1,-1 --v 1,1,1 --c 2
//   ricci3 sweep so3 --T1 10 --T2-range -2..0 --T3-range -2..0 --steps 100
//   ricci3 oracle-ricci e11 --v 1,1,1
//   ricci3 probe so3 --T 3,2,1 --samples 16 --seed 7
//
// Exit codes: 0 success (NoSolution included), 2 malformed input,
// 3 certification failure.

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci3/ricci3.hpp"

namespace ricci3::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitCertification = 3;

/// Malformed user input; `field` names the offending flag or JSON key.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Format { Text, JsonLines };

/// One grid axis of a sweep: a fixed value, or `steps` points on [lo, hi).
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  bool range = false;
};

struct JobSpec {
  std::string command;
  std::optional<Group> group;
  std::optional<Vec3> tensor;
  std::optional<std::array<double, 6>> tensor_full;
  std::optional<Vec3> metric;
  std::optional<std::array<double, 6>> metric_full;
  std::optional<double> c;
  std::array<Axis, 3> axes{};
  int steps = 0;
  int threads = 1;
  std::size_t samples = 16;
  std::uint64_t seed = 0;
  SolverConfig solver{};
  // certify: solutions read back from a solve record
  std::vector<std::pair<Vec3, double>> claims;
};

// ---------------------------------------------------------------------------
// parsing

inline double parse_number(std::string_view text, const std::string& field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
    throw InputError(field, "expected a finite number, got '" + std::string(text) + "'");
  return value;
}

template <std::size_t N>
std::array<double, N> parse_list(const std::string& text, const std::string& field) {
  std::array<double, N> out{};
  std::size_t count = 0, start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece(text.data() + start,
                                 (comma == std::string::npos ? text.size() : comma) - start);
    if (count == N)
      throw InputError(field, "expected " + std::to_string(N) + " comma-separated numbers");
    out[count++] = parse_number(piece, field);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (count != N) throw InputError(field, "expected " + std::to_string(N) + " comma-separated numbers");
  return out;
}

inline Axis parse_range(const std::string& text, const std::string& field) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw InputError(field, "expected a range 'lo..hi'");
  Axis a{parse_number(std::string_view(text).substr(0, dots), field),
         parse_number(std::string_view(text).substr(dots + 2), field), true};
  if (!(a.lo < a.hi)) throw InputError(field, "range requires lo < hi");
  return a;
}

inline Group parse_group_or_throw(const std::string& text, const std::string& field) {
  const auto g = parse_group(text);
  if (!g) throw InputError(field, "unknown group '" + text + "' (so3, sl2, e2, e11, h3, r3)");
  return *g;
}

template <std::size_t N>
std::array<double, N> json_numbers(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != N)
    throw InputError(field, "expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number()) throw InputError(field, "expected numbers");
    out[i] = j[i].get<double>();
    if (!std::isfinite(out[i])) throw InputError(field, "expected finite numbers");
  }
  return out;
}

inline double json_number(const Json& j, const std::string& field) {
  if (!j.is_number()) throw InputError(field, "expected a number");
  return j.get<double>();
}

/// One job per line of an input file. Keys mirror the command-line flags;
/// a solve record is accepted as a certify job (its solutions become claims).
inline JobSpec job_from_json(const Json& j, const std::string& default_command) {
  if (!j.is_object()) throw InputError("line", "expected a JSON object");
  JobSpec job;
  job.command = j.value("command", default_command);
  if (job.command == "solve" && default_command == "certify") job.command = "certify";
  if (!j.contains("group")) throw InputError("group", "missing");
  if (!j["group"].is_string()) throw InputError("group", "expected a string");
  job.group = parse_group_or_throw(j["group"].get<std::string>(), "group");
  if (j.contains("T")) job.tensor = json_numbers<3>(j["T"], "T");
  if (j.contains("T_full")) job.tensor_full = json_numbers<6>(j["T_full"], "T_full");
  if (j.contains("v")) job.metric = json_numbers<3>(j["v"], "v");
  if (j.contains("g")) job.metric_full = json_numbers<6>(j["g"], "g");
  if (j.contains("c")) job.c = json_number(j["c"], "c");
  if (j.contains("samples")) job.samples = static_cast<std::size_t>(json_number(j["samples"], "samples"));
  if (j.contains("seed")) job.seed = static_cast<std::uint64_t>(json_number(j["seed"], "seed"));
  if (j.contains("tol")) job.solver.zero_tol = json_number(j["tol"], "tol");
  if (j.contains("solutions")) {
    if (!j["solutions"].is_array()) throw InputError("solutions", "expected an array");
    for (const auto& s : j["solutions"]) {
      if (!s.is_object() || !s.contains("v") || !s.contains("c"))
        throw InputError("solutions", "each entry needs v and c");
      job.claims.emplace_back(json_numbers<3>(s["v"], "solutions.v"), json_number(s["c"], "solutions.c"));
    }
  }
  if (j.contains("family") && j["family"].is_object() && j["family"].contains("sample")) {
    const Json& s = j["family"]["sample"];
    if (!s.is_object() || !s.contains("v") || !s.contains("c"))
      throw InputError("family.sample", "needs v and c");
    job.claims.emplace_back(json_numbers<3>(s["v"], "family.sample.v"),
                            json_number(s["c"], "family.sample.c"));
  }
  return job;
}

// ---------------------------------------------------------------------------
// output

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string triple(const Vec3& v) { return num(v[0]) + "," + num(v[1]) + "," + num(v[2]); }

inline Json json_vec(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

inline Json json_mat(const Mat3& m) {
  return Json::array({json_vec(m[0]), json_vec(m[1]), json_vec(m[2])});
}

class Writer {
 public:
  Writer(std::ostream& out, Format format) : out_(out), format_(format) {}

  /// Emits one record: a JSON line, or an indented key/value block.
  void record(const Json& j) {
    if (format_ == Format::JsonLines) {
      out_ << j.dump() << '\n';
      return;
    }
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out_ << (first ? "" : "  ") << it.key() << ": " << text_value(it.value()) << '\n';
      first = false;
    }
    out_ << '\n';
  }

 private:
  static std::string text_value(const Json& v) {
    if (v.is_number_float()) return num(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + text_value(v[i]);
      return s + "]";
    }
    if (v.is_object()) {
      std::string s = "{";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        s += (first ? "" : ", ") + it.key() + "=" + text_value(it.value());
        first = false;
      }
      return s + "}";
    }
    return v.dump();
  }

  std::ostream& out_;
  Format format_;
};

inline Json solve_record(const UnimodularGroup& group, const DiagonalTensor& tensor,
                         const SolveOutcome& outcome, bool& certified) {
  Json j;
  j["command"] = "solve";
  j["group"] = std::string(group_id(group.name));
  j["T"] = json_vec(tensor.t);
  j["kind"] = std::string(outcome_kind_name(outcome.kind));
  j["case_label"] = std::string(case_label_name(outcome.case_label));
  Json sols = Json::array();
  certified = true;
  for (const auto& s : outcome.solutions) {
    const Certificate cert = certify(group, s.metric, s.c, tensor);
    certified = certified && cert.pass;
    Json e;
    e["v"] = json_vec(s.metric.components());
    e["c"] = s.c;
    e["residual"] = cert.residual_closed_form;
    e["residual_oracle"] = cert.residual_oracle;
    if (s.trace) e["trace"] = Json{{"p", s.trace->p}, {"q", s.trace->q}, {"multiplicity", s.trace->multiplicity}};
    sols.push_back(e);
  }
  j["solutions"] = sols;
  if (outcome.family) {
    const Family& f = *outcome.family;
    const Certificate cert = certify(group, f.sample, f.sample_c, tensor);
    certified = certified && cert.pass;
    Json fam;
    fam["constraint"] = std::string(family_constraint_name(f.constraint));
    fam["c_fixed"] = f.c_fixed ? Json(*f.c_fixed) : Json(nullptr);
    fam["sample"] = Json{{"v", json_vec(f.sample.components())}, {"c", f.sample_c}, {"residual", cert.residual_closed_form}};
    j["family"] = fam;
  } else {
    j["family"] = nullptr;
  }
  if (group.name == Group::SO3)
    j["frame_permutation"] = Json::array({outcome.frame_permutation[0], outcome.frame_permutation[1],
                                          outcome.frame_permutation[2]});
  j["notes"] = outcome.notes;
  j["certified"] = certified;
  return j;
}

// ---------------------------------------------------------------------------
// commands

inline DiagonalTensor require_tensor(const JobSpec& job) {
  if (!job.tensor) throw InputError("T", "missing (expected T1,T2,T3)");
  return DiagonalTensor(*job.tensor);
}

inline Mat3 symmetric_from_upper(const std::array<double, 6>& e) {
  return {{{e[0], e[1], e[2]}, {e[1], e[3], e[4]}, {e[2], e[4], e[5]}}};
}

inline int run_solve_like(const JobSpec& job, Writer& w) {
  const UnimodularGroup group(*job.group);
  DiagonalTensor tensor;
  std::optional<DiagonalizationResult> rotated;
  if (job.tensor_full) {
    if (group.name != Group::SO3)
      throw InputError("T-full", "full tensors are diagonalized on so3 only; pass --T for other groups");
    rotated = diagonalize_so3(symmetric_from_upper(*job.tensor_full));
    tensor = rotated->diagonal;
  } else {
    tensor = require_tensor(job);
  }

  if (job.command == "classify") {
    Json j;
    j["command"] = "classify";
    j["group"] = std::string(group_id(group.name));
    j["T"] = json_vec(tensor.t);
    j["case_label"] = std::string(case_label_name(classify_signature(group, tensor, job.solver)));
    w.record(j);
    return kExitOk;
  }

  const SolveOutcome outcome = solve(group, tensor, job.solver);
  bool certified = true;
  Json j = solve_record(group, tensor, outcome, certified);
  if (rotated) {
    j["T_full"] = Json::array();
    for (double x : *job.tensor_full) j["T_full"].push_back(x);
    j["rotation"] = json_mat(rotated->rotation.m);
  }
  w.record(j);
  return certified ? kExitOk : kExitCertification;
}

inline int run_certify(const JobSpec& job, Writer& w) {
  const UnimodularGroup group(*job.group);
  const DiagonalTensor tensor = require_tensor(job);
  std::vector<std::pair<Vec3, double>> claims = job.claims;
  if (job.metric || job.c) {
    if (!job.metric) throw InputError("v", "missing (expected v1,v2,v3)");
    if (!job.c) throw InputError("c", "missing");
    claims.emplace_back(*job.metric, *job.c);
  }
  if (claims.empty()) throw InputError("v", "nothing to certify (give --v and --c, or a solve record)");
  bool all = true;
  for (const auto& [v, c] : claims) {
    if (!(c > 0.0)) throw InputError("c", "must be positive");
    DiagonalMetric metric;
    try {
      metric = DiagonalMetric(v);
    } catch (const InvalidMetric& e) {
      throw InputError("v", e.what());
    }
    const Certificate cert = certify(group, metric, c, tensor);
    all = all && cert.pass;
    Json j;
    j["command"] = "certify";
    j["group"] = std::string(group_id(group.name));
    j["T"] = json_vec(tensor.t);
    j["v"] = json_vec(v);
    j["c"] = c;
    j["residual_closed_form"] = cert.residual_closed_form;
    j["residual_oracle"] = cert.residual_oracle;
    j["normalized"] = cert.normalized;
    j["pass"] = cert.pass;
    w.record(j);
  }
  return all ? kExitOk : kExitCertification;
}

inline std::vector<Vec3> sweep_points(const JobSpec& job) {
  std::array<std::vector<double>, 3> values;
  bool any_range = false;
  for (int i = 0; i < 3; ++i) {
    const Axis& a = job.axes[i];
    if (a.range) {
      any_range = true;
      if (job.steps <= 0) throw InputError("steps", "must be a positive count");
      for (int k = 0; k < job.steps; ++k) values[i].push_back(a.lo + k * (a.hi - a.lo) / job.steps);
    } else {
      values[i].push_back(a.lo);
    }
  }
  if (!any_range) throw InputError("T1-range", "a sweep needs at least one --Ti-range");
  std::vector<Vec3> pts;
  for (double t1 : values[0])
    for (double t2 : values[1])
      for (double t3 : values[2]) pts.push_back({t1, t2, t3});
  return pts;
}

inline int run_sweep(const JobSpec& job, Writer& w) {
  const UnimodularGroup group(*job.group);
  const std::vector<Vec3> pts = sweep_points(job);
  std::vector<SolveOutcome> results(pts.size());
  std::vector<char> certified(pts.size(), 1);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const DiagonalTensor t(pts[i]);
      results[i] = solve(group, t, job.solver);
      certified[i] = certify_outcome(group, t, results[i]) ? 1 : 0;
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, job.threads));
  if (workers == 1) {
    work(0, pts.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pts.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < pts.size(); b += chunk)
      pool.emplace_back(work, b, std::min(pts.size(), b + chunk));
  }

  std::map<std::string, std::map<std::string, std::size_t>> histogram;
  bool all = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string label(case_label_name(results[i].case_label));
    const std::string kind(outcome_kind_name(results[i].kind));
    ++histogram[label][kind];
    all = all && certified[i];
    Json j;
    j["command"] = "sweep";
    j["index"] = i;
    j["T"] = json_vec(pts[i]);
    j["kind"] = kind;
    j["case_label"] = label;
    const auto cs = results[i].c_values();
    j["c"] = cs;
    w.record(j);
  }
  Json summary;
  summary["command"] = "sweep-summary";
  summary["group"] = std::string(group_id(group.name));
  summary["points"] = pts.size();
  Json hist;
  for (const auto& [label, kinds] : histogram) {
    Json k;
    for (const auto& [kind, count] : kinds) k[kind] = count;
    hist[label] = k;
  }
  summary["histogram"] = hist;
  summary["certified"] = all;
  w.record(summary);
  return all ? kExitOk : kExitCertification;
}

inline int run_oracle_ricci(const JobSpec& job, Writer& w) {
  const UnimodularGroup group(*job.group);
  Mat3 g{};
  if (job.metric_full) {
    g = symmetric_from_upper(*job.metric_full);
  } else if (job.metric) {
    g = diag3(*job.metric);
  } else {
    throw InputError("v", "missing (give --v v1,v2,v3 or --g with six upper-triangle entries)");
  }
  Mat3 ric{};
  try {
    ric = ricci_koszul(structure_constants(group), g);
  } catch (const InvalidMetric& e) {
    throw InputError(job.metric_full ? "g" : "v", e.what());
  }
  Json j;
  j["command"] = "oracle-ricci";
  j["group"] = std::string(group_id(group.name));
  j["g"] = json_mat(g);
  j["ricci"] = json_mat(ric);
  if (!job.metric_full) j["ricci_closed_form"] = json_vec(ricci_diagonal(group, DiagonalMetric(*job.metric)));
  w.record(j);
  return kExitOk;
}

inline int run_probe(const JobSpec& job, Writer& w) {
  const UnimodularGroup group(*job.group);
  const DiagonalTensor tensor = require_tensor(job);
  std::mt19937_64 rng(job.seed);
  ProbeConfig cfg;
  cfg.solver = job.solver;
  ProbeReport report;
  try {
    report = probe(group, tensor, job.samples, rng, cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError("T", e.what());
  }
  Json j;
  j["command"] = "probe";
  j["group"] = std::string(group_id(group.name));
  j["T"] = json_vec(tensor.t);
  j["seed"] = job.seed;
  j["samples"] = report.samples;
  j["c_determined"] = report.c_determined;
  j["metric_checked"] = report.metric_checked;
  j["c_spread"] = report.c_spread;
  j["metric_mismatch"] = report.metric_mismatch;
  j["metric_match"] = report.metric_match;
  j["violations"] = report.violations.size();
  w.record(j);
  return kExitOk;
}

inline int dispatch(const JobSpec& job, Writer& w) {
  if (!job.group) throw InputError("group", "missing");
  if (job.command == "solve" || job.command == "classify") return run_solve_like(job, w);
  if (job.command == "certify") return run_certify(job, w);
  if (job.command == "sweep") return run_sweep(job, w);
  if (job.command == "oracle-ricci") return run_oracle_ricci(job, w);
  if (job.command == "probe") return run_probe(job, w);
  throw InputError("command", "unknown command '" + job.command + "'");
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prescribed Ricci curvature on three-dimensional unimodular Lie groups", "ricci3"};
  app.require_subcommand(1);

  struct Raw {
    std::string group, T, T_full, v, g, T1, T2, T3, T1r, T2r, T3r, out, input;
    std::string format = "text";
    std::optional<double> c, tol, root_tol;
    int steps = 0;
    int threads = 1;
    std::size_t samples = 16;
    std::uint64_t seed = 0;
  } raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("group,--group", raw.group, "so3, sl2, e2, e11, h3 or r3");
    sub->add_option("--tol", raw.tol, "relative zero tolerance for sign decisions");
    sub->add_option("--root-tol", raw.root_tol, "root polishing tolerance");
    sub->add_option("--seed", raw.seed, "random seed");
    sub->add_option("--out", raw.out, "write the report to PATH");
    sub->add_option("--format", raw.format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--input", raw.input, "JSON-lines file, one job per line");
  };
  auto with_tensor = [&](CLI::App* sub) {
    sub->add_option("--T", raw.T, "diagonal components T1,T2,T3");
    sub->add_option("--T-full", raw.T_full, "so3 only: T11,T12,T13,T22,T23,T33");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve Ric(g) = cT");
  CLI::App* classify_cmd = app.add_subcommand("classify", "report the matching existence-table row");
  CLI::App* certify_cmd = app.add_subcommand("certify", "check a claimed solution");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "solve on a parameter grid");
  CLI::App* oracle_cmd = app.add_subcommand("oracle-ricci", "Ricci tensor of a metric from structure constants");
  CLI::App* probe_cmd = app.add_subcommand("probe", "re-solve in frames that keep T diagonal");
  for (CLI::App* sub : {solve_cmd, classify_cmd, certify_cmd, sweep_cmd, oracle_cmd, probe_cmd}) common(sub);
  for (CLI::App* sub : {solve_cmd, classify_cmd, certify_cmd, probe_cmd}) with_tensor(sub);
  certify_cmd->add_option("--v", raw.v, "metric components v1,v2,v3");
  certify_cmd->add_option("--c", raw.c, "constant c > 0");
  oracle_cmd->add_option("--v", raw.v, "diagonal metric v1,v2,v3");
  oracle_cmd->add_option("--g", raw.g, "full metric g11,g12,g13,g22,g23,g33");
  sweep_cmd->add_option("--T1", raw.T1, "fixed T1");
  sweep_cmd->add_option("--T2", raw.T2, "fixed T2");
  sweep_cmd->add_option("--T3", raw.T3, "fixed T3");
  sweep_cmd->add_option("--T1-range", raw.T1r, "lo..hi");
  sweep_cmd->add_option("--T2-range", raw.T2r, "lo..hi");
  sweep_cmd->add_option("--T3-range", raw.T3r, "lo..hi");
  sweep_cmd->add_option("--steps", raw.steps, "grid points per range");
  sweep_cmd->add_option("--threads", raw.threads, "worker threads");
  probe_cmd->add_option("--samples", raw.samples, "number of frame changes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  std::ofstream file;
  if (!raw.out.empty()) {
    file.open(raw.out);
    if (!file) {
      err << "out: cannot open '" << raw.out << "' for writing\n";
      return kExitMalformed;
    }
  }
  Writer writer(raw.out.empty() ? out : file, raw.format == "json-lines" ? Format::JsonLines : Format::Text);

  try {
    auto apply_common = [&](JobSpec& job) {
      if (raw.tol) job.solver.zero_tol = *raw.tol;
      if (raw.root_tol) job.solver.root_tol = *raw.root_tol;
    };

    if (!raw.input.empty()) {
      std::ifstream in(raw.input);
      if (!in) throw InputError("input", "cannot open '" + raw.input + "'");
      std::string line;
      int status = kExitOk;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j;
        try {
          j = Json::parse(line);
        } catch (const Json::parse_error&) {
          throw InputError("input line " + std::to_string(lineno), "not valid JSON");
        }
        JobSpec job = job_from_json(j, command);
        if (!raw.group.empty() && !j.contains("group")) job.group = parse_group_or_throw(raw.group, "group");
        apply_common(job);
        if (raw.seed && !j.contains("seed")) job.seed = raw.seed;
        status = std::max(status, dispatch(job, writer));
      }
      return status;
    }

    JobSpec job;
    job.command = command;
    if (raw.group.empty()) throw InputError("group", "missing (so3, sl2, e2, e11, h3, r3)");
    job.group = parse_group_or_throw(raw.group, "group");
    if (!raw.T.empty()) job.tensor = parse_list<3>(raw.T, "T");
    if (!raw.T_full.empty()) job.tensor_full = parse_list<6>(raw.T_full, "T-full");
    if (!raw.v.empty()) job.metric = parse_list<3>(raw.v, "v");
    if (!raw.g.empty()) job.metric_full = parse_list<6>(raw.g, "g");
    job.c = raw.c;
    const std::array<const std::string*, 3> fixed{&raw.T1, &raw.T2, &raw.T3};
    const std::array<const std::string*, 3> ranges{&raw.T1r, &raw.T2r, &raw.T3r};
    for (int i = 0; i < 3; ++i) {
      const std::string name = "T" + std::to_string(i + 1);
      if (!ranges[i]->empty()) {
        if (!fixed[i]->empty()) throw InputError(name, "give either --" + name + " or --" + name + "-range");
        job.axes[i] = parse_range(*ranges[i], name + "-range");
      } else if (command == "sweep") {
        if (fixed[i]->empty()) throw InputError(name, "missing (fixed value or range)");
        job.axes[i] = Axis{parse_number(*fixed[i], name), 0.0, false};
      }
    }
    job.steps = raw.steps;
    job.threads = raw.threads;
    job.samples = raw.samples;
    job.seed = raw.seed;
    apply_common(job);
    return dispatch(job, writer);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
}

}  // namespace ricci3::cli
