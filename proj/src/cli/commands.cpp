#include "rvd/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rvd/bounds_audit.hpp"
#include "rvd/characterizations.hpp"
#include "rvd/connectivity.hpp"
#include "rvd/corpus.hpp"
#include "rvd/error.hpp"
#include "rvd/parallel.hpp"
#include "rvd/random_lab.hpp"
#include "rvd/solver.hpp"

#ifndef RVD_VERSION
#define RVD_VERSION "0.0.0"
#endif

namespace rvd::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct InputLine {
  int number = 0;  // 1-based physical line
  std::string text;
};

struct Input {
  std::string bytes;
  std::vector<InputLine> lines;  // non-blank lines only
};

Input read_input(const std::string& path, std::istream& in) {
  Input input;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    input.bytes = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    input.bytes = ss.str();
  }
  std::istringstream ss(input.bytes);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    input.lines.push_back({number, line});
  }
  return input;
}

// Owns the output file when --out is given, otherwise forwards to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary);
      if (!file_) throw UsageError("cannot write output file: " + path_);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

struct Manifest {
  json doc;

  Manifest(const std::string& command, std::string start) {
    doc["command"] = command;
    doc["flags"] = json::object();
    doc["input_digest"] = nullptr;
    doc["version"] = RVD_VERSION;
    doc["start"] = std::move(start);
    doc["end"] = nullptr;
    doc["seed"] = nullptr;
  }

  void emit(const Sink& sink, std::ostream& err) {
    doc["end"] = utc_now();
    if (sink.path().empty()) {
      err << "manifest " << doc.dump() << '\n';
      return;
    }
    std::ofstream f(sink.path() + ".manifest.json", std::ios::binary);
    f << doc.dump(2) << '\n';
  }
};

json error_object(const char* kind, const InputLine& line, const std::string& message) {
  json e;
  e["error"] = kind;
  e["line"] = line.number;
  e["message"] = message;
  return e;
}

json parse_error_object(const InputLine& line, const ParseError& e) {
  json o;
  o["error"] = "graph6 parse";
  o["line"] = line.number;
  o["offset"] = e.offset();
  o["message"] = e.what();
  return o;
}

// ---------------------------------------------------------------- compute

struct ComputeFlags {
  std::string in = "-";
  std::string out;
  std::string mode = "fast";
  int cap = 10;
  bool no_timing = false;
};

int cmd_compute(const ComputeFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  Manifest manifest("compute", utc_now());
  const Input input = read_input(f.in, in);
  manifest.doc["flags"] = {{"in", f.in}, {"out", f.out}, {"mode", f.mode}, {"cap", f.cap},
                           {"no_timing", f.no_timing}};
  manifest.doc["input_digest"] = "fnv1a64:" + hex64(fnv1a(input.bytes));
  Sink sink(f.out, out);

  SolverOptions options;
  options.exact_cap = f.cap;
  options.collect_certificates = false;

  std::vector<std::string> rows(input.lines.size());
  std::vector<char> failed(input.lines.size(), 0);
  parallel_for(input.lines.size(), [&](std::size_t i) {
    const InputLine& line = input.lines[i];
    json o;
    try {
      const Graph g = parse_graph6(line.text);
      const RvdReport r = f.mode == "exact" ? rvd_exact(g, options) : rvd_fast(g, options);
      o["graph6"] = encode_graph6(g);
      o["n"] = g.order();
      o["m"] = g.size();
      o["rvd"] = r.rvd ? json(*r.rvd) : json(nullptr);
      o["lower"] = r.lower.value;
      o["upper"] = r.upper.value;
      o["lower_rule"] = r.lower.rule;
      o["upper_rule"] = r.upper.rule;
      o["method"] = method_name(r.method);
      if (r.rvd) {
        json colors = json::array();
        for (Color c : r.optimal_coloring.colors()) colors.push_back(c);
        o["coloring"] = std::move(colors);
      } else {
        o["coloring"] = nullptr;
      }
      if (f.no_timing)
        o["elapsed_ms"] = nullptr;
      else
        o["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    } catch (const ParseError& e) {
      o = parse_error_object(line, e);
      failed[i] = 1;
    } catch (const CapExceeded& e) {
      o = error_object("cap exceeded", line, e.what());
      failed[i] = 1;
    } catch (const DomainError& e) {
      o = error_object("domain", line, e.what());
      failed[i] = 1;
    }
    rows[i] = o.dump();
  });

  for (const auto& row : rows) sink.stream() << row << '\n';
  const auto errors = std::count(failed.begin(), failed.end(), 1);
  err << "compute: " << rows.size() << " graphs, " << errors << " errors\n";
  manifest.emit(sink, err);
  return errors ? kDataError : kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyFlags {
  std::string graph;
  std::string coloring;
};

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = parse_graph6(f.graph);
  } catch (const ParseError& e) {
    err << "verify: graph6 parse error: " << e.what() << '\n';
    return kDataError;
  }
  VertexColoring c;
  try {
    c = VertexColoring::parse(f.coloring);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--coloring: ") + e.what());
  }
  if (c.order() != g.order())
    throw UsageError("--coloring has " + std::to_string(c.order()) + " entries but the graph has " +
                     std::to_string(g.order()) + " vertices");
  RvdCheck check;
  try {
    check = is_rvd_coloring(g, c, true);
  } catch (const DomainError& e) {
    err << "verify: " << e.what() << '\n';
    return kDataError;
  }
  if (!check.valid) {
    const auto [x, y] = check.failing_pair.value_or(Edge{0, 0});
    out << "INVALID " << x << ' ' << y << ' ' << (g.adjacent(x, y) ? "adjacent" : "nonadjacent")
        << '\n';
    return kAuditFailure;
  }
  out << "VALID\n";
  for (const auto& cert : check.certificates) {
    out << cert.x << ' ' << cert.y << ' ' << (g.adjacent(cert.x, cert.y) ? "adjacent" : "nonadjacent")
        << " cut={" << join(cert.cut) << '}';
    if (cert.side_witness) out << " witness=" << *cert.side_witness;
    out << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------ audit

struct AuditFlags {
  std::string in = "-";
  std::string out;
  std::string checks = "all";
  int cap = 10;
};

struct AuditRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::string k;
  std::string name;
  std::string value;
  std::string observed;
  std::string status;  // PASS, FAIL, SKIPPED, INFO, ERROR
};

std::string csv_line(const AuditRow& r) {
  return r.graph6 + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + r.k + ',' +
         r.name + ',' + r.value + ',' + r.observed + ',' + r.status;
}

struct GraphAudit {
  std::vector<AuditRow> rows;
  bool parse_error = false;
};

GraphAudit audit_graph(const InputLine& line, const std::string& checks, const SolverOptions& options) {
  GraphAudit result;
  Graph g;
  try {
    g = parse_graph6(line.text);
  } catch (const ParseError& e) {
    result.parse_error = true;
    AuditRow row;
    row.name = "parse";
    row.observed = "line " + std::to_string(line.number) + " offset " + std::to_string(e.offset());
    row.status = "ERROR";
    result.rows.push_back(row);
    return result;
  }
  const bool all = checks == "all";
  const bool want_chain = all || checks == "chain";
  const bool want_charact = all || checks == "charact";
  const bool want_sizes = all || checks == "sizes";
  const bool want_ng = all || checks == "ng";

  AuditRow base;
  base.graph6 = encode_graph6(g);
  base.n = g.order();
  base.m = g.size();

  auto skip = [&](const std::string& group, const std::string& reason) {
    AuditRow row = base;
    row.name = group;
    row.observed = reason;
    row.status = "SKIPPED";
    result.rows.push_back(row);
  };
  auto add = [&](const BoundCheck& c) {
    AuditRow row = base;
    row.name = c.name;
    row.value = to_string(c.value);
    row.observed = to_string(c.observed);
    row.status = c.pass ? "PASS" : "FAIL";
    result.rows.push_back(row);
  };
  auto skip_all = [&](const std::string& reason) {
    if (want_chain) skip("chain", reason);
    if (want_charact) skip("charact", reason);
    if (want_sizes) skip("sizes", reason);
    if (want_ng) skip("ng", reason);
  };

  const int n = g.order();
  if (n < 2) {
    skip_all("trivial graph");
    return result;
  }
  if (!is_connected(g)) {
    skip_all("graph disconnected");
    return result;
  }

  RvdReport report;
  if (n <= options.exact_cap) {
    report = rvd_exact(g, options);
  } else {
    report = rvd_fast(g, options);
  }
  if (!report.rvd) {
    if (want_chain) skip("chain", "rvd unknown above exact cap");
    if (want_charact) skip("charact", "rvd unknown above exact cap");
    if (want_sizes) skip("sizes", "rvd unknown above exact cap");
  }
  const int k = report.rvd.value_or(0);
  if (report.rvd) base.k = std::to_string(k);

  if (want_chain && report.rvd) {
    const int delta = g.min_degree();
    const int big = g.max_degree();
    const int kplus = upper_connectivity(g);
    const int chi = injective_chromatic_number(g);
    const int clique = max_clique_size(conflict_graph(g));
    add(make_check("chain.kplus_ge_min_degree", BoundSense::kLower, delta, kplus));
    add(make_check("chain.rvd_ge_kplus", BoundSense::kLower, kplus, k));
    add(make_check("chain.rvd_ge_conflict_clique", BoundSense::kLower, clique, k));
    add(make_check("chain.rvd_le_injective", BoundSense::kUpper, chi, k));
    add(make_check("chain.injective_le_degree_bound", BoundSense::kUpper,
                   static_cast<long long>(big) * (big - 1) + 1, chi));
  }
  if (want_charact && report.rvd) {
    const struct {
      const char* name;
      bool predicate;
      int value;
    } rows[] = {
        {"charact.rvd_is_1", check_rvd_is_1(g), 1},
        {"charact.rvd_is_2", check_rvd_is_2(g), 2},
        {"charact.rvd_is_n_minus_1", check_rvd_is_n_minus_1(g).holds, n - 1},
        {"charact.rvd_is_n", check_rvd_is_n(g), n},
    };
    for (const auto& r : rows)
      add(make_check(r.name, BoundSense::kEqual, r.predicate ? 1 : 0, k == r.value ? 1 : 0));
  }
  if (want_sizes && report.rvd) {
    for (const auto& c : size_audit(g, k).checks) add(c);
    for (const auto& c : degree_sum_audit(g, report.optimal_coloring).checks) add(c);
  }
  if (want_ng) {
    const NgRecord rec = ng_audit(g, options);
    if (rec.skipped) {
      skip("ng", rec.skip_reason);
    } else {
      for (const auto& c : rec.checks) add(c);
      if (rec.conjecture_holds) {
        AuditRow row = base;
        row.name = "ng.conjecture_sum_ge_n";
        row.value = std::to_string(n);
        row.observed = std::to_string(rec.sum);
        row.status = "INFO";
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

int cmd_audit(const AuditFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  Manifest manifest("audit", utc_now());
  const Input input = read_input(f.in, in);
  manifest.doc["flags"] = {{"in", f.in}, {"out", f.out}, {"checks", f.checks}, {"cap", f.cap}};
  manifest.doc["input_digest"] = "fnv1a64:" + hex64(fnv1a(input.bytes));
  Sink sink(f.out, out);

  SolverOptions options;
  options.exact_cap = f.cap;
  options.collect_certificates = false;

  std::vector<GraphAudit> audits(input.lines.size());
  parallel_for(input.lines.size(),
               [&](std::size_t i) { audits[i] = audit_graph(input.lines[i], f.checks, options); });

  std::ostream& os = sink.stream();
  os << "graph6,n,m,k,bound_name,bound_value,observed,pass\n";
  long pass = 0, fail = 0, skipped = 0, info = 0, errors = 0;
  for (const auto& a : audits) {
    for (const auto& row : a.rows) {
      os << csv_line(row) << '\n';
      if (row.status == "PASS") ++pass;
      if (row.status == "FAIL") ++fail;
      if (row.status == "SKIPPED") ++skipped;
      if (row.status == "INFO") ++info;
      if (row.status == "ERROR") ++errors;
    }
  }
  err << "audit: " << audits.size() << " graphs, " << pass << " pass, " << fail << " fail, "
      << skipped << " skipped, " << info << " info, " << errors << " errors\n";
  manifest.emit(sink, err);
  if (fail) return kAuditFailure;
  return errors ? kDataError : kOk;
}

// ------------------------------------------------------------------ sweep

struct SweepFlags {
  int n = 0;
  std::string c;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string criterion = "rvd-n";
  std::string out;
};

std::vector<double> parse_c_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    double v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size())
      throw UsageError("--c: not a number: '" + item + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

int cmd_sweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
  Manifest manifest("sweep", utc_now());
  SweepConfig config;
  config.n = f.n;
  config.c_values = parse_c_list(f.c);
  config.trials = f.trials;
  config.seed = f.seed;
  config.criterion = f.criterion == "both" ? Criterion::kBothGAndComplement : Criterion::kRvdEqN;
  try {
    validate(config);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  manifest.doc["flags"] = {{"n", f.n}, {"c", f.c}, {"trials", f.trials}, {"seed", f.seed},
                           {"criterion", f.criterion}, {"out", f.out}};
  manifest.doc["seed"] = f.seed;
  Sink sink(f.out, out);

  const auto points = threshold_sweep(config);
  std::ostream& os = sink.stream();
  os << "n,c,p,trials,successes,fraction,seed\n";
  for (const auto& p : points)
    os << config.n << ',' << shortest(p.c) << ',' << shortest(p.p) << ',' << p.trials << ','
       << p.successes << ',' << shortest(p.fraction()) << ',' << config.seed << '\n';
  err << "sweep: " << points.size() << " points\n";
  manifest.emit(sink, err);
  return kOk;
}

// --------------------------------------------------------------- extremal

struct ExtremalFlags {
  std::string family;
  int n = 0;
};

int cmd_extremal(const ExtremalFlags& f, std::ostream& out, std::ostream& err) {
  const int n = f.n;
  json v;
  v["family"] = f.family;
  v["n"] = n;
  bool pass = true;
  SolverOptions options;
  options.collect_certificates = false;
  if (f.family == "n1max") {
    if (n < 3) throw UsageError("n1max requires n >= 3");
    const Graph g = build_extremal_n_minus_1(n);
    const RvdReport r = rvd_fast(g, options);
    out << encode_graph6(g) << '\n';
    v["m"] = g.size();
    v["expected_m"] = max_size_rvd_n_minus_1(n);
    v["rvd"] = r.rvd ? json(*r.rvd) : json(nullptr);
    v["expected_rvd"] = n - 1;
    v["method"] = method_name(r.method);
    pass = r.rvd == n - 1 && g.size() == max_size_rvd_n_minus_1(n);
  } else if (f.family == "ng") {
    if (n < 12) throw UsageError("ng requires n = 4k + t with k >= 3 (n >= 12)");
    const Graph g = build_ng_extremal(n);
    const Graph gc = complement(g);
    out << encode_graph6(g) << '\n';
    v["m"] = g.size();
    v["connected"] = is_connected(g);
    v["complement_connected"] = is_connected(gc);
    v["criterion_g"] = criterion_rvd_n(g);
    v["criterion_complement"] = criterion_rvd_n(gc);
    v["rvd"] = v["criterion_g"].get<bool>() ? json(n) : json(nullptr);
    v["complement_rvd"] = v["criterion_complement"].get<bool>() ? json(n) : json(nullptr);
    pass = v["criterion_g"].get<bool>() && v["criterion_complement"].get<bool>();
  } else if (f.family == "tree-complement") {
    if (n < 4) throw UsageError("tree-complement requires n >= 4");
    const Graph g = tree_complement_extremal(n);
    const Graph gc = complement(g);
    out << encode_graph6(g) << '\n';
    v["m"] = g.size();
    v["tree"] = check_rvd_is_1(g);
    v["rvd"] = 1;
    std::optional<int> crvd;
    if (is_connected(gc)) crvd = rvd_fast(gc, options).rvd;
    v["complement_rvd"] = crvd ? json(*crvd) : json(nullptr);
    if (n >= 8) {
      v["expected_complement_rvd"] = n - 1;
      pass = crvd == n - 1;
    }
    pass = pass && v["tree"].get<bool>();
  } else {
    throw UsageError("--family must be one of n1max, ng, tree-complement");
  }
  v["pass"] = pass;
  out << v.dump() << '\n';
  if (!pass) err << "extremal: verification failed\n";
  return pass ? kOk : kAuditFailure;
}

// ----------------------------------------------------------------- corpus

int cmd_corpus(int n, bool connected, std::ostream& out) {
  if (n < 1 || n > 8) throw UsageError("corpus requires 1 <= n <= 8");
  for (const Graph& g : enumerate_graphs(n, connected)) out << encode_graph6(g) << '\n';
  return kOk;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rainbow vertex-disconnection number: compute, verify and audit"};
  app.set_version_flag("--version", std::string(RVD_VERSION));
  app.require_subcommand(1);

  ComputeFlags compute;
  auto* c = app.add_subcommand("compute", "rvd for each graph6 line (JSONL)");
  c->add_option("--in", compute.in, "graph6 file, or - for stdin")->capture_default_str();
  c->add_option("--out", compute.out, "output file (manifest goes next to it)");
  c->add_option("--mode", compute.mode)->check(CLI::IsMember({"fast", "exact"}))->capture_default_str();
  c->add_option("--cap", compute.cap, "largest order for exact search")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  c->add_flag("--no-timing", compute.no_timing, "emit elapsed_ms as null");

  VerifyFlags verify;
  auto* v = app.add_subcommand("verify", "check that a coloring is an rvd-coloring");
  v->add_option("--graph", verify.graph, "graph6 string")->required();
  v->add_option("--coloring", verify.coloring, "comma-separated colors, e.g. 1,2,1,2")->required();

  AuditFlags audit;
  auto* a = app.add_subcommand("audit", "bound and characterization audit (CSV)");
  a->add_option("--in", audit.in, "graph6 corpus, or - for stdin")->capture_default_str();
  a->add_option("--out", audit.out, "output file");
  a->add_option("--checks", audit.checks)
      ->check(CLI::IsMember({"all", "chain", "charact", "sizes", "ng"}))
      ->capture_default_str();
  a->add_option("--cap", audit.cap, "largest order for exact search")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();

  SweepFlags sweep;
  auto* s = app.add_subcommand("sweep", "G(n, p) threshold sweep (CSV)");
  s->add_option("--n", sweep.n)->required();
  s->add_option("--c", sweep.c, "comma-separated ascending multipliers")->required();
  s->add_option("--trials", sweep.trials)->required();
  s->add_option("--seed", sweep.seed)->capture_default_str();
  s->add_option("--criterion", sweep.criterion)
      ->check(CLI::IsMember({"rvd-n", "both"}))
      ->capture_default_str();
  s->add_option("--out", sweep.out, "output file");

  ExtremalFlags extremal;
  auto* e = app.add_subcommand("extremal", "extremal constructions with verification");
  e->add_option("--family", extremal.family)
      ->required()
      ->check(CLI::IsMember({"n1max", "ng", "tree-complement"}));
  e->add_option("--n", extremal.n)->required();

  int corpus_n = 0;
  bool corpus_connected = false;
  auto* k = app.add_subcommand("corpus", "all graphs of one order up to isomorphism (graph6)");
  k->add_option("--n", corpus_n)->required();
  k->add_flag("--connected", corpus_connected, "connected graphs only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return cmd_compute(compute, in, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*a) return cmd_audit(audit, in, out, err);
    if (*s) return cmd_sweep(sweep, out, err);
    if (*e) return cmd_extremal(extremal, out, err);
    if (*k) return cmd_corpus(corpus_n, corpus_connected, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace rvd::cli
