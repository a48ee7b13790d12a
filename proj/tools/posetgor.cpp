// posetgor: command-line front end. Every command prints one JSON report.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posetgor/error.hpp"
#include "posetgor/io.hpp"
#include "posetgor/locus.hpp"
#include "posetgor/oracle.hpp"
#include "posetgor/trace.hpp"

using namespace posetgor;

namespace {

constexpr const char* kSchema = "posetgor.report/1";

struct Options {
  bool pretty = false;
  bool timing = false;
  unsigned jobs = 1;
};

struct Input {
  std::string poset_path;
  std::string point_path;
  std::string ring = "chain";
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ring parse_ring(const std::string& s) {
  if (s == "order") return Ring::Order;
  if (s == "chain") return Ring::Chain;
  throw Error(ErrorKind::ParseError, "unknown ring '" + s + "'");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotInS0:
    case ErrorKind::NotInT0:
      return 3;
    case ErrorKind::OutOfRange:
    case ErrorKind::BoxTooLarge:
      return 4;
    case ErrorKind::InternalInvariant:
    case ErrorKind::NotMember:
    case ErrorKind::NotInG:
    case ErrorKind::PreconditionViolated:
      return 5;
    default:
      return 2;
  }
}

// Plain-text rendering for --pretty: one "path  value" row per leaf.
void render(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_structured();
    if (flat) {
      std::string row;
      for (const auto& v : j) row += (row.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
      out << path << "  [" << row << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

class Reporter {
public:
  Reporter(const Options& o, std::string name) : opt_(o), start_(std::chrono::steady_clock::now()) {
    report_["schema"] = kSchema;
    report_["command"] = {{"name", std::move(name)}, {"args", Json::object()}};
  }

  Json& args() { return report_["command"]["args"]; }
  void digest(const std::string& bytes) { report_["input_digest"] = fnv1a64_hex(bytes); }
  Json& result() { return report_["result"]; }

  void error(const Error& e) {
    report_.erase("result");
    report_["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  }

  void emit() {
    if (opt_.timing) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
      report_["timing_ms"] = static_cast<double>(us.count()) / 1000.0;
    }
    if (opt_.pretty)
      render(report_, "", std::cout);
    else
      std::cout << report_.dump(2) << "\n";
  }

private:
  const Options& opt_;
  Json report_;
  std::chrono::steady_clock::time_point start_;
};

template <class F>
int run(Reporter& r, F&& body) {
  int code = 0;
  try {
    code = body();
  } catch (const Error& e) {
    r.error(e);
    std::cerr << "posetgor: " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const std::exception& e) {
    r.error(Error(ErrorKind::InternalInvariant, e.what()));
    std::cerr << "posetgor: " << e.what() << "\n";
    code = 5;
  }
  r.emit();
  return code;
}

Poset read_poset(Reporter& r, const std::string& path, std::string& bytes) {
  bytes = slurp(path);
  r.args()["poset"] = path;
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
  auto built = parse_poset(j);
  if (!built.reduced_covers.empty()) {
    Json red = Json::array();
    for (const auto& [x, y] : built.reduced_covers) red.push_back({x, y});
    r.result()["reduced_covers"] = red;
  }
  return std::move(built.poset);
}

LatticePoint read_point(Reporter& r, const Poset& p, const std::string& path, std::string& bytes) {
  const std::string raw = slurp(path);
  bytes += raw;
  r.args()["point"] = path;
  Json j;
  try {
    j = Json::parse(raw);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
  }
  return parse_point(j, p);
}

int cmd_classify(const Options& o, const Input& in) {
  Reporter r(o, "classify");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    r.digest(bytes);
    const auto c = classify(p);
    auto& res = r.result();
    res["gorenstein"] = c.gorenstein;
    res["punctured_gorenstein"] = c.punctured_gorenstein;
    res["nearly_gorenstein"] = c.nearly_gorenstein;
    res["component_ranks"] = c.component_ranks;
    return 0;
  });
}

int cmd_member(const Options& o, const Input& in, bool want_certificate) {
  Reporter r(o, "member");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    const LatticePoint pt = read_point(r, p, in.point_path, bytes);
    r.digest(bytes);
    const Ring ring = parse_ring(in.ring);
    r.args()["ring"] = in.ring;
    r.args()["certificate"] = want_certificate;
    auto& res = r.result();
    if (ring == Ring::Chain) {
      const auto v = chain_member(p, pt);
      res["member"] = v.member;
      if (v.witness) res["witness"] = chain_witness_to_json(p, *v.witness);
    } else {
      const auto v = order_member(p, pt);
      res["member"] = v.member;
      if (v.witness) res["witness"] = order_witness_to_json(extend(p, ExtendMode::Both), *v.witness);
    }
    if (want_certificate && res["member"].get<bool>()) {
      const Certificate c = ring == Ring::Chain ? chain_certificate(p, pt) : order_certificate(p, pt);
      res["certificate"] = certificate_to_json(p, c);
      res["certificate"]["verified"] = verify_certificate(p, pt, c);
    }
    return 0;
  });
}

Json locus_block(const Poset& p, Ring ring, bool decompose) {
  Json j;
  j["dimension"] = ring == Ring::Order ? order_locus_dimension(p) : chain_locus_dimension(p);
  if (decompose) {
    const auto labels = ring == Ring::Order ? order_radical_decomposition(p) : chain_radical_decomposition(p);
    j["labels"] = Json::array();
    for (const auto& l : labels) j["labels"].push_back(label_to_json(p, l));
  }
  return j;
}

int cmd_locus(const Options& o, const Input& in, const std::string& which, bool decompose) {
  Reporter r(o, "locus");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    r.digest(bytes);
    r.args()["ring"] = which;
    r.args()["decompose"] = decompose;
    auto& res = r.result();
    res["ring_dimension"] = p.size() + 1;
    if (which == "order" || which == "both") res["order"] = locus_block(p, Ring::Order, decompose);
    if (which == "chain" || which == "both") res["chain"] = locus_block(p, Ring::Chain, decompose);
    if (which != "order" && which != "chain" && which != "both")
      throw Error(ErrorKind::ParseError, "unknown ring '" + which + "'");
    return 0;
  });
}

int cmd_generate(const Options& o, int n, int m, const std::string& out_path) {
  Reporter r(o, "generate");
  return run(r, [&] {
    r.args()["ring_dim"] = n;
    r.args()["locus_dim"] = m;
    if (!out_path.empty()) r.args()["output"] = out_path;
    r.digest("");
    const Poset p = generate_poset(n, m);
    const Json pj = poset_to_json(p);
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
      f << pj.dump(2) << "\n";
    }
    auto& res = r.result();
    res["poset"] = pj;
    res["ring_dimension"] = p.size() + 1;
    const int od = order_locus_dimension(p), cd = chain_locus_dimension(p);
    res["order_locus_dimension"] = od;
    res["chain_locus_dimension"] = cd;
    const bool ok = od == m && cd == m && static_cast<int>(p.size()) + 1 == n;
    res["verified"] = ok;
    if (!ok) throw Error(ErrorKind::InternalInvariant, "generated poset fails its self-check");
    return 0;
  });
}

int cmd_hilbert(const Options& o, const Input& in, std::int64_t d_max) {
  Reporter r(o, "oracle hilbert");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    r.digest(bytes);
    r.args()["dmax"] = d_max;
    if (d_max < 0) throw Error(ErrorKind::OutOfRange, "--dmax must be nonnegative");
    Json counts = Json::array();
    bool equal = true;
    for (std::int64_t d = 0; d <= d_max; ++d) {
      const auto a = count_points(p, Ring::Order, d), b = count_points(p, Ring::Chain, d);
      counts.push_back({{"degree", d}, {"order", a}, {"chain", b}});
      equal = equal && a == b;
    }
    r.result()["equal"] = equal;
    r.result()["counts"] = counts;
    return 0;
  });
}

int cmd_lp_member(const Options& o, const Input& in) {
  Reporter r(o, "oracle lp-member");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    const LatticePoint pt = read_point(r, p, in.point_path, bytes);
    r.digest(bytes);
    r.args()["ring"] = in.ring;
    r.result()["member"] = lp_member(p, pt, parse_ring(in.ring));
    return 0;
  });
}

int cmd_search(const Options& o, const Input& in, std::int64_t n_max, std::int64_t box, std::int64_t timeout_ms) {
  Reporter r(o, "oracle search");
  return run(r, [&] {
    std::string bytes;
    const Poset p = read_poset(r, in.poset_path, bytes);
    const LatticePoint pt = read_point(r, p, in.point_path, bytes);
    r.digest(bytes);
    r.args()["ring"] = in.ring;
    r.args()["nmax"] = n_max;
    r.args()["box"] = box;
    Deadline dl;
    if (timeout_ms > 0) {
      r.args()["timeout_ms"] = timeout_ms;
      dl = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    }
    const auto outcome = bounded_search_certificate(p, pt, parse_ring(in.ring), n_max, box, dl);
    auto& res = r.result();
    switch (outcome.status) {
      case SearchOutcome::Status::Found: res["status"] = "found"; break;
      case SearchOutcome::Status::Exhausted: res["status"] = "exhausted"; break;
      case SearchOutcome::Status::TimedOut: res["status"] = "timed_out"; break;
    }
    if (outcome.certificate) res["certificate"] = certificate_to_json(p, *outcome.certificate);
    // node counts depend on the deadline only when one is set
    if (timeout_ms <= 0) res["nodes"] = outcome.nodes;
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein properties of order and chain polytope rings of finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Plain-text table instead of JSON");
  app.add_flag("--timing", opt.timing, "Add wall-clock time to the report");
  app.add_option("--jobs", opt.jobs, "Worker cap (computation is single-threaded)")->check(CLI::PositiveNumber);

  Input in;
  bool certificate = false, decompose = false;
  std::string locus_ring = "both", out_path;
  int ring_dim = 0, locus_dim = 0;
  std::int64_t d_max = 3, n_max = 3, box = 5, timeout_ms = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Gorenstein, punctured and nearly Gorenstein tests");
  classify_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();

  auto* member_cmd = app.add_subcommand("member", "Radical-of-trace membership of a monomial");
  member_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();
  member_cmd->add_option("point", in.point_path, "Point JSON file")->required();
  member_cmd->add_option("--ring", in.ring, "order or chain")->check(CLI::IsMember({"order", "chain"}));
  member_cmd->add_flag("--certificate", certificate, "Emit and verify a certificate for members");

  auto* locus_cmd = app.add_subcommand("locus", "Non-Gorenstein locus dimension and prime labels");
  locus_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();
  locus_cmd->add_option("--ring", locus_ring, "order, chain or both")->check(CLI::IsMember({"order", "chain", "both"}));
  locus_cmd->add_flag("--decompose", decompose, "List the minimal prime labels");

  auto* gen_cmd = app.add_subcommand("generate", "Poset with prescribed ring and locus dimension");
  gen_cmd->add_option("--ring-dim", ring_dim, "Ring dimension n = #P + 1")->required();
  gen_cmd->add_option("--locus-dim", locus_dim, "Locus dimension m, 0 <= m <= n - 4")->required();
  gen_cmd->add_option("-o,--output", out_path, "Write the poset here");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  auto* hilbert_cmd = oracle_cmd->add_subcommand("hilbert", "Compare lattice point counts up to --dmax");
  hilbert_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();
  hilbert_cmd->add_option("--dmax", d_max, "Largest degree");
  auto* lp_cmd = oracle_cmd->add_subcommand("lp-member", "Membership by exact linear feasibility");
  lp_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();
  lp_cmd->add_option("point", in.point_path, "Point JSON file")->required();
  lp_cmd->add_option("--ring", in.ring, "order or chain")->check(CLI::IsMember({"order", "chain"}));
  auto* search_cmd = oracle_cmd->add_subcommand("search", "Bounded integer certificate search");
  search_cmd->add_option("poset", in.poset_path, "Poset JSON file")->required();
  search_cmd->add_option("point", in.point_path, "Point JSON file")->required();
  search_cmd->add_option("--ring", in.ring, "order or chain")->check(CLI::IsMember({"order", "chain"}));
  search_cmd->add_option("--nmax", n_max, "Largest multiplier N");
  search_cmd->add_option("--box", box, "Bound on |eta(x)|");
  search_cmd->add_option("--timeout-ms", timeout_ms, "Cooperative deadline; 0 disables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*classify_cmd) return cmd_classify(opt, in);
  if (*member_cmd) return cmd_member(opt, in, certificate);
  if (*locus_cmd) return cmd_locus(opt, in, locus_ring, decompose);
  if (*gen_cmd) return cmd_generate(opt, ring_dim, locus_dim, out_path);
  if (*hilbert_cmd) return cmd_hilbert(opt, in, d_max);
  if (*lp_cmd) return cmd_lp_member(opt, in);
  if (*search_cmd) return cmd_search(opt, in, n_max, box, timeout_ms);
  return 2;
}
