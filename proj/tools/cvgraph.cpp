#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvg/census.hpp"
#include "cvg/certify.hpp"
#include "cvg/generate.hpp"
#include "cvg/graph.hpp"
#include "cvg/graph6.hpp"
#include "cvg/groebner.hpp"
#include "cvg/mdatabase.hpp"
#include "cvg/structure.hpp"

namespace {

using namespace cvg;

// Exit contract, stable for scripting: 0 affirmative (CV / valid / refuted /
// listing done), 1 negative verdict, 2 usage or input parse errors.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::vector<std::string> gather_inputs(const std::vector<std::string>& graphs,
                                       const std::string& file) {
  std::vector<std::string> lines = graphs;
  auto keep = [&lines](std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  };
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::string line;
    while (std::getline(in, line)) keep(line);
  }
  if (lines.empty()) {  // no --graph/--file: act as a filter on stdin
    std::string line;
    while (std::getline(std::cin, line)) keep(line);
  }
  return lines;
}

MDatabase load_db(const std::string& path) {
  return path.empty() ? MDatabase::embedded()
                      : MDatabase::from_graph6_file(path);
}

std::string default_out_dir() {
  const char* env = std::getenv("CVGRAPH_OUT");
  return env ? std::string(env) : std::string();
}

// graph6 uses the full printable range; keep alphanumerics and hex-escape the
// rest so distinct strings stay distinct as file names.
std::string sanitize(const std::string& g6) {
  static const char* hex = "0123456789ABCDEF";
  std::string s;
  for (unsigned char c : g6) {
    if (std::isalnum(c)) {
      s += char(c);
    } else {
      s += '-';
      s += hex[c >> 4];
      s += hex[c & 15];
    }
  }
  return s;
}

const char* verdict_word(Verdict v) {
  switch (v) {
    case Verdict::CV:
      return "cv";
    case Verdict::NotCV:
      return "not_cv";
    default:
      return "unknown";
  }
}

const char* provenance_word(Provenance p) {
  switch (p) {
    case Provenance::Twin:
      return "twin";
    case Provenance::Duplication:
      return "duplication";
    case Provenance::Union:
      return "union";
    case Provenance::Join:
      return "join";
    case Provenance::AppendK1:
      return "append-k1";
    case Provenance::RandomTrial:
      return "random-trial";
    case Provenance::Manual:
      return "manual";
    case Provenance::Imported:
      return "imported";
  }
  return "?";
}

std::string opt_flag(const std::optional<bool>& b) {
  return b ? (*b ? "1" : "0") : "-";
}

GroebnerLimits parse_limits(const std::string& s) {
  GroebnerLimits l;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> l.max_spolys >> c1 >> l.max_degree >> c2 >> l.timeout_seconds) ||
      c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument("--limits expects SPOLYS,MAXDEG,SECONDS");
  return l;
}

std::pair<int, int> parse_edge(const std::string& s) {
  int i = 0, j = 0;
  char c = 0;
  std::istringstream in(s);
  if (!(in >> i >> c >> j) || c != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument("--tree-edge expects I,J");
  return {i, j};
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// --- subcommands ------------------------------------------------------------

int cmd_classify(const std::vector<std::string>& graphs,
                 const std::string& file, const std::string& db_path) {
  const MDatabase db = load_db(db_path);
  bool parse_error = false;
  bool negative = false;
  for (const std::string& line : gather_inputs(graphs, file)) {
    std::optional<Graph> g;
    try {
      g = decode_graph6(line);
    } catch (const InvalidGraph6& e) {
      std::cerr << "error: " << line << ": " << e.what() << "\n";
      parse_error = true;
      continue;
    }
    const ClassificationReport r = classify(*g, db);
    if (r.verdict != Verdict::CV) negative = true;
    std::string reasons;
    for (const std::string& reason : r.reasons) {
      if (!reasons.empty()) reasons += "; ";
      reasons += reason;
    }
    std::cout << line << '\t' << verdict_word(r.verdict) << '\t'
              << opt_flag(r.robust_alpha) << '\t' << opt_flag(r.robust_beta)
              << '\t' << (r.certificate_ref ? *r.certificate_ref : "-") << '\t'
              << reasons << '\n';
  }
  if (parse_error) return kUsage;
  return negative ? kNegative : kOk;
}

int cmd_certify(const std::string& g6, const std::string& methods_csv,
                int attempts, std::uint64_t seed, const std::string& out) {
  const Graph g = decode_graph6(g6);
  std::vector<std::pair<std::string, Method>> plan;
  std::istringstream in(methods_csv);
  for (std::string name; std::getline(in, name, ',');) {
    if (name == "twin")
      plan.emplace_back(name, Method::Twin);
    else if (name == "dup")
      plan.emplace_back(name, Method::Duplication);
    else if (name == "compose")
      plan.emplace_back(name, Method::Compose);
    else if (name == "random")
      plan.emplace_back(name, Method::Random);
    else
      throw std::invalid_argument("unknown method '" + name +
                                  "' (twin, dup, compose, random)");
  }
  SearchOptions options;
  options.attempts = attempts;
  options.seed = seed;
  std::optional<Certificate> cert;
  for (const auto& [name, method] : plan) {
    options.methods = {method};
    cert = find_certificate(g, options);
    std::cerr << "method " << name << ": "
              << (cert ? "certificate found" : "no certificate") << "\n";
    if (cert) break;
  }
  if (!cert) {
    std::cout << g6 << ": no certificate found\n";
    return kNegative;
  }
  const VerifyResult vr = verify(*cert);
  if (!vr.valid)
    throw std::logic_error("search produced an invalid certificate: " +
                           vr.reason);
  std::string path = out;
  if (path.empty()) {
    const std::string dir = default_out_dir();
    path = (dir.empty() ? std::string() : dir + "/") + sanitize(g6) + ".cert";
  }
  write_certificate_file(path, CertificateDocument{*cert, {}, {}});
  std::cout << g6 << ": verified certificate ("
            << provenance_word(cert->provenance) << ") written to " << path
            << "\n";
  return kOk;
}

int cmd_verify(const std::string& cert_path, const std::string& g6) {
  CertificateDocument doc = read_certificate_file(cert_path);
  if (!g6.empty()) doc.cert.graph = decode_graph6(g6);
  VerifyResult vr;
  if (doc.kernel_side && doc.kernel_vector)
    vr = verify(RobustCertificate{doc.cert, *doc.kernel_vector,
                                  *doc.kernel_side});
  else
    vr = verify(doc.cert);
  if (vr.valid) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid: " << vr.reason << "\n";
  return kNegative;
}

int cmd_generate(int n, int max_n, const std::string& filter) {
  if ((n > 0) == (max_n > 0))
    throw std::invalid_argument("provide exactly one of --n / --max-n");
  const GenFilter f =
      filter == "all" ? GenFilter::All : GenFilter::ConnectedCoConnected;
  const int lo = n > 0 ? n : 1;
  const int hi = n > 0 ? n : max_n;
  for (int k = lo; k <= hi; ++k)
    for (const Graph& g : generate_all(k, f))
      std::cout << encode_graph6(g) << '\n';
  return kOk;
}

int cmd_census(int max_n, std::uint64_t seed, int attempts, bool grobner,
               const std::string& limits, const std::string& out) {
  CensusOptions options;
  options.max_n = max_n;
  options.seed = seed;
  options.attempts = attempts;
  options.run_groebner = grobner;
  if (!limits.empty()) options.groebner_limits = parse_limits(limits);
  const CensusResult result = run_census(options);
  std::cout << census_table(result);

  const std::string dir = out.empty() ? default_out_dir() : out;
  if (dir.empty()) {
    std::cout << '\n' << census_ledger(result);
    return kOk;
  }
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "certificates");
  std::vector<std::string> paths(result.entries.size());
  long written = 0;
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const CensusEntry& e = result.entries[i];
    if (!e.certificate) continue;
    paths[i] = "certificates/n" + std::to_string(e.n) + "-" +
               sanitize(e.graph6) + ".cert";
    write_certificate_file((fs::path(dir) / paths[i]).string(),
                           CertificateDocument{*e.certificate, {}, {}});
    ++written;
  }
  write_text_file(fs::path(dir) / "census_table.tsv", census_table(result));
  write_text_file(fs::path(dir) / "census_ledger.tsv",
                  census_ledger(result, paths));
  std::cerr << "wrote census_table.tsv, census_ledger.tsv and " << written
            << " certificates under " << dir << "\n";
  return kOk;
}

int cmd_groebner(const std::string& g6, const std::string& side, int tree_root,
                 const std::vector<std::string>& tree_edges, bool iterate,
                 const std::string& limits, bool print_basis) {
  const Graph g = decode_graph6(g6);
  GroebnerLimits lim;
  if (!limits.empty()) lim = parse_limits(limits);

  if (iterate) {
    const GroebnerReport report = groebner_refutes(g, lim, true);
    for (const std::string& line : report.log) std::cout << line << '\n';
    if (report.verdict == RefuteVerdict::Refuted) {
      std::cout << "refuted: " << report.witness << '\n';
      return kOk;
    }
    std::cout << "inconclusive\n";
    return kNegative;
  }

  IdealOptions options;
  options.side = side == "complement" ? TreeSide::Complement : TreeSide::G;
  options.tree_root = tree_root;
  for (const std::string& e : tree_edges)
    options.tree_edges.push_back(parse_edge(e));

  GroebnerRun run;
  try {
    run = groebner_run(g, options, lim);
  } catch (const PreconditionViolated& e) {
    // The diagonal rules alone are already contradictory; no basis needed.
    std::cout << "refuted before basis computation: " << e.what() << '\n';
    return kOk;
  }
  std::cout << "side=" << (options.side == TreeSide::G ? "G" : "complement")
            << " root=" << tree_root << '\n'
            << "variables: " << run.ideal.vars.size() << '\n';
  for (const FixedVar& f : run.ideal.fixed)
    std::cout << "fixed: " << var_name(f.var) << " = " << f.value << " ("
              << f.reason << ")\n";
  std::cout << "generators: " << run.ideal.generators.size() << '\n'
            << "status: "
            << (run.result.status == BuchbergerStatus::Basis
                    ? "basis"
                    : "resource-exceeded")
            << "  s-polynomials: " << run.result.spolys
            << "  basis size: " << run.result.basis.size() << '\n';
  if (print_basis || run.result.basis.size() <= 16)
    for (const Polynomial& p : run.result.basis)
      std::cout << "  " << to_string(p, run.ideal.vars) << '\n';
  if (run.refutation) {
    std::cout << "refuted: " << *run.refutation << '\n';
    return kOk;
  }
  std::cout << "inconclusive\n";
  return kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complementary vanishing graphs: classify, certify, survey"};
  app.require_subcommand(1);

  std::vector<std::string> graphs;
  std::string graph, file, db, out, methods = "twin,dup,compose,random";
  std::string cert_path, filter = "cc", side = "g", limits;
  std::vector<std::string> tree_edges;
  int attempts = 1000, n = 0, max_n = 0, census_max_n = 8, tree_root = -1;
  std::uint64_t seed = 1, census_seed = 18;
  bool grobner = false, iterate = false, print_basis = false;

  CLI::App* classify = app.add_subcommand(
      "classify", "decide CV / not CV per input graph, with the reason chain");
  classify->add_option("--graph", graphs, "graph6 string (repeatable)");
  classify->add_option("--file", file, "graph6 file, one graph per line");
  classify->add_option("--db", db, "building-block catalog (graph6 file)");

  CLI::App* certify = app.add_subcommand(
      "certify", "search for a verified certificate and write it to a file");
  certify->add_option("--graph", graph, "graph6 string")->required();
  certify->add_option("--methods", methods, "comma list: twin,dup,compose,random");
  certify->add_option("--attempts", attempts, "random attempts (both sides)");
  certify->add_option("--seed", seed, "random seed");
  certify->add_option("--out", out, "certificate path (default derived)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a certificate file exactly");
  verify_cmd->add_option("cert", cert_path, "certificate file")->required();
  verify_cmd->add_option("--graph", graph,
                         "check against this graph6 instead of the recorded one");

  CLI::App* generate =
      app.add_subcommand("generate", "list isomorphism classes as graph6");
  generate->add_option("--n", n, "single order");
  generate->add_option("--max-n", max_n, "orders 1..N");
  generate->add_option("--filter", filter, "all | cc (connected co-connected pairs)")
      ->check(CLI::IsMember({"all", "cc"}));

  CLI::App* census = app.add_subcommand(
      "census", "run the full pipeline over all pairs up to --max-n");
  census->add_option("--max-n", census_max_n, "largest order (<= 8)");
  census->add_option("--seed", census_seed, "random seed");
  census->add_option("--attempts", attempts, "random attempts per graph");
  census->add_flag("--grobner", grobner,
                   "run basis computations instead of the pinned residual set");
  census->add_option("--limits", limits, "basis limits SPOLYS,MAXDEG,SECONDS");
  census->add_option("--out", out,
                     "output directory (default $CVGRAPH_OUT; stdout if unset)");

  CLI::App* groebner_cmd = app.add_subcommand(
      "groebner", "attempt an algebraic refutation of one graph");
  groebner_cmd->add_option("--graph", graph, "graph6 string")->required();
  groebner_cmd->add_option("--side", side, "spanning-tree side: g | complement")
      ->check(CLI::IsMember({"g", "complement"}));
  groebner_cmd->add_option("--tree-root", tree_root,
                           "BFS root (-1: maximum degree)");
  groebner_cmd->add_option("--tree-edge", tree_edges,
                           "explicit forest edge I,J (repeatable)");
  groebner_cmd->add_flag("--iterate-roots", iterate,
                         "scan every root on both sides");
  groebner_cmd->add_option("--limits", limits,
                           "basis limits SPOLYS,MAXDEG,SECONDS");
  groebner_cmd->add_flag("--print-basis", print_basis,
                         "always print the basis polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(graphs, file, db);
    if (certify->parsed()) return cmd_certify(graph, methods, attempts, seed, out);
    if (verify_cmd->parsed()) return cmd_verify(cert_path, graph);
    if (generate->parsed()) return cmd_generate(n, max_n, filter);
    if (census->parsed())
      return cmd_census(census_max_n, census_seed, attempts, grobner, limits,
                        out);
    if (groebner_cmd->parsed())
      return cmd_groebner(graph, side, tree_root, tree_edges, iterate, limits,
                          print_basis);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
