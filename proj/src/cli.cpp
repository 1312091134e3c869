#include "lexconn/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "lexconn/connectivity.hpp"
#include "lexconn/graph_io.hpp"
#include "lexconn/harness.hpp"
#include "lexconn/invariants.hpp"
#include "lexconn/lexprod.hpp"
#include "lexconn/serialization.hpp"

namespace lexconn::cli {

namespace {

enum class OutputFormat { json, csv, plain };

struct GlobalOptions {
  std::string format = "json";
  bool quiet = false;
  std::string format_in;

  OutputFormat output() const {
    if (format == "csv") return OutputFormat::csv;
    if (format == "plain") return OutputFormat::plain;
    return OutputFormat::json;
  }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path, const std::string& format_in) {
  GraphFormat fmt;
  if (format_in == "g6")
    fmt = GraphFormat::graph6;
  else if (format_in == "el")
    fmt = GraphFormat::edge_list;
  else
    fmt = format_from_extension(path);
  return read_graph_file(path, fmt);
}

std::string ids_text(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

// Flat (name, text) rows shared by the csv and plain encodings.
std::vector<std::pair<std::string, std::string>> flat_rows(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    std::string text;
    if (v.is_string())
      text = v.get<std::string>();
    else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number(); }))
      text = ids_text(v.get<VertexSet>());
    else if (v.is_array())
      text = std::to_string(v.size());
    else if (v.is_null())
      text = "";
    else
      text = v.dump();
    rows.emplace_back(it.key(), text);
  }
  return rows;
}

void emit(const Json& j, OutputFormat fmt, std::ostream& out, int indent = -1) {
  switch (fmt) {
    case OutputFormat::json:
      out << j.dump(indent) << '\n';
      return;
    case OutputFormat::csv: {
      auto rows = flat_rows(j);
      for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].first;
      out << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].second;
      out << '\n';
      return;
    }
    case OutputFormat::plain:
      for (auto& [name, text] : flat_rows(j)) out << name << ' ' << text << '\n';
      return;
  }
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

struct ComputeOptions {
  std::string path;
  std::vector<std::string> invariants;
  bool witness = false;
};

int cmd_compute(const ComputeOptions& opt, const GlobalOptions& global, std::ostream& out,
                std::ostream& err) {
  std::vector<Invariant> wanted;
  auto names = split_commas(opt.invariants);
  if (names.empty()) wanted.assign(std::begin(kAllInvariants), std::end(kAllInvariants));
  for (const auto& name : names) {
    auto inv = parse_invariant(name);
    if (!inv) {
      err << "error: unknown invariant '" << name << "' (expected k, k1, super, delta, v0)\n";
      return kExitUsage;
    }
    wanted.push_back(*inv);
  }
  const auto g = load(opt.path, global.format_in);
  emit(Json(compute_invariants(g, wanted, opt.witness)), global.output(), out);
  return kExitOk;
}

struct ProductOptions {
  std::string g1_path;
  std::string g2_path;
  std::string out_path;
  bool report = false;
  bool oracle = false;
};

int cmd_product(const ProductOptions& opt, const GlobalOptions& global, std::ostream& out,
                std::ostream& err) {
  const auto g1 = load(opt.g1_path, global.format_in);
  const auto g2 = load(opt.g2_path, global.format_in);
  if (g1.order() == 0 || g2.order() == 0) throw InputError("empty factor graph");
  const auto product = lex_product(g1, g2);

  std::ofstream file(opt.out_path);
  if (!file || !(file << serialize_graph6(product) << '\n'))
    throw InputError("cannot write " + opt.out_path);
  if (!global.quiet) err << "wrote " << opt.out_path << " (" << product.order() << " vertices)\n";

  if (opt.report) {
    Json j{{"n", product.order()},
           {"m_edges", product.edge_count()},
           {"kappa_formula", lex_connectivity(g1, g2)}};
    if (opt.oracle) j["kappa_oracle"] = vertex_connectivity_oracle(product);
    emit(j, global.output(), out);
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string theorem;
  std::size_t n1_max = 4;
  std::size_t n2_max = 2;
  std::string mode = "exhaustive";
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string p = "1/2";
  std::string reading = "min_cuts_only";
  bool no_timing = false;
};

int cmd_verify(const VerifyOptions& opt, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
  const auto id = parse_theorem_id(opt.theorem);
  const auto reading = parse_cut_reading(opt.reading);
  if (!reading) throw UsageError("unknown reading '" + opt.reading + "'");

  InstanceFamily family;
  family.n1_max = opt.n1_max;
  family.n2_max = opt.n2_max;
  family.mode = opt.mode == "random" ? FamilyMode::random : FamilyMode::exhaustive;
  family.sample_count = opt.samples;
  family.seed = opt.seed;
  try {
    family.edge_probability = Probability::parse(opt.p);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  const auto report = verify_theorem(id, family, *reading);
  auto j = report_to_json(report, !opt.no_timing);
  if (global.output() != OutputFormat::json) j["discrepancies"] = report.discrepancies.size();
  emit(j, global.output(), out, global.output() == OutputFormat::json ? 2 : -1);
  if (!global.quiet)
    err << to_string(id) << ": " << report.instances_checked << " checked, " << report.skipped
        << " skipped, " << report.discrepancies.size() << " discrepancies\n";
  return report.discrepancies.empty() ? kExitOk : kExitDiscrepancies;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity invariants of graphs and lexicographic products", "lexconn"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_flag("--quiet", global.quiet, "Suppress informational diagnostics");
  app.add_option("--format-in", global.format_in, "Input format override")
      ->check(CLI::IsMember({"g6", "el"}));

  ComputeOptions compute;
  auto* sub_compute = app.add_subcommand("compute", "Compute invariants of one graph");
  sub_compute->add_option("graph", compute.path, "Graph file (.g6 or .el)")->required();
  sub_compute->add_option("--invariants,-i", compute.invariants,
                          "Comma-separated subset of k,k1,super,delta,v0 (default all)");
  sub_compute->add_flag("--witness", compute.witness, "Include witness cuts for k and k1");

  ProductOptions product;
  auto* sub_product = app.add_subcommand("product", "Write the lexicographic product G1 o G2");
  sub_product->add_option("g1", product.g1_path, "First factor")->required();
  sub_product->add_option("g2", product.g2_path, "Second factor")->required();
  sub_product->add_option("out", product.out_path, "Output graph6 file")->required();
  sub_product->add_flag("--report", product.report, "Print size and connectivity report");
  sub_product->add_flag("--oracle", product.oracle, "Add the brute-force connectivity to the report");

  VerifyOptions verify;
  auto* sub_verify = app.add_subcommand("verify", "Check a theorem against the oracles");
  sub_verify->add_option("--theorem", verify.theorem, "Theorem id")->required();
  sub_verify->add_option("--n1-max", verify.n1_max, "Largest first factor");
  sub_verify->add_option("--n2-max", verify.n2_max, "Largest second factor");
  sub_verify->add_option("--mode", verify.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  sub_verify->add_option("--samples", verify.samples, "Random-mode sample count");
  sub_verify->add_option("--seed", verify.seed, "Random-mode seed");
  sub_verify->add_option("--p", verify.p, "Random-mode edge probability (a/b or decimal)");
  sub_verify->add_option("--reading", verify.reading, "min_cuts_only or all_cuts");
  sub_verify->add_flag("--no-timing", verify.no_timing, "Omit wall_time_ms from the report");

  std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rest);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*sub_compute) return cmd_compute(compute, global, out, err);
    if (*sub_product) return cmd_product(product, global, out, err);
    return cmd_verify(verify, global, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lexconn::cli
