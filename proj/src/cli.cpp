#include "l1kit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "l1kit/display_set.hpp"
#include "l1kit/errors.hpp"
#include "l1kit/export.hpp"
#include "l1kit/level1.hpp"
#include "l1kit/oracle.hpp"

namespace l1kit::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format;
  bool all = false;
  int cap = -1;
  std::uint64_t seed = 0;
  bool pretty = false;
  std::string tie = "largest";
  // oracle
  int leaves = 6;
  int reticulations = 2;
  std::string network_class = "level1";
  bool no_trivial = false;
  std::string emit = "network";
};

// Non-blank lines with '#' comments removed, paired with line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& src) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(src, line)) {
    ++number;
    // A comment starts at '#' only when it opens the line; inside eNewick
    // '#' introduces hybrid tags.
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

class InputError : public Error {
 public:
  using Error::Error;
};

std::vector<std::pair<int, std::string>> read_input(const Options& o, std::istream& in) {
  if (o.input == "-") return content_lines(in);
  std::ifstream file(o.input);
  if (!file) throw InputError("cannot open '" + o.input + "'");
  return content_lines(file);
}

std::vector<Tree> read_trees(const Options& o, std::istream& in) {
  std::vector<Tree> trees;
  for (const auto& [number, text] : read_input(o, in)) {
    try {
      trees.push_back(Tree::parse_newick(text));
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (trees.empty()) throw InputError("no trees in input");
  return trees;
}

Network read_network(const Options& o, std::istream& in) {
  std::string text;
  for (const auto& [number, line] : read_input(o, in)) text += line;
  if (text.empty()) throw InputError("no network in input");
  return Network::parse_enewick(text);
}

int cap_of(const Options& o) { return o.cap >= 0 ? o.cap : default_cap(); }

TieBreak tie_of(const Options& o) {
  if (o.tie == "smallest") return TieBreak::SmallestMoving;
  return TieBreak::LargestMoving;
}

void emit_json(std::ostream& out, const nlohmann::json& j, const Options& o) {
  out << j.dump(o.pretty ? 2 : -1) << "\n";
}

void report_no(std::ostream& err, const Analysis& a) {
  err << "no level-1 network exists: " << to_string(*a.reason) << "\n";
}

int cmd_display_set(const Options& o, std::istream& in, std::ostream& out) {
  const Network n = read_network(o, in);
  const DisplaySet ds = display_set(n, cap_of(o));
  if (o.format == "newick") {
    for (const auto& t : ds.trees) out << t.newick() << "\n";
  } else {
    emit_json(out, display_set_json(ds), o);
  }
  return kOk;
}

int cmd_rspr_graph(const Options& o, std::istream& in, std::ostream& out) {
  const RsprGraph g = build_rspr_graph(read_trees(o, in));
  const auto map = hypercube_iso(Graph::of(g));
  if (o.format == "dot") {
    out << rspr_graph_dot(g, map);
  } else {
    emit_json(out, rspr_graph_json(g, map), o);
  }
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Analysis a = analyze(read_trees(o, in), tie_of(o));
  nlohmann::json j = level1_json(a, std::nullopt, {});
  j.erase("network");
  j.erase("all_networks");
  j["hypercube"] = a.map.has_value();
  nlohmann::json cands = nlohmann::json::array();
  if (a.labelling) {
    for (const auto& list : a.labelling->candidates) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& p : list) row.push_back(to_json(p));
      cands.push_back(row);
    }
  }
  j["candidates"] = cands;
  emit_json(out, j, o);
  if (!a.accepted()) {
    report_no(err, a);
    return kNoNetwork;
  }
  return kOk;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto trees = read_trees(o, in);
  const Level1Result r = construct_level1(trees, tie_of(o));
  std::vector<Network> all;
  if (o.all && r.analysis.accepted()) all = enumerate_level1(trees).networks;
  if (o.format == "enewick" || o.format == "dot") {
    if (!r.analysis.accepted()) {
      report_no(err, r.analysis);
      return kNoNetwork;
    }
    if (o.format == "dot") {
      out << r.network->dot();
    } else if (o.all) {
      for (const auto& n : all) out << n.enewick() << "\n";
    } else {
      out << r.network->enewick() << "\n";
    }
    return kOk;
  }
  emit_json(out, level1_json(r.analysis, r.network, all), o);
  if (!r.analysis.accepted()) {
    report_no(err, r.analysis);
    return kNoNetwork;
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Level1Enumeration e = enumerate_level1(read_trees(o, in));
  if (o.format == "enewick") {
    for (const auto& n : e.networks) out << n.enewick() << "\n";
  } else {
    nlohmann::json j = level1_json(e.analysis, std::nullopt, e.networks);
    j.erase("network");
    j["sequence_count"] = e.sequence_count;
    j["network_count"] = e.networks.size();
    emit_json(out, j, o);
  }
  if (!e.analysis.accepted()) {
    report_no(err, e.analysis);
    return kNoNetwork;
  }
  return kOk;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const Network n = read_network(o, in);
  if (o.format == "dot") {
    out << n.dot();
  } else if (o.format == "enewick") {
    out << n.enewick() << "\n";
  } else {
    emit_json(out, classification_json(n, n.classify()), o);
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  oracle::GeneratorConfig cfg;
  cfg.leaves = o.leaves;
  cfg.reticulations = o.reticulations;
  cfg.target = oracle::parse_network_class(o.network_class);
  cfg.seed = o.seed;
  cfg.forbid_trivial = o.no_trivial;
  if (o.emit == "all-trees") {
    const auto taxa = oracle::numbered_taxa(o.leaves);
    for (const auto& t : oracle::enumerate_all_trees(Cluster(taxa))) out << t.newick() << "\n";
    return kOk;
  }
  const Network n = oracle::random_network(cfg);
  if (o.emit == "display-set") {
    for (const auto& t : oracle::brute_display_set(n)) out << t.newick() << "\n";
  } else if (o.format == "json") {
    emit_json(out, classification_json(n, n.classify()), o);
  } else {
    out << n.enewick() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Level-1 phylogenetic network toolkit", "l1kit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("INPUT", o.input, "Input file, '-' for stdin");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("--pretty", o.pretty, "Indent JSON output");
    sub->add_option("--cap", o.cap, "Maximum reticulation count for 2^k enumeration")
        ->check(CLI::Range(0, 62));
    sub->add_option("--seed", o.seed, "Random seed");
  };
  auto tie_option = [&](CLI::App* sub) {
    sub->add_option("--tie-break", o.tie, "Preferred verifying pair")
        ->check(CLI::IsMember({"largest", "smallest"}));
  };

  auto* ds = app.add_subcommand("display-set", "Display set of a network");
  add_common(ds, {"json", "newick"});
  auto* rg = app.add_subcommand("rspr-graph", "rSPR graph of a tree collection");
  add_common(rg, {"json", "dot"});
  auto* ck = app.add_subcommand("check", "Hypercube and nested subtree property report");
  add_common(ck, {"json"});
  tie_option(ck);
  auto* rc = app.add_subcommand("reconstruct", "Build a level-1 network with display set P");
  add_common(rc, {"json", "enewick", "dot"});
  rc->add_flag("--all", o.all, "Also list every such network");
  tie_option(rc);
  auto* en = app.add_subcommand("enumerate", "All level-1 networks with display set P");
  add_common(en, {"json", "enewick"});
  en->add_flag("--all", o.all, "Accepted for symmetry with reconstruct");
  auto* cl = app.add_subcommand("classify", "Class membership of a network");
  add_common(cl, {"json", "dot", "enewick"});
  auto* orc = app.add_subcommand("oracle", "Generate random instances");
  orc->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"enewick", "json", "newick"}));
  orc->add_flag("--pretty", o.pretty, "Indent JSON output");
  orc->add_option("--seed", o.seed, "Random seed");
  orc->add_option("--leaves", o.leaves, "Number of taxa")->check(CLI::Range(1, 64));
  orc->add_option("--reticulations", o.reticulations, "Reticulation budget")
      ->check(CLI::Range(0, 64));
  orc->add_option("--class", o.network_class, "level1, tree-child, normal or any");
  orc->add_flag("--no-trivial", o.no_trivial, "Reject trivial reticulations");
  orc->add_option("--emit", o.emit, "What to print")
      ->check(CLI::IsMember({"network", "display-set", "all-trees"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*ds) return cmd_display_set(o, in, out);
    if (*rg) return cmd_rspr_graph(o, in, out);
    if (*ck) return cmd_check(o, in, out, err);
    if (*rc) return cmd_reconstruct(o, in, out, err);
    if (*en) return cmd_enumerate(o, in, out, err);
    if (*cl) return cmd_classify(o, in, out);
    if (*orc) return cmd_oracle(o, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace l1kit::cli
