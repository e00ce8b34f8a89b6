// isored: command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isored/isored.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit : int {
  kOk = 0,
  kInexact = 1,
  kValidation = 2,
  kCriterion = 3,
  kNumeric = 4,
  kInternal = 5,
};

struct Failure {
  isored_status status;
  std::string message;
};

int exit_code(isored_status s) {
  switch (s) {
    case ISORED_OK:
      return kOk;
    case ISORED_CHAIN_TERMINATED:
    case ISORED_CROSS_VALIDATION_FAILED:
      return kCriterion;
    case ISORED_NUMERIC_FAILURE:
    case ISORED_NEAR_POLE_ERROR:
      return kNumeric;
    case ISORED_INTERNAL:
      return kInternal;
    default:
      return kValidation;
  }
}

const char* hint(isored_status s) {
  switch (s) {
    case ISORED_PARSE_ERROR:
      return "check the document against the network or matrix format";
    case ISORED_BAD_VERTEX_INDEX:
      return "vertex labels are 1-based and must exist in the network";
    case ISORED_CYCLE_IN_COMPLEMENT:
      return "keep at least one vertex of every cycle";
    case ISORED_LOOP_WEIGHT_IS_LAMBDA:
      return "keep every vertex whose loop weight is l";
    case ISORED_NOT_LAMBDA0_STRUCTURAL:
    case ISORED_LOOP_WEIGHT_EQUALS_LAMBDA0:
      return "keep every vertex whose loop weight equals the evaluation point";
    case ISORED_NOT_AN_EIGENVALUE:
      return "pick a value from the output of 'isored spectrum'";
    case ISORED_CHAIN_TERMINATED:
      return "lower the chain depth";
    case ISORED_RULE_INAPPLICABLE:
      return "raise --max-steps or choose a different rule";
    case ISORED_HYPOTHESIS_VIOLATED:
      return "the reduced vector must satisfy the reduced eigen or chain relation";
    case ISORED_INTERNAL:
      return "this is a bug; please report the input";
    default:
      return nullptr;
  }
}

void check(isored_status s) {
  if (s != ISORED_OK) throw Failure{s, isored_last_error()};
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{ISORED_INVALID_ARGUMENT, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using NetPtr = std::unique_ptr<isored_network, decltype(&isored_network_free)>;
using MatPtr = std::unique_ptr<isored_matrix, decltype(&isored_matrix_free)>;

NetPtr load_network(const std::string& path) {
  isored_network* raw = nullptr;
  const std::string text = slurp(path);
  const isored_status s = isored_network_parse(text.c_str(), &raw);
  if (s != ISORED_OK) throw Failure{s, path + ": " + isored_last_error()};
  return NetPtr(raw, isored_network_free);
}

MatPtr load_matrix(const std::string& path) {
  isored_matrix* raw = nullptr;
  const std::string text = slurp(path);
  const isored_status s = isored_matrix_parse(text.c_str(), &raw);
  if (s != ISORED_OK) throw Failure{s, path + ": " + isored_last_error()};
  return MatPtr(raw, isored_matrix_free);
}

Json take_report(char* raw) {
  std::unique_ptr<char, decltype(&isored_string_free)> owned(raw, isored_string_free);
  return Json::parse(owned.get());
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string join(const Json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) out += sep;
    out += arr[k].is_string() ? arr[k].get<std::string>() : arr[k].dump();
  }
  return out;
}

std::string set_text(const Json& arr) { return "{" + join(arr, ",") + "}"; }

void print_matrix(std::ostream& os, const Json& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].get<std::string>().size());
    }
  for (const auto& row : rows) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = row[j].get<std::string>();
      os << (j ? "  " : " ") << std::string(width[j] - cell.size(), ' ') << cell;
    }
    os << " ]\n";
  }
}

void print_eigenvalues(std::ostream& os, const Json& evs) {
  for (const auto& e : evs) {
    os << "  " << e["value"].get<std::string>() << "  x" << e["multiplicity"].get<unsigned>();
    if (!e["exact"].get<bool>()) os << "  (numeric, residual " << e["residual"].get<double>() << ")";
    os << "\n";
  }
}

void print_chain(std::ostream& os, const Json& c) {
  os << "chain at " << c["lambda0"].get<std::string>() << ":";
  if (c.contains("terminated")) {
    os << " terminated (" << c["message"].get<std::string>() << ")\n";
    return;
  }
  os << "\n";
  const Json& vs = c["vectors"];
  for (std::size_t k = 0; k < vs.size(); ++k) os << "  rank " << k + 1 << ": (" << join(vs[k]) << ")\n";
}

void print_links(std::ostream& os, const Json& links) {
  for (const auto& link : links) {
    os << "  rank " << link["rank"].get<unsigned>() << (link["agree"].get<bool>() ? "" : "  [criteria disagree]")
       << "\n";
    for (const auto& v : link["verdicts"]) {
      os << "    " << v["criterion"].get<std::string>() << ": " << v["outcome"].get<std::string>();
      if (!v["c"].is_null()) os << ", c = " << v["c"].get<std::string>();
      if (v.contains("chain_verified")) os << (v["chain_verified"].get<bool>() ? ", chain ok" : ", chain fails");
      os << "\n";
      if (v["criterion"] == "entry-wise")
        for (const auto& r : v["rows"])
          os << "      row " << r["vertex"].get<unsigned>() << ": " << r["lhs"].get<std::string>() << " vs u = "
             << r["u"].get<std::string>() << "\n";
      if (v.contains("witness")) os << "      " << v["witness"].get<std::string>() << "\n";
    }
  }
}

struct Options {
  std::string output = "table";
};

void render(const Options& o, const Json& doc, void (*table)(std::ostream&, const Json&)) {
  if (o.output == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    table(std::cout, doc);
  }
}

void reduce_table(std::ostream& os, const Json& d) {
  os << "reduced onto " << set_text(d["keep"]) << " (" << d["method"].get<std::string>() << ")\n";
  print_matrix(os, d["matrix"]);
  os << "char function: " << d["char_function"].get<std::string>() << "\n";
  if (d.contains("cross_validated"))
    os << "cross-validation: " << (d["cross_validated"].get<bool>() ? "agree" : "DISAGREE") << "\n";
  os << d["network"].dump() << "\n";
}

void spectrum_table(std::ostream& os, const Json& d) {
  os << "char function: " << d["char_function"].get<std::string>() << "\n";
  os << "eigenvalues (" << d["count"].get<std::size_t>() << (d["exact"].get<bool>() ? ", exact" : "") << "):\n";
  print_eigenvalues(os, d["eigenvalues"]);
  if (d.contains("at")) {
    const Json& a = d["at"];
    os << "at " << a["lambda0"].get<std::string>() << ": algebraic " << a["algebraic"].get<unsigned>()
       << ", geometric " << a["geometric"].get<unsigned>();
    if (!a["defect"].is_null()) os << ", defect " << a["defect"].get<unsigned>();
    os << "\n";
    for (const auto& v : a["eigenvectors"]) os << "  eigenvector (" << join(v) << ")\n";
    if (a.contains("chain")) print_chain(os, a["chain"]);
  }
  if (d.contains("chains"))
    for (const auto& c : d["chains"]) print_chain(os, c);
}

void preserve_table(std::ostream& os, const Json& d) {
  print_chain(os, Json{{"lambda0", d["lambda0"]}, {"vectors", d["chain"]}});
  for (const auto& r : d["results"]) {
    os << set_text(r["keep"]) << ": ";
    if (!r["lambda0_structural"].get<bool>()) {
      os << "not structural at " << d["lambda0"].get<std::string>() << "\n";
      continue;
    }
    os << (r["preserved"].get<bool>() ? "preserved" : "not preserved");
    if (r["preserved"].get<bool>() && !r["c"].is_null()) os << ", c = " << r["c"].get<std::string>();
    os << "\n";
    print_links(os, r["links"]);
  }
}

void reconstruct_table(std::ostream& os, const Json& d) {
  os << "kept " << set_text(d["keep"]) << " at " << d["lambda0"].get<std::string>() << "\n";
  os << "depths:";
  for (const auto& [label, depth] : d["depths"].items()) os << " " << label << "->" << depth.get<unsigned>();
  os << "\n";
  if (d.contains("c")) os << "c = " << d["c"].get<std::string>() << "\n";
  if (!d["reduced_consistent"].get<bool>()) os << "warning: the reduced network differs from the recomputed one\n";
  os << "vector: (" << join(d["vector"]) << ")\n";
}

void equiv_table(std::ostream& os, const Json& d) {
  os << "rule " << d["rule"].get<std::string>() << ": "
     << (d["equivalent"].get<bool>() ? "equivalent" : "not equivalent") << "\n";
  if (d["equivalent"].get<bool>())
    os << "  m = " << d["m"].get<std::size_t>() << ", k = " << d["k"].get<std::size_t>() << ", isomorphism ("
       << join(d["iso"]) << ")\n";
}

void equiv_matrix_table(std::ostream& os, const Json& d) {
  for (const char* side : {"a", "b"}) {
    const Json& list = d[side];
    for (std::size_t k = 0; k < list.size(); ++k) {
      os << side << "[" << k << "] onto " << set_text(list[k]["keep"]) << ":\n";
      print_matrix(os, list[k]["matrix"]);
    }
  }
  os << (d["equivalent"].get<bool>() ? "equivalent" : "not equivalent");
  if (d.contains("match"))
    os << ": a[" << d["match"]["a"] << "] ~ b[" << d["match"]["b"] << "] under (" << join(d["match"]["perm"]) << ")";
  os << "\n";
}

void validate_table(std::ostream& os, const Json& d) {
  os << set_text(d["keep"]) << ": " << (d["valid"].get<bool>() ? "valid" : "invalid") << "\n";
  if (d.contains("reason")) os << "  " << d["reason"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
  if (d.contains("topo_order")) os << "  complement order " << set_text(d["topo_order"]) << "\n";
  if (d.contains("lambda0_structural"))
    os << "  structural at " << d["lambda0"].get<std::string>() << ": "
       << (d["lambda0_structural"].get<bool>() ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isospectral reductions of lambda-weighted networks"};
  app.set_version_flag("--version", std::string(isored_version()));
  app.require_subcommand(1);
  Options o;
  app.add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string input, keep, at, method = "graph", write_path, original, vector, prev, a_path, b_path, rule;
  std::vector<std::string> via;
  bool allow_nonstructural = false, chains = false, all_sets = false, no_zero = false;
  unsigned depth = 1, chain_depth = 1;
  std::size_t size = 0, max_steps = 3, dim = 0;

  auto* reduce = app.add_subcommand("reduce", "Reduce a network onto a kept vertex set");
  reduce->add_option("--input", input, "Network file, or - for stdin")->required();
  reduce->add_option("--keep", keep, "Kept labels, e.g. 1,4")->required();
  reduce->add_option("--via", via, "Intermediate kept set (repeatable, applied in order)");
  reduce->add_option("--method", method, "graph, block or both")
      ->check(CLI::IsMember({"graph", "block", "both"}))
      ->capture_default_str();
  reduce->add_flag("--allow-nonstructural", allow_nonstructural, "Permit block reduction onto any set");
  reduce->add_option("--write", write_path, "Also write the reduced network to this file");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
  spectrum->add_option("--input", input, "Network file, or - for stdin")->required();
  spectrum->add_option("--at", at, "Eigenvalue to inspect");
  spectrum->add_flag("--chains", chains, "Report generalized eigenvector chains");
  spectrum->add_option("--depth", depth, "Chain length")->check(CLI::PositiveNumber)->capture_default_str();

  auto* preserve = app.add_subcommand("check-preserve", "Preservation criteria for a chain");
  preserve->add_option("--input", input, "Network file, or - for stdin")->required();
  auto* keep_opt = preserve->add_option("--keep", keep, "Kept labels");
  preserve->add_option("--at", at, "Eigenvalue")->required();
  preserve->add_option("--chain-depth", chain_depth, "Chain length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* all_opt = preserve->add_flag("--all-sets", all_sets, "Check every structural set of --size");
  auto* size_opt = preserve->add_option("--size", size, "Set size for --all-sets")->check(CLI::PositiveNumber);
  all_opt->needs(size_opt)->excludes(keep_opt);
  size_opt->needs(all_opt);

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover a full vector from a reduced one");
  reconstruct->add_option("--input", input, "Reduced network file")->required();
  reconstruct->add_option("--original-topology", original, "Original network file")->required();
  reconstruct->add_option("--keep", keep, "Kept labels (default: labels of the reduced network)");
  reconstruct->add_option("--at", at, "Eigenvalue")->required();
  reconstruct->add_option("--vector", vector, "Reduced vector, comma separated")->required();
  reconstruct->add_option("--prev", prev, "Previous chain vector of the original network");

  auto* equiv = app.add_subcommand("equiv", "Spectral equivalence of two networks under a rule");
  equiv->add_option("--a", a_path, "First network")->required();
  equiv->add_option("--b", b_path, "Second network")->required();
  equiv->add_option("--rule", rule, "keep:<labels>, loops or min-cycle-cover")->required();
  equiv->add_option("--max-steps", max_steps, "Largest exponent tried")->capture_default_str();
  equiv->add_flag("--no-zero-exponent", no_zero, "Exclude the unreduced networks");

  auto* equiv_matrix = app.add_subcommand("equiv-matrix", "Spectral equivalence of two matrices");
  equiv_matrix->add_option("--a", a_path, "First matrix")->required();
  equiv_matrix->add_option("--b", b_path, "Second matrix")->required();
  equiv_matrix->add_option("--dim", dim, "Reduced dimension")->required()->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate-set", "Structural-set certificate");
  validate->add_option("--input", input, "Network file, or - for stdin")->required();
  validate->add_option("--keep", keep, "Kept labels")->required();
  validate->add_option("--at", at, "Also check structure at this value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  try {
    char* raw = nullptr;
    if (*reduce) {
      const NetPtr net = load_network(input);
      std::string chain;
      for (const auto& v : via) chain += (chain.empty() ? "" : ";") + v;
      const isored_method m = method == "graph"   ? ISORED_METHOD_GRAPH
                              : method == "block" ? ISORED_METHOD_BLOCK
                                                  : ISORED_METHOD_BOTH;
      check(isored_reduce(net.get(), keep.c_str(), opt(chain), m, allow_nonstructural, &raw));
      const Json d = take_report(raw);
      if (!write_path.empty()) {
        std::ofstream out(write_path);
        if (!out) throw Failure{ISORED_INVALID_ARGUMENT, "cannot write '" + write_path + "'"};
        out << d["network"].dump(2) << "\n";
      }
      render(o, d, reduce_table);
      if (d.contains("cross_validated") && !d["cross_validated"].get<bool>()) {
        std::cerr << "error: graph and block reductions differ\n";
        return kCriterion;
      }
      return kOk;
    }
    if (*spectrum) {
      const NetPtr net = load_network(input);
      const unsigned d_arg = chains ? depth : 0;
      check(isored_spectrum(net.get(), opt(at), d_arg, &raw));
      const Json d = take_report(raw);
      render(o, d, spectrum_table);
      return d["exact"].get<bool>() ? kOk : kInexact;
    }
    if (*preserve) {
      if (!all_sets && keep.empty()) throw Failure{ISORED_INVALID_ARGUMENT, "--keep or --all-sets is required"};
      const NetPtr net = load_network(input);
      const isored_status s =
          isored_check_preserve(net.get(), opt(keep), at.c_str(), chain_depth, all_sets ? size : 0, &raw);
      if (s == ISORED_CHAIN_TERMINATED) {
        std::cerr << "not preserved: " << isored_last_error() << "\n";
        return kCriterion;
      }
      check(s);
      const Json d = take_report(raw);
      render(o, d, preserve_table);
      return all_sets || d["preserved"].get<bool>() ? kOk : kCriterion;
    }
    if (*reconstruct) {
      const NetPtr reduced = load_network(input);
      const NetPtr full = load_network(original);
      check(isored_reconstruct(full.get(), reduced.get(), opt(keep), at.c_str(), vector.c_str(), opt(prev), &raw));
      render(o, take_report(raw), reconstruct_table);
      return kOk;
    }
    if (*equiv) {
      const NetPtr a = load_network(a_path);
      const NetPtr b = load_network(b_path);
      check(isored_equiv(a.get(), b.get(), rule.c_str(), max_steps, !no_zero, &raw));
      const Json d = take_report(raw);
      render(o, d, equiv_table);
      return d["equivalent"].get<bool>() ? kOk : kCriterion;
    }
    if (*equiv_matrix) {
      const MatPtr a = load_matrix(a_path);
      const MatPtr b = load_matrix(b_path);
      check(isored_equiv_matrix(a.get(), b.get(), dim, &raw));
      const Json d = take_report(raw);
      render(o, d, equiv_matrix_table);
      return d["equivalent"].get<bool>() ? kOk : kCriterion;
    }
    if (*validate) {
      const NetPtr net = load_network(input);
      check(isored_validate_set(net.get(), keep.c_str(), opt(at), &raw));
      const Json d = take_report(raw);
      render(o, d, validate_table);
      return d["valid"].get<bool>() ? kOk : kCriterion;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << isored_status_name(f.status) << ": " << f.message << "\n";
    if (const char* h = hint(f.status)) std::cerr << "hint: " << h << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
