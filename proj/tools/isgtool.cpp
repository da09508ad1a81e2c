// isgtool: construct, analyze and verify finite inverse semigroups from the
// command line. Exit codes: 0 verified / success, 1 refuted, 2 usage or
// input error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "isg/bicyclic.hpp"
#include "isg/congruence.hpp"
#include "isg/constructions.hpp"
#include "isg/green.hpp"
#include "isg/io.hpp"
#include "isg/iso.hpp"
#include "isg/semigroup.hpp"
#include "isg/structure.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

constexpr int kAnalyzeBound = 512;
constexpr int kCongruenceFreeBound = 128;

int env_bound(const char* name, int fallback) {
  if (const char* v = std::getenv(name)) {
    const int parsed = std::atoi(v);
    if (parsed > 0) return parsed;
  }
  return fallback;
}

// --group cyclic:N | klein | trivial | PATH (a semigroup document)
isg::FiniteSemigroup resolve_group(const std::string& spec) {
  if (spec == "klein") return isg::klein_four_group();
  if (spec == "trivial") return isg::trivial_semigroup();
  if (spec.rfind("cyclic:", 0) == 0) {
    return isg::cyclic_group(std::stoi(spec.substr(7)));
  }
  auto g = isg::load_semigroup(spec);
  if (!isg::is_group(g)) {
    throw isg::domain_error("--group: '" + spec + "' is not a group");
  }
  return g;
}

// Rows separated by ';', entries by ','; '-' marks a zero entry, anything
// else is a group element index.
isg::SandwichMatrix parse_sandwich(const std::string& text) {
  isg::SandwichMatrix p;
  std::string row;
  std::istringstream rows(text);
  int cols = -1;
  while (std::getline(rows, row, ';')) {
    std::istringstream cells(row);
    std::string cell;
    int count = 0;
    while (std::getline(cells, cell, ',')) {
      p.entries.push_back(cell == "-" ? isg::SandwichMatrix::kZero
                                      : std::stoi(cell));
      ++count;
    }
    if (cols >= 0 && count != cols) {
      throw isg::malformed_input_error("--sandwich: ragged rows");
    }
    cols = count;
    ++p.rows;
  }
  p.cols = cols < 0 ? 0 : cols;
  return p;
}

int cmd_construct(const std::string& kind, const std::string& group_spec,
                  int lambda, int n, const std::string& sandwich,
                  const std::string& input, const std::string& output) {
  isg::FiniteSemigroup result;
  if (kind == "brandt") {
    result = isg::brandt_extension(resolve_group(group_spec), lambda);
  } else if (kind == "matrix-units") {
    result = isg::matrix_units(lambda);
  } else if (kind == "rees") {
    result = isg::rees_matrix(resolve_group(group_spec), parse_sandwich(sandwich));
  } else if (kind == "cyclic") {
    result = isg::cyclic_group(n);
  } else if (kind == "inverse-symmetric") {
    result = isg::inverse_symmetric_monoid(n);
  } else if (kind == "adjoin-zero") {
    result = isg::adjoin_zero(isg::load_semigroup(input));
  } else if (kind == "adjoin-identity") {
    result = isg::adjoin_identity(isg::load_semigroup(input));
  } else {
    std::cerr << "error: unknown construction '" << kind << "'\n";
    return kExitError;
  }
  isg::store_semigroup(result, output);
  return kExitVerified;
}

int cmd_analyze(const std::string& input, bool as_json) {
  const auto s = isg::load_semigroup(input);
  if (s.order > kAnalyzeBound) {
    throw isg::size_limit_error("analyze: order " + std::to_string(s.order) +
                                " exceeds the bound " + std::to_string(kAnalyzeBound));
  }
  const auto inverse = isg::is_inverse_semigroup(s);
  const auto green = isg::green_relations(s);
  const auto idems = isg::idempotents(s);
  const bool group = isg::is_group(s);
  const bool zero_simple = s.zero && isg::is_0_simple(s);
  const bool c0s_inverse = s.zero && isg::is_completely_0_simple_inverse(s);

  json report;
  report["digest"] = isg::document_digest(s);
  report["order"] = s.order;
  json flags;
  flags["inverse"] = inverse.ok;
  flags["0-simple"] = s.zero ? json(zero_simple) : json(nullptr);
  flags["completely-0-simple"] = s.zero ? json(c0s_inverse) : json(nullptr);
  flags["group"] = group;
  json witnesses = json::object();
  if (inverse.irregular) witnesses["irregular-element"] = *inverse.irregular;
  if (inverse.idempotent_pair) {
    witnesses["non-commuting-idempotents"] =
        json::array({inverse.idempotent_pair->first, inverse.idempotent_pair->second});
  }
  if (s.order >= 2 && s.order <= kCongruenceFreeBound) {
    const auto free = isg::is_congruence_free(s);
    flags["congruence-free"] = free.congruence_free;
    if (free.witness) {
      witnesses["proper-congruence-blocks"] = free.witness->num_blocks;
    }
  } else {
    flags["congruence-free"] = nullptr;  // skipped: out of bounds
  }
  report["flags"] = std::move(flags);
  report["idempotents"] = idems.size();
  report["green"] = {{"r", green.num_r},
                     {"l", green.num_l},
                     {"h", green.num_h},
                     {"d", green.num_d},
                     {"j", green.num_j}};
  if (c0s_inverse) {
    const auto dec = isg::decompose_brandt(s);
    report["decomposition"] = {{"lambda", dec.lambda},
                               {"group-order", dec.group.order}};
  }
  report["witnesses"] = std::move(witnesses);

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "digest:               " << report["digest"].get<std::string>() << "\n"
              << "order:                " << s.order << "\n"
              << "inverse:              " << (inverse.ok ? "yes" : "no") << "\n"
              << "0-simple:             "
              << (s.zero ? (zero_simple ? "yes" : "no") : "n/a (no zero)") << "\n"
              << "completely-0-simple:  "
              << (s.zero ? (c0s_inverse ? "yes" : "no") : "n/a (no zero)") << "\n"
              << "congruence-free:      "
              << (report["flags"]["congruence-free"].is_null()
                      ? "skipped"
                      : (report["flags"]["congruence-free"].get<bool>() ? "yes" : "no"))
              << "\n"
              << "group:                " << (group ? "yes" : "no") << "\n"
              << "idempotents:          " << idems.size() << "\n"
              << "green classes r/l/h/d/j: " << green.num_r << "/" << green.num_l
              << "/" << green.num_h << "/" << green.num_d << "/" << green.num_j
              << "\n";
    if (c0s_inverse) {
      std::cout << "decomposition:        lambda=" << report["decomposition"]["lambda"]
                << " group-order=" << report["decomposition"]["group-order"] << "\n";
    }
  }
  return kExitVerified;
}

int cmd_decompose(const std::string& input, bool as_json,
                  const std::string& group_out) {
  const auto s = isg::load_semigroup(input);
  if (!s.zero || !isg::is_completely_0_simple_inverse(s)) {
    std::cerr << "refuted: input is not a completely 0-simple inverse semigroup\n";
    return kExitRefuted;
  }
  const auto dec = isg::decompose_brandt(s);
  if (!group_out.empty()) {
    isg::store_semigroup(dec.group, group_out);
  }
  if (as_json) {
    json report;
    report["lambda"] = dec.lambda;
    report["group-order"] = dec.group.order;
    report["group-elements"] = dec.group_elements;
    report["iso"] = dec.iso.image;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "lambda:      " << dec.lambda << "\n"
              << "group order: " << dec.group.order << "\n"
              << "iso:        ";
    for (int v : dec.iso.image) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitVerified;
}

int cmd_congruences(const std::string& input, bool list, bool check_free,
                    bool as_json) {
  const auto s = isg::load_semigroup(input);
  if (check_free) {
    const auto result = isg::is_congruence_free(s);
    if (as_json) {
      json report;
      report["congruence-free"] = result.congruence_free;
      if (result.witness) report["witness-blocks"] = result.witness->blocks();
      std::cout << report.dump(2) << "\n";
    } else if (result.congruence_free) {
      std::cout << "congruence-free: yes\n";
    } else {
      std::cout << "congruence-free: no (witness with "
                << result.witness->num_blocks << " blocks)\n";
    }
    return result.congruence_free ? kExitVerified : kExitRefuted;
  }
  const auto lattice =
      isg::all_congruences(s, env_bound("ISG_LATTICE_BOUND", isg::kDefaultLatticeBound));
  if (as_json) {
    json report;
    report["count"] = lattice.congruences.size();
    json items = json::array();
    for (const auto& c : lattice.congruences) items.push_back(c.blocks());
    report["congruences"] = std::move(items);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << lattice.congruences.size() << " congruences\n";
    for (const auto& c : lattice.congruences) {
      for (const auto& block : c.blocks()) {
        std::cout << "{";
        for (size_t i = 0; i < block.size(); ++i) {
          std::cout << (i ? "," : "") << block[i];
        }
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
  return kExitVerified;
}

int cmd_bicyclic(const std::string& op, const std::vector<std::string>& args) {
  if (op == "mul") {
    if (args.size() != 2) {
      std::cerr << "usage: bicyclic mul X Y\n";
      return kExitError;
    }
    std::cout << isg::bicyclic_format(isg::bicyclic_mul(isg::bicyclic_parse(args[0]),
                                                        isg::bicyclic_parse(args[1])))
              << "\n";
    return kExitVerified;
  }
  if (op == "inv") {
    if (args.size() != 1) {
      std::cerr << "usage: bicyclic inv X\n";
      return kExitError;
    }
    std::cout << isg::bicyclic_format(isg::bicyclic_inverse(isg::bicyclic_parse(args[0])))
              << "\n";
    return kExitVerified;
  }
  if (op == "idem") {
    if (args.size() != 1) {
      std::cerr << "usage: bicyclic idem X\n";
      return kExitError;
    }
    const bool idem = isg::bicyclic_is_idempotent(isg::bicyclic_parse(args[0]));
    std::cout << (idem ? "yes" : "no") << "\n";
    return idem ? kExitVerified : kExitRefuted;
  }
  std::cerr << "error: unknown bicyclic operation '" << op << "'\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup toolbox"};
  app.require_subcommand(1);

  std::string kind, group_spec = "trivial", sandwich, input = "-", output = "-";
  std::string group_out;
  int lambda = 1, n = 1;
  bool as_json = false, list = false, check_free = false;

  auto* construct = app.add_subcommand("construct", "build a semigroup document");
  construct->add_option("kind", kind,
                        "brandt | matrix-units | rees | cyclic | "
                        "inverse-symmetric | adjoin-zero | adjoin-identity")
      ->required();
  construct->add_option("--group", group_spec, "cyclic:N | klein | trivial | PATH");
  construct->add_option("--lambda", lambda, "Brandt extension size");
  construct->add_option("--n", n, "order / point count");
  construct->add_option("--sandwich", sandwich, "rows ';'-separated, '-' = zero");
  construct->add_option("--input", input, "input document for adjunctions");
  construct->add_option("-o,--output", output, "output path ('-' = stdout)");

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  std::string analyze_input = "-";
  analyze->add_option("input", analyze_input, "semigroup document ('-' = stdin)");
  analyze->add_flag("--json", as_json, "machine-readable output");

  auto* decompose = app.add_subcommand("decompose", "Brandt decomposition");
  std::string decompose_input = "-";
  decompose->add_option("input", decompose_input, "semigroup document");
  decompose->add_flag("--json", as_json, "machine-readable output");
  decompose->add_option("--group-out", group_out, "store the recovered group here");

  auto* congruences = app.add_subcommand("congruences", "congruence computations");
  std::string congruences_input = "-";
  congruences->add_option("input", congruences_input, "semigroup document");
  congruences->add_flag("--list", list, "enumerate the congruence lattice");
  congruences->add_flag("--check-free", check_free, "decide congruence-freeness");
  congruences->add_flag("--json", as_json, "machine-readable output");

  auto* bicyclic = app.add_subcommand("bicyclic", "bicyclic monoid arithmetic");
  std::string bi_op;
  std::vector<std::string> bi_args;
  bicyclic->add_option("op", bi_op, "mul | inv | idem")->required();
  bicyclic->add_option("args", bi_args, "operands in q^a p^b notation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(kind, group_spec, lambda, n, sandwich, input, output);
    }
    if (analyze->parsed()) return cmd_analyze(analyze_input, as_json);
    if (decompose->parsed()) return cmd_decompose(decompose_input, as_json, group_out);
    if (congruences->parsed()) {
      if (list == check_free) {
        std::cerr << "error: pass exactly one of --list / --check-free\n";
        return kExitError;
      }
      return cmd_congruences(congruences_input, list, check_free, as_json);
    }
    if (bicyclic->parsed()) return cmd_bicyclic(bi_op, bi_args);
  } catch (const isg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
