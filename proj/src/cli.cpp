#include "snr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "snr/boolean_map.hpp"
#include "snr/core.hpp"
#include "snr/errors.hpp"
#include "snr/formal.hpp"
#include "snr/lattice.hpp"
#include "snr/system.hpp"
#include "snr/weights.hpp"

namespace snr {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
}

struct BoundMap {
  SnrLattice lattice;
  PartialMap map;
};

BoundMap load_map(const std::string& path) {
  const MapData data = parse_map(slurp(path));
  SnrLattice lattice = build_lattice(data.params);
  PartialMap map = bind_map(data, lattice);
  return {std::move(lattice), std::move(map)};
}

std::string map_text(const SnrLattice& lattice, const PartialMap& map) {
  std::ostringstream out;
  write_map(out, lattice, map);
  return out.str();
}

std::string system_text(const NrSystem& system) {
  std::ostringstream out;
  write_system(out, system);
  return out.str();
}

// Hasse diagram; node fill green/red/gray by sign, edges point upward.
std::string dot_text(const SnrLattice& lattice, const PartialMap* map) {
  const Sip& sip = lattice.sip();
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const char* color = "gray";
    if (map != nullptr && map->contains(x)) {
      color = map->at(x) == Sign::P ? "green" : "red";
    }
    out << "  \"" << format_string(lattice.at(x)) << "\" [fillcolor=" << color << "];\n";
  }
  for (const IndexPair& edge : cover_edges(sip.poset)) {
    out << "  \"" << format_string(lattice.at(edge.first)) << "\" -> \""
        << format_string(lattice.at(edge.second)) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

json witness_json(const WeightFunction& f) {
  const SnrParams params = f.params();
  json witness = json::object();
  for (int i = 1; i <= params.r; ++i) {
    witness["x" + std::to_string(i)] = format_rational(f.tilde(i));
  }
  for (int j = 1; j <= params.bars(); ++j) {
    witness["y" + std::to_string(j)] = format_rational(f.bar(j));
  }
  return witness;
}

std::vector<std::string> map_lines(const SnrLattice& lattice, const PartialMap& map) {
  std::istringstream in(map_text(lattice, map));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int command_lattice(int n, int r, bool list, const std::string& dot_path, std::ostream& out) {
  const SnrLattice lattice = build_lattice({n, r});
  out << "snr " << n << ' ' << r << '\n';
  out << "elements " << lattice.size() << '\n';
  out << "min " << format_string(lattice.min_string()) << '\n';
  out << "max " << format_string(lattice.max_string()) << '\n';
  if (list) {
    for (std::size_t x = 0; x < lattice.size(); ++x) {
      out << format_string(lattice.at(x)) << '\n';
    }
  }
  if (!dot_path.empty()) spill(dot_path, dot_text(lattice, nullptr));
  return 0;
}

int command_core(const std::string& map_path, std::ostream& out) {
  const BoundMap bound = load_map(map_path);
  const std::size_t full = bound.lattice.index(full_string(bound.lattice.params()));
  if (!bound.map.contains(full)) {
    throw Error("cannot auto-detect the family: the all-symbols string is unassigned");
  }
  const CoreReport report = bound.map.at(full) == Sign::P
                                ? fundamental_core_plus(bound.lattice.sip(), bound.map)
                                : fundamental_core_minus(bound.lattice.sip(), bound.map);
  out << map_text(bound.lattice, report.core);
  return 0;
}

CorePair pair_of(const PartialMap& map) { return {map.positives(), map.negatives()}; }

int command_span(const std::string& basis_path, const std::string& family, std::ostream& out) {
  const BoundMap bound = load_map(basis_path);
  const CorePair pair = pair_of(bound.map);
  const PartialMap spanned = family == "wplus" ? span_plus(bound.lattice.sip(), pair)
                                               : span_minus(bound.lattice.sip(), pair);
  out << map_text(bound.lattice, spanned);
  return 0;
}

int command_basis_check(const std::string& basis_path, const std::string& family,
                        std::ostream& out) {
  const BoundMap bound = load_map(basis_path);
  const CorePair pair = pair_of(bound.map);
  const BasisCheck check = family == "wplus" ? check_w_basis_plus(bound.lattice.sip(), pair)
                                             : check_w_basis_minus(bound.lattice.sip(), pair);
  if (check.ok) {
    out << "pass\n";
  } else {
    out << "fail " << basis_axiom_name(check.failed) << '\n';
  }
  return 0;
}

int command_system(const std::string& map_path, std::ostream& out) {
  const BoundMap bound = load_map(map_path);
  out << system_text(tau(bound.lattice, bound.map));
  return 0;
}

int command_chi(const std::string& system_path, std::ostream& out) {
  const NrSystem system = parse_system(slurp(system_path));
  const SnrLattice lattice = build_lattice(system.params());
  out << map_text(lattice, chi(system, lattice));
  return 0;
}

int command_feasible(const std::string& system_path, bool with_witness, std::ostream& out) {
  const NrSystem system = parse_system(slurp(system_path));
  const CompatibilityResult result = compatible(system);
  json payload;
  const bool ok = result.fm.verdict == Verdict::FEASIBLE;
  payload["verdict"] = ok ? "FEASIBLE" : "INFEASIBLE";
  if (ok && with_witness) payload["witness"] = witness_json(*result.solution);
  out << payload.dump(2) << '\n';
  return ok ? 0 : 2;
}

int command_generative(const std::string& system_path, const std::string& out_path,
                       std::ostream& out) {
  const NrSystem system = parse_system(slurp(system_path));
  const GenerativeResult result = is_generative(system);
  json payload;
  if (result.verdict == GenerativeVerdict::GENERATIVE) {
    payload["verdict"] = "GENERATIVE";
    payload["total_rows"] = result.total_system->rows().size();
    if (!out_path.empty()) {
      spill(out_path, system_text(*result.total_system));
      payload["out"] = out_path;
    }
  } else {
    payload["verdict"] = "NOT_GENERATIVE";
    payload["witness"] = format_string(*result.witness);
  }
  out << payload.dump(2) << '\n';
  return 0;
}

int command_classify(const std::string& map_path, std::ostream& out) {
  const BoundMap bound = load_map(map_path);
  json payload;
  for (MapFamily family : {MapFamily::OP, MapFamily::W_PLUS, MapFamily::W_MINUS,
                           MapFamily::W_PLUS_NR, MapFamily::W_MINUS_NR, MapFamily::B_NR,
                           MapFamily::BT_NR}) {
    payload[family_name(family)] = classify(bound.lattice, bound.map, family);
  }
  payload["fc-plus"] = in_fc_plus(bound.lattice, bound.map);
  payload["fc-minus"] = in_fc_minus(bound.lattice, bound.map);
  payload["pointwise"] = is_complemented_pointwise(bound.lattice, bound.map).ok;
  out << payload.dump(2) << '\n';
  return 0;
}

int command_enumerate(int n, int r, const std::string& family, bool count_only,
                      std::size_t cap, std::ostream& out) {
  const SnrLattice lattice = build_lattice({n, r});
  const MapFamily parsed = parse_family(family);
  std::size_t count = 0;
  for_each_family_member(
      lattice, parsed,
      [&](const PartialMap& map) {
        ++count;
        if (!count_only) {
          if (count > 1) out << '\n';
          out << map_text(lattice, map);
        }
        return true;
      },
      cap);
  if (count_only) out << "count " << count << '\n';
  return 0;
}

int command_conjecture(int n, int r, const std::string& which, std::ostream& out) {
  const SnrLattice lattice = build_lattice({n, r});
  const ConjectureReport report = conjecture_scan(lattice, which == "q2");
  json payload;
  payload["which"] = which;
  payload["n"] = n;
  payload["r"] = r;
  payload["family"] = report.family_count;
  payload["fc"] = report.fc_count;
  payload["compatible"] = report.compatible_count;
  payload["verdict"] = report.verdict == ConjectureVerdict::EQUAL ? "EQUAL" : "STRICT";
  if (report.witness) {
    payload["witness"] = map_lines(lattice, *report.witness);
  }
  out << payload.dump(2) << '\n';
  return 0;
}

int command_dot(const std::string& map_path, const std::string& out_path) {
  const BoundMap bound = load_map(map_path);
  spill(out_path, dot_text(bound.lattice, &bound.map));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"signed-string lattices, boolean maps, and inequality systems"};
  app.name("snr");
  app.require_subcommand(1);

  int n = 0, r = 0;
  std::string map_path, basis_path, system_path, family, which, out_path, dot_path;
  bool list = false, with_witness = false, count_only = false;
  std::size_t enumerate_cap = 32;

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "describe a signed-string lattice");
  lattice_cmd->add_option("--n", n)->required();
  lattice_cmd->add_option("--r", r)->required();
  lattice_cmd->add_flag("--list", list, "list every string");
  lattice_cmd->add_option("--dot", dot_path, "write an uncolored Hasse diagram here");

  CLI::App* core_cmd = app.add_subcommand("core", "fundamental core of a total weighted map");
  core_cmd->add_option("--map", map_path)->required();

  CLI::App* span_cmd = app.add_subcommand("span", "total map spanned by a basis");
  span_cmd->add_option("--basis", basis_path)->required();
  span_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"wplus", "wminus"}));

  CLI::App* basis_cmd = app.add_subcommand("basis-check", "verify the basis axioms");
  basis_cmd->add_option("--basis", basis_path)->required();
  basis_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"wplus", "wminus"}));

  CLI::App* system_cmd = app.add_subcommand("system", "inequality system of a map");
  system_cmd->add_option("--map", map_path)->required();

  CLI::App* chi_cmd = app.add_subcommand("chi", "map of an inequality system");
  chi_cmd->add_option("--system", system_path)->required();

  CLI::App* feasible_cmd = app.add_subcommand("feasible", "decide solvability");
  feasible_cmd->add_option("--system", system_path)->required();
  feasible_cmd->add_flag("--witness", with_witness, "include an exact solution");

  CLI::App* generative_cmd = app.add_subcommand("generative", "probe extension to a total system");
  generative_cmd->add_option("--system", system_path)->required();
  generative_cmd->add_option("--out", out_path, "write the generated total system here");

  CLI::App* classify_cmd = app.add_subcommand("classify", "family membership of a map");
  classify_cmd->add_option("--map", map_path)->required();

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream a weighted family");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--r", r)->required();
  enumerate_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"wplus", "wminus", "wplus-nr", "wminus-nr"}));
  enumerate_cmd->add_flag("--count-only", count_only, "print the member count only");
  enumerate_cmd->add_option("--cap", enumerate_cap, "element-count cap (default 32)");

  CLI::App* conjecture_cmd = app.add_subcommand("conjecture", "formal-vs-actual compatibility scan");
  conjecture_cmd->add_option("--n", n)->required();
  conjecture_cmd->add_option("--r", r)->required();
  conjecture_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"q2", "q3"}));

  CLI::App* dot_cmd = app.add_subcommand("dot", "colored Hasse diagram of a map");
  dot_cmd->add_option("--map", map_path)->required();
  dot_cmd->add_option("--out", out_path)->required();

  std::vector<const char*> argv;
  argv.push_back("snr");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (lattice_cmd->parsed()) return command_lattice(n, r, list, dot_path, out);
    if (core_cmd->parsed()) return command_core(map_path, out);
    if (span_cmd->parsed()) return command_span(basis_path, family, out);
    if (basis_cmd->parsed()) return command_basis_check(basis_path, family, out);
    if (system_cmd->parsed()) return command_system(map_path, out);
    if (chi_cmd->parsed()) return command_chi(system_path, out);
    if (feasible_cmd->parsed()) return command_feasible(system_path, with_witness, out);
    if (generative_cmd->parsed()) return command_generative(system_path, out_path, out);
    if (classify_cmd->parsed()) return command_classify(map_path, out);
    if (enumerate_cmd->parsed()) {
      return command_enumerate(n, r, family, count_only, enumerate_cap, out);
    }
    if (conjecture_cmd->parsed()) return command_conjecture(n, r, which, out);
    if (dot_cmd->parsed()) return command_dot(map_path, out_path);
    err << "error: no command selected\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace snr
