#include "ptrev/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ptrev/adder_circuits.hpp"
#include "ptrev/error.hpp"
#include "ptrev/gate_library.hpp"
#include "ptrev/netlist_io.hpp"
#include "ptrev/pass_algebra.hpp"
#include "ptrev/simulator.hpp"
#include "ptrev/tech_library.hpp"

namespace ptrev::cli {

namespace {

using json = nlohmann::ordered_json;

struct Target {
  std::string name;
  Netlist netlist;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
};

// Built-in gate, built-in circuit, or a netlist file.
Target resolve(const std::string& spec) {
  if (auto k = parse_gate_kind(spec)) {
    return {spec, build_gate(*k), gate_input_labels(*k), gate_output_labels(*k)};
  }
  if (spec == "fulladder") return {spec, build_full_adder(), {"A", "B", "Ci", "P"}, {"S", "Co", "G1", "G2"}};
  if (spec == "ripple4") {
    auto n = build_ripple4();
    return {spec, n, n.primary_inputs(), n.primary_outputs()};
  }
  if (spec == "bcdadder") {
    auto n = build_bcd_adder();
    return {spec, n, n.primary_inputs(), {"K", "d3", "d2", "d1", "d0"}};
  }
  if (!std::filesystem::exists(spec)) {
    throw Error(ErrorKind::InvalidArgument, "'" + spec + "' is neither a built-in gate/circuit nor a file");
  }
  auto n = read_netlist_file(spec);
  return {spec, n, n.primary_inputs(), n.primary_outputs()};
}

TruthTable table_of(const Target& t) {
  return extract_truth_table(t.netlist).relabeled(t.input_labels, t.output_labels);
}

json bits_json(const Bits& b) {
  json a = json::array();
  for (auto v : b) a.push_back(int(v));
  return a;
}

int cmd_truth_table(const Target& t, const std::string& format, std::ostream& out) {
  const auto table = table_of(t);
  if (format == "json") {
    json j{{"circuit", t.name}, {"inputs", table.input_labels()}, {"outputs", table.output_labels()}};
    json rows = json::array();
    for (std::size_t r = 0; r < table.row_count(); ++r) {
      rows.push_back({{"in", bits_json(table.input(r))}, {"out", bits_json(table.output(r))}});
    }
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else if (format == "rows") {
    out << format_rows(table);
  } else {
    out << format_table(table);
  }
  return kOk;
}

int cmd_verify(const Target& t, const std::string& format, std::ostream& out) {
  const auto table = table_of(t);
  const auto report = is_reversible(table);
  if (format == "json") {
    json j{{"circuit", t.name}, {"reversible", report.injective}, {"rows", table.row_count()}};
    json collisions = json::array();
    for (const auto& c : report.collisions) {
      json pre = json::array();
      for (const auto& p : c.preimages) pre.push_back(bits_json(p));
      collisions.push_back({{"output", bits_json(c.output)}, {"preimages", pre}});
    }
    j["collisions"] = collisions;
    json inverse = json::array();
    for (const auto& [o, i] : report.inverse) inverse.push_back({{"output", bits_json(o)}, {"input", bits_json(i)}});
    j["inverse"] = inverse;
    out << j.dump(2) << '\n';
  } else {
    std::size_t distinct = report.inverse.size();
    if (!report.injective) {
      std::set<Bits> images(table.rows().begin(), table.rows().end());
      distinct = images.size();
    }
    out << t.name << ": " << (report.injective ? "reversible" : "NOT reversible") << " (" << table.row_count()
        << " rows, " << distinct << " distinct outputs)\n";
    for (const auto& c : report.collisions) {
      out << "collision " << bits_tuple(c.output) << " <- {";
      for (std::size_t i = 0; i < c.preimages.size(); ++i) out << (i ? "," : "") << bits_tuple(c.preimages[i]);
      out << "}\n";
    }
    for (const auto& [o, i] : report.inverse) out << "inverse " << bits_tuple(o) << " -> " << bits_tuple(i) << '\n';
  }
  return report.injective ? kOk : kVerificationFailed;
}

int cmd_simulate(const Target& t, const std::vector<std::string>& sets, const std::string& format,
                 std::ostream& out) {
  Assignment partial;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Parse, "--set expects NODE=VALUE, got '" + s + "'");
    const auto value = parse_signal(s.substr(eq + 1));
    if (!value) throw Error(ErrorKind::Parse, "bad signal value in '" + s + "' (use 0, 1, Z or X)");
    partial[s.substr(0, eq)] = *value;
  }
  const auto& n = t.netlist;
  const auto result = simulate(n, complete_assignment(n, partial));
  const auto values = result.by_name(n);
  if (format == "json") {
    json nodes = json::object();
    for (const auto& [name, v] : values) nodes[name] = std::string(1, to_char(v));
    out << json{{"circuit", t.name}, {"sweeps", result.sweeps}, {"nodes", nodes}}.dump(2) << '\n';
    return kOk;
  }
  std::size_t width = 0;
  for (const auto& [name, v] : values) width = std::max(width, name.size());
  for (const auto& [name, v] : values) out << std::left << std::setw(int(width)) << name << ' ' << to_char(v) << '\n';
  return kOk;
}

int cmd_count(const Target& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json{{"circuit", t.name}, {"transistors", transistor_count(t.netlist)}}.dump(2) << '\n';
  } else {
    out << t.name << ": " << transistor_count(t.netlist) << " transistors\n";
  }
  return kOk;
}

int cmd_compare_cost(const std::string& format, std::ostream& out) {
  const auto& lib = TechLibrary::standard();
  const auto fa = full_adder_gates();
  const int fa_nmos = circuit_cost(fa, Technology::Nmos);
  const int fa_cmos = circuit_cost(fa, Technology::Cmos);
  const double ratio = double(fa_nmos) / double(fa_cmos);
  const int bcd_reference = bcd_reference_decomposition_cost(Technology::Nmos);
  const int bcd_full = int(transistor_count(build_bcd_adder()));

  if (format == "json") {
    json gates = json::array();
    for (auto k : kAllGateKinds) {
      json row{{"gate", gate_name(k)}, {"nmos", *lib.count(k, Technology::Nmos)}};
      auto cmos = lib.count(k, Technology::Cmos);
      row["cmos"] = cmos ? json(*cmos) : json(nullptr);
      row["built_nmos"] = transistor_count(build_gate(k));
      gates.push_back(row);
    }
    json j{{"gates", gates},
           {"full_adder", {{"nmos", fa_nmos}, {"cmos", fa_cmos}, {"ratio", ratio},
                           {"built_nmos", transistor_count(build_full_adder())}}},
           {"bcd", {{"reference_decomposition_nmos", bcd_reference},
                    {"full_circuit_nmos", bcd_full},
                    {"cmos", nullptr}}}};
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << std::left << std::setw(27) << "gate" << std::right << std::setw(6) << "NMOS" << std::setw(6) << "CMOS"
      << std::setw(7) << "built" << '\n';
  for (auto k : kAllGateKinds) {
    const auto cmos = lib.count(k, Technology::Cmos);
    out << std::left << std::setw(27) << gate_title(k) << std::right << std::setw(6)
        << *lib.count(k, Technology::Nmos) << std::setw(6) << (cmos ? std::to_string(*cmos) : "-") << std::setw(7)
        << transistor_count(build_gate(k)) << '\n';
  }
  std::ostringstream r;
  r << std::fixed << std::setprecision(3) << ratio;
  out << '\n'
      << "full adder: NMOS " << fa_nmos << ", CMOS " << fa_cmos << '\n'
      << "full adder NMOS/CMOS ratio: " << r.str() << " (" << fa_nmos << "/" << fa_cmos << ")\n"
      << "full adder built netlist: " << transistor_count(build_full_adder()) << " transistors\n"
      << "BCD correction (reference decomposition): " << bcd_reference << '\n'
      << "BCD adder (full circuit): " << bcd_full << '\n'
      << "BCD adder CMOS total: not available (no CMOS cost for NPG), so no BCD NMOS/CMOS ratio is reported\n";
  return kOk;
}

int cmd_bcd_check(const std::string& netlist_file, const std::string& format, std::ostream& out) {
  const Netlist adder = netlist_file.empty() ? build_bcd_adder() : read_netlist_file(netlist_file);
  int passed = 0;
  std::optional<std::string> counterexample;
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      for (int cin = 0; cin <= 1; ++cin) {
        const auto r = bcd_add_digit(adder, a, b, cin);
        if (r.digit + 10 * r.carry == a + b + cin && r.digit <= 9) {
          ++passed;
        } else if (!counterexample) {
          std::ostringstream c;
          c << "a=" << a << " b=" << b << " cin=" << cin << ": got digit " << r.digit << " carry " << r.carry
            << ", expected " << a + b + cin;
          counterexample = c.str();
        }
      }
    }
  }
  if (format == "json") {
    json j{{"cases", 200}, {"passed", passed}};
    j["counterexample"] = counterexample ? json(*counterexample) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "bcd-check: " << passed << "/200 cases passed\n";
    if (counterexample) out << "first counterexample: " << *counterexample << '\n';
  }
  return counterexample ? kVerificationFailed : kOk;
}

int cmd_compile_expr(const std::string& text, const std::string& output, const std::string& format,
                     std::ostream& out) {
  const auto expr = parse_pass_expr(text);
  const auto normal = normalize(expr);
  const auto net = compile_expr(expr, output);
  if (format == "json") {
    out << json{{"expression", to_string(expr)},
                {"normalized", to_string(normal)},
                {"transistors", transistor_count(net)},
                {"netlist", write_netlist(net)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "# " << output << " = " << to_string(normal) << '\n' << write_netlist(net);
  return kOk;
}

bool is_verification_error(ErrorKind k) {
  return k == ErrorKind::FloatingGate || k == ErrorKind::UndrivenOutput || k == ErrorKind::OutputConflict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Switch-level simulator for NMOS pass-transistor reversible logic", "ptrev"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)));
  };

  std::string target;
  std::vector<std::string> sets;
  std::string expr_text;
  std::string expr_output = "z";
  std::string bcd_netlist;

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one input assignment and print every node");
  simulate_cmd->add_option("circuit", target, "Gate, circuit or netlist file")->required();
  simulate_cmd->add_option("--set", sets, "NODE=VALUE input binding (repeatable)");
  add_format(simulate_cmd, {"text", "json"});

  auto* table_cmd = app.add_subcommand("truth-table", "Print the exhaustive truth table");
  table_cmd->add_option("circuit", target, "Gate, circuit or netlist file")->required();
  add_format(table_cmd, {"text", "rows", "json"});

  auto* verify_cmd = app.add_subcommand("verify-reversible", "Check that the input/output map is a bijection");
  verify_cmd->add_option("circuit", target, "Gate, circuit or netlist file")->required();
  add_format(verify_cmd, {"text", "json"});

  auto* count_cmd = app.add_subcommand("count", "Print the transistor count");
  count_cmd->add_option("circuit", target, "Gate, circuit or netlist file")->required();
  add_format(count_cmd, {"text", "json"});

  auto* cost_cmd = app.add_subcommand("compare-cost", "Compare NMOS and CMOS transistor costs");
  add_format(cost_cmd, {"text", "json"});

  auto* bcd_cmd = app.add_subcommand("bcd-check", "Check all 200 single-digit BCD additions");
  bcd_cmd->add_option("--netlist", bcd_netlist, "Check this netlist instead of the built-in adder");
  add_format(bcd_cmd, {"text", "json"});

  auto* expr_cmd = app.add_subcommand("compile-expr", "Lower a pass expression to a netlist");
  expr_cmd->add_option("expr", expr_text, "Expression, e.g. 'y<a&b> + w<~a>'")->required();
  expr_cmd->add_option("--output", expr_output, "Name of the output node");
  add_format(expr_cmd, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (simulate_cmd->parsed()) return cmd_simulate(resolve(target), sets, format, out);
    if (table_cmd->parsed()) return cmd_truth_table(resolve(target), format, out);
    if (verify_cmd->parsed()) return cmd_verify(resolve(target), format, out);
    if (count_cmd->parsed()) return cmd_count(resolve(target), format, out);
    if (cost_cmd->parsed()) return cmd_compare_cost(format, out);
    if (bcd_cmd->parsed()) return cmd_bcd_check(bcd_netlist, format, out);
    if (expr_cmd->parsed()) return cmd_compile_expr(expr_text, expr_output, format, out);
  } catch (const Error& e) {
    err << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << '\n';
    return is_verification_error(e.kind()) ? kVerificationFailed : kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace ptrev::cli
