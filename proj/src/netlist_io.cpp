#include "ptrev/netlist_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ptrev/error.hpp"

namespace ptrev {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

void expect_arity(std::size_t line, const std::vector<std::string>& w, std::size_t n) {
  if (w.size() != n + 1) {
    fail(line, "'" + w[0] + "' takes " + std::to_string(n) + " argument(s), got " + std::to_string(w.size() - 1));
  }
}

}  // namespace

Netlist parse_netlist(std::string_view text) {
  NetlistBuilder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto w = split_words(line);
    if (w.empty()) continue;

    try {
      const auto& kw = w[0];
      if (kw == "node") {
        expect_arity(line_no, w, 1);
        b.node(w[1]);
      } else if (kw == "input.pass") {
        expect_arity(line_no, w, 1);
        b.pass_input(w[1]);
      } else if (kw == "input.ctl") {
        expect_arity(line_no, w, 1);
        b.control_input(w[1]);
      } else if (kw == "output") {
        expect_arity(line_no, w, 1);
        b.output(w[1]);
      } else if (kw == "const") {
        expect_arity(line_no, w, 2);
        if (w[2] != "0" && w[2] != "1") fail(line_no, "constant value must be 0 or 1, got '" + w[2] + "'");
        b.constant(w[1], w[2] == "1");
      } else if (kw == "rail") {
        expect_arity(line_no, w, 2);
        b.rail(w[1], w[2]);
      } else if (kw == "t") {
        expect_arity(line_no, w, 3);
        b.transistor(w[1], w[2], w[3]);
      } else {
        fail(line_no, "unknown statement '" + kw + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      fail(line_no, e.what());
    }
  }
  return std::move(b).build();
}

Netlist read_netlist_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open netlist file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_netlist(buf.str());
}

std::string write_netlist(const Netlist& n) {
  std::ostringstream out;
  for (const auto& node : n.nodes()) out << "node " << node << '\n';
  for (const auto& p : n.ports()) {
    switch (p.kind) {
      case PortKind::PassInput: out << "input.pass "; break;
      case PortKind::ControlInput: out << "input.ctl "; break;
      case PortKind::Output: out << "output "; break;
    }
    out << p.node << '\n';
  }
  for (const auto& [node, value] : n.constants()) out << "const " << node << ' ' << (value ? '1' : '0') << '\n';
  for (const auto& r : n.rail_pairs()) out << "rail " << r.positive << ' ' << r.negative << '\n';
  for (const auto& t : n.transistors()) out << "t " << t.gate << ' ' << t.source << ' ' << t.drain << '\n';
  return out.str();
}

}  // namespace ptrev
