#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ptrev/netlist.hpp"

namespace ptrev {

// Line-oriented netlist text format:
//
//   node <name>
//   input.pass <name>
//   input.ctl <name>
//   output <name>
//   const <name> <0|1>
//   rail <name> <name>
//   t <gate> <source> <drain>
//
// `#` starts a comment. Names must be declared with `node` before use.

/// Throws Error(Parse) with a "line N:" prefix on any malformed statement.
Netlist parse_netlist(std::string_view text);
Netlist read_netlist_file(const std::filesystem::path& path);

/// Canonical text: nodes, ports, constants, rails, transistors, each in
/// declaration order. parse_netlist(write_netlist(n)) == n.
std::string write_netlist(const Netlist& n);

}  // namespace ptrev
