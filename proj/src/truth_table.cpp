#include "ptrev/truth_table.hpp"

#include <algorithm>
#include <sstream>

#include "ptrev/error.hpp"

namespace ptrev {

Bits to_bits(std::uint64_t value, std::size_t width) {
  Bits out(width);
  for (std::size_t i = 0; i < width; ++i) out[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  return out;
}

std::uint64_t from_bits(const Bits& bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b & 1U);
  return v;
}

std::string bits_string(const Bits& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

std::string bits_tuple(const Bits& bits) {
  std::string s = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) s += ',';
    s += bits[i] ? '1' : '0';
  }
  return s + ")";
}

TruthTable::TruthTable(std::vector<std::string> input_labels, std::vector<std::string> output_labels,
                       std::vector<Bits> rows)
    : input_labels_(std::move(input_labels)), output_labels_(std::move(output_labels)), rows_(std::move(rows)) {
  if (input_labels_.size() >= 32) throw Error(ErrorKind::InvalidArgument, "truth table too wide");
  if (rows_.size() != (std::size_t{1} << input_labels_.size())) {
    throw Error(ErrorKind::InvalidArgument, "truth table needs 2^" + std::to_string(input_labels_.size()) +
                                                " rows, got " + std::to_string(rows_.size()));
  }
  for (const auto& r : rows_) {
    if (r.size() != output_labels_.size()) throw Error(ErrorKind::InvalidArgument, "truth table row width mismatch");
  }
}

TruthTable TruthTable::from_function(std::vector<std::string> input_labels, std::vector<std::string> output_labels,
                                     const std::function<Bits(const Bits&)>& fn) {
  const std::size_t n = input_labels.size();
  std::vector<Bits> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) rows.push_back(fn(to_bits(i, n)));
  return TruthTable(std::move(input_labels), std::move(output_labels), std::move(rows));
}

const Bits& TruthTable::output(const Bits& in) const {
  if (in.size() != input_width()) throw Error(ErrorKind::ArityMismatch, "input vector width mismatch");
  return rows_.at(from_bits(in));
}

TruthTable TruthTable::relabeled(std::vector<std::string> input_labels, std::vector<std::string> output_labels) const {
  return TruthTable(std::move(input_labels), std::move(output_labels), rows_);
}

TruthTable compose(const TruthTable& first, const TruthTable& second) {
  if (first.output_width() != second.input_width()) {
    throw Error(ErrorKind::ArityMismatch, "cannot compose tables of widths " + std::to_string(first.output_width()) +
                                              " and " + std::to_string(second.input_width()));
  }
  std::vector<Bits> rows;
  for (const auto& mid : first.rows()) rows.push_back(second.output(mid));
  return TruthTable(first.input_labels(), second.output_labels(), std::move(rows));
}

bool is_identity(const TruthTable& t) {
  if (t.input_width() != t.output_width()) return false;
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    if (t.output(i) != t.input(i)) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> widths(const std::vector<std::string>& labels) {
  std::vector<std::size_t> w;
  for (const auto& l : labels) w.push_back(std::max<std::size_t>(l.size(), 1));
  return w;
}

void put_cells(std::ostringstream& out, const std::vector<std::string>& cells, const std::vector<std::size_t>& w) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ' ';
    out << std::string(w[i] - cells[i].size(), ' ') << cells[i];
  }
}

std::vector<std::string> cells_of(const Bits& bits) {
  std::vector<std::string> c;
  for (auto b : bits) c.emplace_back(b ? "1" : "0");
  return c;
}

}  // namespace

std::string format_table(const TruthTable& t) {
  const auto wi = widths(t.input_labels());
  const auto wo = widths(t.output_labels());
  std::ostringstream out;
  put_cells(out, t.input_labels(), wi);
  out << " | ";
  put_cells(out, t.output_labels(), wo);
  out << '\n';
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    put_cells(out, cells_of(t.input(r)), wi);
    out << " | ";
    put_cells(out, cells_of(t.output(r)), wo);
    out << '\n';
  }
  return out.str();
}

std::string format_rows(const TruthTable& t) {
  std::ostringstream out;
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    out << bits_string(t.input(r)) << " -> " << bits_string(t.output(r)) << '\n';
  }
  return out.str();
}

}  // namespace ptrev
