#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ptrev {

/// Bit vector, most significant bit first. Elements are 0 or 1.
using Bits = std::vector<std::uint8_t>;

Bits to_bits(std::uint64_t value, std::size_t width);
std::uint64_t from_bits(const Bits& bits);
/// "0110"
std::string bits_string(const Bits& bits);
/// "(0,1,1,0)"
std::string bits_tuple(const Bits& bits);

/// Complete input -> output map over 2^n binary input vectors. Row i holds
/// the outputs for input vector to_bits(i, n).
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(std::vector<std::string> input_labels, std::vector<std::string> output_labels,
             std::vector<Bits> rows);

  /// Builds the table of `fn` by enumeration.
  static TruthTable from_function(std::vector<std::string> input_labels,
                                  std::vector<std::string> output_labels,
                                  const std::function<Bits(const Bits&)>& fn);

  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }
  std::size_t input_width() const { return input_labels_.size(); }
  std::size_t output_width() const { return output_labels_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  Bits input(std::size_t row) const { return to_bits(row, input_width()); }
  const Bits& output(std::size_t row) const { return rows_.at(row); }
  const Bits& output(const Bits& in) const;
  const std::vector<Bits>& rows() const { return rows_; }

  TruthTable relabeled(std::vector<std::string> input_labels, std::vector<std::string> output_labels) const;

  /// Same mapping, labels ignored.
  bool same_mapping(const TruthTable& other) const { return rows_ == other.rows_; }
  bool operator==(const TruthTable&) const = default;

 private:
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
  std::vector<Bits> rows_;
};

/// `second` applied after `first`; widths must chain.
TruthTable compose(const TruthTable& first, const TruthTable& second);
bool is_identity(const TruthTable& t);

/// Aligned columns, e.g.
///   A B | P Q
///   0 1 | 0 1
std::string format_table(const TruthTable& t);
/// One "inputs -> outputs" line per row, e.g. "01 -> 01".
std::string format_rows(const TruthTable& t);

}  // namespace ptrev
