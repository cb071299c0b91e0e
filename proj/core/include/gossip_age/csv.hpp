#pragma once

#include <concepts>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gossip_age {

/// Shortest decimal form that parses back to exactly `value`
/// (at most 17 significant digits). "inf", "-inf", "nan" for non-finite.
std::string format_double(double value);

/// Minimal CSV emitter: a header row, then rows with a fixed column count.
/// Fields are written verbatim; callers only emit numbers and identifiers.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  template <typename... Fields>
  void row(const Fields&... fields) {
    if (sizeof...(Fields) != columns_) throw_column_mismatch(sizeof...(Fields));
    bool first = true;
    ((emit(fields, first)), ...);
    out_ << '\n';
  }

 private:
  template <typename T>
  void emit(const T& field, bool& first) {
    if (!first) out_ << ',';
    first = false;
    if constexpr (std::floating_point<T>) {
      out_ << format_double(static_cast<double>(field));
    } else if constexpr (std::same_as<T, bool>) {
      out_ << (field ? 1 : 0);
    } else {
      out_ << field;
    }
  }
  [[noreturn]] void throw_column_mismatch(std::size_t got) const;

  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace gossip_age
