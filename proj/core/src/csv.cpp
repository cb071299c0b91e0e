#include "gossip_age/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gossip_age {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  bool first = true;
  for (auto h : header) {
    if (!first) out_ << ',';
    first = false;
    out_ << h;
  }
  out_ << '\n';
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k != 0) out_ << ',';
    out_ << header[k];
  }
  out_ << '\n';
}

void CsvWriter::throw_column_mismatch(std::size_t got) const {
  throw std::logic_error("CsvWriter: row has " + std::to_string(got) + " fields, header has " +
                         std::to_string(columns_));
}

}  // namespace gossip_age
