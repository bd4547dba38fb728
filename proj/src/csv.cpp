#include "schemelab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schemelab {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_int(long long x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%lld", x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CsvTable: empty header");
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::invalid_argument("CsvTable: row width mismatch");
  rows_.push_back(std::move(row));
}

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

void CsvTable::write(std::ostream& out) const {
  write_line(out, header_);
  for (const auto& row : rows_) write_line(out, row);
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

CsvTable CsvTable::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CsvTable: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  CsvTable table(split_line(line));
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    table.add_row(split_line(line));
  }
  return table;
}

CsvTable CsvTable::read_string(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace schemelab
