#ifndef SCHEMELAB_CSV_HPP
#define SCHEMELAB_CSV_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace schemelab {

// 17 significant digits, '.' decimal separator, locale-independent.
std::string format_double(double x);
std::string format_int(long long x);

// Comma-separated table with a header row and LF line endings. Values are
// kept as strings so that parse -> emit is the identity.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& out) const;
  std::string to_string() const;

  static CsvTable read(std::istream& in);
  static CsvTable read_string(const std::string& text);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace schemelab

#endif
