#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace syncode {

/// One parsed CSV record (line) as raw field strings.
using CsvRow = std::vector<std::string>;

/// Parse an RFC 4180 CSV stream: quoted fields, doubled-quote escapes,
/// embedded commas/newlines inside quotes. LF, CRLF and CR line endings are
/// treated identically; a UTF-8 BOM at the start is stripped. Rows that are
/// completely empty are dropped.
std::vector<CsvRow> parse_csv(std::istream& in);
std::vector<CsvRow> parse_csv(std::string_view text);

/// Quote a field iff it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

/// Join fields into one CSV line (no trailing newline).
std::string csv_line(const CsvRow& fields);

/// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

/// Fixed-precision decimal string, locale-independent.
std::string format_double(double v, int precision);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit digest of a byte string, as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

} // namespace syncode
