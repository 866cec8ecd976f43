#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace collabmkt::csv {

using Row = std::vector<std::string>;

/// RFC-4180 parse. Accepts LF, CRLF, or CR line ends; quoted fields may
/// contain separators, line breaks, and "" escapes. Blank lines are
/// skipped. Throws DataError on an unterminated quote; the message names
/// `source` and the line where the quoted field started.
std::vector<Row> parse(std::string_view text, std::string_view source = "<string>");

/// parse() over the file's contents; throws DataError when unreadable.
std::vector<Row> read_file(const std::filesystem::path& path);

/// Field quoted and escaped as needed for embedding in a CSV row.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const Row& row);
std::string to_string(const std::vector<Row>& rows);

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Fixed-point rendering with `decimals` fractional digits.
std::string format_fixed(double v, int decimals);

} // namespace collabmkt::csv
