#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace smellvuln {

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

/// Joins escaped fields with commas and appends '\n'.
std::string csv_row(const std::vector<std::string>& fields);

/// RFC 4180 reader. Accepts LF or CRLF line ends; a trailing newline does not
/// produce an empty record. Throws InputError on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

} // namespace smellvuln
