#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace smellvuln {

std::string_view trim(std::string_view text);

struct KeyValue {
    int line = 0;
    std::string key;
    std::string value;
};

/// Splits `key = value` lines, skipping blanks and `#` comments. Keys may
/// repeat. Throws InputError (prefixed with `what`) on a line without '='.
std::vector<KeyValue> parse_key_values(std::string_view text, std::string_view what);

} // namespace smellvuln
