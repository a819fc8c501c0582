#include "key_value.hpp"

#include <fmt/format.h>

#include "smellvuln/error.hpp"

namespace smellvuln {

std::string_view trim(std::string_view text)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return text.substr(first, text.find_last_not_of(ws) - first + 1);
}

std::vector<KeyValue> parse_key_values(std::string_view text, std::string_view what)
{
    std::vector<KeyValue> out;
    int number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw InputError(fmt::format("{} line {}: expected key = value", what, number));
        KeyValue kv{number, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
        if (kv.key.empty()) throw InputError(fmt::format("{} line {}: empty key", what, number));
        out.push_back(std::move(kv));
    }
    return out;
}

} // namespace smellvuln
