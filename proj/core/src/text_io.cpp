#include "text_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "smellvuln/error.hpp"

namespace smellvuln {

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
    out << text;
    if (!out.flush()) throw InputError(fmt::format("write to '{}' failed", path.string()));
}

} // namespace smellvuln
