#pragma once

#include <filesystem>
#include <string>

#include "smellvuln/model.hpp"

namespace smellvuln {

inline constexpr int kFactsSchema = 1;

/// Serializes a model as facts JSON. Output is byte-stable for equal models.
std::string facts_to_json(const CodeFactsModel& model);

/// Parses facts JSON. Throws ModelError naming the offending record and
/// field on any schema or invariant violation.
CodeFactsModel facts_from_json(const std::string& text);

void write_facts(const CodeFactsModel& model, const std::filesystem::path& path);
CodeFactsModel read_facts(const std::filesystem::path& path);

} // namespace smellvuln
