#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smellvuln/model.hpp"
#include "smellvuln/stats.hpp"

namespace testsupport {

std::filesystem::path fixture(const std::string& relative);

/// Parses in-memory Java files (path, text) as system "t", version "1".
smellvuln::CodeFactsModel parse_java(const std::vector<std::pair<std::string, std::string>>& files,
                                     unsigned threads = 1);

const smellvuln::ClassEntity& find_class(const smellvuln::CodeFactsModel& model, const std::string& name);
const smellvuln::MethodEntity& find_method(const smellvuln::CodeFactsModel& model, const std::string& name);

/// Random valid model: up to `max_classes` classes over three packages with
/// fields, methods, body facts, inheritance and relations (some external).
smellvuln::CodeFactsModel random_model(std::mt19937_64& rng, int max_classes);

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

std::string slurp(const std::filesystem::path& path);

/// Hand-derived smell labels per class of fixtures/smells under default
/// thresholds. Classes absent from the map must stay clean.
const std::map<std::string, std::set<std::string>>& expected_fixture_smells();

/// Two-sided Fisher p by exact integer enumeration of every table with the
/// observed margins. Requires N <= 60.
double fisher_exact_oracle(const smellvuln::ContingencyTable& t);

/// Nodes that share a cycle with another node, by transitive closure.
std::set<std::string> mutually_reachable(const std::vector<std::string>& nodes,
                                         const std::map<std::string, std::set<std::string>>& out);

/// Random digraph over up to `max_nodes` nodes named n10, n11, ...
std::pair<std::vector<std::string>, std::map<std::string, std::set<std::string>>> random_digraph(std::mt19937_64& rng,
                                                                                                int max_nodes);

} // namespace testsupport
