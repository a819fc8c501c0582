#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "smellvuln/corpus.hpp"
#include "smellvuln/error.hpp"
#include "smellvuln/labels.hpp"
#include "support.hpp"

using namespace smellvuln;

namespace {

CodeFactsModel version_with(const std::string& version, const std::vector<std::string>& classes)
{
    std::vector<SourceFile> sources;
    for (const auto& c : classes) sources.push_back({"p/" + c + ".java", "package p; class " + c + " { }"});
    return parse_sources(sources, "tomcat", version, ParseOptions{1});
}

const std::string kHeader = "cve_id,system,affected_version,class_path,severity\n";

} // namespace

TEST_CASE("one row gives one label")
{
    const auto file = parse_labels(kHeader + "CVE-2014-0075,tomcat,7.0.52,org.apache.coyote.http11.filters.ChunkedInputFilter,important\n");
    REQUIRE(file.labels.size() == 1);
    const auto& l = file.labels[0];
    CHECK(l.cve_id == "CVE-2014-0075");
    CHECK(l.system == "tomcat");
    CHECK(l.affected_version == "7.0.52");
    CHECK(l.class_path == "org.apache.coyote.http11.filters.ChunkedInputFilter");
    CHECK(l.severity == std::optional<std::string>("important"));
    CHECK(file.warnings.empty());
}

TEST_CASE("header only and empty severity")
{
    CHECK(parse_labels(kHeader).labels.empty());
    const auto file = parse_labels(kHeader + "CVE-1,tomcat,7,p.A,\n");
    REQUIRE(file.labels.size() == 1);
    CHECK_FALSE(file.labels[0].severity.has_value());
}

TEST_CASE("columns may come in any order")
{
    const auto file = parse_labels("class_path,severity,cve_id,affected_version,system\r\np.A,low,CVE-9,1.0,cxf\r\n");
    REQUIRE(file.labels.size() == 1);
    CHECK(file.labels[0].cve_id == "CVE-9");
    CHECK(file.labels[0].system == "cxf");
    CHECK(file.labels[0].class_path == "p.A");
}

TEST_CASE("identical rows collapse with a warning")
{
    const auto file = parse_labels(kHeader + "CVE-1,tomcat,7,p.A,high\nCVE-1,tomcat,7,p.A,high\n");
    CHECK(file.labels.size() == 1);
    CHECK(file.warnings.size() == 1);
}

TEST_CASE("malformed label files are input errors")
{
    CHECK_THROWS_AS(parse_labels("cve_id,system,affected_version,severity\nCVE-1,t,7,x\n"), InputError);
    CHECK_THROWS_AS(parse_labels(kHeader + ",tomcat,7,p.A,\n"), InputError);
    CHECK_THROWS_AS(parse_labels(kHeader + "CVE-1,tomcat\n"), InputError);
    CHECK_THROWS_AS(load_labels("/nonexistent/labels.csv"), InputError);
}

TEST_CASE("a class labeled in one version is vulnerable once across the release")
{
    const auto v1 = version_with("7.0.50", {"A", "B"});
    const auto v2 = version_with("7.0.52", {"A", "B", "C"});
    const auto v3 = version_with("7.0.54", {"A", "C"});
    const auto file = parse_labels(kHeader + "CVE-1,tomcat,7.0.52,p.A,\n");
    const auto result = assign_status({&v1, &v2, &v3}, file.labels, "tomcat", "7");
    CHECK(result.classes.vulnerable == std::set<std::string>{"p.A"});
    CHECK(result.classes.neutral == std::set<std::string>{"p.B", "p.C"});
    CHECK(result.classes.vuln_count_per_class == std::map<std::string, std::int64_t>{{"p.A", 1}});
    CHECK(result.unmatched.empty());
}

TEST_CASE("two CVEs on one class count twice")
{
    const auto v1 = version_with("1", {"A"});
    const auto v2 = version_with("2", {"A"});
    const auto file = parse_labels(kHeader + "CVE-1,tomcat,1,p.A,\nCVE-2,tomcat,2,p.A,\nCVE-1,tomcat,2,p.A,\n");
    const auto result = assign_status({&v1, &v2}, file.labels, "tomcat", "1");
    CHECK(result.classes.vuln_count_per_class.at("p.A") == 2);
}

TEST_CASE("labels that cannot be placed are reported, not fatal")
{
    const auto v1 = version_with("1", {"A"});
    const auto file = parse_labels(kHeader + "CVE-1,tomcat,1,p.Missing,\nCVE-2,tomcat,9,p.A,\nCVE-3,cxf,1,p.A,\n");
    const auto result = assign_status({&v1}, file.labels, "tomcat", "1");
    CHECK(result.classes.vulnerable.empty());
    REQUIRE(result.unmatched.size() == 3);
    std::set<std::string> reasons;
    for (const auto& u : result.unmatched) reasons.insert(u.reason);
    CHECK(reasons == std::set<std::string>{"class not found in affected version", "no facts for affected version",
                                           "system not analyzed"});
    const auto csv = unmatched_to_csv(result.unmatched);
    CHECK(csv.starts_with("cve_id,affected_version,class_path,reason\n"));
}

TEST_CASE("status assignment properties")
{
    std::mt19937_64 rng(53);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int round = 0; round < 200; ++round) {
        std::vector<CodeFactsModel> models;
        const int versions = pick(1, 3);
        std::set<std::string> universe;
        for (int v = 0; v < versions; ++v) {
            std::vector<std::string> names;
            for (int c = 0; c < 8; ++c) {
                if (pick(0, 2) > 0) names.push_back("K" + std::to_string(c));
            }
            for (const auto& n : names) universe.insert("p." + n);
            models.push_back(version_with(std::to_string(v), names));
        }
        std::vector<const CodeFactsModel*> ptrs;
        for (const auto& m : models) ptrs.push_back(&m);

        std::vector<VulnerabilityLabel> labels;
        const int n = pick(0, 10);
        for (int i = 0; i < n; ++i) {
            labels.push_back({"CVE-" + std::to_string(pick(1, 4)), "tomcat", std::to_string(pick(0, 3)),
                              "p.K" + std::to_string(pick(0, 8)), std::nullopt});
        }
        const auto first = assign_status(ptrs, labels, "tomcat", "r");
        const auto& cs = first.classes;

        // Partition of every class name seen in the release.
        std::set<std::string> both;
        std::ranges::set_intersection(cs.vulnerable, cs.neutral, std::inserter(both, both.end()));
        REQUIRE(both.empty());
        REQUIRE(cs.vulnerable.size() + cs.neutral.size() == universe.size());
        for (const auto& [cls, count] : cs.vuln_count_per_class) {
            REQUIRE(cs.vulnerable.contains(cls));
            REQUIRE(count >= 1);
        }
        REQUIRE(cs.vuln_count_per_class.size() == cs.vulnerable.size());

        // Idempotence.
        REQUIRE(assign_status(ptrs, labels, "tomcat", "r").classes == cs);

        // One more label never shrinks the vulnerable set.
        auto more = labels;
        more.push_back({"CVE-9", "tomcat", std::to_string(pick(0, 3)), "p.K" + std::to_string(pick(0, 8)), std::nullopt});
        const auto grown = assign_status(ptrs, more, "tomcat", "r");
        REQUIRE(std::ranges::includes(grown.classes.vulnerable, cs.vulnerable));
    }
}
