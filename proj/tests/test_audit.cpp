#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ggt/audit.hpp"
#include "ggt/error.hpp"

using namespace ggt;
using namespace ggt::audit;
using nlohmann::json;

namespace {

const Entry& entry(const Report& r, const std::string& id) {
    for (const auto& e : r.entries)
        if (e.id == id) return e;
    throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("check ids are sorted and unique") {
    const auto ids = check_ids();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    CHECK(ids.size() >= 25);
}

TEST_CASE("a full run is deterministic apart from timing") {
    const Report a = run({"all"});
    const Report b = run({"all"});
    CHECK(a.entries.size() == check_ids().size());
    CHECK(a.json(false) == b.json(false));
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].id == check_ids()[i]);
    for (const auto& e : a.entries) {
        CAPTURE(e.id);
        CHECK(e.status != "inconclusive");
        CHECK(json::accept(e.witness));
    }
    CHECK(a.json(false).find("wall_ms") == std::string::npos);
}

TEST_CASE("statuses and exit codes") {
    Report r;
    CHECK(r.exit_code() == 0);
    r.entries.push_back({"p", "", "pass", "{}", 0});
    r.entries.push_back({"q", "", "resolved:right", "{}", 0});
    CHECK(r.exit_code() == 0);
    r.entries.push_back({"s", "", "inconclusive", "{}", 0});
    CHECK(r.exit_code() == 2);
    r.entries.push_back({"t", "", "fail", "{}", 0});
    CHECK(r.exit_code() == 1);
    CHECK(run({}).entries.empty());
    CHECK(run({}).exit_code() == 0);
}

TEST_CASE("single checks") {
    const Report r = run({"index-g1"});
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].status == "pass");
    const json w = json::parse(r.entries[0].witness);
    CHECK(w.dump().find("4") != std::string::npos);

    const Report s = run({"index-sl2z", "braid-center"});
    REQUIRE(s.entries.size() == 2);
    CHECK(s.entries[0].id == "braid-center");
    CHECK(entry(s, "braid-center").status == "pass");
    CHECK(entry(s, "index-sl2z").status == "fail");
    CHECK(s.exit_code() == 1);
    CHECK_THROWS_AS(run({"no-such-check"}), Error);
}

TEST_CASE("conventions change the braid verdicts") {
    Options right;
    right.conjugation = garside::Convention::right;
    CHECK(run({"braid-orbit-x"}, right).entries[0].status == "fail");
    CHECK(run({"braid-orbit-x"}).entries[0].status == "pass");
    CHECK(run({"braid-presentation"}).entries[0].status == "pass");
}

TEST_CASE("a tiny cap leaves index checks inconclusive") {
    Options tiny;
    tiny.cap = 2;
    const Report r = run({"index-g1"}, tiny);
    CHECK(r.entries[0].status == "inconclusive");
    CHECK(r.exit_code() == 2);
}

TEST_CASE("report json round trip") {
    const Report a = run({"index-g1", "link-girth", "erratum-c"});
    const Report b = parse_report(a.json());
    CHECK(b.json() == a.json());
    CHECK(b.options.cap == a.options.cap);
    CHECK_THROWS(parse_report("{"));
    const std::string text = a.text();
    CHECK(text.find("index-g1") != std::string::npos);
    CHECK(text.find("erratum-c") != std::string::npos);
}

TEST_CASE("exports") {
    const auto ids = export_ids();
    for (const char* id : {"brady-link", "x1bar-link-smoothed", "x1bar", "ybar1", "g1-table", "audit"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    for (const auto& id : ids) {
        CAPTURE(id);
        const std::string j = export_object(id, "json");
        CHECK(json::accept(j));
        CHECK(export_object(id, "json") == j);
        CHECK_FALSE(export_object(id, "text").empty());
    }
    CHECK(export_object("brady-link", "dot").rfind("graph", 0) == 0);
    const json table = json::parse(export_object("g1-table", "json"));
    CHECK(table["count"] == 4);
    CHECK_THROWS_AS(export_object("petersen", "json"), Error);
    CHECK_THROWS_AS(export_object("brady-link", "svg"), Error);

    const auto path = std::filesystem::temp_directory_path() / "ggt_export_test.dot";
    export_to_file("brady-link", "dot", path.string());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == export_object("brady-link", "dot"));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(export_to_file("brady-link", "dot", "/nonexistent-dir/x.dot"), Error);
}
