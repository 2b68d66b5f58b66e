#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/sweep.hpp"

using namespace plumb;

namespace {

const SweepRecord* find_record(const SweepReport& rep, const std::string& code) {
    for (const SweepRecord& r : rep.records)
        if (r.code == code) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("check-list parsing") {
    CHECK(parse_checks("thm1,cert,small5,cor1,acampo,thmA,propD,lemmaB,monodromy") ==
          all_checks());
    CHECK(parse_checks("thm1") == std::set<Check>{Check::thm1});
    CHECK(parse_checks("thm1,cert") == std::set<Check>{Check::thm1, Check::cert});
    CHECK(parse_checks("cert,thm1").size() == 2);
    CHECK(parse_checks("thm1,thm1") == std::set<Check>{Check::thm1});  // deduplicated
    CHECK(parse_checks("thm1,,cert").size() == 2);  // empty tokens are skipped
    CHECK(check_name(Check::monodromy) == "monodromy");
    CHECK_THROWS_AS(parse_checks(""), error);
    CHECK_THROWS_AS(parse_checks("thm9"), error);
    CHECK_THROWS_AS(parse_checks("all"), error);  // no aliases, names only
    CHECK(all_checks().size() == 9);
}

TEST_CASE("tree sweep on the two smallest plumbings") {
    const SweepReport rep = sweep_trees(2, all_checks());
    CHECK(rep.family == "trees");
    CHECK(rep.bounds == "n <= 2");
    REQUIRE(rep.records.size() == 2);
    CHECK(rep.all_pass());
    CHECK(rep.summary.items == 2);
    CHECK(rep.summary.failures == 0);

    const SweepRecord* trefoil = find_record(rep, "(())");
    REQUIRE(trefoil != nullptr);
    CHECK(trefoil->b1 == 2);
    CHECK(trefoil->sigma == 2);
    CHECK(trefoil->four_ball_lower == 1);
    CHECK(trefoil->certificate_bound == 2);
    CHECK(trefoil->circle_count == 2);
    CHECK(trefoil->positive_real_count == 0);
    CHECK(trefoil->other_count == 0);
    CHECK(trefoil->checks.size() == 9);
    CHECK(trefoil->all_pass());

    // σ/b1 is minimized at the single vertex (ratio 1 for both classes)
    CHECK(rep.summary.min_sigma_ratio == mpq_class(1));
}

TEST_CASE("signature equals rank except on the four-star") {
    const SweepReport rep = sweep_trees(5, {Check::small5});
    CHECK(rep.all_pass());
    std::vector<std::string> deficient;
    for (const SweepRecord& r : rep.records)
        if (r.sigma != r.b1) deficient.push_back(r.code);
    REQUIRE(deficient.size() == 1);
    CHECK(deficient[0] == "(()()()())");
    CHECK(find_record(rep, "(()()()())")->sigma == 4);
}

TEST_CASE("the six-vertex spider attains the two-thirds bound") {
    const SweepReport rep = sweep_trees(6, {Check::thm1});
    CHECK(rep.all_pass());
    CHECK(rep.summary.min_sigma_ratio == mpq_class(2, 3));
    CHECK(rep.summary.min_sigma_ratio_code == "((()()())())");
    CHECK(rep.summary.items == 1 + 1 + 1 + 2 + 3 + 6);
}

TEST_CASE("slalom sweep satisfies the three-quarters bound") {
    const SweepReport rep = sweep_slalom(6);
    CHECK(rep.family == "slalom");
    CHECK(rep.all_pass());
    CHECK(rep.summary.min_sigma_ratio == mpq_class(3, 4));
    for (const SweepRecord& r : rep.records) CHECK(4 * r.sigma >= 3 * r.b1);

    // the planted edge maps to the trefoil plumbing
    const SweepRecord* trefoil = find_record(rep, "(())");
    REQUIRE(trefoil != nullptr);
    CHECK(trefoil->sigma == 2);
}

TEST_CASE("spiral sweep") {
    const SweepReport rep = sweep_spiral(10);
    CHECK(rep.family == "spiral");
    REQUIRE(rep.records.size() == 10);
    CHECK(rep.all_pass());
    for (const SweepRecord& r : rep.records) {
        CHECK(r.sigma == 2);
        CHECK(r.four_ball_lower == 1);
    }
    CHECK(rep.records[0].code == "spiral-1");
    CHECK(rep.records[0].b1 == 2);
    CHECK(rep.records[4].b1 == 10);
}

TEST_CASE("gluing the optimal unit is additive") {
    const SweepReport rep = optimal_family_check(3);
    CHECK(rep.family == "optimal");
    CHECK(rep.all_pass());
    CHECK(rep.summary.items == 3 + 50);  // chain lengths plus random gluings
    int chains = 0;
    for (const SweepRecord& r : rep.records)
        for (const CheckOutcome& c : r.checks)
            if (c.name == "remark1_chain") {
                ++chains;
                CHECK(r.sigma == 4 * chains);
                CHECK(r.b1 == 6 * chains);
            }
    CHECK(chains == 3);
}

TEST_CASE("alexander roots of tree links stay on the expected loci") {
    const SweepReport rep = conjecture1_scan(8);
    CHECK(rep.family == "alexander-roots");
    CHECK(rep.all_pass());
    CHECK(rep.summary.items == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23);
    const SweepRecord* single = find_record(rep, "()");
    REQUIRE(single != nullptr);  // Delta = t - 1: one circle root, nothing else
    CHECK(single->circle_count == 1);
    CHECK(!single->positive_real_count.has_value());
}

TEST_CASE("json report format") {
    const SweepReport rep = sweep_trees(3, {Check::thm1, Check::acampo});
    const std::string text = to_json(rep);
    CHECK(to_json(rep) == text);  // deterministic

    const auto j = nlohmann::json::parse(text);
    CHECK(j["corpus"]["family"] == "trees");
    CHECK(j["corpus"]["bounds"] == "n <= 3");
    CHECK(j["version"] == kVersion);
    REQUIRE(j["records"].size() == 3);
    const auto& rec = j["records"][2];
    CHECK(rec["code"] == "(()())");
    CHECK(rec["b1"] == 3);
    CHECK(rec["sigma"] == 3);
    CHECK(rec["four_ball_lower"] == 2);
    CHECK(rec["certificate_bound"].is_null());  // cert check not requested
    CHECK(rec["circle_count"] == 3);
    CHECK(rec["checks"]["thm1"] == true);
    CHECK(j["summary"]["items"] == 3);
    CHECK(j["summary"]["failures"] == 0);
    CHECK(j["summary"]["min_sigma_ratio"] == "1");
    CHECK(j["failures"].empty());

    // stable top-level key order
    const size_t corpus = text.find("\"corpus\"");
    const size_t records = text.find("\"records\"");
    const size_t summary = text.find("\"summary\"");
    const size_t failures = text.find("\"failures\"");
    const size_t version = text.find("\"version\"");
    CHECK(corpus < records);
    CHECK(records < summary);
    CHECK(summary < failures);
    CHECK(failures < version);
    CHECK(text.back() == '\n');
}

TEST_CASE("csv report format") {
    const SweepReport rep = sweep_trees(2, {Check::thm1, Check::cert});
    const std::string text = to_csv(rep);
    const size_t eol = text.find('\n');
    CHECK(text.substr(0, eol) ==
          "code,b1,sigma,four_ball_lower,certificate_bound,circle_count,"
          "positive_real_count,other_count,thm1,cert");
    CHECK(text.find("\n(()),2,2,1,2,,,,pass,pass\n") != std::string::npos);
}

TEST_CASE("text report format") {
    const SweepReport good = sweep_trees(3, {Check::thm1});
    const std::string text = to_text(good);
    CHECK(text.find("trees (n <= 3)") != std::string::npos);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("min sigma/b1: 1 at") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}
