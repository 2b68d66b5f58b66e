#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace plumb {

inline constexpr const char* kVersion = "0.1.0";

// Per-tree checks selectable in sweep_trees.
enum class Check { thm1, cert, small5, cor1, acampo, thmA, propD, lemmaB, monodromy };

std::string check_name(Check c);
std::set<Check> all_checks();
// Comma-separated names; throws on an unknown name.
std::set<Check> parse_checks(const std::string& csv);

struct CheckOutcome {
    std::string name;
    bool pass = true;
    std::string detail;  // populated on failure
};

struct SweepRecord {
    std::string code;  // canonical code or family member id
    int b1 = 0;
    int sigma = 0;
    int four_ball_lower = 0;  // ceil(sigma / 2)
    std::optional<int> certificate_bound;
    std::optional<int> circle_count;
    std::optional<int> positive_real_count;
    std::optional<int> other_count;
    std::vector<CheckOutcome> checks;

    bool all_pass() const;
};

struct Failure {
    std::string code;
    std::string check;
    std::string detail;
};

struct SweepSummary {
    int items = 0;
    int checks_run = 0;
    int failures = 0;
    mpq_class min_sigma_ratio;  // smallest sigma/b1 over the corpus
    std::string min_sigma_ratio_code;
};

struct SweepReport {
    std::string family;
    std::string bounds;
    std::vector<SweepRecord> records;
    std::vector<Failure> failures;
    SweepSummary summary;

    bool all_pass() const { return failures.empty(); }
};

// Every free tree with at most max_n vertices, running the selected checks.
SweepReport sweep_trees(int max_n, const std::set<Check>& checks);

// Slalom trees of all planted trees with at most max_planted_n vertices;
// checks sigma >= (3/4) b1.
SweepReport sweep_slalom(int max_planted_n);

// Spiral-divide forms S_2, S_4, ..., S_2n: signature 2 and alternating
// determinant sign.
SweepReport sweep_spiral(int max_n);

// Chains of 1..copies six-vertex equality trees glued through their
// boundary vertex (signature 4m, first Betti number 6m), plus gluing one
// copy onto 50 pseudorandom base trees (signature goes up by exactly 4).
SweepReport optimal_family_check(int copies);

// Alexander roots of tree plumbings are negative real or on the unit
// circle; scans all free trees with at most max_n vertices.
SweepReport conjecture1_scan(int max_n);

std::string to_json(const SweepReport& r);
std::string to_csv(const SweepReport& r);
std::string to_text(const SweepReport& r);

}  // namespace plumb
