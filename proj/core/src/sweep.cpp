#include "plumb/sweep.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "plumb/coxeter.hpp"
#include "plumb/decompose.hpp"
#include "plumb/error.hpp"
#include "plumb/forms.hpp"
#include "plumb/linalg.hpp"
#include "plumb/omega.hpp"
#include "plumb/roots.hpp"
#include "plumb/smith.hpp"
#include "plumb/tree.hpp"

namespace plumb {

namespace {

constexpr std::array<Check, 9> kCheckOrder = {Check::thm1,  Check::cert,   Check::small5,
                                              Check::cor1,  Check::acampo, Check::thmA,
                                              Check::propD, Check::lemmaB, Check::monodromy};

int ceil_half(int s) { return s >= 0 ? (s + 1) / 2 : -((-s) / 2); }

void record_check(SweepReport& rep, SweepRecord& rec, std::string name, bool pass,
                  std::string detail) {
    if (!pass) rep.failures.push_back({rec.code, name, detail});
    rec.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
}

void finalize_summary(SweepReport& rep) {
    rep.summary.items = static_cast<int>(rep.records.size());
    int runs = 0;
    for (const SweepRecord& r : rep.records) runs += static_cast<int>(r.checks.size());
    rep.summary.checks_run = runs;
    rep.summary.failures = static_cast<int>(rep.failures.size());
    bool first = true;
    for (const SweepRecord& r : rep.records) {
        if (r.b1 <= 0) continue;
        mpq_class ratio(r.sigma, r.b1);
        ratio.canonicalize();
        if (first || ratio < rep.summary.min_sigma_ratio) {
            rep.summary.min_sigma_ratio = ratio;
            rep.summary.min_sigma_ratio_code = r.code;
            first = false;
        }
    }
}

// Order of the root t = r in p.
int multiplicity_at(const IntPoly& p, const mpz_class& r) {
    int m = 0;
    IntPoly q = p;
    while (!q.is_zero() && q.eval(r) == 0) {
        q = q.divide_linear(r);
        ++m;
    }
    return m;
}

bool lemma_b_holds(const SeifertMatrix& a, std::string* why) {
    const IntPoly delta = alexander_poly(a.entries);
    if (delta.is_zero()) {
        *why = "zero alexander polynomial";
        return false;
    }
    const std::vector<RatPoly> alphas = smith_normal_form(alexander_pencil(a.entries));
    RatPoly prod = RatPoly::constant(1);
    for (const RatPoly& f : alphas) prod = prod * f;
    if (prod.is_zero() || prod.primitive_int() != delta.primitive_part()) {
        *why = "invariant factor product does not recover the alexander polynomial";
        return false;
    }

    const SignatureProfile prof = signature_profile(a);
    std::vector<std::pair<IntPoly, int>> factors;
    auto add_factor = [&](const IntPoly& f, int mult) {
        for (const auto& known : factors)
            if (known.first == f) return;
        factors.emplace_back(f, mult);
    };
    for (const CircleInterval& iv : prof.roots.interior) add_factor(iv.factor, iv.multiplicity);
    if (prof.roots.mult_at_one > 0) add_factor(IntPoly({-1, 1}), prof.roots.mult_at_one);
    if (prof.roots.mult_at_minus_one > 0) add_factor(IntPoly({1, 1}), prof.roots.mult_at_minus_one);

    for (const auto& [f, mult] : factors) {
        if (nullity_at_factor(a.entries, f) > mult) {
            *why = "nullity exceeds root order at factor " + format_poly(f);
            return false;
        }
    }
    for (size_t k = 0; k < prof.jumps.size(); ++k) {
        const int j = prof.jumps[k] < 0 ? -prof.jumps[k] : prof.jumps[k];
        if (j > nullity_at_factor(a.entries, prof.roots.interior[k].factor)) {
            *why = "jump exceeds nullity at factor " + format_poly(prof.roots.interior[k].factor);
            return false;
        }
    }
    return true;
}

Tree random_prufer_tree(std::mt19937_64& rng, int n) {
    Tree t;
    t.vertex_count = n;
    if (n < 2) return t;
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(rng() % static_cast<unsigned long>(n));
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<size_t>(s)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int s : seq) {
        const int l = *leaves.begin();
        leaves.erase(leaves.begin());
        t.edges.emplace_back(std::min(l, s), std::max(l, s));
        if (--deg[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    t.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

}  // namespace

bool SweepRecord::all_pass() const {
    for (const CheckOutcome& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string check_name(Check c) {
    switch (c) {
        case Check::thm1: return "thm1";
        case Check::cert: return "cert";
        case Check::small5: return "small5";
        case Check::cor1: return "cor1";
        case Check::acampo: return "acampo";
        case Check::thmA: return "thmA";
        case Check::propD: return "propD";
        case Check::lemmaB: return "lemmaB";
        case Check::monodromy: return "monodromy";
    }
    throw internal_error("unknown check value");
}

std::set<Check> all_checks() {
    return {kCheckOrder.begin(), kCheckOrder.end()};
}

std::set<Check> parse_checks(const std::string& csv) {
    std::set<Check> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        bool found = false;
        for (Check c : kCheckOrder)
            if (check_name(c) == token) {
                out.insert(c);
                found = true;
                break;
            }
        if (!found) throw error("unknown check name: " + token);
    }
    if (out.empty()) throw error("no checks selected");
    return out;
}

SweepReport sweep_trees(int max_n, const std::set<Check>& checks) {
    if (max_n < 1) throw error("tree sweep needs max_n >= 1");
    if (checks.empty()) throw error("no checks selected");
    SweepReport rep;
    rep.family = "trees";
    rep.bounds = "n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (const Tree& t : enumerate_free_trees(n)) {
            SweepRecord rec;
            rec.code = canonical_code(t);
            rec.b1 = n;
            rec.sigma = signature(symmetrized_form(t));
            rec.four_ball_lower = ceil_half(rec.sigma);

            std::optional<SeifertMatrix> seif;
            auto seifert = [&]() -> const SeifertMatrix& {
                if (!seif) seif = seifert_matrix(t);
                return *seif;
            };
            auto classify = [&]() {
                if (rec.circle_count) return;
                Forest f;
                f.components.push_back(t);
                const SpectrumClassification cls =
                    classify_spectrum(coxeter_transformation(f, bicolored_order(f)));
                rec.circle_count = cls.circle_count;
                rec.positive_real_count = cls.positive_real_count;
                rec.other_count = cls.other_count;
            };

            for (Check c : kCheckOrder) {
                if (!checks.count(c)) continue;
                switch (c) {
                    case Check::thm1:
                        record_check(rep, rec, "thm1", 3 * rec.sigma >= 2 * n,
                                     "sigma=" + std::to_string(rec.sigma) +
                                         " b1=" + std::to_string(n));
                        break;
                    case Check::cert: {
                        const Certificate cert = lemma1_decompose(t);
                        rec.certificate_bound = cert.certified_lower_bound;
                        const bool ok = cert.certified_lower_bound <= rec.sigma &&
                                        3 * cert.certified_lower_bound >= 2 * n;
                        record_check(rep, rec, "cert", ok,
                                     "bound=" + std::to_string(cert.certified_lower_bound) +
                                         " sigma=" + std::to_string(rec.sigma));
                        break;
                    }
                    case Check::small5:
                        record_check(rep, rec, "small5",
                                     n > 5 || rec.sigma == n || rec.sigma == 4,
                                     "sigma=" + std::to_string(rec.sigma));
                        break;
                    case Check::cor1:
                        classify();
                        record_check(rep, rec, "cor1", 3 * *rec.circle_count >= 2 * n,
                                     "circle=" + std::to_string(*rec.circle_count));
                        break;
                    case Check::acampo:
                        classify();
                        record_check(rep, rec, "acampo", *rec.other_count == 0,
                                     "other=" + std::to_string(*rec.other_count));
                        break;
                    case Check::thmA: {
                        const TheoremAReport r = verify_theorem_A(seifert());
                        record_check(rep, rec, "thmA", r.pass,
                                     "abs_sigma=" + std::to_string(r.signature_abs) +
                                         " circle=" + std::to_string(r.circle_count));
                        break;
                    }
                    case Check::propD:
                        record_check(rep, rec, "propD", verify_prop_D(seifert()).pass,
                                     "jump exceeds root order");
                        break;
                    case Check::lemmaB: {
                        std::string why;
                        const bool ok = lemma_b_holds(seifert(), &why);
                        record_check(rep, rec, "lemmaB", ok, why);
                        break;
                    }
                    case Check::monodromy:
                        record_check(rep, rec, "monodromy", monodromy_correspondence_check(t),
                                     "characteristic polynomial does not match");
                        break;
                }
            }
            rep.records.push_back(std::move(rec));
        }
    }
    finalize_summary(rep);
    return rep;
}

SweepReport sweep_slalom(int max_planted_n) {
    if (max_planted_n < 2) throw error("slalom sweep needs max_n >= 2");
    SweepReport rep;
    rep.family = "slalom";
    rep.bounds = "planted n <= " + std::to_string(max_planted_n);
    for (int n = 2; n <= max_planted_n; ++n) {
        for (const Tree& pt : enumerate_planted_trees(n)) {
            const Tree st = slalom_transform(pt);
            SweepRecord rec;
            rec.code = canonical_code(st);
            rec.b1 = st.vertex_count;
            rec.sigma = signature(symmetrized_form(st));
            rec.four_ball_lower = ceil_half(rec.sigma);
            record_check(rep, rec, "thm2", 4 * rec.sigma >= 3 * rec.b1,
                         "sigma=" + std::to_string(rec.sigma) + " b1=" + std::to_string(rec.b1));
            rep.records.push_back(std::move(rec));
        }
    }
    finalize_summary(rep);
    return rep;
}

SweepReport sweep_spiral(int max_n) {
    if (max_n < 1) throw error("spiral sweep needs max_n >= 1");
    SweepReport rep;
    rep.family = "spiral";
    rep.bounds = "n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        const SymmetricForm s = spiral_form(n);
        SweepRecord rec;
        rec.code = "spiral-" + std::to_string(n);
        rec.b1 = 2 * n;
        rec.sigma = signature(s);
        rec.four_ball_lower = ceil_half(rec.sigma);
        record_check(rep, rec, "prop1_sigma", rec.sigma == 2,
                     "sigma=" + std::to_string(rec.sigma));
        const mpz_class det = determinant(s.entries);
        const int want = n % 2 == 1 ? 1 : -1;
        record_check(rep, rec, "prop1_det", sgn(det) == want, "det=" + det.get_str());
        rep.records.push_back(std::move(rec));
    }
    finalize_summary(rep);
    return rep;
}

SweepReport optimal_family_check(int copies) {
    if (copies < 1) throw error("optimal family check needs copies >= 1");
    SweepReport rep;
    rep.family = "optimal";
    rep.bounds = "copies <= " + std::to_string(copies);

    // The six-vertex tree attaining sigma = (2/3) b1, glued through the tip
    // of its length-two leg.
    const Tree unit = spider({1, 1, 1, 2});
    const int boundary = 5;

    Tree chain = unit;
    for (int m = 1; m <= copies; ++m) {
        if (m > 1) chain = glue(chain, 0, unit, boundary);
        SweepRecord rec;
        rec.code = canonical_code(chain);
        rec.b1 = chain.vertex_count;
        rec.sigma = signature(symmetrized_form(chain));
        rec.four_ball_lower = ceil_half(rec.sigma);
        record_check(rep, rec, "remark1_chain", rec.sigma == 4 * m && rec.b1 == 6 * m,
                     "m=" + std::to_string(m) + " sigma=" + std::to_string(rec.sigma) +
                         " b1=" + std::to_string(rec.b1));
        rep.records.push_back(std::move(rec));
    }

    std::mt19937_64 rng(0x706c756d62ULL);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Tree base = random_prufer_tree(rng, n);
        const int at = static_cast<int>(rng() % static_cast<unsigned long>(n));
        const int before = signature(symmetrized_form(base));
        const Tree glued = glue(base, at, unit, boundary);
        SweepRecord rec;
        rec.code = canonical_code(base);
        rec.b1 = glued.vertex_count;
        rec.sigma = signature(symmetrized_form(glued));
        rec.four_ball_lower = ceil_half(rec.sigma);
        record_check(rep, rec, "remark1_additivity", rec.sigma == before + 4,
                     "attach=" + std::to_string(at) + " before=" + std::to_string(before) +
                         " after=" + std::to_string(rec.sigma));
        rep.records.push_back(std::move(rec));
    }
    finalize_summary(rep);
    return rep;
}

SweepReport conjecture1_scan(int max_n) {
    if (max_n < 1) throw error("root location scan needs max_n >= 1");
    SweepReport rep;
    rep.family = "alexander-roots";
    rep.bounds = "n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (const Tree& t : enumerate_free_trees(n)) {
            SweepRecord rec;
            rec.code = canonical_code(t);
            rec.b1 = n;
            rec.sigma = signature(symmetrized_form(t));
            rec.four_ball_lower = ceil_half(rec.sigma);
            const IntPoly delta = alexander_poly(seifert_matrix(t).entries);
            const int circle = circle_root_count(delta);
            rec.circle_count = circle;
            // Negative real roots off the circle: a root at t = -1 is
            // counted on the circle already.
            const int negative = positive_real_root_count(delta.substitute_neg_t()) -
                                 multiplicity_at(delta, mpz_class(-1));
            const bool ok = circle + negative == delta.degree() && delta.valuation() == 0;
            record_check(rep, rec, "root_location", ok,
                         "circle=" + std::to_string(circle) +
                             " negative=" + std::to_string(negative) +
                             " degree=" + std::to_string(delta.degree()));
            rep.records.push_back(std::move(rec));
        }
    }
    finalize_summary(rep);
    return rep;
}

std::string to_json(const SweepReport& r) {
    nlohmann::ordered_json j;
    j["corpus"] = nlohmann::ordered_json{{"family", r.family}, {"bounds", r.bounds}};
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const SweepRecord& rec : r.records) {
        nlohmann::ordered_json o;
        o["code"] = rec.code;
        o["b1"] = rec.b1;
        o["sigma"] = rec.sigma;
        o["four_ball_lower"] = rec.four_ball_lower;
        auto opt = [](const std::optional<int>& v) {
            return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        };
        o["certificate_bound"] = opt(rec.certificate_bound);
        o["circle_count"] = opt(rec.circle_count);
        o["positive_real_count"] = opt(rec.positive_real_count);
        o["other_count"] = opt(rec.other_count);
        nlohmann::ordered_json checks = nlohmann::ordered_json::object();
        for (const CheckOutcome& c : rec.checks) checks[c.name] = c.pass;
        o["checks"] = std::move(checks);
        records.push_back(std::move(o));
    }
    j["records"] = std::move(records);
    j["summary"] = nlohmann::ordered_json{
        {"items", r.summary.items},
        {"checks_run", r.summary.checks_run},
        {"failures", r.summary.failures},
        {"min_sigma_ratio", r.summary.min_sigma_ratio.get_str()},
        {"min_sigma_ratio_code", r.summary.min_sigma_ratio_code}};
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const Failure& f : r.failures)
        failures.push_back(
            nlohmann::ordered_json{{"code", f.code}, {"check", f.check}, {"detail", f.detail}});
    j["failures"] = std::move(failures);
    j["version"] = kVersion;
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepReport& r) {
    std::vector<std::string> names;
    for (const SweepRecord& rec : r.records)
        for (const CheckOutcome& c : rec.checks)
            if (std::find(names.begin(), names.end(), c.name) == names.end())
                names.push_back(c.name);
    std::ostringstream os;
    os << "code,b1,sigma,four_ball_lower,certificate_bound,circle_count,positive_real_count,"
          "other_count";
    for (const std::string& n : names) os << "," << n;
    os << "\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const SweepRecord& rec : r.records) {
        os << rec.code << "," << rec.b1 << "," << rec.sigma << "," << rec.four_ball_lower << ","
           << opt(rec.certificate_bound) << "," << opt(rec.circle_count) << ","
           << opt(rec.positive_real_count) << "," << opt(rec.other_count);
        for (const std::string& n : names) {
            os << ",";
            for (const CheckOutcome& c : rec.checks)
                if (c.name == n) {
                    os << (c.pass ? "pass" : "fail");
                    break;
                }
        }
        os << "\n";
    }
    return os.str();
}

std::string to_text(const SweepReport& r) {
    std::ostringstream os;
    os << r.family << " (" << r.bounds << ")\n";
    os << "items: " << r.summary.items << ", checks run: " << r.summary.checks_run
       << ", failures: " << r.summary.failures << "\n";
    if (!r.summary.min_sigma_ratio_code.empty())
        os << "min sigma/b1: " << r.summary.min_sigma_ratio.get_str() << " at "
           << r.summary.min_sigma_ratio_code << "\n";
    for (const Failure& f : r.failures) {
        os << "FAIL " << f.code << " " << f.check;
        if (!f.detail.empty()) os << " (" << f.detail << ")";
        os << "\n";
    }
    if (r.all_pass()) os << "all checks passed\n";
    return os.str();
}

}  // namespace plumb
