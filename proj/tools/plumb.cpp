#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plumb/coxeter.hpp"
#include "plumb/decompose.hpp"
#include "plumb/error.hpp"
#include "plumb/forms.hpp"
#include "plumb/linalg.hpp"
#include "plumb/matrix.hpp"
#include "plumb/omega.hpp"
#include "plumb/polynomial.hpp"
#include "plumb/sweep.hpp"
#include "plumb/tree.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw plumb::error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<std::string> parse_show(const std::string& csv, const std::set<std::string>& allowed) {
    std::set<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (!allowed.count(tok)) throw plumb::error("unknown --show item: " + tok);
        out.insert(tok);
    }
    if (out.empty()) throw plumb::error("--show needs at least one item");
    return out;
}

int ceil_half(int s) { return s >= 0 ? (s + 1) / 2 : -((-s) / 2); }

int run_tree(const std::string& path, const std::string& show_csv) {
    const std::set<std::string> show =
        parse_show(show_csv, {"sig", "alex", "coxeter", "profile", "cert"});
    const plumb::Tree t = plumb::parse_tree(slurp(path));
    std::cout << "code: " << plumb::canonical_code(t) << "\n";
    if (show.count("sig")) {
        const int sigma = plumb::signature(plumb::symmetrized_form(t));
        std::cout << "b1: " << t.vertex_count << "\n"
                  << "sigma: " << sigma << "\n"
                  << "four_ball_lower: " << ceil_half(sigma) << "\n";
    }
    if (show.count("alex")) {
        std::cout << "alexander: "
                  << plumb::format_poly(plumb::alexander_poly(plumb::seifert_matrix(t).entries))
                  << "\n";
    }
    if (show.count("coxeter")) {
        plumb::Forest f;
        f.components.push_back(t);
        const plumb::CoxeterMatrix c = plumb::coxeter_transformation(f, plumb::bicolored_order(f));
        const plumb::SpectrumClassification cls = plumb::classify_spectrum(c);
        std::cout << "coxeter_charpoly: " << plumb::format_poly(plumb::char_poly(c.entries))
                  << "\n"
                  << "circle: " << cls.circle_count
                  << " positive_real: " << cls.positive_real_count
                  << " other: " << cls.other_count << "\n";
    }
    if (show.count("profile")) {
        std::cout << plumb::format_profile(plumb::signature_profile(plumb::seifert_matrix(t)));
    }
    if (show.count("cert")) {
        const plumb::Certificate cert = plumb::lemma1_decompose(t);
        for (size_t i = 0; i < cert.steps.size(); ++i) {
            const plumb::DecompositionStep& s = cert.steps[i];
            std::cout << "step " << i + 1 << ": ";
            if (s.case_id == 0) {
                std::cout << "terminal, " << s.component.vertex_count << " vertices, sigma "
                          << s.increment << "\n";
            } else {
                std::cout << "case " << s.case_id << ", split " << s.subtree.size()
                          << " vertices through boundary " << s.boundary << ", +" << s.increment
                          << "\n";
            }
        }
        if (cert.used_fallback) std::cout << "note: fallback terminal component used\n";
        std::cout << "certified_bound: " << cert.certified_lower_bound << "\n";
    }
    return 0;
}

int run_matrix(const std::string& path, const std::string& show_csv) {
    const std::set<std::string> show = parse_show(show_csv, {"inertia", "spectrum", "profile"});
    const plumb::IntMatrix m = plumb::parse_int_matrix(slurp(path));
    if (show.count("inertia")) {
        if (!m.is_symmetric()) throw plumb::error("inertia needs a symmetric matrix");
        const plumb::Inertia in = plumb::inertia(m);
        std::cout << "inertia: " << in << "\n"
                  << "signature: " << in.signature() << "\n";
    }
    if (show.count("spectrum")) {
        const plumb::IntPoly chi = plumb::char_poly(m);
        std::cout << "charpoly: " << plumb::format_poly(chi) << "\n";
        // The circle / positive-real split only applies to +-reciprocal
        // characteristic polynomials; otherwise report the real-axis counts.
        const plumb::IntPoly q = chi.shifted_down(chi.valuation());
        bool plus = true, minus = true;
        for (int i = 0; i <= q.degree(); ++i) {
            if (q.coeff(i) != q.coeff(q.degree() - i)) plus = false;
            if (q.coeff(i) != -q.coeff(q.degree() - i)) minus = false;
        }
        if (plus || minus) {
            const plumb::SpectrumClassification cls = plumb::classify_spectrum(m);
            std::cout << "circle: " << cls.circle_count
                      << " positive_real: " << cls.positive_real_count
                      << " other: " << cls.other_count << "\n";
        } else {
            const int at_zero = chi.valuation();
            const int pos = plumb::positive_real_root_count(chi);
            const int neg = plumb::positive_real_root_count(chi.substitute_neg_t());
            std::cout << "positive_real: " << pos << " negative_real: " << neg
                      << " at_zero: " << at_zero
                      << " other: " << m.rows() - pos - neg - at_zero << "\n";
        }
    }
    if (show.count("profile")) {
        const plumb::SeifertMatrix a =
            m.is_symmetric() ? plumb::upper_seifert_lift(plumb::SymmetricForm(m))
                             : plumb::SeifertMatrix(m);
        std::cout << plumb::format_profile(plumb::signature_profile(a));
    }
    return 0;
}

int run_divide(const std::string& path) {
    const plumb::DivideCombinatorics dc = plumb::parse_divide(slurp(path));
    const plumb::SymmetricForm s = plumb::divide_form(dc);
    std::cout << "dimension: " << s.dimension() << "\n" << plumb::format_int_matrix(s.entries);
    const plumb::Inertia in = plumb::inertia(s);
    std::cout << "inertia: " << in << "\n"
              << "signature: " << in.signature() << "\n"
              << "four_ball_lower: " << ceil_half(in.signature()) << "\n";
    return 0;
}

int emit(const plumb::SweepReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << plumb::to_json(rep);
    } else if (format == "csv") {
        std::cout << plumb::to_csv(rep);
    } else {
        std::cout << plumb::to_text(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrices and signature checks for tree-like Hopf plumbings"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"json", "csv", "text"});

    auto* tree_cmd = app.add_subcommand("tree", "invariants of one plumbing tree");
    std::string tree_file;
    std::string tree_show = "sig";
    tree_cmd->add_option("file", tree_file, "tree file")->required();
    tree_cmd->add_option("--show", tree_show, "comma list of sig,alex,coxeter,profile,cert")
        ->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "verify the theorems over a whole corpus");
    sweep_cmd->require_subcommand(1);

    auto* st_cmd = sweep_cmd->add_subcommand("trees", "all free trees up to --max-n vertices");
    int st_max_n = 14;
    std::string st_checks = "thm1,cert,small5,cor1,acampo,thmA,propD,lemmaB,monodromy";
    std::string st_format = "text";
    st_cmd->add_option("--max-n", st_max_n, "largest vertex count")->capture_default_str();
    st_cmd->add_option("--check", st_checks, "comma list of checks")->capture_default_str();
    st_cmd->add_option("--format", st_format, "output format")
        ->check(format_check)
        ->capture_default_str();

    auto* sl_cmd =
        sweep_cmd->add_subcommand("slalom", "slalom trees of all planted trees up to --max-n");
    int sl_max_n = 8;
    std::string sl_format = "text";
    sl_cmd->add_option("--max-n", sl_max_n, "largest planted tree size")->capture_default_str();
    sl_cmd->add_option("--format", sl_format, "output format")
        ->check(format_check)
        ->capture_default_str();

    auto* sp_cmd = sweep_cmd->add_subcommand("spiral", "spiral-divide forms S_2 .. S_2n");
    int sp_max_n = 100;
    std::string sp_format = "text";
    sp_cmd->add_option("--max-n", sp_max_n, "largest block count")->capture_default_str();
    sp_cmd->add_option("--format", sp_format, "output format")
        ->check(format_check)
        ->capture_default_str();

    auto* rt_cmd =
        sweep_cmd->add_subcommand("roots", "alexander root location for trees up to --max-n");
    int rt_max_n = 12;
    std::string rt_format = "text";
    rt_cmd->add_option("--max-n", rt_max_n, "largest vertex count")->capture_default_str();
    rt_cmd->add_option("--format", rt_format, "output format")
        ->check(format_check)
        ->capture_default_str();

    auto* opt_cmd = app.add_subcommand("optimal", "chained copies of the extremal six-vertex tree");
    int copies = 10;
    std::string opt_format = "text";
    opt_cmd->add_option("--copies", copies, "number of glued copies")->capture_default_str();
    opt_cmd->add_option("--format", opt_format, "output format")
        ->check(format_check)
        ->capture_default_str();

    auto* matrix_cmd = app.add_subcommand("matrix", "invariants of one integer matrix");
    std::string matrix_file;
    std::string matrix_show = "inertia";
    matrix_cmd->add_option("file", matrix_file, "matrix file")->required();
    matrix_cmd->add_option("--show", matrix_show, "comma list of inertia,spectrum,profile")
        ->capture_default_str();

    auto* divide_cmd = app.add_subcommand("divide", "adjacency form of a divide");
    std::string divide_file;
    divide_cmd->add_option("file", divide_file, "divide combinatorics file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tree_cmd) return run_tree(tree_file, tree_show);
        if (*matrix_cmd) return run_matrix(matrix_file, matrix_show);
        if (*divide_cmd) return run_divide(divide_file);
        if (*st_cmd) return emit(plumb::sweep_trees(st_max_n, plumb::parse_checks(st_checks)),
                                 st_format);
        if (*sl_cmd) return emit(plumb::sweep_slalom(sl_max_n), sl_format);
        if (*sp_cmd) return emit(plumb::sweep_spiral(sp_max_n), sp_format);
        if (*rt_cmd) return emit(plumb::conjecture1_scan(rt_max_n), rt_format);
        if (*opt_cmd) return emit(plumb::optimal_family_check(copies), opt_format);
    } catch (const plumb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
