// Command-line interface: exact Kneser-coloring counts, family construction,
// closed-form evaluation, the verification suites, and the cover explorer.
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
// resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "kneserlab/closedform.hpp"
#include "kneserlab/harness.hpp"

using namespace kneserlab;

namespace {

struct OutputOptions {
    bool json = false;
    bool csv = false;
    bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_flag("--json", out.json, "emit the report as JSON");
    cmd->add_flag("--csv", out.csv, "emit the report as CSV");
    cmd->add_flag("--timing", out.timing, "include wall-clock duration in the report");
}

int emit(const ExperimentReport& rep, const OutputOptions& out) {
    if (out.json)
        std::cout << to_json(rep, out.timing);
    else if (out.csv)
        std::cout << to_csv(rep, out.timing);
    else
        std::cout << to_text(rep, out.timing);
    return rep.all_passed() ? 0 : 1;
}

CoverConfig parse_cover(const std::string& text, int ell) {
    std::vector<std::vector<int>> sets;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ',')) {
        std::istringstream is(group);
        std::vector<int> verts;
        int v;
        while (is >> v) verts.push_back(v);
        if (!verts.empty()) sets.push_back(verts);
    }
    if (sets.empty()) throw error("cover: expected comma-separated vertex groups");
    return CoverConfig(ell, std::move(sets));
}

Budget budget_from_env() {
    Budget b;
    if (const char* env = std::getenv("KNESERLAB_BUDGET")) b.max_color_enumerations = std::atof(env);
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of Kneser colorings of uniform hypergraphs"};
    app.require_subcommand(1);

    Budget budget = budget_from_env();
    double budget_flag = 0;
    app.add_option("--budget", budget_flag,
                   "coloring-enumeration budget override (default 2e8; env KNESERLAB_BUDGET)");

    // ---- count ----
    auto* count_cmd = app.add_subcommand("count", "count Kneser colorings of a hypergraph file");
    std::string count_file;
    int count_k = 2, count_ell = 1;
    std::string count_method = "backtrack";
    count_cmd->add_option("file", count_file, "hypergraph file (- for stdin)")->required();
    count_cmd->add_option("--k", count_k, "number of colors")->required();
    count_cmd->add_option("--ell", count_ell, "intersection threshold")->required();
    count_cmd->add_option("--method", count_method, "backtrack|chromatic")
        ->check(CLI::IsMember({"backtrack", "chromatic"}));

    // ---- construct ----
    auto* construct_cmd = app.add_subcommand("construct", "emit a hypergraph family as a file");
    std::string family = "star", cover_text, out_file;
    int cn = 0, cr = 0, cell = 1, ck = 4, cs = 0;
    construct_cmd->add_option("--family", family, "star|ak|cover-complete|extremal")
        ->required()
        ->check(CLI::IsMember({"star", "ak", "cover-complete", "extremal"}));
    construct_cmd->add_option("--n", cn)->required();
    construct_cmd->add_option("--r", cr)->required();
    construct_cmd->add_option("--ell", cell);
    construct_cmd->add_option("--k", ck);
    construct_cmd->add_option("--s", cs, "window parameter for --family=ak");
    construct_cmd->add_option("--cover", cover_text,
                              "cover sets for --family=cover-complete, e.g. \"1 2,3 4\"");
    construct_cmd->add_option("-o,--output", out_file, "output file (default stdout)");

    // ---- formula ----
    auto* formula_cmd = app.add_subcommand("formula", "evaluate a closed-form quantity");
    std::string what;
    int fn = 0, fr = 0, fk = 4, fell = 1, fc = 2, fy = -1;
    OutputOptions formula_out;
    formula_cmd->add_option("--what", what, "alpha|cnd|splits|coverage|s-of-y|t1-bound|ratio")
        ->required()
        ->check(CLI::IsMember({"alpha", "cnd", "splits", "coverage", "s-of-y", "t1-bound", "ratio"}));
    formula_cmd->add_option("--n", fn);
    formula_cmd->add_option("--r", fr);
    formula_cmd->add_option("--k", fk);
    formula_cmd->add_option("--ell", fell);
    formula_cmd->add_option("--c", fc);
    formula_cmd->add_option("--y", fy);
    add_output_flags(formula_cmd, formula_out);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int vn = 0, vr = 0, vell = 1, vc = 5;
    std::uint64_t vseed = 1;
    int vtrials = 500;
    OutputOptions verify_out;
    verify_cmd->add_option("--suite", suite, "k2|k4|identities|sandwich|lemma37|cross")
        ->required()
        ->check(CLI::IsMember({"k2", "k4", "identities", "sandwich", "lemma37", "cross"}));
    verify_cmd->add_option("--n", vn);
    verify_cmd->add_option("--r", vr);
    verify_cmd->add_option("--ell", vell);
    verify_cmd->add_option("--c", vc, "largest cover size for --suite=identities");
    verify_cmd->add_option("--seed", vseed);
    verify_cmd->add_option("--trials", vtrials);
    add_output_flags(verify_cmd, verify_out);

    // ---- explore ----
    auto* explore_cmd = app.add_subcommand("explore", "rank cover-overlap patterns (k >= 5, r < 2*ell-1)");
    int en = 0, er = 0, ek = 5, eell = 2;
    OutputOptions explore_out;
    explore_cmd->add_option("--n", en)->required();
    explore_cmd->add_option("--r", er)->required();
    explore_cmd->add_option("--k", ek)->required();
    explore_cmd->add_option("--ell", eell)->required();
    add_output_flags(explore_cmd, explore_out);

    try {
        app.parse(argc, argv);
        if (budget_flag > 0) budget.max_color_enumerations = budget_flag;

        if (*count_cmd) {
            Hypergraph h = [&] {
                if (count_file == "-") return read_hypergraph(std::cin);
                std::ifstream in(count_file);
                if (!in) throw error("cannot open " + count_file);
                return read_hypergraph(in);
            }();
            BigCount kappa = (count_method == "chromatic")
                                 ? kappa_chromatic(h, count_k, count_ell, budget)
                                 : kappa_backtrack(h, count_k, count_ell);
            std::cout << kappa.str() << "\n";
            return 0;
        }

        if (*construct_cmd) {
            Hypergraph h = [&]() -> Hypergraph {
                if (family == "star") {
                    std::vector<int> t(static_cast<std::size_t>(cell));
                    std::iota(t.begin(), t.end(), 1);
                    return complete_from_cover(cn, cr, CoverConfig(cell, {t}));
                }
                if (family == "ak") return ak_family({cn, cr, cell, cs});
                if (family == "cover-complete")
                    return complete_from_cover(cn, cr, parse_cover(cover_text, cell));
                // extremal: the candidate family representative
                auto covers = candidate_covers(cn, cr, ck, cell);
                return complete_from_cover(cn, cr, covers.front());
            }();
            if (out_file.empty()) {
                write_hypergraph(std::cout, h);
            } else {
                std::ofstream out(out_file);
                if (!out) throw error("cannot open " + out_file);
                write_hypergraph(out, h);
            }
            return 0;
        }

        if (*formula_cmd) {
            ExperimentReport rep;
            rep.experiment = "formula";
            rep.params["what"] = what;
            if (what == "cnd") {
                CND f = cnd(fk);
                rep.params["k"] = std::to_string(fk);
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << "c=" << f.c << " N=" << f.n.str() << " D=" << f.d.str() << "\n";
                    return 0;
                }
                rep.rows.push_back({"c", BigCount(f.c), 0, {}});
                rep.rows.push_back({"N", f.n, 0, {}});
                rep.rows.push_back({"D", f.d, 0, {}});
            } else if (what == "splits") {
                rep.params["k"] = std::to_string(fk);
                std::ostringstream os;
                for (const auto& s : optimal_splits(fk)) {
                    os << "(";
                    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
                    os << ") ";
                }
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << os.str() << "value=" << optimal_split_value(fk).str() << "\n";
                    return 0;
                }
                rep.observe("splits", os.str());
                rep.rows.push_back({"value", optimal_split_value(fk), 0, {}});
            } else if (what == "alpha") {
                BigCount a = alpha({fn, fr, fk, fell});
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << a.str() << "\n";
                    return 0;
                }
                rep.rows.push_back({"alpha", a, 0, {}});
            } else if (what == "coverage") {
                CoverageCount cov = coverage_counts(fn, fr, fell, fc);
                std::ostringstream os;
                auto print = [&](const char* name, const std::vector<BigCount>& vals) {
                    os << name << "=[";
                    for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i].str();
                    os << "] ";
                };
                print("A", cov.a);
                print("B", cov.b);
                print("C", cov.cc);
                print("D", cov.d);
                print("E", cov.e);
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << os.str() << "\n";
                    return 0;
                }
                rep.observe("coverage", os.str());
            } else if (what == "s-of-y") {
                if (fy < 0) throw CLI::ValidationError("--y is required for --what=s-of-y");
                BigCount s = generalized_star_count(fn, fr, fell, fy);
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << s.str() << "\n";
                    return 0;
                }
                rep.rows.push_back({"S(y)", s, 0, {}});
            } else if (what == "t1-bound") {
                BigCount bound = t1_upper_bound(fn, fr, fk, fell);
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << bound.str() << "\n";
                    return 0;
                }
                rep.rows.push_back({"bound", bound, 0, {}});
            } else if (what == "ratio") {
                Rational ratio = appendix_ratio(fn, fr, fell, fk);
                if (!formula_out.json && !formula_out.csv) {
                    std::cout << ratio.str() << "\n";
                    return 0;
                }
                rep.observe("ratio", ratio.str());
            }
            return emit(rep, formula_out);
        }

        if (*verify_cmd) {
            ExperimentReport rep;
            if (suite == "k2") {
                if (vn == 0 || vr == 0) throw CLI::ValidationError("--n and --r are required");
                rep = verify_k2(vn, vr, vell, budget);
            } else if (suite == "k4") {
                if (vn == 0 || vr == 0) throw CLI::ValidationError("--n and --r are required");
                rep = verify_k4(vn, vr, vell, budget);
            } else if (suite == "identities") {
                rep = verify_identities(vn > 0 ? vn : 30, vr > 0 ? vr : 8, vc);
            } else if (suite == "sandwich") {
                rep = verify_sandwich(budget);
            } else if (suite == "lemma37") {
                rep = verify_product_inequality(vseed, vtrials > 0 ? vtrials : 1000);
            } else {
                rep = cross_validate(vseed, vtrials, budget);
            }
            return emit(rep, verify_out);
        }

        if (*explore_cmd) {
            ExperimentReport rep = explore_conjecture(en, er, ek, eell, budget);
            return emit(rep, explore_out);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
