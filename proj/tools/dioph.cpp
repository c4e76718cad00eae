// Command-line front end: construct curves from problem files, iterate
// generator multiples into verified integer solutions, search for points,
// verify solution files, and replay the regression corpus.
//
// Exit codes: 0 success, 1 input error, 2 reduction needs a point that was
// not supplied (non-square constant), 3 verification failure.

#include <CLI11.hpp>
#include <dioph/dioph.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace {

using namespace dioph;

struct ProblemFile {
    std::optional<DEProblem> problem;
    std::optional<CubesFifthsParams> params;
};

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file " + path);
    Json j = Json::parse(in);
    if (j.is_object() && j.contains("problem")) j = j["problem"]; // corpus fixture
    else if (j.is_object() && j.contains("params")) j = j["params"];
    ProblemFile pf;
    if (j.is_object() && j.contains("x1"))
        pf.params = cubes_fifths_from_json(j);
    else
        pf.problem = problem_from_json(j);
    return pf;
}

std::pair<Rational, Rational> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("expected two comma-separated rationals, got \"" + s + "\"");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

std::string polynomial(const std::vector<std::pair<Rational, std::string>>& terms) {
    std::string out;
    for (const auto& [c, sym] : terms) {
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string part = sym.empty()           ? to_string(mag)
                           : mag == 1            ? sym
                                                 : to_string(mag) + "*" + sym;
        if (out.empty())
            out = (c < 0 ? "-" : "") + part;
        else
            out += (c < 0 ? " - " : " + ") + part;
    }
    return out.empty() ? "0" : out;
}

std::string curve_equation(const LongWeierstrass& c) {
    return polynomial({{Rational(1), "Y^2"}, {c.a1(), "X*Y"}, {c.a3(), "Y"}}) + " = " +
           polynomial({{Rational(1), "X^3"}, {c.a2(), "X^2"}, {c.a4(), "X"}, {c.a6(), ""}});
}

std::string quartic_equation(const Quartic& q, const std::string& var) {
    return "V^2 = " + polynomial({{q.a(), var + "^4"},
                                  {q.b(), var + "^3"},
                                  {q.c(), var + "^2"},
                                  {q.d(), var},
                                  {q.e(), ""}});
}

std::string point_text(const CurvePoint& p) {
    if (p.is_infinity()) return "inf";
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

// ---------------------------------------------------------------- construct

int cmd_construct(const ProblemFile& pf, const std::optional<std::pair<Rational, Rational>>& gen,
                  bool as_json) {
    Json out;
    if (pf.problem && pf.problem->k == 3) {
        LongWeierstrass curve = build_k3(*pf.problem);
        if (as_json) {
            out["curve"] = to_json(curve);
            std::cout << out.dump(1) << "\n";
        } else {
            std::cout << "curve: " << curve_equation(curve) << "\n";
        }
        return 0;
    }

    // Both remaining pipelines go through a quartic model; when its constant
    // term is not a nonzero square a known point is required to proceed.
    Quartic model = pf.problem ? build_k4_quartic(*pf.problem) : build_cubes_fifths(*pf.params);
    out["quartic"] = to_json(model);
    if (!as_json) std::cout << "quartic: " << quartic_equation(model, "U") << "\n";

    if (pf.problem) {
        try {
            auto [curve, q] = build_k4_cubic(*pf.problem);
            if (as_json) {
                out["curve"] = to_json(curve);
                out["q"] = to_string(q);
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << "curve: " << curve_equation(curve) << "\n"
                          << "q = " << to_string(q) << "\n";
            }
            return 0;
        } catch (const not_square_error& e) {
            if (!gen) {
                if (as_json) std::cout << out.dump(1) << "\n";
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        K4ShiftReduction red =
            build_k4_via_shift(*pf.problem, QuarticPoint{gen->first, gen->second});
        if (as_json) {
            out["shifted_quartic"] = to_json(red.shifted);
            out["u0"] = to_string(red.u0);
            out["curve"] = to_json(red.curve);
            out["q"] = to_string(red.q);
            out["seed"] = to_json(red.seed);
            std::cout << out.dump(1) << "\n";
        } else {
            std::cout << "shifted at u0 = " << to_string(red.u0) << ": "
                      << quartic_equation(red.shifted, "T") << "\n"
                      << "curve: " << curve_equation(red.curve) << "\n"
                      << "q = " << to_string(red.q) << "\n"
                      << "seed: " << point_text(red.seed) << "\n";
        }
        return 0;
    }

    if (!gen) {
        if (as_json) std::cout << out.dump(1) << "\n";
        std::cerr << "error: this family's quartic needs a known point (--gen t,v) to reduce "
                     "to a curve\n";
        return 2;
    }
    QuarticPoint known{gen->first, gen->second};
    if (!model.contains(known))
        throw std::invalid_argument("--gen point is not on the family quartic");
    Quartic shifted = shift_by_point(model, known);
    auto [curve, q] = to_cubic(shifted);
    SquareCompletion comp = complete_square(curve);
    CurvePoint seed = quartic_to_cubic_point(shifted, q, QuarticPoint{Rational(0), -q});
    if (as_json) {
        out["shifted_quartic"] = to_json(shifted);
        out["u0"] = to_string(known.u);
        out["curve"] = to_json(curve);
        out["q"] = to_string(q);
        out["completed_curve"] = to_json(comp.curve());
        out["seed"] = to_json(seed);
        std::cout << out.dump(1) << "\n";
    } else {
        std::cout << "shifted at u0 = " << to_string(known.u) << ": "
                  << quartic_equation(shifted, "T") << "\n"
                  << "curve: " << curve_equation(curve) << "\n"
                  << "q = " << to_string(q) << "\n"
                  << "completed: " << curve_equation(comp.curve()) << "\n"
                  << "seed: " << point_text(seed) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- solve

int cmd_solve(const ProblemFile& pf, const std::pair<Rational, Rational>& gen, long multiples,
              const std::optional<std::string>& store_path) {
    std::optional<SolutionStore> store;
    if (store_path) store.emplace(*store_path);

    // Produce the rational solution for multiple m, or throw
    // exceptional_point_error when that multiple has no solution.
    std::function<RationalSolution(long)> solve_at;
    std::string tag;

    if (pf.problem && pf.problem->k == 3) {
        LongWeierstrass curve = build_k3(*pf.problem);
        CurvePoint g = CurvePoint::affine(gen.first, gen.second);
        if (!curve.contains(g)) throw std::invalid_argument("generator is not on the curve");
        tag = "k3:Z=" + to_string(pf.problem->z);
        solve_at = [p = *pf.problem, curve, g](long m) {
            return k3_point_to_solution(p, curve.scalar_mul(m, g));
        };
    } else if (pf.problem) {
        bool square_q = true;
        try {
            auto [curve, q] = build_k4_cubic(*pf.problem);
            CurvePoint g = CurvePoint::affine(gen.first, gen.second);
            if (!curve.contains(g)) throw std::invalid_argument("generator is not on the curve");
            tag = "k4:Z=" + to_string(pf.problem->z);
            solve_at = [p = *pf.problem, curve, q = q, g](long m) {
                return k4_point_to_solution(p, q, curve.scalar_mul(m, g));
            };
        } catch (const not_square_error&) {
            square_q = false;
        }
        if (!square_q) {
            // generator is a point on the quartic model; iterate on the
            // shifted model's curve from its seed point
            K4ShiftReduction red =
                build_k4_via_shift(*pf.problem, QuarticPoint{gen.first, gen.second});
            tag = "k4shift:Z=" + to_string(pf.problem->z);
            solve_at = [p = *pf.problem, red](long m) {
                return k4_shift_point_to_solution(p, red, red.curve.scalar_mul(m, red.seed));
            };
        }
    } else {
        Quartic family = build_cubes_fifths(*pf.params);
        QuarticPoint known{gen.first, gen.second};
        if (!family.contains(known))
            throw std::invalid_argument("generator is not on the family quartic");
        Quartic shifted = shift_by_point(family, known);
        auto [curve, q] = to_cubic(shifted);
        CurvePoint seed = quartic_to_cubic_point(shifted, q, QuarticPoint{Rational(0), -q});
        tag = "cf";
        solve_at = [params = *pf.params, shifted, curve, q = q, seed, u0 = known.u](long m) {
            QuarticPoint tp = cubic_to_quartic_point(shifted, q, curve.scalar_mul(m, seed));
            return cubes_fifths_point_to_solution(params, QuarticPoint{tp.u + u0, tp.v});
        };
    }

    for (long m = 1; m <= multiples; ++m) {
        try {
            RationalSolution rat = solve_at(m);
            rat.provenance = tag + ":gen*" + std::to_string(m);
            IntegerSolution sol = scale_to_integers(rat);
            std::cout << to_json(sol).dump() << "\n";
            if (store) {
                bool added = store->append(sol);
                std::cerr << (added ? "stored" : "duplicate") << " m=" << m << "\n";
            }
        } catch (const exceptional_point_error& e) {
            std::cerr << "skip m=" << m << ": " << e.what() << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- search

int cmd_search(const ProblemFile& pf, const std::optional<std::pair<Rational, Rational>>& gen,
               long num_bound, long den_bound, bool as_json) {
    std::optional<LongWeierstrass> curve;
    if (pf.problem && pf.problem->k == 3) {
        curve = build_k3(*pf.problem);
    } else if (pf.problem) {
        try {
            curve = build_k4_cubic(*pf.problem).first;
        } catch (const not_square_error& e) {
            if (!gen) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            curve = build_k4_via_shift(*pf.problem, QuarticPoint{gen->first, gen->second}).curve;
        }
    } else {
        if (!gen) {
            std::cerr << "error: searching this family needs a quartic point (--gen t,v)\n";
            return 2;
        }
        Quartic family = build_cubes_fifths(*pf.params);
        QuarticPoint known{gen->first, gen->second};
        if (!family.contains(known))
            throw std::invalid_argument("--gen point is not on the family quartic");
        auto [longc, q] = to_cubic(shift_by_point(family, known));
        curve = complete_square(longc).curve();
    }

    std::vector<CurvePoint> points = naive_search(*curve, Int(num_bound), Int(den_bound));
    auto both_sides = [&](const CurvePoint& p) {
        return p.y() * p.y() + curve->a1() * p.x() * p.y() + curve->a3() * p.y();
    };
    if (as_json) {
        Json arr = Json::array();
        for (const CurvePoint& p : points) {
            Json e = to_json(p);
            e["both_sides"] = to_string(both_sides(p));
            arr.push_back(e);
        }
        std::cout << Json{{"curve", to_json(*curve)}, {"points", arr}}.dump(1) << "\n";
    } else {
        std::cout << "curve: " << curve_equation(*curve) << "\n";
        for (const CurvePoint& p : points)
            std::cout << point_text(p) << "  [both sides = " << to_string(both_sides(p))
                      << "]\n";
        std::cout << points.size() << " point(s)\n";
    }
    return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open solutions file " + path);
    std::string line;
    long lineno = 0;
    bool malformed = false, failed = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            IntegerSolution s = integer_solution_from_json(Json::parse(line));
            bool ok = verify(s);
            failed = failed || !ok;
            std::cout << "line " << lineno << ": " << (ok ? "verified" : "FAILED") << "\n";
        } catch (const std::exception& e) {
            malformed = true;
            std::cout << "line " << lineno << ": malformed: " << e.what() << "\n";
        }
    }
    if (malformed) return 1;
    return failed ? 3 : 0;
}

// ------------------------------------------------------------------- corpus

int cmd_corpus(const std::string& dir, bool as_json) {
    std::vector<EntryReport> reports = run_corpus(dir);
    if (as_json)
        std::cout << corpus_report_json(reports).dump(1) << "\n";
    else
        std::cout << corpus_report_table(reports);
    bool all = std::all_of(reports.begin(), reports.end(),
                           [](const EntryReport& r) { return r.ok(); });
    return all ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reduction of X^3+Y^3+Z^3+a*U^k identities to elliptic curves"};
    app.require_subcommand(1);

    std::string problem_path, gen_text, store_text, verify_path;
    std::string corpus_dir = "corpus";
    long multiples = 1, num_bound = 10, den_bound = 1;
    bool as_json = false;

    CLI::App* construct = app.add_subcommand("construct", "reduce a problem file to its curve");
    construct->add_option("--problem", problem_path, "problem or fixture JSON file")->required();
    construct->add_option("--gen", gen_text, "known point x,y (quartic point for shift routes)");
    construct->add_flag("--json", as_json, "JSON output");

    CLI::App* solve = app.add_subcommand("solve", "emit verified integer solutions as JSONL");
    solve->add_option("--problem", problem_path, "problem or fixture JSON file")->required();
    solve->add_option("--gen", gen_text, "generator point x,y")->required();
    solve->add_option("--multiples", multiples, "use m*P for m = 1..N");
    CLI::Option* store_opt =
        solve->add_option("--store", store_text, "append to JSONL store (default from DIOPH_STORE)")
            ->expected(0, 1);

    CLI::App* search = app.add_subcommand("search", "bounded naive search for curve points");
    search->add_option("--problem", problem_path, "problem or fixture JSON file")->required();
    search->add_option("--gen", gen_text, "known quartic point for shift routes");
    search->add_option("--num-bound", num_bound, "max |numerator| of x");
    search->add_option("--den-bound", den_bound, "max denominator of x");
    search->add_flag("--json", as_json, "JSON output");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a JSONL solutions file exactly");
    verify_cmd->add_option("file", verify_path, "JSONL solutions file")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "replay the regression corpus");
    corpus->add_option("dir", corpus_dir, "fixture directory");
    corpus->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::optional<std::pair<Rational, Rational>> gen;
        if (!gen_text.empty()) gen = parse_pair(gen_text);
        if (*construct) return cmd_construct(load_problem(problem_path), gen, as_json);
        if (*solve) {
            std::optional<std::string> store_path;
            if (store_opt->count())
                store_path = store_text.empty() ? SolutionStore::default_path() : store_text;
            return cmd_solve(load_problem(problem_path), *gen, multiples, store_path);
        }
        if (*search)
            return cmd_search(load_problem(problem_path), gen, num_bound, den_bound, as_json);
        if (*verify_cmd) return cmd_verify(verify_path);
        if (*corpus) return cmd_corpus(corpus_dir, as_json);
    } catch (const not_square_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
