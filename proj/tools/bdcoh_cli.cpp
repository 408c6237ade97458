// Batch front-end: verifications, constructions and classifications with
// deterministic JSON reports.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = invalid input, 3 = undecided within budget.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bdcoh/errors.hpp"
#include "bdcoh/jobs.hpp"

using namespace bdcoh;

namespace {

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

AdmissibleTriple triple_from_flag(const std::string& flag, int n) {
    if (flag == "trivial" || flag.empty()) return AdmissibleTriple::trivial(n);
    return triple_from_json(load_json_file(flag));
}

SolveBudget budget_from_flags(long height, double time_s) {
    SolveBudget b;
    if (time_s > 0) b = SolveBudget::from_time_seconds(time_s);
    if (height > 0) b.max_height = height;
    return b;
}

int emit(const JobReport& rep, const std::string& json_path) {
    std::string text = rep.doc.dump(2) + "\n";
    if (json_path == "-") {
        std::cout << text;
    } else {
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            out << text;
        }
        std::string verdict = rep.doc.contains("verdict") ? rep.doc["verdict"].dump() : "done";
        std::cout << rep.doc["command"].get<std::string>() << ": " << verdict
                  << " (exit " << rep.exit_code << ")\n";
        if (rep.doc.contains("checks"))
            for (const auto& c : rep.doc["checks"])
                std::cout << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] "
                          << c["name"].get<std::string>() << "\n";
        if (rep.doc.contains("error"))
            std::cout << "  error: " << rep.doc["error"].get<std::string>() << "\n";
    }
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and constructor for Lie bialgebra cocycles on su(n,F,d)"};
    app.require_subcommand(1);

    std::string json_path, triple_flag = "trivial", x_file, q_file, lambda_json, place = "";
    std::string diag_s, diag_a, diag_b, params_s;
    int n = 2;
    long budget_height = 0;
    double budget_time = 0;
    bool normalize = false, infinity = false;
    long search_height = -1;
    std::string d_s = "-1", dprime_s = "2", a_s = "1", b_s = "1", a2_s = "1", b2_s = "1";
    std::string c_s = "1", e_s = "1";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--json", json_path, "write the JSON report to this file ('-' = stdout)");
    };

    auto* vr = app.add_subcommand("verify-rmatrix", "CYB and symmetry checks for r_BD");
    vr->add_option("--n", n)->required();
    vr->add_option("--triple", triple_flag, "'trivial' or a triple JSON file");
    vr->add_option("--params", params_s, "comma-separated skew parameters");
    add_common(vr);

    auto* vb = app.add_subcommand("verify-bialgebra", "cobracket axioms for the coboundary of r_BD");
    vb->add_option("--n", n)->required();
    vb->add_option("--triple", triple_flag);
    vb->add_option("--params", params_s);
    add_common(vb);

    auto* mc = app.add_subcommand("manin-check", "Manin triple and sqrt(d) r_DJ reconstruction");
    mc->add_option("--n", n)->required();
    mc->add_option("--d", d_s)->required();
    add_common(mc);

    auto* cc = app.add_subcommand("construct-cocycle", "X with star(X)X = diag");
    cc->add_option("--d", d_s)->required();
    cc->add_option("--diag", diag_s)->required();
    cc->add_option("--budget-height", budget_height);
    cc->add_option("--budget-time", budget_time);
    add_common(cc);

    auto* ch = app.add_subcommand("cohomologous", "compare two diagonal representatives");
    ch->add_option("--d", d_s)->required();
    ch->add_option("--A", diag_a)->required();
    ch->add_option("--B", diag_b)->required();
    add_common(ch);

    auto* cl = app.add_subcommand("classify", "norm class vector / quaternion tuple / lambda type");
    cl->add_option("--d", d_s)->required();
    cl->add_option("--diag", diag_s);
    cl->add_option("--lambda", lambda_json, "TowerElem JSON (inline or @file)");
    add_common(cl);

    auto* ad = app.add_subcommand("antidiag", "anti-diagonal cocycle predicate and normalization");
    ad->add_option("--n", n)->required();
    ad->add_option("--d", d_s)->required();
    ad->add_option("--X", x_file, "matrix JSON file")->required();
    ad->add_option("--triple", triple_flag);
    ad->add_flag("--normalize", normalize);
    add_common(ad);

    auto* tw = app.add_subcommand("twisted", "twisted cocycle predicate / bounded search");
    tw->add_option("--n", n)->required();
    tw->add_option("--d", d_s)->required();
    tw->add_option("--dprime", dprime_s)->required();
    tw->add_option("--Q", q_file, "matrix JSON file");
    tw->add_option("--search-height", search_height, "search all Q with components up to this");
    add_common(tw);

    auto* quat = app.add_subcommand("quat", "quaternion algebra tools");
    quat->require_subcommand(1);
    auto* qs = quat->add_subcommand("symbol", "Hilbert symbol (a,b)_v");
    qs->add_option("-a", a_s)->required();
    qs->add_option("-b", b_s)->required();
    qs->add_option("-p", place);
    qs->add_flag("--infinity", infinity);
    add_common(qs);
    auto* qsp = quat->add_subcommand("split", "is (a,b) split over Q");
    qsp->add_option("-a", a_s)->required();
    qsp->add_option("-b", b_s)->required();
    add_common(qsp);
    auto* qi = quat->add_subcommand("iso", "are (a1,b1) and (a2,b2) isomorphic");
    qi->add_option("--a1", a_s)->required();
    qi->add_option("--b1", b_s)->required();
    qi->add_option("--a2", a2_s)->required();
    qi->add_option("--b2", b2_s)->required();
    add_common(qi);
    auto* qn = quat->add_subcommand("solve-norm", "witness for N(u) + c N(v) = e over Q(sqrt(d))");
    qn->add_option("-c", c_s)->required();
    qn->add_option("-e", e_s)->required();
    qn->add_option("-d", d_s)->required();
    qn->add_option("--budget-height", budget_height);
    qn->add_option("--budget-time", budget_time);
    add_common(qn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // invalid input
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        JobReport rep;
        if (vr->parsed()) {
            rep = job_verify_rmatrix(triple_from_flag(triple_flag, n),
                                     params_s.empty() ? std::vector<Rational>{} : parse_list(params_s));
        } else if (vb->parsed()) {
            rep = job_verify_bialgebra(triple_from_flag(triple_flag, n),
                                       params_s.empty() ? std::vector<Rational>{} : parse_list(params_s));
        } else if (mc->parsed()) {
            rep = job_manin_check(n, parse_rational(d_s));
        } else if (cc->parsed()) {
            rep = job_construct_cocycle(parse_rational(d_s), parse_list(diag_s),
                                        budget_from_flags(budget_height, budget_time));
        } else if (ch->parsed()) {
            rep = job_cohomologous(parse_rational(d_s), parse_list(diag_a), parse_list(diag_b));
        } else if (cl->parsed()) {
            if (!lambda_json.empty()) {
                Json lj = lambda_json.front() == '@' ? load_json_file(lambda_json.substr(1))
                                                     : Json::parse(lambda_json);
                rep = job_classify_lambda(elem_from_json(lj), parse_rational(d_s));
            } else if (!diag_s.empty()) {
                rep = job_classify_diag(parse_rational(d_s), parse_list(diag_s));
            } else {
                throw bad_input("classify needs --diag or --lambda");
            }
        } else if (ad->parsed()) {
            rep = job_antidiag(n, parse_rational(d_s), matrix_from_json(load_json_file(x_file)),
                               normalize, triple_from_flag(triple_flag, n));
        } else if (tw->parsed()) {
            if (!q_file.empty())
                rep = job_twisted_check(n, parse_rational(d_s), parse_rational(dprime_s),
                                        matrix_from_json(load_json_file(q_file)));
            else if (search_height >= 0)
                rep = job_twisted_search(n, parse_rational(d_s), parse_rational(dprime_s),
                                         search_height);
            else
                throw bad_input("twisted needs --Q or --search-height");
        } else if (qs->parsed()) {
            Place v = infinity ? Place(PlaceInfinity{}) : Place(Int(place));
            rep = job_quat_symbol(parse_rational(a_s), parse_rational(b_s), v);
        } else if (qsp->parsed()) {
            rep = job_quat_split(parse_rational(a_s), parse_rational(b_s));
        } else if (qi->parsed()) {
            rep = job_quat_iso(QuatAlg{parse_rational(a_s), parse_rational(b_s)},
                               QuatAlg{parse_rational(a2_s), parse_rational(b2_s)});
        } else if (qn->parsed()) {
            rep = job_quat_solve_norm(parse_rational(c_s), parse_rational(e_s),
                                      parse_rational(d_s),
                                      budget_from_flags(budget_height, budget_time));
        } else {
            throw bad_input("unknown command");
        }
        return emit(rep, json_path);
    } catch (const bdcoh::error& e) {
        return emit(job_error_report(cmd, e.what()), json_path);
    } catch (const std::exception& e) {
        return emit(job_error_report(cmd, e.what()), json_path);
    }
}
