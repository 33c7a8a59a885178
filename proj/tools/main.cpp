#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "quiver3/json_io.hpp"
#include "quiver3/verify.hpp"

namespace {

using namespace quiver3;

Triple parse_triple(const std::string& x, const std::string& y, const std::string& z) {
    return Triple(parse_int(x), parse_int(y), parse_int(z));
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

struct Args {
    std::string x, y, z;
    std::string constant;
    std::string zslice;
    std::string r, s, t;
    std::string max_abs = "1000";
    std::size_t max_nodes = 4096;
    std::string dot_file;
    std::vector<double> point;
    int box = 20;
    bool pretty = false;
};

int dispatch(const std::string& cmd, const Args& a) {
    if (cmd == "decide") {
        Triple t = parse_triple(a.x, a.y, a.z);
        Classification c = descend(t);
        bool acyclic_by_constant = predicate_constant(t);
        bool cyclic_by_band = predicate_band(t);
        Json j = classification_json(c);
        j["m_case"] = m_case_name(m_case(t));
        j["predicate_constant_acyclic"] = acyclic_by_constant;
        j["predicate_band_cyclic"] = cyclic_by_band;
        j["procedures_agree"] = (acyclic_by_constant == (c.verdict == Verdict::Acyclic)) &&
                                (cyclic_by_band == (c.verdict == Verdict::Cyclic));
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "descend") {
        Classification c = descend(parse_triple(a.x, a.y, a.z));
        Json j = classification_json(c);
        j["in_fundamental_domain"] = in_fundamental_domain(c.representative);
        j["in_open_domain"] = in_open_domain(c.representative);
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "constant") {
        Triple t = parse_triple(a.x, a.y, a.z);
        Json j{{"triple", triple_json(t)}, {"constant", to_string(markov_constant(t))}};
        if (t.x >= 2 && t.y >= 2) {
            RealBandFns f = evaluate_band(t.x, t.y);
            j["m_minus"] = f.m_minus;
            j["m_plus"] = f.m_plus;
        }
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "orbit") {
        Triple t = parse_triple(a.x, a.y, a.z);
        Int bound = parse_int(a.max_abs);
        OrbitSummary s = summarize_orbit(t, bound, a.max_nodes);
        if (!a.dot_file.empty()) {
            OrbitGraph g = enumerate_orbit(t, bound, a.max_nodes);
            std::ofstream out(a.dot_file);
            if (!out) throw std::domain_error("cannot write " + a.dot_file);
            out << export_dot(g);
        }
        emit(orbit_summary_json(s), a.pretty);
        return 0;
    }
    if (cmd == "dot") {
        OrbitGraph g = enumerate_orbit(parse_triple(a.x, a.y, a.z), parse_int(a.max_abs),
                                       a.max_nodes);
        std::cout << export_dot(g);
        return 0;
    }
    if (cmd == "reps") {
        Int C = parse_int(a.constant);
        if (C == 4)
            throw std::domain_error(
                "C = 4 carries the infinite cyclic family (x,x,2), x >= 2; "
                "no finite list exists");
        Json j{{"constant", to_string(C)}, {"cyclic", cyclic_reps_json(cyclic_representatives(C))}};
        if (C >= 0) j["acyclic"] = acyclic_classes_json(acyclic_representatives(C));
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "spectrum") {
        Triple t = parse_triple(a.x, a.y, a.z);
        CoxeterSpectrum s = spectrum(t);
        Json j = spectrum_json(s, char_poly(coxeter(cartan(t))));
        j["triple"] = triple_json(t);
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "slice") {
        Int C = parse_int(a.constant), z = parse_int(a.zslice);
        ComponentTable tab = component_table(C);
        Json sing = Json::array();
        for (const Triple& p : singular_points(C, Field::Real)) sing.push_back(triple_json(p));
        Json j{{"constant", to_string(C)},
               {"z", to_string(z)},
               {"kind", slice_kind_name(slice_classify(C, z))},
               {"singular_points_real", sing},
               {"component_table",
                Json{{"components", tab.components},
                     {"smooth_components", tab.smooth_components},
                     {"compact_components", tab.compact_components}}}};
        if (!a.point.empty()) {
            std::array<double, 3> p{a.point[0], a.point[1], a.point[2]};
            j["component"] = component_label_name(component_of(p));
        }
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "hochschild") {
        AcyclicQuiver3 q{parse_int(a.r), parse_int(a.s), parse_int(a.t)};
        if (q.r < 0 || q.s < 0 || q.t < 0)
            throw std::domain_error("arrow counts must be nonnegative");
        PathCounts nu = path_counts(q);
        Json j{{"quiver", quiver_json(q)},
               {"path_counts", Json{{"nu_12", to_string(nu.nu_12)},
                                    {"nu_23", to_string(nu.nu_23)},
                                    {"nu_13", to_string(nu.nu_13)}}},
               {"components", components(q)},
               {"dim_h1", to_string(dim_h1(q))}};
        if (q.r > 0 && q.s > 0) {
            Triple cyc = mutate_to_cyclic(q);
            j["cyclic_triple"] = triple_json(cyc);
            j["constant"] = to_string(markov_constant(cyc));
            j["theorem_holds"] = verify_appendix_theorem(q);
        }
        emit(j, a.pretty);
        return 0;
    }
    if (cmd == "candidates") {
        Int C = parse_int(a.constant);
        for (const AcyclicQuiver3& q : hereditary_candidates(C)) {
            Triple cyc = mutate_to_cyclic(q);
            Json j = quiver_json(q);
            j["dim_h1"] = to_string(dim_h1(q));
            j["cyclic_triple"] = triple_json(cyc);
            j["constant"] = to_string(markov_constant(cyc));
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    if (cmd == "verify") {
        std::vector<CheckResult> results = verify_harness(a.box);
        bool all = true;
        if (a.pretty) {
            for (const CheckResult& r : results) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases
                          << " cases)";
                if (!r.passed) std::cout << ": " << r.detail;
                std::cout << "\n";
                all &= r.passed;
            }
        } else {
            Json arr = Json::array();
            for (const CheckResult& r : results) {
                arr.push_back(Json{{"name", r.name},
                                   {"passed", r.passed},
                                   {"cases", r.cases},
                                   {"detail", r.detail}});
                all &= r.passed;
            }
            emit(Json{{"box", a.box}, {"checks", arr}, {"all_passed", all}}, false);
        }
        return all ? 0 : 1;
    }
    throw std::domain_error("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-3 quiver mutation toolkit: cluster-cyclic classification, "
                 "Markov constants, orbits, Coxeter spectra"};
    app.require_subcommand(1);
    Args a;

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("x", a.x)->required();
        sub->add_option("y", a.y)->required();
        sub->add_option("z", a.z)->required();
    };
    auto add_pretty = [&](CLI::App* sub) { sub->add_flag("--pretty", a.pretty); };

    for (const char* name : {"decide", "descend", "constant", "spectrum"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_triple(sub);
        add_pretty(sub);
    }
    for (const char* name : {"orbit", "dot"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_triple(sub);
        sub->add_option("--max-abs", a.max_abs, "coordinate bound for BFS");
        sub->add_option("--max-nodes", a.max_nodes, "node bound for BFS");
        add_pretty(sub);
    }
    app.get_subcommand("orbit")->add_option("--dot", a.dot_file, "also write DOT to this file");
    {
        CLI::App* sub = app.add_subcommand("reps");
        sub->add_option("--constant", a.constant)->required();
        add_pretty(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("candidates");
        sub->add_option("--constant", a.constant)->required();
    }
    {
        CLI::App* sub = app.add_subcommand("slice");
        sub->add_option("C", a.constant)->required();
        sub->add_option("z", a.zslice)->required();
        sub->add_option("--point", a.point, "real point to place on a component")->expected(3);
        add_pretty(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("hochschild");
        sub->add_option("r", a.r)->required();
        sub->add_option("s", a.s)->required();
        sub->add_option("t", a.t)->required();
        add_pretty(sub);
    }
    {
        CLI::App* sub = app.add_subcommand("verify");
        sub->add_option("--box", a.box, "box size N for the exhaustive checks");
        add_pretty(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), a);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    }
}
