// Command-line front end: semigroup invariants, MDD enumeration for weighted
// Cayley digraphs, and the dimension-4 family constructions.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lshapes/diagram.hpp"
#include "lshapes/factorization.hpp"
#include "lshapes/family.hpp"
#include "lshapes/render.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using lshapes::Int;
using nlohmann::json;

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

struct Report {
    std::string command;
    json result = json::object();
    std::string text;
    bool as_json = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit() const {
        if (as_json) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            json wrapper = {{"command", command},
                            {"version", kVersion},
                            {"elapsed_ms", elapsed},
                            {"result", result}};
            std::cout << wrapper.dump(2) << '\n';
        } else {
            std::cout << text;
        }
    }
};

void run_semigroup(const std::string& gens_text, Int apery_m, bool frobenius, bool pf,
                   Int factorize_s, bool presentation, Report& report) {
    lshapes::NumericalSemigroup s(parse_list(gens_text));
    std::ostringstream text;
    if (frobenius) {
        Int f = s.frobenius();
        report.result["frobenius"] = f;
        text << "frobenius: " << f << '\n';
    }
    if (pf) {
        auto values = s.pseudo_frobenius();
        report.result["pseudo_frobenius"] = values;
        text << "pseudo_frobenius:";
        for (Int v : values) text << ' ' << v;
        text << '\n';
    }
    if (apery_m >= 0) {
        auto ap = s.apery(apery_m);
        report.result["apery"] = {{"modulus", apery_m}, {"table", ap.table()}};
        text << "apery(" << apery_m << "):";
        for (Int v : ap.table()) text << ' ' << v;
        text << '\n';
    }
    if (factorize_s >= 0) {
        auto z = lshapes::factorizations(s, factorize_s);
        json list = json::array();
        text << "factorizations(" << factorize_s << "):";
        for (const auto& f : z) {
            list.push_back(f.coords);
            text << " (";
            for (std::size_t i = 0; i < f.dimension(); ++i) text << (i ? "," : "") << f[i];
            text << ')';
        }
        report.result["factorizations"] = {{"element", factorize_s}, {"set", list}};
        text << '\n';
    }
    if (presentation) {
        auto pairs = lshapes::minimal_presentation(s);
        json list = json::array();
        text << "minimal_presentation:\n";
        for (const auto& p : pairs) {
            list.push_back({p.left.coords, p.right.coords});
            text << "  (";
            for (std::size_t i = 0; i < p.left.dimension(); ++i) text << (i ? "," : "") << p.left[i];
            text << ") = (";
            for (std::size_t i = 0; i < p.right.dimension(); ++i)
                text << (i ? "," : "") << p.right[i];
            text << ")\n";
        }
        report.result["minimal_presentation"] = list;
    }
    report.text = text.str();
}

void run_mdd(Int modulus, const std::string& steps_text, const std::string& weights_text,
             bool count, bool list, const std::string& render, bool diameter,
             const std::string& distance_text, Report& report) {
    std::vector<Int> steps = parse_list(steps_text);
    std::vector<Int> weights =
        weights_text.empty() ? std::vector<Int>(steps.size(), 1) : parse_list(weights_text);
    lshapes::WeightedCayleyDigraph g(modulus, steps, weights);
    std::ostringstream text;
    if (diameter) {
        report.result["diameter"] = g.diameter();
        text << "diameter: " << g.diameter() << '\n';
    }
    if (!distance_text.empty()) {
        auto uv = parse_list(distance_text);
        if (uv.size() != 2) throw std::invalid_argument("--distance expects u,v");
        Int d = g.distance(uv[0], uv[1]);
        report.result["distance"] = {{"from", uv[0]}, {"to", uv[1]}, {"value", d}};
        text << "distance(" << uv[0] << "," << uv[1] << "): " << d << '\n';
    }
    if (count || list || !render.empty()) {
        auto diagrams = lshapes::enumerate_mdds(g);
        report.result["count"] = diagrams.size();
        text << "mdd count: " << diagrams.size() << '\n';
        if (list || render == "json") {
            json arr = json::array();
            for (const auto& d : diagrams) arr.push_back(lshapes::diagram_json(d, g));
            report.result["diagrams"] = arr;
            if (!report.as_json) text << arr.dump(2) << '\n';
        }
        if (render == "ascii") {
            json arr = json::array();
            for (std::size_t i = 0; i < diagrams.size(); ++i) {
                std::string grid = lshapes::render_ascii(diagrams[i]);
                arr.push_back(grid);
                text << "diagram " << i + 1 << ":\n" << grid << '\n';
            }
            report.result["rendered"] = arr;
        }
    }
    report.text = text.str();
}

void run_family_instance(Int n, bool lshapes_flag, bool count, bool mi, bool verify_all,
                         bool allow_long, Report& report) {
    if (n >= 43 && !allow_long)
        throw std::invalid_argument("family runs with n >= 43 require --allow-long");
    auto inst = lshapes::build_family(n);
    std::ostringstream text;
    report.result["n"] = n;
    report.result["generators"] = inst.S.generators();
    report.result["frobenius_T"] = inst.frob_t;
    if (mi) {
        auto classes = lshapes::classify_mi(inst);
        json counts = json::object();
        text << "M_i sizes:";
        for (const auto& [i, elems] : classes) {
            counts[std::to_string(i)] = elems.size();
            text << ' ' << i << ':' << elems.size();
        }
        report.result["mi_sizes"] = counts;
        text << '\n';
    }
    if (lshapes_flag || count) {
        auto diagrams = lshapes::construct_lshape_family(inst);
        report.result["lshape_count"] = diagrams.size();
        text << "lshape count: " << diagrams.size() << '\n';
        if (lshapes_flag && !count) {
            json arr = json::array();
            for (const auto& d : diagrams) {
                arr.push_back(lshapes::diagram_json(d, inst.S, inst.S.apery(inst.frob_t).table()));
                // Render the 3-D projection; the F(T) axis is identically zero.
                text << lshapes::render_ascii(lshapes::project_out(d, 3)) << '\n';
            }
            report.result["diagrams"] = arr;
        }
    }
    if (verify_all) {
        lshapes::f_region(inst);
        auto classes = lshapes::classify_mi(inst);
        for (Int i = 2; i <= (n - 1) / 2; ++i) lshapes::minimal_nf(inst, i);
        lshapes::pf_family(inst);
        auto explicit_family = lshapes::construct_lshape_family(inst);
        auto generic = lshapes::lshapes_closed(inst.S, inst.S.apery(inst.frob_t).table());
        if (explicit_family != generic)
            throw std::runtime_error("explicit family and generic enumeration disagree");
        report.result["verified"] = true;
        text << "all family verifications passed\n";
    }
    report.text = text.str();
}

void run_table1(Int max_t, bool allow_long, Report& report) {
    std::ostringstream text;
    text << "t,N,mdd_unweighted,mdd_weighted\n";
    json rows = json::array();
    for (Int t = 2; t <= max_t; ++t) {
        if (t % 3 == 0) continue;
        if (t >= 7 && !allow_long)
            throw std::invalid_argument("table1 rows with t >= 7 require --allow-long");
        auto unweighted = lshapes::sabariego_santos(t, false);
        auto weighted = lshapes::sabariego_santos(t, true);
        std::size_t nw = lshapes::enumerate_mdds(unweighted).size();
        std::size_t w = lshapes::enumerate_mdds(weighted).size();
        text << t << ',' << unweighted.modulus() << ',' << nw << ',' << w << '\n';
        rows.push_back({{"t", t}, {"N", unweighted.modulus()}, {"mdd_unweighted", nw},
                        {"mdd_weighted", w}});
    }
    report.result["table1"] = rows;
    report.text = text.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of numerical semigroups and weighted Cayley digraphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON run report instead of text");

    // semigroup
    auto* sg = app.add_subcommand("semigroup", "numerical semigroup invariants");
    std::string gens_text;
    Int apery_m = -1, factorize_s = -1;
    bool frobenius = false, pf = false, presentation = false;
    sg->add_option("--gens", gens_text, "comma-separated minimal generators")->required();
    sg->add_option("--apery", apery_m, "Apery set of this element");
    sg->add_flag("--frobenius", frobenius, "Frobenius number");
    sg->add_flag("--pf", pf, "pseudo-Frobenius numbers");
    sg->add_option("--factorize", factorize_s, "factorizations of this element");
    sg->add_flag("--presentation", presentation, "minimal presentation");

    // mdd
    auto* mdd = app.add_subcommand("mdd", "minimum distance diagrams of a Cayley digraph");
    Int modulus = 0;
    std::string steps_text, weights_text, render, distance_text;
    bool count = false, list = false, diameter = false;
    mdd->add_option("--modulus", modulus, "group order N")->required();
    mdd->add_option("--steps", steps_text, "comma-separated steps")->required();
    mdd->add_option("--weights", weights_text, "comma-separated arc weights (default all 1)");
    mdd->add_flag("--count", count, "print the number of MDDs");
    mdd->add_flag("--list", list, "emit all MDDs as JSON");
    mdd->add_option("--render", render, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));
    mdd->add_flag("--diameter", diameter, "print the diameter");
    mdd->add_option("--distance", distance_text, "u,v: distance from u to v");

    // family
    auto* fam = app.add_subcommand("family", "the dimension-4 family and related digraphs");
    Int n = 0, ss_t = 0, max_t = 5;
    bool lshapes_flag = false, fam_count = false, mi = false, verify_all = false;
    bool weighted = false, table1 = false, allow_long = false;
    fam->add_option("--n", n, "odd family parameter >= 5");
    fam->add_flag("--lshapes", lshapes_flag, "construct the explicit L-shape family");
    fam->add_flag("--count", fam_count, "print counts only");
    fam->add_flag("--mi", mi, "factorization-count classes M_i");
    fam->add_flag("--verify-all", verify_all, "run the full verification battery");
    fam->add_option("--sabariego-santos", ss_t, "digraph family parameter t");
    fam->add_flag("--weighted", weighted, "use weights equal to the steps");
    fam->add_flag("--table1", table1, "regenerate the MDD count table as CSV");
    fam->add_option("--max-t", max_t, "largest t for --table1 (default 5)");
    fam->add_flag("--allow-long", allow_long, "permit long-running instances");

    CLI11_PARSE(app, argc, argv);

    Report report;
    report.as_json = as_json;
    for (int i = 0; i < argc; ++i) report.command += std::string(i ? " " : "") + argv[i];

    try {
        if (sg->parsed()) {
            run_semigroup(gens_text, apery_m, frobenius, pf, factorize_s, presentation, report);
        } else if (mdd->parsed()) {
            run_mdd(modulus, steps_text, weights_text, count, list, render, diameter,
                    distance_text, report);
        } else if (fam->parsed()) {
            if (table1) {
                run_table1(max_t, allow_long, report);
            } else if (ss_t > 0) {
                auto g = lshapes::sabariego_santos(ss_t, weighted);
                std::size_t c = lshapes::enumerate_mdds(g).size();
                report.result = {{"t", ss_t}, {"N", g.modulus()}, {"weighted", weighted},
                                 {"count", c}};
                report.text = "mdd count: " + std::to_string(c) + "\n";
            } else if (n > 0) {
                run_family_instance(n, lshapes_flag, fam_count, mi, verify_all, allow_long,
                                    report);
            } else {
                throw std::invalid_argument("family: one of --n, --sabariego-santos, --table1");
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    }
    report.emit();
    return 0;
}
