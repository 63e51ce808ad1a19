#include <CLI11.hpp>

#include <iostream>

#include "fanorigid/members.hpp"
#include "fanorigid/report.hpp"

using namespace fr;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
    std::string golden_dir = GoldenData::default_dir();
    bool json = false;
    int max_weight = 33;
    bool diff_paper = false;
    std::string family;
    std::string variant;
    int filter_family = 0;
    std::string point;
    std::string poly;
    std::string equation;
    std::string eliminate;
    int cutoff = 0;
    std::vector<int> quadruple;
};

int cmd_enumerate(const Options& o) {
    const auto families = enumerate_families(o.max_weight);
    const auto golden = GoldenData::load(o.golden_dir);
    const auto diffs = printed_list_differences(families, golden);
    bool unexpected = families.size() != golden.printed_list.size();
    for (const auto& d : diffs) unexpected = unexpected || !d.confirmed_by_table;

    if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : families)
            arr.push_back({{"entry_no", *f.entry_no}, {"degree", f.d}, {"weights", f.weights}});
        if (o.diff_paper) {
            nlohmann::json dj = nlohmann::json::array();
            for (const auto& d : diffs)
                dj.push_back({{"entry_no", d.family_no}, {"printed", d.printed}, {"enumerated", d.enumerated},
                              {"confirmed_by_table", d.confirmed_by_table}});
            std::cout << nlohmann::json{{"families", arr}, {"printed_list_differences", dj}}.dump(2) << "\n";
        } else {
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& f : families) std::cout << "No. " << *f.entry_no << "  " << f.label() << "\n";
        if (o.diff_paper)
            for (const auto& d : diffs)
                std::cout << "printed list No. " << d.family_no << ": " << d.printed << "; enumerated "
                          << d.enumerated
                          << (d.confirmed_by_table ? " (table header agrees with the enumeration)"
                                                   : " (UNEXPECTED)")
                          << "\n";
    }
    return unexpected ? kMismatch : kOk;
}

int cmd_census(const Options& o) {
    const Family f = select_family(o.family, enumerate_families(33));
    const auto cen = census(f);
    if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& q : cen) arr.push_back(census_json(q));
        std::cout << nlohmann::json{{"entry_no", *f.entry_no}, {"degree", f.d}, {"weights", f.weights},
                                    {"census", arr}}
                         .dump(2)
                  << "\n";
        return kOk;
    }
    std::cout << "No. " << *f.entry_no << "  " << f.label() << "\n";
    if (cen.empty()) std::cout << "no singular points\n";
    for (const auto& q : cen) {
        std::cout << q.location.id() << "  " << q.count << " x " << q.type.str() << "  (";
        for (size_t k = 0; k < 3; ++k)
            std::cout << (k ? "," : "") << q.residues[k] << "_" << coord_name(q.local_params[k]);
        std::cout << ")";
        if (q.eliminated) std::cout << "  eliminated " << coord_name(*q.eliminated);
        std::cout << "\n";
    }
    return kOk;
}

int cmd_report(const Options& o) {
    const Family f = select_family(o.family, enumerate_families(33));
    const auto golden = GoldenData::load(o.golden_dir);
    std::optional<Variant> v;
    if (!o.variant.empty()) v = Variant::parse(o.variant);
    const FamilyReport rep = build_report(f, golden, v);
    if (o.json) std::cout << to_json(rep).dump(2) << "\n";
    else std::cout << to_text(rep);
    return rep.discrepancies.empty() ? kOk : kMismatch;
}

int cmd_check_tables(const Options& o) {
    const auto families = enumerate_families(33);
    const auto golden = GoldenData::load(o.golden_dir);
    std::vector<Discrepancy> all, errata;
    int checked = 0;
    for (const auto& f : families) {
        if (o.filter_family && *f.entry_no != o.filter_family) continue;
        ++checked;
        auto rep = build_report(f, golden);
        all.insert(all.end(), rep.discrepancies.begin(), rep.discrepancies.end());
        errata.insert(errata.end(), rep.errata.begin(), rep.errata.end());
    }
    if (o.filter_family && checked == 0)
        throw EngineError(ErrorKind::UnknownFamily, "no family No. " + std::to_string(o.filter_family));
    const auto diffs = printed_list_differences(families, golden);
    int documented = 0;
    for (const auto& d : diffs) {
        if (o.filter_family && d.family_no != o.filter_family) continue;
        if (d.confirmed_by_table) ++documented;
        else all.push_back({d.family_no, 0, "", "printed_list", d.printed, d.enumerated});
    }
    std::string summary = std::to_string(checked) + (checked == 1 ? " family, " : " families, ") +
                          std::to_string(all.size()) + " discrepancies (" + std::to_string(documented) +
                          " documented family-list misprints, " + std::to_string(errata.size()) +
                          " documented table misprints)";
    if (o.json) {
        nlohmann::json dj = nlohmann::json::array(), ej = nlohmann::json::array();
        for (const auto& d : all) dj.push_back(to_json(d));
        for (const auto& d : errata) ej.push_back(to_json(d));
        std::cout << nlohmann::json{{"families", checked},
                                    {"discrepancies", dj},
                                    {"documented_misprints", documented},
                                    {"errata", ej},
                                    {"summary", summary}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& d : errata)
            std::cout << "No. " << d.family_no << " line " << d.line << " " << d.point << " erratum: printed "
                      << d.expected << ", corrected to " << d.actual << "\n";
        for (const auto& d : all)
            std::cout << "No. " << d.family_no << " line " << d.line << " " << d.point << " " << d.check
                      << ": expected " << d.expected << ", got " << d.actual << "\n";
        std::cout << summary << "\n";
    }
    return all.empty() ? kOk : kMismatch;
}

int cmd_order(const Options& o) {
    const Family f = select_family(o.family, enumerate_families(33));
    const Location loc = Location::parse(o.point.rfind("O_", 0) == 0 ? o.point : "O_" + o.point.substr(1));
    if (!loc.is_vertex()) throw EngineError(ErrorKind::NotApplicable, "orders are computed at vertices only");
    const int vertex = loc.i;

    Polynomial equation;
    if (!o.equation.empty()) {
        equation = Polynomial::parse(o.equation);
    } else if (!o.variant.empty()) {
        const auto golden = GoldenData::load(o.golden_dir);
        Variant v = Variant::parse(o.variant);
        v.require_declared(declared_atoms(golden.rows_for(*f.entry_no)));
        if (*f.entry_no == 23 && v.value("a1") == "0" && v.value("c") == "0" && v.values().size() == 2)
            equation = special_member_23();
        else
            throw EngineError(ErrorKind::NotApplicable,
                              "no built-in equation for variant " + v.str() + "; pass --equation");
    } else {
        equation = generic_member(f, static_cast<std::uint32_t>(*f.entry_no));
    }
    if (equation.homogeneous_degree(f.weights) != f.d)
        throw EngineError(ErrorKind::ParseError, "the equation is not quasi-homogeneous of degree " +
                                                     std::to_string(f.d));
    std::optional<int> elim;
    if (!o.eliminate.empty()) {
        elim = coord_index(o.eliminate[0]);
        if (o.eliminate.size() != 1 || *elim < 0)
            throw EngineError(ErrorKind::ParseError, "bad coordinate '" + o.eliminate + "'");
    } else {
        elim = eliminated_in(equation, f, vertex);
    }
    if (!elim)
        throw EngineError(ErrorKind::NoEliminatingMonomial,
                          std::string("the equation has no monomial ") + coord_name(vertex) + "^k*x_e");
    if (o.equation.empty() && o.variant.empty()) equation = vertex_normal_form(equation, f, vertex, *elim);

    const Chart chart = Chart::make(f.weights, vertex, *elim);
    const int cutoff = o.cutoff > 0 ? o.cutoff : default_cutoff(chart.r);
    const Polynomial g = Polynomial::parse(o.poly);
    const auto res = series_order(g, chart, implicit_eliminate(equation, chart, cutoff));
    if (o.json) {
        std::cout << nlohmann::json{{"entry_no", *f.entry_no},
                                    {"point", loc.id()},
                                    {"eliminated", std::string(1, coord_name(*elim))},
                                    {"cutoff", cutoff},
                                    {"order", res.order ? nlohmann::json(res.order->str()) : nlohmann::json()},
                                    {"over_cutoff", res.over_cutoff()}}
                         .dump(2)
                  << "\n";
    } else if (res.over_cutoff()) {
        std::cout << "OVERCUTOFF: every term cancels below degree " << cutoff << "/" << chart.r
                  << "; raise --cutoff\n";
    } else {
        std::cout << res.order->str() << "\n";
    }
    return res.over_cutoff() ? kMismatch : kOk;
}

int cmd_search(const Options& o) {
    if (o.quadruple.size() != 4) throw EngineError(ErrorKind::ParseError, "search needs four weights");
    std::array<int, 4> a{o.quadruple[0], o.quadruple[1], o.quadruple[2], o.quadruple[3]};
    std::sort(a.begin(), a.end());
    Family f = make_family(a);
    const bool wf = is_wellformed(f.weights);
    const auto qs = general_quasismooth(f);
    const bool term = wf && qs.ok && is_terminal_family(f);
    std::optional<int> entry;
    for (const auto& g : enumerate_families(std::max(33, a[3])))
        if (g == f) entry = g.entry_no;
    nlohmann::json j{{"degree", f.d},
                     {"weights", f.weights},
                     {"a_cubed", anticanonical_degree(f).str()},
                     {"wellformed", wf},
                     {"quasismooth", qs.ok},
                     {"quasismooth_failure", qs.ok ? nlohmann::json() : nlohmann::json(subset_str(qs.failing_subset))},
                     {"terminal", term},
                     {"entry_no", entry ? nlohmann::json(*entry) : nlohmann::json()}};
    if (qs.ok) {
        nlohmann::json arr = nlohmann::json::array();
        try {
            for (const auto& q : census(f)) arr.push_back(census_json(q));
            j["census"] = arr;
        } catch (const EngineError& e) {
            j["census_error"] = e.what();
        }
    }
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << f.label() << "  A^3 = " << anticanonical_degree(f).str() << "\n"
                  << "well-formed: " << (wf ? "yes" : "no") << "\n"
                  << "quasi-smooth: " << (qs.ok ? "yes" : "no, " + qs.diagnostic) << "\n"
                  << "terminal: " << (term ? "yes" : "no") << "\n"
                  << "entry: " << (entry ? "No. " + std::to_string(*entry) : std::string("not in the list")) << "\n";
        if (j.contains("census"))
            for (const auto& q : j["census"])
                std::cout << q["point"].get<std::string>() << "  " << q["count"] << " x "
                          << q["type_str"].get<std::string>() << "\n";
        if (j.contains("census_error")) std::cout << j["census_error"].get<std::string>() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight-arithmetic certificates for the 95 anticanonical Fano hypersurface families"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--golden", o.golden_dir, "Directory holding the golden table files");

    auto* en = app.add_subcommand("enumerate", "List the families found by exhaustive search");
    en->add_option("--max-weight", o.max_weight, "Largest weight to search")->check(CLI::Range(33, 200));
    en->add_flag("--json", o.json);
    en->add_flag("--diff-paper", o.diff_paper, "Show entries where the printed list differs");

    auto* ce = app.add_subcommand("census", "Singular points of the general member");
    ce->add_option("family", o.family, "Entry number or weights a1,a2,a3,a4")->required();
    ce->add_flag("--json", o.json);

    auto* re = app.add_subcommand("report", "Certify every singular point against its table");
    re->add_option("family", o.family, "Entry number or weights a1,a2,a3,a4")->required();
    re->add_option("--variant", o.variant, "Condition flags k=v[,k=v...] or 'special'");
    re->add_flag("--json", o.json);

    auto* ct = app.add_subcommand("check-tables", "Run the full consistency suite over the tables");
    ct->add_option("--family", o.filter_family, "Only check this entry number");
    ct->add_flag("--json", o.json);

    auto* od = app.add_subcommand("order", "Vanishing order of a polynomial at a vertex");
    od->add_option("family", o.family, "Entry number or weights a1,a2,a3,a4")->required();
    od->add_option("--point", o.point, "Vertex, e.g. Oz or O_z")->required();
    od->add_option("--poly", o.poly, "Polynomial, e.g. \"y*z+x*t\"")->required();
    od->add_option("--variant", o.variant, "Condition flags; 'special' selects No. 23 with a1 = c = 0");
    od->add_option("--equation", o.equation, "Explicit defining equation instead of the general member");
    od->add_option("--eliminate", o.eliminate, "Coordinate to eliminate (default: from the equation)");
    od->add_option("--cutoff", o.cutoff, "Series cutoff in graded degrees (default 4r)")->check(CLI::PositiveNumber);
    od->add_flag("--json", o.json);

    auto* se = app.add_subcommand("search", "Probe an arbitrary weight quadruple");
    se->add_option("weights", o.quadruple, "Four weights a1 a2 a3 a4")->expected(4)->required();
    se->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*en) return cmd_enumerate(o);
        if (*ce) return cmd_census(o);
        if (*re) return cmd_report(o);
        if (*ct) return cmd_check_tables(o);
        if (*od) return cmd_order(o);
        if (*se) return cmd_search(o);
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownFamily:
        case ErrorKind::UnknownVariantFlag:
        case ErrorKind::NotApplicable:
            return kUsage;
        default:
            return kMismatch;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
