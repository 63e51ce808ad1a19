#include "fanorigid/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fr {

std::string weights_str(const Weights5& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

Family select_family(const std::string& selector, const std::vector<Family>& families) {
    std::vector<int> nums;
    std::stringstream ss(selector);
    std::string part;
    try {
        while (std::getline(ss, part, ',')) nums.push_back(std::stoi(part));
    } catch (const std::exception&) {
        throw EngineError(ErrorKind::UnknownFamily, "cannot read family selector '" + selector + "'");
    }
    if (nums.size() == 1) {
        for (const auto& f : families)
            if (f.entry_no == nums[0]) return f;
    } else if (nums.size() == 4 || nums.size() == 5) {
        if (nums.size() == 5) {
            if (nums[0] != 1) throw EngineError(ErrorKind::UnknownFamily, "the first weight must be 1");
            nums.erase(nums.begin());
        }
        std::sort(nums.begin(), nums.end());
        for (const auto& f : families)
            if (f.a(1) == nums[0] && f.a(2) == nums[1] && f.a(3) == nums[2] && f.a(4) == nums[3]) return f;
    }
    throw EngineError(ErrorKind::UnknownFamily, "'" + selector + "' is not one of the 95 families");
}

namespace {

std::string census_desc(const QuotientSingularity& q) {
    return q.location.id() + " " + std::to_string(q.count) + "x" + q.type.str();
}

void add(FamilyReport& r, int line, const std::string& point, const std::string& check,
         const std::string& expected, const std::string& actual) {
    r.discrepancies.push_back({r.family.entry_no.value_or(0), line, point, check, expected, actual});
}

std::string coords_str(const std::array<int, 3>& c) {
    return std::string{coord_name(c[0]), ',', coord_name(c[1]), ',', coord_name(c[2])};
}

const TableErratum* find_erratum(const GoldenData& golden, const GoldenRow& row) {
    for (const auto& e : golden.errata)
        if (e.family_no == row.family_no && e.point == row.point && e.check == "type" && e.printed == row.type)
            return &e;
    return nullptr;
}

// Count, r, type and subscript agreement between a census entry and a row.
void census_checks(FamilyReport& rep, const Family& f, const QuotientSingularity& q, const GoldenRow& row,
                   const GoldenData& golden, std::set<const TableErratum*>& used) {
    const std::string pt = q.location.id();
    if (row.count != q.count)
        add(rep, row.line, pt, "count", std::to_string(row.count), std::to_string(q.count));
    std::string type_text = row.type;
    if (const TableErratum* e = find_erratum(golden, row)) {
        used.insert(e);
        if (auto why = printed_type_possible(f, row.type)) {
            add(rep, row.line, pt, "erratum", "printed type impossible", *why);
        } else {
            type_text = e->corrected;
            rep.errata.push_back({rep.family.entry_no.value_or(0), row.line, pt, "type", row.type, e->corrected});
        }
    }
    TableType tt = TableType::parse(type_text);
    if (tt.r != q.r) {
        add(rep, row.line, pt, "r", std::to_string(tt.r), std::to_string(q.r));
        return;
    }
    try {
        TerminalType t = normalize_type(tt.r, tt.residues);
        if (!(t == q.type)) add(rep, row.line, pt, "type", type_text, q.type.str());
    } catch (const EngineError& e) {
        add(rep, row.line, pt, "type", type_text, e.what());
    }
    if (!tt.coords) return;
    const auto& coords = *tt.coords;
    for (size_t k = 0; k < 3; ++k) {
        int c = coords[k];
        if (q.location.contains(c)) {
            add(rep, row.line, pt, "subscripts", type_text, std::string("coordinate ") + coord_name(c) +
                                                               " belongs to the point");
            return;
        }
        if (tt.residues[k] != f.a(c) % q.r)
            add(rep, row.line, pt, "subscripts", type_text,
                std::string("weight of ") + coord_name(c) + " is " + std::to_string(f.a(c) % q.r) +
                    " mod " + std::to_string(q.r));
    }
    std::set<int> listed(coords.begin(), coords.end());
    if (listed.size() != 3) {
        add(rep, row.line, pt, "subscripts", type_text, "repeated coordinate");
        return;
    }
    if (q.location.is_vertex()) {
        int eliminated = -1;
        for (int c = 0; c < kNumCoords; ++c)
            if (c != q.location.i && !listed.count(c)) eliminated = c;
        if (!has_eliminating_monomial(f, q.location.i, eliminated)) {
            add(rep, row.line, pt, "subscripts", type_text,
                std::string("no monomial ") + coord_name(q.location.i) + "^k*" + coord_name(eliminated) +
                    " eliminates " + coord_name(eliminated));
        } else if (q.eliminated && eliminated != *q.eliminated) {
            rep.notes.push_back("line " + std::to_string(row.line) + " " + pt + " [" + row.condition +
                                "]: local parameters " + coords_str(coords) + " eliminate " +
                                coord_name(eliminated) + " instead of the default " +
                                coord_name(*q.eliminated));
        }
    } else {
        std::set<int> expected(q.local_params.begin(), q.local_params.end());
        if (listed != expected)
            add(rep, row.line, pt, "subscripts", type_text, "local parameters " + coords_str(q.local_params));
    }
}

void record_certificate(FamilyReport& rep, PointReport& p, const Certificate& cert) {
    for (const auto& c : cert.checks)
        if (!c.ok && !c.informational)
            add(rep, cert.row_line, cert.point, c.name, "holds", c.detail);
    p.certificates.push_back(cert);
}

}  // namespace

std::optional<std::string> printed_type_possible(const Family& f, const std::string& printed) {
    TableType tt = TableType::parse(printed);
    bool divides = false;
    for (int i = 1; i < kNumCoords; ++i) divides = divides || f.a(i) % tt.r == 0;
    if (!divides) return std::nullopt;
    try {
        normalize_type(tt.r, tt.residues);
    } catch (const EngineError&) {
        return std::nullopt;
    }
    return "r = " + std::to_string(tt.r) + " divides a weight and the residues are terminal";
}

bool super_rigid(const Family& f, const GoldenData& golden) {
    const auto rows = golden.rows_for(f.entry_no.value_or(0));
    const auto variants = all_variants(declared_atoms(rows));
    for (const auto& q : census(f))
        for (const auto& v : variants)
            for (const auto* r : rows)
                if (r->location() == q.location && v.satisfies(parse_condition(r->condition)) &&
                    default_label(parse_method(r->method)).kind != MethodKind::Exclude)
                    return false;
    return true;
}

FamilyReport build_report(const Family& f, const GoldenData& golden, const std::optional<Variant>& variant) {
    FamilyReport rep;
    rep.family = f;
    rep.a_cubed = anticanonical_degree(f);
    rep.smooth = smooth_point_status(f);
    rep.curve = curve_status(f);
    rep.variant = variant ? variant->str() : "all";
    const int no = f.entry_no.value_or(0);
    const auto rows = golden.rows_for(no);
    const auto declared = declared_atoms(rows);
    if (variant) variant->require_declared(declared);

    if (auto h = golden.headers.find(no); h != golden.headers.end()) {
        if (h->second.degree != f.d)
            add(rep, 0, "", "header_degree", std::to_string(h->second.degree), std::to_string(f.d));
        if (h->second.weights != f.weights)
            add(rep, 0, "", "header_weights", weights_str(h->second.weights), weights_str(f.weights));
        if (h->second.a_cubed != rep.a_cubed)
            add(rep, 0, "", "a_cubed", h->second.a_cubed.str(), rep.a_cubed.str());
    } else if (!rows.empty()) {
        add(rep, 0, "", "header", "table header", "missing");
    }

    const auto cen = census(f);
    if (cen.empty()) rep.notes.push_back(no == 1 ? "smooth" : "no singular points");

    std::set<Location> seen;
    std::set<const TableErratum*> used;
    for (const auto& q : cen) {
        seen.insert(q.location);
        PointReport p;
        p.singularity = q;
        const Rat b3 = b_cubed(BlowupContext::make(f, q));
        p.b3 = b3.str();
        p.b3_sign = sign_char(b3);

        std::vector<const GoldenRow*> here;
        for (const auto* r : rows)
            if (r->location() == q.location) here.push_back(r);
        if (here.empty()) add(rep, 0, q.location.id(), "census", "no table row", census_desc(q));
        for (const auto* r : here) census_checks(rep, f, q, *r, golden, used);

        // Every assignment of the declared atoms must select exactly one row.
        for (const auto& v : all_variants(declared)) {
            size_t n = static_cast<size_t>(std::count_if(here.begin(), here.end(), [&](const GoldenRow* r) {
                return v.satisfies(parse_condition(r->condition));
            }));
            if (!here.empty() && n != 1) {
                add(rep, 0, q.location.id(), "totality", "exactly one row",
                    std::to_string(n) + " rows for " + v.str());
                break;
            }
        }

        if (variant) {
            std::vector<const GoldenRow*> match;
            for (const auto* r : here)
                if (variant->satisfies(parse_condition(r->condition))) match.push_back(r);
            if (match.size() == 1) record_certificate(rep, p, certify_row(f, q, *match.front()));
            else if (!here.empty())
                add(rep, 0, q.location.id(), "variant", "exactly one row",
                    std::to_string(match.size()) + " rows for " + variant->str());
        } else {
            for (const auto* r : here) record_certificate(rep, p, certify_row(f, q, *r));
        }
        rep.points.push_back(std::move(p));
    }
    for (const auto* r : rows)
        if (!seen.count(r->location()))
            add(rep, r->line, r->point, "census", r->point + " " + std::to_string(r->count) + "x" + r->type,
                "no such singular point");

    for (const auto& e : golden.errata)
        if (e.family_no == no && !used.count(&e))
            add(rep, 0, e.point, "erratum", "a table row printing " + e.printed, "no such row");

    rep.super_rigid = super_rigid(f, golden);
    return rep;
}

nlohmann::json census_json(const QuotientSingularity& q) {
    nlohmann::json j;
    j["point"] = q.location.id();
    j["location"] = q.location.is_vertex() ? "vertex" : "edge";
    j["count"] = q.count;
    j["r"] = q.r;
    j["type"] = {1, q.type.a, q.type.b()};
    j["type_str"] = q.type.str();
    nlohmann::json params = nlohmann::json::array();
    for (size_t k = 0; k < 3; ++k)
        params.push_back({{"coord", std::string(1, coord_name(q.local_params[k]))}, {"residue", q.residues[k]}});
    j["local_params"] = params;
    j["eliminated"] = q.eliminated ? nlohmann::json(std::string(1, coord_name(*q.eliminated))) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const Discrepancy& d) {
    return {{"family", d.family_no}, {"line", d.line},     {"point", d.point},
            {"check", d.check},      {"expected", d.expected}, {"actual", d.actual}};
}

nlohmann::json to_json(const FamilyReport& r) {
    nlohmann::json j;
    j["entry_no"] = r.family.entry_no.value_or(0);
    j["degree"] = r.family.d;
    j["weights"] = r.family.weights;
    j["a_cubed"] = r.a_cubed.str();
    j["variant"] = r.variant;
    j["smooth_points"] = {{"status", smooth_status_name(r.smooth.status)},
                          {"vertex", r.smooth.vertex >= 0 ? nlohmann::json(std::string(1, coord_name(r.smooth.vertex)))
                                                          : nlohmann::json()},
                          {"case_id", r.smooth.case_id}};
    j["curves"] = {{"status", curve_status_name(r.curve)},
                   {"max_curve_degree", r.curve.max_curve_degree}};
    j["super_rigid"] = r.super_rigid;
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : r.points) {
        nlohmann::json pj = census_json(p.singularity);
        pj["b3"] = p.b3;
        pj["b3_sign"] = std::string(1, p.b3_sign);
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : p.certificates) {
            nlohmann::json cj;
            cj["line"] = c.row_line;
            cj["condition"] = c.condition;
            cj["method"] = method_symbol(c.label.method);
            cj["label"] = method_name(c.label.method);
            cj["kind"] = kind_name(c.label.kind);
            cj["valid"] = c.valid();
            nlohmann::json inputs = nlohmann::json::object();
            for (const auto& [k, v] : c.inputs) inputs[k] = v;
            cj["inputs"] = inputs;
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& ch : c.checks)
                checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"informational", ch.informational},
                                  {"detail", ch.detail}});
            cj["checks"] = checks;
            certs.push_back(cj);
        }
        pj["certificates"] = certs;
        points.push_back(pj);
    }
    j["points"] = points;
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& d : r.discrepancies) disc.push_back(to_json(d));
    j["discrepancies"] = disc;
    nlohmann::json errata = nlohmann::json::array();
    for (const auto& d : r.errata) errata.push_back(to_json(d));
    j["errata"] = errata;
    j["notes"] = r.notes;
    return j;
}

std::string to_text(const FamilyReport& r) {
    std::ostringstream os;
    os << "No. " << r.family.entry_no.value_or(0) << "  " << r.family.label() << "  A^3 = " << r.a_cubed.str()
       << "\n";
    os << "smooth points: " << smooth_status_name(r.smooth.status);
    if (r.smooth.vertex >= 0) os << " (O_" << coord_name(r.smooth.vertex) << ")";
    if (r.smooth.case_id) os << " (case " << r.smooth.case_id << ")";
    os << "; curves: " << curve_status_name(r.curve);
    if (r.curve.max_curve_degree) os << ", degree <= " << r.curve.max_curve_degree;
    os << "; super-rigid: " << (r.super_rigid ? "yes" : "no") << "; variant: " << r.variant << "\n";
    for (const auto& p : r.points) {
        const auto& q = p.singularity;
        os << q.location.id() << "  " << q.count << " x " << q.type.str() << "  local params ";
        for (size_t k = 0; k < 3; ++k)
            os << (k ? "," : "") << q.residues[k] << "_" << coord_name(q.local_params[k]);
        if (q.eliminated) os << "  eliminated " << coord_name(*q.eliminated);
        os << "  B^3 = " << p.b3 << " (" << p.b3_sign << ")\n";
        for (const auto& c : p.certificates) {
            os << "  [" << method_symbol(c.label.method) << "] " << kind_name(c.label.kind) << ", "
               << (c.valid() ? "valid" : "INVALID") << ", line " << c.row_line;
            if (!c.condition.empty()) os << ", " << c.condition;
            os << "\n    inputs:";
            for (const auto& [k, v] : c.inputs) os << " " << k << "=" << v;
            os << "\n";
            for (const auto& ch : c.checks)
                os << "    " << (ch.informational ? "info" : (ch.ok ? "ok  " : "FAIL")) << " " << ch.name << ": "
                   << ch.detail << "\n";
        }
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    for (const auto& d : r.errata)
        os << "erratum: line " << d.line << " " << d.point << " printed " << d.expected << ", corrected to "
           << d.actual << "\n";
    for (const auto& d : r.discrepancies)
        os << "DISCREPANCY line " << d.line << " " << d.point << " " << d.check << ": expected " << d.expected
           << ", got " << d.actual << "\n";
    return os.str();
}

std::vector<ListDifference> printed_list_differences(const std::vector<Family>& families,
                                                     const GoldenData& golden) {
    std::vector<ListDifference> out;
    for (const auto& p : golden.printed_list) {
        auto it = std::find_if(families.begin(), families.end(),
                               [&](const Family& f) { return f.entry_no == p.family_no; });
        std::string printed = "X_" + std::to_string(p.degree) + " in P(" + weights_str(p.weights) + ")";
        if (it == families.end()) {
            out.push_back({p.family_no, printed, "missing", false});
            continue;
        }
        if (it->d == p.degree && it->weights == p.weights) continue;
        ListDifference d{p.family_no, printed, it->label(), false};
        if (auto h = golden.headers.find(p.family_no); h != golden.headers.end())
            d.confirmed_by_table = h->second.degree == it->d && h->second.weights == it->weights;
        out.push_back(d);
    }
    return out;
}

}  // namespace fr
