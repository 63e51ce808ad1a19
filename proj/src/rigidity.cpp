#include "fanorigid/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fr {

namespace {

const std::vector<std::pair<Method, std::string>>& method_symbols() {
    static const std::vector<std::pair<Method, std::string>> table{
        {Method::B, "b"},       {Method::N, "n"},       {Method::S, "s"},
        {Method::F, "f"},       {Method::P, "p"},       {Method::TAU1, "τ1"},
        {Method::TAU, "τ"},     {Method::EPS1, "ε1"},   {Method::EPS2, "ε2"},
        {Method::EPS, "ε"},     {Method::IOTA1, "ι1"},  {Method::IOTA, "ι"},
    };
    return table;
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + sep.size())
        out.push_back(s.substr(start, pos - start));
    out.push_back(s.substr(start));
    return out;
}

const std::string kNotEqual = "≠";

}  // namespace

Method parse_method(std::string_view symbol) {
    std::string s = trim(symbol);
    for (const auto& [m, sym] : method_symbols())
        if (s == sym || s == method_name(m)) return m;
    throw EngineError(ErrorKind::ParseError, "unknown method symbol '" + s + "'");
}

std::string method_symbol(Method m) {
    for (const auto& [mm, sym] : method_symbols())
        if (mm == m) return sym;
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
    case Method::B: return "B";
    case Method::N: return "N";
    case Method::S: return "S";
    case Method::F: return "F";
    case Method::P: return "P";
    case Method::TAU: return "TAU";
    case Method::TAU1: return "TAU1";
    case Method::EPS: return "EPS";
    case Method::EPS1: return "EPS1";
    case Method::EPS2: return "EPS2";
    case Method::IOTA: return "IOTA";
    case Method::IOTA1: return "IOTA1";
    }
    return "?";
}

const char* kind_name(MethodKind k) { return k == MethodKind::Exclude ? "Exclude" : "Untwist"; }

bool is_involution(Method m) {
    return m == Method::TAU || m == Method::TAU1 || m == Method::EPS || m == Method::EPS1 ||
           m == Method::EPS2 || m == Method::IOTA || m == Method::IOTA1;
}

MethodLabel default_label(Method m) {
    // A quadratic involution only excludes when it is biregular, which never
    // happens for the general member; the elliptic ones always untwist.
    return {m, is_involution(m) ? MethodKind::Untwist : MethodKind::Exclude};
}

std::string normalize_atom_name(std::string_view raw) {
    std::string out;
    std::string s(raw);
    for (size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 2, "α") == 0) {
            out += "alpha";
            ++i;
            continue;
        }
        if (s[i] == '_' || s[i] == ' ') continue;
        out += s[i];
    }
    return out;
}

std::vector<ConditionAtom> parse_condition(std::string_view text) {
    std::vector<ConditionAtom> atoms;
    for (const auto& raw : split_on(std::string(text), ",")) {
        std::string clause = trim(raw);
        if (clause.empty()) continue;
        if (clause.rfind("Type", 0) == 0) {
            std::string t = trim(clause.substr(4));
            if (t != "I" && t != "II")
                throw EngineError(ErrorKind::ParseError, "bad type condition '" + clause + "'");
            atoms.push_back({"type", t});
            continue;
        }
        auto ne = split_on(clause, kNotEqual);
        if (ne.size() == 2) {
            if (trim(ne[1]) != "0")
                throw EngineError(ErrorKind::ParseError, "bad condition '" + clause + "'");
            atoms.push_back({normalize_atom_name(trim(ne[0])), "nonzero"});
            continue;
        }
        auto eq = split_on(clause, "=");
        if (eq.size() < 2 || trim(eq.back()) != "0")
            throw EngineError(ErrorKind::ParseError, "bad condition '" + clause + "'");
        // Chains like "a_1 = a_2 = 0" set every name to zero.
        for (size_t k = 0; k + 1 < eq.size(); ++k) atoms.push_back({normalize_atom_name(trim(eq[k])), "0"});
    }
    return atoms;
}

Variant Variant::parse(std::string_view flags) {
    Variant v;
    for (const auto& raw : split_on(std::string(flags), ",")) {
        std::string item = trim(raw);
        if (item.empty()) continue;
        if (item == "special") {
            v.set("a1", "0");
            v.set("c", "0");
            continue;
        }
        std::string name, value;
        bool negated = false;
        if (auto p = item.find("!="); p != std::string::npos) {
            name = item.substr(0, p);
            value = item.substr(p + 2);
            negated = true;
        } else if (auto q = item.find(kNotEqual); q != std::string::npos) {
            name = item.substr(0, q);
            value = item.substr(q + kNotEqual.size());
            negated = true;
        } else if (auto e = item.find('='); e != std::string::npos) {
            name = item.substr(0, e);
            value = item.substr(e + 1);
        } else {
            throw EngineError(ErrorKind::UnknownVariantFlag, "expected name=value, got '" + item + "'");
        }
        name = normalize_atom_name(trim(name));
        value = trim(value);
        if (name == "type" || name == "Type") {
            if (negated || (value != "I" && value != "II"))
                throw EngineError(ErrorKind::UnknownVariantFlag, "type must be I or II");
            v.set("type", value);
            continue;
        }
        bool zero = value == "0";
        if (!zero && value != "nonzero" && !(value.find_first_not_of("-0123456789") == std::string::npos))
            throw EngineError(ErrorKind::UnknownVariantFlag, "bad value '" + value + "' for " + name);
        if (negated) {
            if (!zero) throw EngineError(ErrorKind::UnknownVariantFlag, "only '!=0' is supported");
            zero = false;
        }
        v.set(name, zero ? "0" : "nonzero");
    }
    return v;
}

std::string Variant::value(const std::string& name) const {
    auto it = values_.find(name);
    if (it != values_.end()) return it->second;
    return name == "type" ? "I" : "nonzero";
}

bool Variant::satisfies(const std::vector<ConditionAtom>& atoms) const {
    return std::all_of(atoms.begin(), atoms.end(),
                       [&](const ConditionAtom& a) { return value(a.name) == a.value; });
}

std::string Variant::str() const {
    if (values_.empty()) return "generic";
    std::string s;
    for (const auto& [k, v] : values_) {
        if (!s.empty()) s += ",";
        s += k + (v == "nonzero" ? "!=0" : "=" + v);
    }
    return s;
}

void Variant::require_declared(const std::set<std::string>& declared) const {
    for (const auto& [k, v] : values_)
        if (!declared.count(k))
            throw EngineError(ErrorKind::UnknownVariantFlag,
                              "'" + k + "' does not appear in any condition of this family");
}

Variant Variant::from_atoms(const std::vector<ConditionAtom>& atoms) {
    Variant v;
    for (const auto& a : atoms) v.set(a.name, a.value);
    return v;
}

std::set<std::string> declared_atoms(const std::vector<const GoldenRow*>& rows) {
    std::set<std::string> out;
    for (const auto* r : rows)
        for (const auto& a : parse_condition(r->condition)) out.insert(a.name);
    return out;
}

std::vector<Variant> all_variants(const std::set<std::string>& declared) {
    std::vector<std::string> names(declared.begin(), declared.end());
    std::vector<Variant> out;
    const size_t n = names.size();
    for (size_t bits = 0; bits < (size_t{1} << n); ++bits) {
        Variant v;
        for (size_t k = 0; k < n; ++k) {
            bool on = (bits >> k) & 1u;
            if (names[k] == "type") v.set("type", on ? "II" : "I");
            else v.set(names[k], on ? "0" : "nonzero");
        }
        out.push_back(v);
    }
    return out;
}

Inequality test_b(const BlowupContext& ctx, int c, int m, int k) {
    Inequality q;
    q.lhs = Rat(static_cast<long long>(ctx.r) * ctx.a * ctx.b) * Rat(static_cast<long long>(c) * c) * ctx.a_cubed;
    q.rhs = Rat(static_cast<long long>(k) * m * m);
    q.holds = q.lhs <= q.rhs;
    q.text = "r*a*(r-a)*c^2*A^3 = " + q.lhs.str() + (q.holds ? " <= " : " > ") + q.rhs.str() +
             " = k*m^2 (k=" + std::to_string(k) + ")";
    return q;
}

Inequality test_n(const BlowupContext& ctx, int c, int m, int k) {
    Inequality q;
    q.lhs = Rat(static_cast<long long>(ctx.r) * ctx.a * ctx.b) * Rat(c) * ctx.a_cubed;
    q.rhs = Rat(static_cast<long long>(k) * m);
    q.holds = q.lhs <= q.rhs;
    q.text = "r*a*(r-a)*c*A^3 = " + q.lhs.str() + (q.holds ? " <= " : " > ") + q.rhs.str() +
             " = k*m (k=" + std::to_string(k) + ")";
    return q;
}

TwoRayCheck test_p(const Family& f, const QuotientSingularity& q) {
    TwoRayCheck out;
    if (!q.location.is_vertex() || (q.location.i != 3 && q.location.i != 2)) {
        out.text = "only defined at O_t (or O_z playing its role)";
        return out;
    }
    const int a4 = f.a(4);
    for (int i = 1; i <= 2; ++i) {
        int lhs, rhs;
        std::string form;
        if (q.location.i == 3) {
            lhs = 2 * a4;
            rhs = 3 * f.a(3) + f.a(i);
            form = "2*a4 = " + std::to_string(lhs) + ", 3*a3 + a" + std::to_string(i) + " = " +
                   std::to_string(rhs);
        } else {
            const int r = f.a(2);
            lhs = 2 * (a4 % r);
            rhs = r + f.a(i);
            form = "2*(a4 mod r) = " + std::to_string(lhs) + ", r + a" + std::to_string(i) + " = " +
                   std::to_string(rhs);
        }
        if (lhs == rhs) {
            out.holds = true;
            out.text = form;
            return out;
        }
        if (out.text.empty()) out.text = form;
    }
    return out;
}

const char* smooth_status_name(SmoothStatus s) {
    switch (s) {
    case SmoothStatus::LEMMA1: return "LEMMA1";
    case SmoothStatus::LEMMA2: return "LEMMA2";
    case SmoothStatus::MPIM_PAIR: return "MPIM_PAIR";
    case SmoothStatus::SPECIAL: return "SPECIAL";
    }
    return "?";
}

namespace {

long long weight_product(const Family& f) {
    return static_cast<long long>(f.a(1)) * f.a(2) * f.a(3) * f.a(4);
}

}  // namespace

std::optional<int> lemma1_vertex(const Family& f) {
    const auto hats = hat_lcms(f);
    const long long bound = 4 * weight_product(f);
    for (int i = 2; i <= 4; ++i)
        if (f.d % f.a(i) == 0 && f.d * hats[static_cast<size_t>(i - 2)] <= bound) return i;
    return std::nullopt;
}

bool lemma2_bounds(const Family& f) {
    const auto hats = hat_lcms(f);
    const long long bound = 4 * weight_product(f);
    return f.d * hats[1] <= bound && f.d * hats[2] <= bound;
}

bool mpim_pair_condition(const Family& f) {
    const int a3 = f.a(3), a4 = f.a(4);
    const int prod = a3 * a4;
    if (a3 <= 1 || std::gcd(a3, a4) != 1 || prod <= f.d) return false;
    if (!representable(f.weights, prod, 0b00110)) return false;
    return Rat(prod) * anticanonical_degree(f) <= Rat(4);
}

bool line_tw_may_lie_on(const Family& f) {
    std::vector<Exponents> support;
    for (const auto& e : general_support(f))
        if (e[0] + e[1] + e[2] > 0) support.push_back(e);
    return support_quasismooth(support).ok;
}

SmoothPointStatus smooth_point_status(const Family& f) {
    SmoothPointStatus s;
    if (auto v = lemma1_vertex(f)) {
        s.status = SmoothStatus::LEMMA1;
        s.vertex = *v;
        return s;
    }
    const bool lemma2 = lemma2_bounds(f);
    if (lemma2 && !line_tw_may_lie_on(f)) {
        s.status = SmoothStatus::LEMMA2;
        return s;
    }
    if (lemma2 && mpim_pair_condition(f)) {
        s.status = SmoothStatus::MPIM_PAIR;
        return s;
    }
    s.status = SmoothStatus::SPECIAL;
    s.case_id = f.entry_no.value_or(0);
    return s;
}

CurveStatus curve_status(const Family& f) {
    CurveStatus c;
    c.smooth_member = census(f).empty();
    Rat a3 = anticanonical_degree(f);
    if (a3 > Rat(1)) {
        c.special = !c.smooth_member;
        // Largest integer strictly below A^3.
        Rat::Big fl = a3.num() / a3.den();
        c.max_curve_degree = static_cast<int>(a3.is_integer() ? fl - 1 : fl);
    }
    return c;
}

const char* curve_status_name(const CurveStatus& c) {
    return c.smooth_member ? "SMOOTH" : c.special ? "SPECIAL" : "NUMERIC";
}

namespace {

bool at_vertex(const QuotientSingularity& q, int coord) {
    return q.location.is_vertex() && q.location.i == coord;
}

bool at_edge(const QuotientSingularity& q, int i, int j) {
    return !q.location.is_vertex() && q.location.i == i && q.location.j == j;
}

std::optional<Exponents> quadratic_monomial(const Family& f, const QuotientSingularity& q) {
    std::vector<int> point_coords{q.location.i};
    if (!q.location.is_vertex()) point_coords.insert(point_coords.begin(), q.location.j);
    for (int i4 : point_coords)
        for (int i3 = kNumCoords - 1; i3 >= 0; --i3) {
            if (i3 == i4 || f.a(i3) + 2 * f.a(i4) != f.d) continue;
            Exponents e{};
            e[static_cast<size_t>(i3)] = 1;
            e[static_cast<size_t>(i4)] = 2;
            return e;
        }
    return std::nullopt;
}

}  // namespace

InvolutionWitness involution_case(const Family& f, const QuotientSingularity& q, const Variant& v) {
    const int no = f.entry_no.value_or(0);
    InvolutionWitness w;
    auto pick = [&](Method m, std::string note) {
        w.label = default_label(m);
        w.note = std::move(note);
        return w;
    };
    if (no == 23 && at_vertex(q, 2) && v.value("a1") == "0" && v.value("c") == "0")
        return pick(Method::IOTA1, "invisible elliptic involution at O_z when a1 = c = 0");
    if (no == 7 && at_edge(q, 2, 3) && v.value("type") == "II")
        return pick(Method::IOTA, "invisible elliptic involution for Type II");
    static const std::set<int> eps_at_t{23, 40, 44, 61, 76};
    if ((at_vertex(q, 3) && eps_at_t.count(no)) || (no == 7 && at_edge(q, 2, 3)))
        return pick(Method::EPS, "elliptic involution");
    if (no == 36 && at_vertex(q, 2)) return pick(Method::EPS1, "elliptic involution at O_z");
    if (no == 20 && at_vertex(q, 2)) return pick(Method::EPS2, "elliptic involution at O_z");

    const int a3 = f.a(3), a4 = f.a(4);
    if (at_vertex(q, 3) && 2 * a3 + a4 == f.d && std::gcd(a3, a4) == 1) {
        Exponents e{};
        e[3] = 2;
        e[4] = 1;
        w = pick(Method::TAU1, "wt^2 has degree d, gcd(a3,a4) = 1 and 2*a3 + a4 = d");
        w.monomial = e;
        return w;
    }
    if (auto mono = quadratic_monomial(f, q)) {
        w = pick(Method::TAU, "quadratic in a coordinate of the point via " + monomial_str(*mono));
        w.monomial = mono;
        return w;
    }
    throw EngineError(ErrorKind::NotApplicable,
                      "no involution applies at " + q.location.id() + " of No. " + std::to_string(no));
}

bool neg_definite(const std::vector<std::vector<Rat>>& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw EngineError(ErrorKind::NotSymmetric, "matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw EngineError(ErrorKind::NotSymmetric, "matrix is not symmetric");
    // Sylvester's criterion on -M: every leading principal minor must be positive.
    // Gaussian elimination without pivoting exposes the minors as running pivot products;
    // a zero pivot means a vanishing minor, so the test fails there.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = -m[i][j];
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].sign() <= 0) return false;
        for (size_t i = k + 1; i < n; ++i) {
            Rat factor = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return true;
}

Rat k3_self_intersection(const std::vector<int>& du_val) {
    Rat s(-2);
    for (int n : du_val) s += Rat(n, n + 1);
    return s;
}

bool Certificate::valid() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.ok || c.informational; });
}

int weight_order(const Family& f, const QuotientSingularity& q, const std::vector<Exponents>& monos) {
    std::optional<int> best;
    for (const auto& e : monos) {
        int m = 0;
        for (int j = 0; j < kNumCoords; ++j)
            if (!q.location.contains(j)) m += e[static_cast<size_t>(j)] * (f.a(j) % q.r);
        if (!best || m < *best) best = m;
    }
    if (!best) throw EngineError(ErrorKind::ParseError, "empty vanishing-order column");
    return *best;
}

namespace {

// Witness monomials from the table: every term has degree d, and quadratic
// involutions use a single x_{i3} x_{i4}^2 with i4 a coordinate of the point.
Check witness_check(const Family& f, const QuotientSingularity& q, Method method, const std::string& text) {
    Check c{"witness", "", true, false};
    if (text.empty()) {
        c.ok = method == Method::IOTA || method == Method::IOTA1;
        c.detail = c.ok ? "no witness printed" : "missing witness";
        return c;
    }
    Polynomial p = Polynomial::parse(text);
    for (const auto& [e, coef] : p.terms()) {
        if (weighted_degree(e, f.weights) != f.d) {
            c.ok = false;
            c.detail = monomial_str(e) + " has degree " + std::to_string(weighted_degree(e, f.weights)) +
                       " != " + std::to_string(f.d);
            return c;
        }
    }
    if (method == Method::TAU || method == Method::TAU1) {
        bool shape = false;
        if (p.terms().size() == 1) {
            const Exponents& e = p.terms().begin()->first;
            int i3 = -1, i4 = -1, total = 0;
            for (int k = 0; k < kNumCoords; ++k) {
                total += e[static_cast<size_t>(k)];
                if (e[static_cast<size_t>(k)] == 1) i3 = k;
                if (e[static_cast<size_t>(k)] == 2) i4 = k;
            }
            shape = total == 3 && i3 >= 0 && i4 >= 0 && q.location.contains(i4);
            if (method == Method::TAU1) shape = shape && i4 == 3;
        }
        c.ok = shape;
        c.detail = text + (shape ? " is x_i3*x_i4^2 of degree d at the point" : " does not have the quadratic shape");
        return c;
    }
    c.detail = text + ": every term has degree " + std::to_string(f.d);
    return c;
}

}  // namespace

Certificate certify_row(const Family& f, const QuotientSingularity& q, const GoldenRow& row, int m_shift) {
    Certificate cert;
    cert.family_no = row.family_no;
    cert.point = row.point;
    cert.row_line = row.line;
    cert.condition = row.condition;
    const Method method = parse_method(row.method);
    cert.label = default_label(method);

    const BlowupContext ctx = BlowupContext::make(f, q);
    const Rat b3 = b_cubed(ctx);
    cert.inputs = {{"r", std::to_string(ctx.r)},
                   {"a", std::to_string(ctx.a)},
                   {"b", std::to_string(ctx.b)},
                   {"A3", ctx.a_cubed.str()},
                   {"B3", b3.str()}};

    if (row.b3_sign) {
        char s = sign_char(b3);
        cert.checks.push_back({"b3_sign",
                               "B^3 = " + b3.str() + ", sign " + s + ", table " + *row.b3_sign,
                               s == *row.b3_sign, false});
    }

    std::optional<YClass> surface_class;
    int c = 0, m = 0;
    if (!row.linear_system.empty()) {
        surface_class = YClass::parse(row.linear_system);
        c = weighted_degree(leading_surface_monomial(row.surface), f.weights);
        m = weight_order(f, q, parse_monomial_list(row.vanishing)) + m_shift;
        cert.inputs.push_back({"c", std::to_string(c)});
        cert.inputs.push_back({"m", std::to_string(m)});
        cert.inputs.push_back({"class", surface_class->str()});
        Check chk{"class", "", true, false};
        try {
            YClass computed = proper_transform_class(ctx, c, Rat(m, ctx.r));
            chk.ok = computed == *surface_class;
            chk.detail = "c=" + std::to_string(c) + ", m=" + std::to_string(m) + " gives " +
                         computed.str() + ", table " + surface_class->str();
        } catch (const EngineError& e) {
            chk.ok = false;
            chk.detail = e.what();
        }
        cert.checks.push_back(chk);
    }

    auto ks = [&]() {
        std::vector<int> out;
        for (const auto& s : s_class(f, ctx)) out.push_back(s == YClass::B() ? 1 : ctx.r + 1);
        return out;
    };

    switch (method) {
    case Method::B:
    case Method::N: {
        if (!surface_class) {
            cert.checks.push_back({"inequality", "row has no linear system", false, false});
            break;
        }
        if (method == Method::B)
            cert.checks.push_back({"b3_nonpositive", "B^3 = " + b3.str() + " <= 0", b3.sign() <= 0, false});
        if (method == Method::B && m > c) {
            // Outside the c >= m > 0 range the surface class itself must meet B.S <= 0 with S ~ B.
            Rat t = triple(ctx, YClass::B(), YClass::B(), *surface_class);
            cert.checks.push_back({"inequality",
                                   "m > c; B^2.T = " + t.str() + (t.sign() <= 0 ? " <= 0" : " > 0"),
                                   t.sign() <= 0, false});
            break;
        }
        const auto kvals = ks();
        const int k_max = *std::max_element(kvals.begin(), kvals.end());
        cert.inputs.push_back({"k", kvals.size() == 1 ? std::to_string(kvals[0])
                                                      : "1 or " + std::to_string(ctx.r + 1)});
        for (int k : kvals) {
            Inequality ineq = method == Method::B ? test_b(ctx, c, m, k) : test_n(ctx, c, m, k);
            bool governing = k == k_max;
            cert.checks.push_back({governing ? "inequality" : "inequality_k1", ineq.text, ineq.holds,
                                   !governing});
        }
        break;
    }
    case Method::P: {
        TwoRayCheck p = test_p(f, q);
        cert.checks.push_back({"two_ray", p.text, p.holds, false});
        if (surface_class) {
            Rat t = triple(ctx, YClass::B(), YClass::B(), *surface_class);
            cert.checks.push_back({"b2t_zero", "B^2.T = " + t.str(), t.is_zero(), false});
        }
        break;
    }
    case Method::S:
    case Method::F:
        if (surface_class) {
            Rat t = triple(ctx, YClass::B(), YClass::B(), *surface_class);
            cert.checks.push_back({"b2t", "B^2.T = " + t.str(), true, true});
        }
        break;
    default: {
        Variant v = Variant::from_atoms(parse_condition(row.condition));
        Check chk{"involution", "", true, false};
        try {
            InvolutionWitness w = involution_case(f, q, v);
            chk.ok = w.label.method == method;
            chk.detail = "engine " + method_symbol(w.label.method) + " (" + w.note + "), table " +
                         method_symbol(method);
            cert.label = w.label;
        } catch (const EngineError& e) {
            chk.ok = false;
            chk.detail = e.what();
        }
        cert.checks.push_back(chk);
        cert.checks.push_back(witness_check(f, q, method, row.witness));
        break;
    }
    }
    return cert;
}

Certificate classify_point(const Family& f, const QuotientSingularity& q, const Variant& v,
                           const std::vector<const GoldenRow*>& rows) {
    std::vector<const GoldenRow*> matching;
    for (const auto* r : rows)
        if (r->location() == q.location && v.satisfies(parse_condition(r->condition))) matching.push_back(r);
    if (matching.size() != 1)
        throw EngineError(ErrorKind::NoMatchingRow,
                          std::to_string(matching.size()) + " rows match " + q.location.id() +
                              " for variant " + v.str());
    Certificate cert = certify_row(f, q, *matching.front());
    if (!cert.valid()) {
        std::string failed;
        for (const auto& c : cert.checks)
            if (!c.ok && !c.informational) failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
        throw EngineError(ErrorKind::CheckFailed, failed);
    }
    return cert;
}

}  // namespace fr
