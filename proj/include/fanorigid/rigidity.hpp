#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanorigid/blowup.hpp"
#include "fanorigid/golden.hpp"

namespace fr {

enum class Method { B, N, S, F, P, TAU, TAU1, EPS, EPS1, EPS2, IOTA, IOTA1 };
enum class MethodKind { Exclude, Untwist };

Method parse_method(std::string_view symbol);  // "b", "n", ..., "τ1", "ε2", "ι1"
std::string method_symbol(Method m);
std::string method_name(Method m);  // "B", "TAU1", ...
const char* kind_name(MethodKind k);
bool is_involution(Method m);

struct MethodLabel {
    Method method = Method::B;
    MethodKind kind = MethodKind::Exclude;
};

// Default kind for a table label: exclusion methods exclude, involutions untwist.
MethodLabel default_label(Method m);

// One atom of a table condition, e.g. "a1" = zero, or "type" = "II".
struct ConditionAtom {
    std::string name;   // normalized: no '_' or spaces, greek letters spelled out
    std::string value;  // "0", "nonzero", "I", "II"
    bool operator==(const ConditionAtom&) const = default;
};

std::string normalize_atom_name(std::string_view raw);

// "c ≠ 0, a_1 = 0", "a_1 = a_2 = 0", "Type II"; empty text gives no atoms.
std::vector<ConditionAtom> parse_condition(std::string_view text);

// Assignment of condition atoms; unassigned coefficients are nonzero and the type is I.
class Variant {
public:
    Variant() = default;

    // "a1=0,c=0", "b1!=0", "type=II" or the alias "special" (No. 23: a1 = c = 0).
    static Variant parse(std::string_view flags);

    void set(const std::string& name, const std::string& value) { values_[name] = value; }
    std::string value(const std::string& name) const;
    bool satisfies(const std::vector<ConditionAtom>& atoms) const;
    const std::map<std::string, std::string>& values() const { return values_; }
    std::string str() const;

    // Throws UnknownVariantFlag when an assigned atom is not in the declared set.
    void require_declared(const std::set<std::string>& declared) const;

    // The variant in which exactly the given atoms hold.
    static Variant from_atoms(const std::vector<ConditionAtom>& atoms);

private:
    std::map<std::string, std::string> values_;
};

// Atoms that appear in any condition of the family's table rows.
std::set<std::string> declared_atoms(const std::vector<const GoldenRow*>& rows);

// Every assignment of the declared atoms (coefficients zero/nonzero, type I/II).
std::vector<Variant> all_variants(const std::set<std::string>& declared);

struct Inequality {
    bool holds = false;
    Rat lhs;
    Rat rhs;
    std::string text;
};

// r*a*(r-a)*c^2*A^3 <= k*m^2
Inequality test_b(const BlowupContext& ctx, int c, int m, int k);
// r*a*(r-a)*c*A^3 <= k*m
Inequality test_n(const BlowupContext& ctx, int c, int m, int k);

// At O_t: 2*a4 = 3*a3 + a_i for i in {1,2}. At O_z, where z plays the role of t,
// the relation is read modulo r: 2*(a4 mod r) = r + a_i.
struct TwoRayCheck {
    bool holds = false;
    std::string text;
};
TwoRayCheck test_p(const Family& f, const QuotientSingularity& q);

enum class SmoothStatus { LEMMA1, LEMMA2, MPIM_PAIR, SPECIAL };
const char* smooth_status_name(SmoothStatus s);

struct SmoothPointStatus {
    SmoothStatus status = SmoothStatus::LEMMA1;
    int vertex = -1;   // LEMMA1: the vertex the general member misses
    int case_id = 0;   // SPECIAL: the entry number handled by hand
};

// Some a_i (i = 2,3,4) divides d and d * hat_a_i <= 4 * a1 a2 a3 a4.
std::optional<int> lemma1_vertex(const Family& f);
bool lemma2_bounds(const Family& f);
bool mpim_pair_condition(const Family& f);
// The line L_tw may lie on X: dropping every pure (t, w) monomial keeps quasi-smoothness.
bool line_tw_may_lie_on(const Family& f);

SmoothPointStatus smooth_point_status(const Family& f);

// Curves of anticanonical degree below A^3 in the smooth locus. Families whose
// general member is smooth (the quartic and the sextic double solid) are
// settled classically and kept apart from the singular ones.
struct CurveStatus {
    bool smooth_member = false;  // empty census
    bool special = false;        // singular family with A^3 > 1
    int max_curve_degree = 0;    // largest integer below A^3 when A^3 > 1
};
CurveStatus curve_status(const Family& f);
const char* curve_status_name(const CurveStatus& c);  // "SMOOTH", "SPECIAL" or "NUMERIC"

struct InvolutionWitness {
    MethodLabel label;
    std::optional<Exponents> monomial;  // x_{i3} x_{i4}^2 for quadratic involutions
    std::string note;
};

// Throws NotApplicable when no involution case matches.
InvolutionWitness involution_case(const Family& f, const QuotientSingularity& q, const Variant& v);

bool neg_definite(const std::vector<std::vector<Rat>>& m);

// -2 + sum n/(n+1) over the A_n points on a smooth rational curve.
Rat k3_self_intersection(const std::vector<int>& du_val);

struct Check {
    std::string name;
    std::string detail;
    bool ok = true;
    bool informational = false;  // reported but never a failure
};

struct Certificate {
    int family_no = 0;
    std::string point;
    int row_line = 0;
    std::string condition;
    MethodLabel label;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool valid() const;
};

// Order m (in units of 1/r) of a monomial list at the point, read from weights:
// the point's own coordinates count 0, every other coordinate its weight mod r.
int weight_order(const Family& f, const QuotientSingularity& q, const std::vector<Exponents>& monos);

// Recomputes every machine-checkable quantity on one table row. A nonzero
// m_shift perturbs the vanishing order, for fault injection.
Certificate certify_row(const Family& f, const QuotientSingularity& q, const GoldenRow& row, int m_shift = 0);

// Picks the unique row for the variant at this point and certifies it.
Certificate classify_point(const Family& f, const QuotientSingularity& q, const Variant& v,
                           const std::vector<const GoldenRow*>& rows);

}  // namespace fr
