#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanorigid/rigidity.hpp"

namespace fr {

struct Discrepancy {
    int family_no = 0;
    int line = 0;  // data-file line of the golden row, 0 when not row-specific
    std::string point;
    std::string check;
    std::string expected;
    std::string actual;
};

struct PointReport {
    QuotientSingularity singularity;
    std::string b3;
    char b3_sign = '0';
    std::vector<Certificate> certificates;  // one per table row at the point
};

struct FamilyReport {
    Family family;
    Rat a_cubed;
    std::vector<PointReport> points;
    SmoothPointStatus smooth;
    CurveStatus curve;
    bool super_rigid = false;
    std::string variant;  // "all" when every row is certified
    std::vector<Discrepancy> discrepancies;
    std::vector<Discrepancy> errata;  // misprints replaced by a verified correction
    std::vector<std::string> notes;
};

// Empty when the printed type cannot occur on P(1,a1,..,a4): its r divides no
// weight, or its residues are not of terminal form. Otherwise the reason it can.
std::optional<std::string> printed_type_possible(const Family& f, const std::string& printed);

// Entry number or a quadruple "a1,a2,a3,a4"; throws UnknownFamily.
Family select_family(const std::string& selector, const std::vector<Family>& families);

// Checks the family against its table. With a variant, only the row matching it
// at each point is certified, and unmatched rows are discrepancies.
FamilyReport build_report(const Family& f, const GoldenData& golden,
                          const std::optional<Variant>& variant = std::nullopt);

// Every point of every variant is excluded (no involution row is reachable).
bool super_rigid(const Family& f, const GoldenData& golden);

nlohmann::json census_json(const QuotientSingularity& q);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const Discrepancy& d);
std::string to_text(const FamilyReport& r);

// Printed-list entries that differ from the enumeration.
struct ListDifference {
    int family_no = 0;
    std::string printed;
    std::string enumerated;
    bool confirmed_by_table = false;  // the table header agrees with the enumeration
};
std::vector<ListDifference> printed_list_differences(const std::vector<Family>& families,
                                                     const GoldenData& golden);

std::string weights_str(const Weights5& w);

}  // namespace fr
