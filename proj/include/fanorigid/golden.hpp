#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanorigid/census.hpp"

namespace fr {

// A type string from a table, e.g. "1/3(1_x,2_y,1_t)" or "1/2(1,1,1)".
struct TableType {
    int r = 1;
    std::array<int, 3> residues{};
    std::optional<std::array<int, 3>> coords;  // subscripted coordinates, if printed

    static TableType parse(std::string_view text);
};

struct GoldenRow {
    int line = 0;  // 1-based line in the data file
    int family_no = 0;
    std::string point;
    int count = 1;
    std::string type;
    std::optional<char> b3_sign;  // '+', '0', '-'
    std::string linear_system;
    std::string surface;
    std::string vanishing;
    std::string condition;
    std::string method;
    std::string witness;

    Location location() const { return Location::parse(point); }
    TableType table_type() const { return TableType::parse(type); }
};

struct TableHeader {
    int family_no = 0;
    int degree = 0;
    Weights5 weights{};
    Rat a_cubed;
    bool underlined = false;
};

struct PrintedFamily {
    int family_no = 0;
    int degree = 0;
    Weights5 weights{};
};

// A table entry known to be misprinted. It is honoured only when the printed
// value is shown impossible for the weights and the engine reproduces `corrected`.
struct TableErratum {
    int line = 0;  // data-file line of the erratum
    int family_no = 0;
    std::string point;
    std::string check;  // "r" or "type"
    std::string printed;
    std::string corrected;
    std::string reason;
};

struct GoldenData {
    std::vector<GoldenRow> rows;
    std::map<int, TableHeader> headers;
    std::vector<PrintedFamily> printed_list;
    std::vector<TableErratum> errata;

    std::vector<const GoldenRow*> rows_for(int family_no) const;

    // Reads golden_tables.tsv, table_headers.tsv and family_list.tsv from dir,
    // and table_errata.tsv when present.
    static GoldenData load(const std::string& dir);
    static std::string default_dir();
};

std::vector<GoldenRow> read_golden_rows(const std::string& path);

// Splits "x^2, y" or "w or yt" into monomials.
std::vector<Exponents> parse_monomial_list(std::string_view text);

// Leading monomial of the first generator: "y-α_i z" -> y, "w+yt" -> w.
Exponents leading_surface_monomial(std::string_view surface);

}  // namespace fr
