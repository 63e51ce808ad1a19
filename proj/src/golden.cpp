#include "fanorigid/golden.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fr {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Data lines of a TSV file, skipping comments and the header.
std::vector<std::pair<int, std::vector<std::string>>> read_tsv(const std::string& path,
                                                               size_t columns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != columns)
            throw EngineError(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": expected " +
                                                         std::to_string(columns) + " fields, got " +
                                                         std::to_string(fields.size()));
        out.emplace_back(lineno, std::move(fields));
    }
    return out;
}

Weights5 parse_weights(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 5) throw EngineError(ErrorKind::ParseError, "bad weights '" + s + "'");
    Weights5 w{};
    for (size_t i = 0; i < 5; ++i) w[i] = std::stoi(parts[i]);
    return w;
}

}  // namespace

TableType TableType::parse(std::string_view text) {
    static const std::regex re(R"(^1/(\d+)\((.*)\)$)");
    std::string s = trim(text);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw EngineError(ErrorKind::ParseError, "bad singularity type '" + s + "'");
    TableType t;
    t.r = std::stoi(m[1].str());
    auto items = split(m[2].str(), ',');
    if (items.size() != 3) throw EngineError(ErrorKind::ParseError, "bad singularity type '" + s + "'");
    std::array<int, 3> coords{};
    int subscripted = 0;
    for (size_t k = 0; k < 3; ++k) {
        std::string item = trim(items[k]);
        auto us = item.find('_');
        t.residues[k] = std::stoi(item.substr(0, us));
        if (us != std::string::npos) {
            if (us + 2 != item.size() || coord_index(item[us + 1]) < 0)
                throw EngineError(ErrorKind::ParseError, "bad subscript in '" + s + "'");
            coords[k] = coord_index(item[us + 1]);
            ++subscripted;
        }
    }
    if (subscripted == 3) t.coords = coords;
    else if (subscripted != 0)
        throw EngineError(ErrorKind::ParseError, "partially subscripted type '" + s + "'");
    return t;
}

std::vector<GoldenRow> read_golden_rows(const std::string& path) {
    std::vector<GoldenRow> rows;
    for (auto& [lineno, f] : read_tsv(path, 11)) {
        GoldenRow r;
        r.line = lineno;
        r.family_no = std::stoi(f[0]);
        r.point = f[1];
        r.count = std::stoi(f[2]);
        r.type = f[3];
        if (!f[4].empty()) {
            if (f[4] != "+" && f[4] != "0" && f[4] != "-")
                throw EngineError(ErrorKind::ParseError,
                                  path + ":" + std::to_string(lineno) + ": bad B^3 sign '" + f[4] + "'");
            r.b3_sign = f[4][0];
        }
        r.linear_system = f[5];
        r.surface = f[6];
        r.vanishing = f[7];
        r.condition = f[8];
        r.method = f[9];
        r.witness = f[10];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<const GoldenRow*> GoldenData::rows_for(int family_no) const {
    std::vector<const GoldenRow*> out;
    for (const auto& r : rows)
        if (r.family_no == family_no) out.push_back(&r);
    return out;
}

GoldenData GoldenData::load(const std::string& dir) {
    GoldenData g;
    g.rows = read_golden_rows(dir + "/golden_tables.tsv");
    for (auto& [lineno, f] : read_tsv(dir + "/table_headers.tsv", 5)) {
        TableHeader h;
        h.family_no = std::stoi(f[0]);
        h.degree = std::stoi(f[1]);
        h.weights = parse_weights(f[2]);
        h.a_cubed = Rat::parse(f[3]);
        h.underlined = f[4] == "1";
        g.headers[h.family_no] = h;
    }
    for (auto& [lineno, f] : read_tsv(dir + "/family_list.tsv", 3)) {
        PrintedFamily p;
        p.family_no = std::stoi(f[0]);
        p.degree = std::stoi(f[1]);
        p.weights = parse_weights(f[2]);
        g.printed_list.push_back(p);
    }
    const std::string errata = dir + "/table_errata.tsv";
    if (std::filesystem::exists(errata)) {
        for (auto& [lineno, f] : read_tsv(errata, 6))
            g.errata.push_back({lineno, std::stoi(f[0]), f[1], f[2], f[3], f[4], f[5]});
    }
    return g;
}

std::string GoldenData::default_dir() {
#ifdef FANORIGID_DATA_DIR
    return FANORIGID_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

Exponents single_monomial(const std::string& text) {
    auto p = Polynomial::parse(text);
    if (p.terms().size() != 1)
        throw EngineError(ErrorKind::ParseError, "expected a single monomial: '" + text + "'");
    return p.terms().begin()->first;
}

}  // namespace

std::vector<Exponents> parse_monomial_list(std::string_view text) {
    std::string s(text);
    for (size_t pos; (pos = s.find(" or ")) != std::string::npos;) s.replace(pos, 4, ",");
    std::vector<Exponents> out;
    for (const auto& part : split(s, ',')) {
        std::string t = trim(part);
        if (!t.empty()) out.push_back(single_monomial(t));
    }
    return out;
}

Exponents leading_surface_monomial(std::string_view surface) {
    std::string first = trim(split(std::string(surface), ',')[0]);
    size_t end = first.find_first_of("+-", 1);
    return single_monomial(trim(first.substr(0, end)));
}

}  // namespace fr
