#include "fanorigid/census.hpp"

#include <algorithm>
#include <numeric>

namespace fr {

Location Location::parse(std::string_view id) {
    std::vector<int> coords;
    size_t pos = 0;
    while (pos < id.size()) {
        // "O_z" or the shorthand "Oz"
        size_t at = pos + 1 < id.size() && id[pos + 1] == '_' ? pos + 2 : pos + 1;
        if (id[pos] != 'O' || at >= id.size())
            throw EngineError(ErrorKind::ParseError, "bad point id '" + std::string(id) + "'");
        int c = coord_index(id[at]);
        if (c < 1) throw EngineError(ErrorKind::ParseError, "bad point id '" + std::string(id) + "'");
        coords.push_back(c);
        pos = at + 1;
    }
    if (coords.size() == 1) return vertex(coords[0]);
    if (coords.size() == 2 && coords[0] != coords[1])
        return edge(std::min(coords[0], coords[1]), std::max(coords[0], coords[1]));
    throw EngineError(ErrorKind::ParseError, "bad point id '" + std::string(id) + "'");
}

std::string Location::id() const {
    std::string s = std::string("O_") + coord_name(i);
    if (kind == Kind::Edge) s += std::string("O_") + coord_name(j);
    return s;
}

std::array<int, 3> TerminalType::canonical() const {
    return {1, std::min(a, b()), std::max(a, b())};
}

std::string TerminalType::str() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," + std::to_string(b()) + ")";
}

TerminalType normalize_type(int r, const std::array<int, 3>& residues) {
    if (r < 2) throw std::invalid_argument("normalize_type needs r >= 2");
    for (int u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::array<int, 3> v{};
        for (size_t k = 0; k < 3; ++k) v[k] = ((residues[k] * u) % r + r) % r;
        auto anchor = std::find(v.begin(), v.end(), 1);
        if (anchor == v.end()) continue;
        std::array<int, 2> rest{};
        size_t n = 0;
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it != anchor) rest[n++] = *it;
        if (rest[0] == 0 || rest[1] == 0 || rest[0] + rest[1] != r) continue;
        if (std::gcd(rest[0], r) != 1) continue;
        return {r, rest[0]};
    }
    throw EngineError(ErrorKind::NonTerminal,
                      "1/" + std::to_string(r) + "(" + std::to_string(residues[0]) + "," +
                          std::to_string(residues[1]) + "," + std::to_string(residues[2]) +
                          ") is not of the form 1/r(1,a,r-a)");
}

bool has_eliminating_monomial(const Family& f, int vertex, int eliminated) {
    if (vertex == eliminated) return false;
    int rest = f.d - f.a(eliminated);
    return rest >= f.a(vertex) && rest % f.a(vertex) == 0;
}

std::optional<int> default_eliminated(const Family& f, int vertex) {
    std::optional<int> best;
    for (int j = 0; j < kNumCoords; ++j) {
        if (!has_eliminating_monomial(f, vertex, j)) continue;
        if (!best || f.a(j) >= f.a(*best)) best = j;
    }
    return best;
}

std::optional<QuotientSingularity> vertex_singularity(const Family& f, int i) {
    const int r = f.a(i);
    if (r == 1 || f.d % r == 0) return std::nullopt;
    auto elim = default_eliminated(f, i);
    if (!elim)
        throw EngineError(ErrorKind::NoEliminatingMonomial,
                          "no monomial " + std::string(1, coord_name(i)) + "^k*x_e of degree " +
                              std::to_string(f.d) + " in " + f.label());
    QuotientSingularity q;
    q.location = Location::vertex(i);
    q.r = r;
    q.eliminated = *elim;
    size_t n = 0;
    for (int p = 0; p < kNumCoords; ++p) {
        if (p == i || p == *elim) continue;
        q.local_params[n] = p;
        q.residues[n] = f.a(p) % r;
        ++n;
    }
    q.type = normalize_type(r, q.residues);
    return q;
}

std::optional<QuotientSingularity> edge_singularities(const Family& f, int i, int j) {
    const int ai = f.a(i), aj = f.a(j);
    const int h = std::gcd(ai, aj);
    if (h == 1) return std::nullopt;
    // Pure monomials x_i^p x_j^q of degree d.
    std::optional<int> p_min, q_min;
    for (int p = 0; p * ai <= f.d; ++p) {
        int rest = f.d - p * ai;
        if (rest % aj != 0) continue;
        int q = rest / aj;
        if (!p_min || p < *p_min) p_min = p;
        if (!q_min || q < *q_min) q_min = q;
    }
    if (!p_min)
        throw EngineError(ErrorKind::EdgeContained,
                          "the edge " + Location::edge(i, j).id() + " lies on " + f.label());
    const int l = std::lcm(ai, aj);
    const int count = (f.d - *p_min * ai - *q_min * aj) / l;
    if (count == 0) return std::nullopt;

    QuotientSingularity q;
    q.location = Location::edge(i, j);
    q.count = count;
    q.r = h;
    size_t n = 0;
    for (int p = 0; p < kNumCoords; ++p) {
        if (p == i || p == j) continue;
        q.local_params[n] = p;
        q.residues[n] = f.a(p) % h;
        ++n;
    }
    q.type = normalize_type(h, q.residues);
    return q;
}

std::vector<QuotientSingularity> census(const Family& f) {
    std::vector<QuotientSingularity> out;
    for (int i = 4; i >= 1; --i)
        if (auto q = vertex_singularity(f, i)) out.push_back(*q);
    static constexpr std::array<std::array<int, 2>, 6> edges{
        {{3, 4}, {2, 4}, {1, 4}, {2, 3}, {1, 3}, {1, 2}}};
    for (const auto& e : edges)
        if (auto q = edge_singularities(f, e[0], e[1])) out.push_back(*q);
    return out;
}

bool is_terminal_family(const Family& f) {
    for (int skip = 1; skip <= 4; ++skip) {
        int g = 0;
        for (int i = 1; i <= 4; ++i)
            if (i != skip) g = std::gcd(g, f.a(i));
        if (g != 1) return false;
    }
    try {
        census(f);
    } catch (const EngineError& e) {
        if (e.kind() == ErrorKind::NonTerminal || e.kind() == ErrorKind::EdgeContained ||
            e.kind() == ErrorKind::NoEliminatingMonomial)
            return false;
        throw;
    }
    return true;
}

}  // namespace fr
