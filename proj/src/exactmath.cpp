#include "fanorigid/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace fr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoEliminatingMonomial: return "NoEliminatingMonomial";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonTerminal: return "NonTerminal";
    case ErrorKind::EdgeContained: return "EdgeContained";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NoMatchingRow: return "NoMatchingRow";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::UnknownVariantFlag: return "UnknownVariantFlag";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OverCutoff: return "OverCutoff";
    }
    return "Unknown";
}

EngineError::EngineError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

Rat::Rat(long long num, long long den) : Rat(Big(num), Big(den)) {}

Rat::Rat(const Big& num, const Big& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rat Rat::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto valid_int = [](const std::string& part) {
        size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start >= part.size()) return false;
        return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw EngineError(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    Big n(num), q(den);
    if (q == 0) throw EngineError(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rat(n, q);
}

std::string Rat::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

char coord_name(int index) {
    static constexpr char names[] = {'x', 'y', 'z', 't', 'w'};
    if (index < 0 || index >= kNumCoords) throw std::out_of_range("coordinate index");
    return names[index];
}

int coord_index(char name) {
    switch (name) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 't': return 3;
    case 'w': return 4;
    default: return -1;
    }
}

int weighted_degree(const Exponents& e, const Weights5& weights) {
    int deg = 0;
    for (int i = 0; i < kNumCoords; ++i) deg += e[i] * weights[i];
    return deg;
}

std::vector<WMonomial> weighted_monomials(const Weights5& weights, int d, unsigned var_mask) {
    std::vector<WMonomial> out;
    Exponents e{};
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == kNumCoords) {
            if (remaining == 0) out.push_back({e, d});
            return;
        }
        if (!(var_mask & (1u << idx))) {
            e[idx] = 0;
            rec(idx + 1, remaining);
            return;
        }
        for (int k = 0; k * weights[idx] <= remaining; ++k) {
            e[idx] = k;
            rec(idx + 1, remaining - k * weights[idx]);
        }
        e[idx] = 0;
    };
    if (d >= 0) rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

bool representable(const Weights5& weights, int d, unsigned var_mask) {
    if (d < 0) return false;
    std::vector<char> reach(static_cast<size_t>(d) + 1, 0);
    reach[0] = 1;
    for (int i = 0; i < kNumCoords; ++i) {
        if (!(var_mask & (1u << i))) continue;
        for (int v = weights[i]; v <= d; ++v)
            if (reach[static_cast<size_t>(v - weights[i])]) reach[static_cast<size_t>(v)] = 1;
    }
    return reach[static_cast<size_t>(d)] != 0;
}

std::string monomial_str(const Exponents& e) {
    std::string s;
    for (int i = 0; i < kNumCoords; ++i) {
        if (e[i] == 0) continue;
        s += coord_name(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Polynomial::Polynomial(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest exponent vectors first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        Rat mag = neg ? -c : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono = monomial_str(e);
        if (mono == "1") s += mag.str();
        else if (mag == Rat(1)) s += mono;
        else s += mag.str() + "*" + mono;
    }
    return s;
}

std::optional<int> Polynomial::homogeneous_degree(const Weights5& weights) const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = weighted_degree(e, weights);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

Polynomial Polynomial::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&](const std::string& why) {
        throw EngineError(ErrorKind::ParseError, why + " in '" + std::string(text) + "'");
    };
    if (s.empty()) fail("empty polynomial");

    Polynomial p;
    size_t pos = 0;
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer at position " + std::to_string(start));
        return Rat::Big(s.substr(start, pos - start));
    };

    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;

        Rat coef(sign);
        Exponents e{};
        bool any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Rat::Big num = read_int();
            Rat::Big den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = read_int();
                if (den == 0) fail("zero denominator");
            }
            coef *= Rat(num, den);
            any = true;
        }
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            int idx = coord_index(s[pos]);
            if (idx < 0) fail(std::string("unknown symbol '") + s[pos] + "'");
            ++pos;
            int power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = static_cast<int>(read_int());
            }
            e[static_cast<size_t>(idx)] += power;
            any = true;
        }
        if (!any) fail("empty term");
        p.add_term(e, coef);
    }
    return p;
}

TruncSeries::TruncSeries(std::array<int, 3> weights, int cutoff)
    : weights_(weights), cutoff_(cutoff) {
    for (int w : weights_)
        if (w <= 0) throw std::invalid_argument("series weights must be positive");
    if (cutoff_ <= 0) throw std::invalid_argument("series cutoff must be positive");
}

int TruncSeries::degree_of(const Key& k) const {
    return k[0] * weights_[0] + k[1] * weights_[1] + k[2] * weights_[2];
}

void TruncSeries::add_term(const Key& k, const Rat& c) {
    if (degree_of(k) >= cutoff_ || c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries out(weights_, std::min(cutoff_, o.cutoff_));
    for (const auto& [k, c] : terms_) out.add_term(k, c);
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries out(weights_, std::min(cutoff_, o.cutoff_));
    for (const auto& [k1, c1] : terms_) {
        int d1 = degree_of(k1);
        for (const auto& [k2, c2] : o.terms_) {
            if (d1 + degree_of(k2) >= out.cutoff_) continue;
            out.add_term({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]}, c1 * c2);
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries out(weights_, cutoff_);
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
}

TruncSeries TruncSeries::homogeneous_part(int degree) const {
    TruncSeries out(weights_, cutoff_);
    for (const auto& [k, v] : terms_)
        if (degree_of(k) == degree) out.add_term(k, v);
    return out;
}

std::optional<int> TruncSeries::min_degree() const {
    std::optional<int> best;
    for (const auto& [k, v] : terms_) {
        int d = degree_of(k);
        if (!best || d < *best) best = d;
    }
    return best;
}

Chart Chart::make(const Weights5& weights, int vertex, int eliminated) {
    if (vertex == eliminated) throw std::invalid_argument("eliminated coordinate equals vertex");
    Chart ch;
    ch.vertex = vertex;
    ch.eliminated = eliminated;
    ch.r = weights[static_cast<size_t>(vertex)];
    int n = 0;
    for (int i = 0; i < kNumCoords; ++i) {
        if (i == vertex || i == eliminated) continue;
        ch.params[static_cast<size_t>(n)] = i;
        ch.param_residues[static_cast<size_t>(n)] = weights[static_cast<size_t>(i)] % ch.r;
        ++n;
    }
    ch.eliminated_residue = weights[static_cast<size_t>(eliminated)] % ch.r;
    for (int res : ch.param_residues)
        if (res == 0)
            throw EngineError(ErrorKind::NonTerminal, "local parameter with residue 0 at vertex");
    if (ch.eliminated_residue == 0)
        throw EngineError(ErrorKind::NoEliminatingMonomial, "eliminated coordinate has residue 0");
    return ch;
}

namespace {

using Key = TruncSeries::Key;
using Homog = std::map<Key, Rat>;

struct LocalTerm {
    Key params;
    int elim_power;
    int degree;  // graded degree of the parameter part
    Rat coef;
};

std::vector<LocalTerm> restrict_to_chart(const Polynomial& f, const Chart& chart) {
    std::vector<LocalTerm> out;
    for (const auto& [e, c] : f.terms()) {
        LocalTerm t{{}, e[static_cast<size_t>(chart.eliminated)], 0, c};
        for (size_t k = 0; k < 3; ++k) {
            t.params[k] = e[static_cast<size_t>(chart.params[k])];
            t.degree += t.params[k] * chart.param_residues[k];
        }
        out.push_back(t);
    }
    return out;
}

void accumulate(Homog& into, const Key& shift, const Rat& coef, const Homog& src) {
    for (const auto& [k, v] : src) {
        Key key{k[0] + shift[0], k[1] + shift[1], k[2] + shift[2]};
        auto [it, inserted] = into.try_emplace(key, v * coef);
        if (!inserted) {
            it->second += v * coef;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

}  // namespace

TruncSeries implicit_eliminate(const Polynomial& f, const Chart& chart, int cutoff) {
    auto local = restrict_to_chart(f, chart);
    std::optional<Rat> key_coef;
    int max_power = 1;
    for (const auto& t : local) {
        if (t.elim_power == 1 && t.degree == 0) key_coef = t.coef;
        if (t.elim_power == 0 && t.degree == 0)
            throw EngineError(ErrorKind::NoEliminatingMonomial,
                              "the hypersurface does not pass through the vertex");
        max_power = std::max(max_power, t.elim_power);
    }
    if (!key_coef)
        throw EngineError(ErrorKind::NoEliminatingMonomial,
                          std::string("no monomial ") + coord_name(chart.vertex) + "^k*" +
                              coord_name(chart.eliminated) + " in the equation");

    // powers[j][D] is the degree-D part of s^j; s itself is powers[1].
    std::vector<std::vector<Homog>> powers(static_cast<size_t>(max_power) + 1,
                                           std::vector<Homog>(static_cast<size_t>(cutoff)));
    powers[0][0][Key{0, 0, 0}] = Rat(1);

    for (int D = 1; D < cutoff; ++D) {
        for (int j = 2; j <= max_power; ++j) {
            Homog& target = powers[static_cast<size_t>(j)][static_cast<size_t>(D)];
            for (int D1 = 1; D1 < D; ++D1) {
                const Homog& s_part = powers[1][static_cast<size_t>(D1)];
                const Homog& rest = powers[static_cast<size_t>(j - 1)][static_cast<size_t>(D - D1)];
                for (const auto& [k, v] : s_part) accumulate(target, k, v, rest);
            }
        }
        Homog g_part;
        for (const auto& t : local) {
            if (t.elim_power == 1 && t.degree == 0) continue;
            int rest = D - t.degree;
            if (rest < 0) continue;
            if (t.elim_power == 0) {
                if (rest == 0) accumulate(g_part, t.params, t.coef, powers[0][0]);
                continue;
            }
            accumulate(g_part, t.params, t.coef,
                       powers[static_cast<size_t>(t.elim_power)][static_cast<size_t>(rest)]);
        }
        Homog& s_D = powers[1][static_cast<size_t>(D)];
        for (auto& [k, v] : g_part) s_D.emplace(k, -v / *key_coef);
    }

    TruncSeries out(chart.param_residues, cutoff);
    for (int D = 1; D < cutoff; ++D)
        for (const auto& [k, v] : powers[1][static_cast<size_t>(D)]) out.add_term(k, v);
    return out;
}

SeriesOrder series_order(const Polynomial& g, const Chart& chart, const TruncSeries& elimination) {
    if (g.is_zero()) throw EngineError(ErrorKind::ZeroPolynomial, "polynomial is identically zero");
    const int cutoff = elimination.cutoff();
    auto local = restrict_to_chart(g, chart);

    int max_power = 0;
    for (const auto& t : local) max_power = std::max(max_power, t.elim_power);
    std::vector<TruncSeries> powers;
    TruncSeries one(chart.param_residues, cutoff);
    one.add_term({0, 0, 0}, Rat(1));
    powers.push_back(one);
    for (int j = 1; j <= max_power; ++j) powers.push_back(powers.back() * elimination);

    TruncSeries total(chart.param_residues, cutoff);
    for (const auto& t : local) {
        if (t.degree >= cutoff) continue;
        TruncSeries mono(chart.param_residues, cutoff);
        mono.add_term(t.params, t.coef);
        total = total + mono * powers[static_cast<size_t>(t.elim_power)];
    }
    SeriesOrder res;
    res.cutoff = cutoff;
    if (auto md = total.min_degree()) res.order = Rat(*md, chart.r);
    return res;
}

Rat naive_order(const Polynomial& g, const Chart& chart) {
    if (g.is_zero()) throw EngineError(ErrorKind::ZeroPolynomial, "polynomial is identically zero");
    std::optional<int> best;
    for (const auto& t : restrict_to_chart(g, chart)) {
        int deg = t.degree + t.elim_power * chart.eliminated_residue;
        if (!best || deg < *best) best = deg;
    }
    return Rat(*best, chart.r);
}

}  // namespace fr
