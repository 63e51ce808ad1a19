#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fr {

enum class ErrorKind {
    NoEliminatingMonomial,
    ZeroPolynomial,
    NonTerminal,
    EdgeContained,
    NonIntegral,
    NotSymmetric,
    NotApplicable,
    NoMatchingRow,
    CheckFailed,
    UnknownFamily,
    UnknownVariantFlag,
    ParseError,
    OverCutoff,
};

const char* to_string(ErrorKind kind);

class EngineError : public std::runtime_error {
public:
    EngineError(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Exact rational in lowest terms with positive denominator.
class Rat {
public:
    using Big = boost::multiprecision::cpp_int;

    Rat() = default;
    Rat(long long n) : v_(n) {}
    Rat(long long num, long long den);
    Rat(const Big& num, const Big& den);

    static Rat parse(std::string_view text);

    Big num() const { return boost::multiprecision::numerator(v_); }
    Big den() const { return boost::multiprecision::denominator(v_); }
    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.sign() == 0; }
    bool is_integer() const { return den() == 1; }
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Coordinate order throughout: x, y, z, t, w.
inline constexpr int kNumCoords = 5;
using Exponents = std::array<int, kNumCoords>;
using Weights5 = std::array<int, kNumCoords>;

char coord_name(int index);
int coord_index(char name);

int weighted_degree(const Exponents& e, const Weights5& weights);

struct WMonomial {
    Exponents e{};
    int degree = 0;
    auto operator<=>(const WMonomial&) const = default;
};

// All monomials of weighted degree d, optionally restricted to the
// coordinates whose bit is set in var_mask.
std::vector<WMonomial> weighted_monomials(const Weights5& weights, int d,
                                          unsigned var_mask = 0x1f);

// Is d a non-negative integer combination of the weights selected by var_mask?
bool representable(const Weights5& weights, int d, unsigned var_mask);

std::string monomial_str(const Exponents& e);

class Polynomial {
public:
    using Terms = std::map<Exponents, Rat>;

    Polynomial() = default;
    explicit Polynomial(Terms terms);

    // Terms like c*x^a*y^b joined by + or -. Coefficients are optional
    // integers or fractions; '*' and '^1' are optional; whitespace is ignored.
    static Polynomial parse(std::string_view text);

    void add_term(const Exponents& e, const Rat& c);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

    // Weighted degree if every term has the same degree.
    std::optional<int> homogeneous_degree(const Weights5& weights) const;

private:
    Terms terms_;
};

// Truncated power series in three local parameters with integer gradings.
class TruncSeries {
public:
    using Key = std::array<int, 3>;

    TruncSeries(std::array<int, 3> weights, int cutoff);

    const std::array<int, 3>& weights() const { return weights_; }
    int cutoff() const { return cutoff_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree_of(const Key& k) const;
    void add_term(const Key& k, const Rat& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Rat& c) const;
    TruncSeries homogeneous_part(int degree) const;
    std::optional<int> min_degree() const;

private:
    std::array<int, 3> weights_;
    int cutoff_;
    std::map<Key, Rat> terms_;
};

// Affine chart at a coordinate vertex x_vertex = 1, with one coordinate
// eliminated through the hypersurface equation and three local parameters.
struct Chart {
    int vertex = 0;
    int eliminated = 0;
    std::array<int, 3> params{};
    std::array<int, 3> param_residues{};  // in (0, r)
    int eliminated_residue = 0;           // in (0, r)
    int r = 1;

    static Chart make(const Weights5& weights, int vertex, int eliminated);
};

inline int default_cutoff(int r) { return 4 * r; }

// Solves f = 0 for the eliminated coordinate as a series in the local
// parameters, degree by degree, up to (but excluding) the cutoff degree.
TruncSeries implicit_eliminate(const Polynomial& f, const Chart& chart, int cutoff);

struct SeriesOrder {
    std::optional<Rat> order;  // empty when every term cancels below the cutoff
    int cutoff = 0;
    bool over_cutoff() const { return !order.has_value(); }
};

SeriesOrder series_order(const Polynomial& g, const Chart& chart,
                         const TruncSeries& elimination);

// Order of g from monomial residues alone, ignoring cancellation.
Rat naive_order(const Polynomial& g, const Chart& chart);

}  // namespace fr
