#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

namespace turanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// t = floor((k - 1) / 2), the clique size of the main construction.
constexpr std::int64_t half_clique(std::int64_t k) { return (k - 1) / 2; }
/// 1 when k is even, else 0.
constexpr std::int64_t even_indicator(std::int64_t k) { return k % 2 == 0 ? 1 : 0; }

enum class Family { gnka, srab, hnk };

/// Parameters of one construction. G_{n,k,a} uses (n, k, a); S^{(r)}_{a,b}
/// uses (r, a, b); H_{n,k} uses (n, k).
struct ConstructionParams {
    Family family = Family::gnka;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t a = 0;
    std::int64_t r = 0;
    std::int64_t b = 0;

    static ConstructionParams gnka(std::int64_t n, std::int64_t k, std::int64_t a);
    /// G_{n,k,t} with t = half_clique(k).
    static ConstructionParams gnkt(std::int64_t n, std::int64_t k);
    static ConstructionParams srab(std::int64_t r, std::int64_t a, std::int64_t b);
    static ConstructionParams hnk(std::int64_t n, std::int64_t k);

    /// Parses "gnka:12,5,2", "srab:3,5,2" or "hnk:10,6".
    static ConstructionParams parse(const std::string& spec);

    /// Throws std::invalid_argument when the family invariants fail.
    void validate() const;
    std::int64_t vertex_count() const;
    /// Inverse of parse.
    std::string spec() const;
};

/// A graph given by vertex classes, each a clique or an independent set,
/// with every pair of classes either completely joined or not adjacent.
/// Counts on it are exact for any class sizes, so constructions far above
/// the 64-vertex cap are counted without being materialized.
struct VertexClass {
    std::string label;
    std::int64_t size = 0;
    bool clique = false;
};

class Blueprint {
public:
    Blueprint() = default;
    Blueprint(std::vector<VertexClass> classes, std::vector<std::pair<int, int>> joins);

    const std::vector<VertexClass>& classes() const { return classes_; }
    bool joined(int i, int j) const;
    std::int64_t vertex_count() const;

    /// Vertices laid out class after class in the given order.
    /// Throws std::invalid_argument above 64 vertices.
    Graph materialize() const;

    /// Injective edge-preserving maps of `pattern` into the blueprint graph.
    BigInt count_embeddings(const Graph& pattern) const;
    BigInt count_copies(const Pattern& p) const;

    /// Shrinks each independent class to at most one more vertex than its
    /// neighborhood. Vertices of an independent class are twins and a path or
    /// cycle visits at most |N| + 1 of them, so longest path and circumference
    /// are unchanged.
    Blueprint twin_reduced() const;

private:
    std::vector<VertexClass> classes_;
    std::vector<std::vector<bool>> join_;
};

/// Class structure of a G_{n,k,a} or S^{(r)}_{a,b} (for H_{n,k}, of the
/// chosen S^{(t+1)}_{a,b}). Layouts: [A | C | B] and [v | R - v | A | B].
Blueprint blueprint(const ConstructionParams& p);

/// A∪C is a clique, B independent, A completely joined to B, no C-B edges.
Graph build_gnka(std::int64_t n, std::int64_t k, std::int64_t a);
/// Clique R with distinguished vertex v (vertex 0); v joined to all of B and
/// every other clique vertex joined to all of A.
Graph build_srab(std::int64_t r, std::int64_t a, std::int64_t b);

struct HnkChoice {
    std::int64_t a = 0;
    std::int64_t b = 0;
    BigInt paths;  // copies of P_{k-1}
};

/// Argmax over a + b = n - (t + 1) of the P_{k-1} count in S^{(t+1)}_{a,b},
/// ties to the smallest a. Works for any n through blueprint counting.
HnkChoice choose_hnk(std::int64_t n, std::int64_t k);

struct HnkGraph {
    Graph graph;
    std::int64_t a = 0;
    std::int64_t b = 0;
    BigInt paths;
};
HnkGraph build_hnk(std::int64_t n, std::int64_t k);

/// Materializes any construction with at most 64 vertices.
Graph build(const ConstructionParams& p);

/// Copies of p in the construction: counted on the built graph when it has
/// at most 64 vertices, on the blueprint otherwise.
BigInt count_in_construction(const Pattern& p, const ConstructionParams& c);

// Closed forms. Each throws std::invalid_argument outside its range.

Rational eg_bound(std::int64_t n, std::int64_t k);
Rational eg_cycle_bound(std::int64_t n, std::int64_t k);
Rational edges_gnkt(std::int64_t n, std::int64_t k);
Rational luo_clique_bound(std::int64_t n, std::int64_t k, std::int64_t r);
Rational luo_cycle_clique_bound(std::int64_t n, std::int64_t k, std::int64_t r);
Rational c4_exact(std::int64_t n, std::int64_t k);
Rational star_exact(std::int64_t n, std::int64_t k, std::int64_t r);
Rational p2_exact(std::int64_t n, std::int64_t k);
Rational diff_c4(std::int64_t n, std::int64_t k);
Rational diff_star(std::int64_t n, std::int64_t k, std::int64_t r);
Rational diff_p3(std::int64_t n, std::int64_t k);

struct DiffP4 {
    Rational value;
    /// True when k < 7 and the value came from counting paths in
    /// G_{n+1,k,t} and G_{n,k,t} rather than from the closed form.
    bool direct_count = false;
};
DiffP4 diff_p4(std::int64_t n, std::int64_t k);

Rational srab_path_count(std::int64_t r, std::int64_t a, std::int64_t b);
Rational p5p6_leading(std::int64_t n);
/// floor((n-1)/2) * ceil((n-1)/2), the stated P_3 count of the balanced
/// double star on n vertices.
Rational double_star_p3_stated(std::int64_t n);
/// max a*b over a + b = n - 2: P_3 copies counted directly in the best
/// n-vertex double star.
Rational double_star_p3_direct(std::int64_t n);

enum class GrowthKind { path_even, path_odd, cycle_even, cycle_odd };

struct LeadingTerm {
    Rational coefficient;
    int exponent = 0;
};

/// Leading coefficient and exponent in n of the maximum number of
/// P_{2l} / P_{2l+1} / C_{2l} / C_{2l+1} copies in P_k-free graphs.
LeadingTerm leading_coeff(GrowthKind kind, std::int64_t k, std::int64_t l);
GrowthKind parse_growth_kind(const std::string& s);
std::string to_string(GrowthKind kind);

/// Exact top-degree term of n -> N(p, G_{n,k,t}) as a polynomial in n.
LeadingTerm construction_leading_term(const Pattern& p, std::int64_t k);

enum class FormulaId {
    eg_bound,
    eg_cycle_bound,
    edges_gnkt,
    luo_clique_bound,
    luo_cycle_clique_bound,
    c4_exact,
    star_exact,
    p2_exact,
    diff_c4,
    diff_star,
    diff_p3,
    diff_p4,
    srab_path_count,
    leading_coeff,
    p5p6_leading,
    double_star_p3_stated,
    double_star_p3_direct,
};

std::optional<FormulaId> parse_formula_id(const std::string& s);
std::string to_string(FormulaId id);
const std::vector<FormulaId>& all_formula_ids();

/// Named parameters as given on the command line, e.g. {"n": "10", "k": "5"};
/// leading_coeff also takes kind = P_even | P_odd | C_even | C_odd.
using FormulaParams = std::map<std::string, std::string>;

struct FormulaResult {
    FormulaId id = FormulaId::eg_bound;
    Rational value;
    FormulaParams params;
    std::optional<int> exponent;
    bool direct_count = false;

    bool is_integer() const;
    /// Integer values plain, others as "p/q".
    std::string value_string() const;
};

FormulaResult evaluate_formula(FormulaId id, const FormulaParams& params);

std::string rational_string(const Rational& r);

}  // namespace turanlab
