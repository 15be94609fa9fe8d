#include "turanlab/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace turanlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

BigInt binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt falling(std::int64_t m, std::int64_t j) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < j; ++i) r *= m - i;
    return r;
}

BigInt factorial(std::int64_t m) { return falling(m, m); }

BigInt power(std::int64_t base, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("cannot parse " + what + " from '" + text + "'");
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// parameters

ConstructionParams ConstructionParams::gnka(std::int64_t n, std::int64_t k, std::int64_t a) {
    ConstructionParams p;
    p.family = Family::gnka;
    p.n = n;
    p.k = k;
    p.a = a;
    p.validate();
    return p;
}

ConstructionParams ConstructionParams::gnkt(std::int64_t n, std::int64_t k) { return gnka(n, k, half_clique(k)); }

ConstructionParams ConstructionParams::srab(std::int64_t r, std::int64_t a, std::int64_t b) {
    ConstructionParams p;
    p.family = Family::srab;
    p.r = r;
    p.a = a;
    p.b = b;
    p.validate();
    return p;
}

ConstructionParams ConstructionParams::hnk(std::int64_t n, std::int64_t k) {
    ConstructionParams p;
    p.family = Family::hnk;
    p.n = n;
    p.k = k;
    p.validate();
    return p;
}

ConstructionParams ConstructionParams::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    require(colon != std::string::npos, "construction spec '" + spec + "' lacks a family prefix");
    const std::string family = spec.substr(0, colon);
    std::vector<std::int64_t> values;
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) values.push_back(parse_int(item, "construction parameter"));
    if (family == "gnka") {
        require(values.size() == 3, "gnka expects n,k,a");
        return gnka(values[0], values[1], values[2]);
    }
    if (family == "gnkt") {
        require(values.size() == 2, "gnkt expects n,k");
        return gnkt(values[0], values[1]);
    }
    if (family == "srab") {
        require(values.size() == 3, "srab expects r,a,b");
        return srab(values[0], values[1], values[2]);
    }
    if (family == "hnk") {
        require(values.size() == 2, "hnk expects n,k");
        return hnk(values[0], values[1]);
    }
    fail("unknown construction family '" + family + "'");
}

void ConstructionParams::validate() const {
    switch (family) {
        case Family::gnka:
            require(a >= 1, "gnka needs a >= 1");
            require(k - 2 * a >= 0, "gnka needs k - 2a >= 0");
            require(n - k + a >= 0, "gnka needs n - k + a >= 0");
            break;
        case Family::srab:
            require(r >= 2, "srab needs r >= 2");
            require(a >= 0 && b >= 0, "srab needs a, b >= 0");
            break;
        case Family::hnk:
            require(k % 2 == 0 && k >= 4, "hnk needs even k >= 4");
            require(n >= k, "hnk needs n >= k");
            break;
    }
}

std::int64_t ConstructionParams::vertex_count() const {
    return family == Family::srab ? r + a + b : n;
}

std::string ConstructionParams::spec() const {
    switch (family) {
        case Family::gnka: return "gnka:" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(a);
        case Family::srab: return "srab:" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(b);
        case Family::hnk: return "hnk:" + std::to_string(n) + "," + std::to_string(k);
    }
    return {};
}

// ---------------------------------------------------------------------------
// blueprints

Blueprint::Blueprint(std::vector<VertexClass> classes, std::vector<std::pair<int, int>> joins)
    : classes_(std::move(classes)), join_(classes_.size(), std::vector<bool>(classes_.size(), false)) {
    for (auto [i, j] : joins) {
        join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        join_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    }
}

bool Blueprint::joined(int i, int j) const { return join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

std::int64_t Blueprint::vertex_count() const {
    std::int64_t total = 0;
    for (const auto& c : classes_) total += c.size;
    return total;
}

Graph Blueprint::materialize() const {
    const std::int64_t total = vertex_count();
    if (total > kMaxVertices) {
        fail("construction has " + std::to_string(total) + " vertices; only count-only evaluation is available above 64");
    }
    std::vector<int> start;
    int offset = 0;
    for (const auto& c : classes_) {
        start.push_back(offset);
        offset += static_cast<int>(c.size);
    }
    Graph g(offset);
    const int m = static_cast<int>(classes_.size());
    for (int i = 0; i < m; ++i) {
        const auto& ci = classes_[static_cast<std::size_t>(i)];
        const int si = start[static_cast<std::size_t>(i)];
        if (ci.clique) {
            for (int x = 0; x < ci.size; ++x)
                for (int y = x + 1; y < ci.size; ++y) g.add_edge(si + x, si + y);
        }
        for (int j = i + 1; j < m; ++j) {
            if (!joined(i, j)) continue;
            const auto& cj = classes_[static_cast<std::size_t>(j)];
            const int sj = start[static_cast<std::size_t>(j)];
            for (int x = 0; x < ci.size; ++x)
                for (int y = 0; y < cj.size; ++y) g.add_edge(si + x, sj + y);
        }
    }
    return g;
}

namespace {

struct ClassAssigner {
    const Blueprint& bp;
    const Graph& pattern;
    std::vector<int> assigned;
    std::vector<std::int64_t> used;
    BigInt total = 0;

    void assign(int v, const BigInt& weight) {
        const int k = pattern.vertex_count();
        if (v == k) {
            total += weight;
            return;
        }
        const int m = static_cast<int>(bp.classes().size());
        for (int c = 0; c < m; ++c) {
            const auto& cls = bp.classes()[static_cast<std::size_t>(c)];
            const std::int64_t free_slots = cls.size - used[static_cast<std::size_t>(c)];
            if (free_slots <= 0) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (!pattern.has_edge(u, v)) continue;
                const int cu = assigned[static_cast<std::size_t>(u)];
                ok = cu == c ? cls.clique : bp.joined(cu, c);
            }
            if (!ok) continue;
            assigned[static_cast<std::size_t>(v)] = c;
            ++used[static_cast<std::size_t>(c)];
            assign(v + 1, weight * free_slots);
            --used[static_cast<std::size_t>(c)];
        }
    }
};

}  // namespace

BigInt Blueprint::count_embeddings(const Graph& pattern) const {
    ClassAssigner walk{*this, pattern, std::vector<int>(static_cast<std::size_t>(pattern.vertex_count()), -1),
                       std::vector<std::int64_t>(classes_.size(), 0)};
    walk.assign(0, BigInt(1));
    return walk.total;
}

BigInt Blueprint::count_copies(const Pattern& p) const {
    const BigInt emb = count_embeddings(p.graph);
    if (emb % p.aut_order != 0) throw std::logic_error("embedding total not divisible by automorphism order");
    return emb / p.aut_order;
}

Blueprint Blueprint::twin_reduced() const {
    std::vector<VertexClass> classes = classes_;
    std::vector<std::pair<int, int>> joins;
    const int m = static_cast<int>(classes_.size());
    for (int i = 0; i < m; ++i) {
        std::int64_t outside = 0;
        for (int j = 0; j < m; ++j) {
            if (j != i && joined(i, j)) outside += classes_[static_cast<std::size_t>(j)].size;
            if (j > i && joined(i, j)) joins.emplace_back(i, j);
        }
        auto& c = classes[static_cast<std::size_t>(i)];
        if (!c.clique) c.size = std::min(c.size, outside + 1);
    }
    return Blueprint(std::move(classes), std::move(joins));
}

namespace {

Blueprint gnka_blueprint(std::int64_t n, std::int64_t k, std::int64_t a) {
    return Blueprint({{"A", a, true}, {"C", k - 2 * a, true}, {"B", n - k + a, false}}, {{0, 1}, {0, 2}});
}

Blueprint srab_blueprint(std::int64_t r, std::int64_t a, std::int64_t b) {
    return Blueprint({{"v", 1, true}, {"R", r - 1, true}, {"A", a, false}, {"B", b, false}}, {{0, 1}, {1, 2}, {0, 3}});
}

}  // namespace

Blueprint blueprint(const ConstructionParams& p) {
    p.validate();
    switch (p.family) {
        case Family::gnka: return gnka_blueprint(p.n, p.k, p.a);
        case Family::srab: return srab_blueprint(p.r, p.a, p.b);
        case Family::hnk: {
            const HnkChoice choice = choose_hnk(p.n, p.k);
            return srab_blueprint(half_clique(p.k) + 1, choice.a, choice.b);
        }
    }
    fail("unknown family");
}

Graph build_gnka(std::int64_t n, std::int64_t k, std::int64_t a) {
    return blueprint(ConstructionParams::gnka(n, k, a)).materialize();
}

Graph build_srab(std::int64_t r, std::int64_t a, std::int64_t b) {
    return blueprint(ConstructionParams::srab(r, a, b)).materialize();
}

HnkChoice choose_hnk(std::int64_t n, std::int64_t k) {
    ConstructionParams::hnk(n, k);
    const std::int64_t r = half_clique(k) + 1;
    const std::int64_t rest = n - r;
    const Pattern target = make_path(static_cast<int>(k - 1));
    HnkChoice best;
    best.paths = -1;
    for (std::int64_t a = 0; a <= rest; ++a) {
        const BigInt paths = count_in_construction(target, ConstructionParams::srab(r, a, rest - a));
        if (paths > best.paths) best = HnkChoice{a, rest - a, paths};
    }
    return best;
}

HnkGraph build_hnk(std::int64_t n, std::int64_t k) {
    const HnkChoice choice = choose_hnk(n, k);
    return HnkGraph{build_srab(half_clique(k) + 1, choice.a, choice.b), choice.a, choice.b, choice.paths};
}

Graph build(const ConstructionParams& p) { return blueprint(p).materialize(); }

BigInt count_in_construction(const Pattern& p, const ConstructionParams& c) {
    c.validate();
    if (c.vertex_count() <= kMaxVertices) return BigInt(count_motif(p, build(c)));
    return blueprint(c).count_copies(p);
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

void require_gnkt(std::int64_t n, std::int64_t k) {
    require(k >= 3, "formula needs k >= 3");
    require(n >= k - half_clique(k), "formula needs n >= k - t");
}

}  // namespace

Rational eg_bound(std::int64_t n, std::int64_t k) {
    require(n >= 0 && k >= 1, "eg_bound needs n >= 0, k >= 1");
    return ratio(BigInt(k - 1) * n, 2);
}

Rational eg_cycle_bound(std::int64_t n, std::int64_t k) {
    require(n >= 1 && k >= 3, "eg_cycle_bound needs n >= 1, k >= 3");
    return ratio(BigInt(k - 1) * (n - 1), 2);
}

Rational edges_gnkt(std::int64_t n, std::int64_t k) {
    require_gnkt(n, k);
    const std::int64_t t = half_clique(k);
    return Rational(BigInt(t) * (n - t) + binom(t, 2) + even_indicator(k));
}

Rational luo_clique_bound(std::int64_t n, std::int64_t k, std::int64_t r) {
    require(n >= 0 && k >= 1 && r >= 1, "luo_clique_bound needs n >= 0, k >= 1, r >= 1");
    return ratio(binom(k, r) * n, k);
}

Rational luo_cycle_clique_bound(std::int64_t n, std::int64_t k, std::int64_t r) {
    require(n >= 1 && k >= 4 && r >= 1, "luo_cycle_clique_bound needs n >= 1, k >= 4, r >= 1");
    return ratio(binom(k - 1, r) * (n - 1), k - 2);
}

Rational c4_exact(std::int64_t n, std::int64_t k) {
    require_gnkt(n, k);
    const std::int64_t t = half_clique(k);
    return Rational(binom(n - t, 2) * binom(t, 2) + 3 * (n - t) * binom(t, 3) + 3 * binom(t, 4) +
                    2 * even_indicator(k) * binom(t, 2));
}

Rational star_exact(std::int64_t n, std::int64_t k, std::int64_t r) {
    require_gnkt(n, k);
    require(r >= 2, "star_exact needs r >= 2");
    const std::int64_t t = half_clique(k);
    return Rational(t * binom(n - 1, r) + (n - t) * binom(t, r) + 2 * even_indicator(k) * binom(t, r - 1));
}

Rational p2_exact(std::int64_t n, std::int64_t k) { return star_exact(n, k, 2); }

Rational diff_c4(std::int64_t n, std::int64_t k) {
    require_gnkt(n, k);
    return Rational(binom(half_clique(k), 2) * (n - 2));
}

Rational diff_star(std::int64_t n, std::int64_t k, std::int64_t r) {
    require_gnkt(n, k);
    require(r >= 2, "diff_star needs r >= 2");
    const std::int64_t t = half_clique(k);
    return Rational(binom(t, r) + t * binom(n - 1, r - 1));
}

Rational diff_p3(std::int64_t n, std::int64_t k) {
    require_gnkt(n, k);
    const std::int64_t t = half_clique(k);
    return Rational(2 * t * (binom(t - 1, 2) + (n - t) * (t - 1) + even_indicator(k)) + BigInt(t) * (t - 1) * (n - 2));
}

DiffP4 diff_p4(std::int64_t n, std::int64_t k) {
    require_gnkt(n, k);
    const std::int64_t t = half_clique(k);
    if (k < 7) {
        // G_{n-2,k-4,t-2} degenerates (t - 2 < 1); count the difference instead
        const Pattern p4 = make_path(4);
        const BigInt upper = count_in_construction(p4, ConstructionParams::gnkt(n + 1, k));
        const BigInt lower = count_in_construction(p4, ConstructionParams::gnkt(n, k));
        return DiffP4{Rational(upper - lower), true};
    }
    const BigInt p2 = count_in_construction(make_path(2), ConstructionParams::gnka(n - 1, k - 2, t - 1));
    const BigInt e = count_in_construction(make_path(1), ConstructionParams::gnka(n - 2, k - 4, t - 2));
    return DiffP4{Rational(2 * t * p2 + 2 * t * (t - 1) * e + binom(t, 2) * (n - 2) * (n - 3)), false};
}

Rational srab_path_count(std::int64_t r, std::int64_t a, std::int64_t b) {
    require(r >= 2 && a >= 0 && b >= 0, "srab_path_count needs r >= 2, a, b >= 0");
    return Rational(factorial(r - 1) * b * falling(a, r - 1));
}

Rational p5p6_leading(std::int64_t n) {
    require(n >= 0, "p5p6_leading needs n >= 0");
    return ratio(8 * power(n, 3), 27);
}

Rational double_star_p3_stated(std::int64_t n) {
    require(n >= 2, "double star needs n >= 2");
    return Rational(BigInt((n - 1) / 2) * (n / 2));
}

Rational double_star_p3_direct(std::int64_t n) {
    require(n >= 2, "double star needs n >= 2");
    return Rational(BigInt((n - 2) / 2) * ((n - 1) / 2));
}

LeadingTerm leading_coeff(GrowthKind kind, std::int64_t k, std::int64_t l) {
    require(k >= 1 && l >= 1, "leading_coeff needs k >= 1, l >= 1");
    switch (kind) {
        case GrowthKind::path_even:
            return {ratio(power(k, l), power(2, l + 1)), static_cast<int>(l + 1)};
        case GrowthKind::path_odd:
            return {ratio((l + 2) * power(k, l + 1), power(2, l + 2)), static_cast<int>(l + 1)};
        case GrowthKind::cycle_even:
            require(l >= 2, "C_even needs l >= 2");
            return {ratio(power(k, l), l * power(2, l + 1)), static_cast<int>(l)};
        case GrowthKind::cycle_odd:
            return {ratio(power(k, l + 1), power(2, l + 2)), static_cast<int>(l)};
    }
    fail("unknown growth kind");
}

GrowthKind parse_growth_kind(const std::string& s) {
    if (s == "P_even") return GrowthKind::path_even;
    if (s == "P_odd") return GrowthKind::path_odd;
    if (s == "C_even") return GrowthKind::cycle_even;
    if (s == "C_odd") return GrowthKind::cycle_odd;
    fail("unknown growth kind '" + s + "' (P_even, P_odd, C_even, C_odd)");
}

std::string to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::path_even: return "P_even";
        case GrowthKind::path_odd: return "P_odd";
        case GrowthKind::cycle_even: return "C_even";
        case GrowthKind::cycle_odd: return "C_odd";
    }
    return {};
}

LeadingTerm construction_leading_term(const Pattern& p, std::int64_t k) {
    require(k >= 3, "construction_leading_term needs k >= 3");
    const int degree_bound = p.graph.vertex_count();
    const std::int64_t n0 = k + degree_bound;
    std::vector<BigInt> diffs;
    for (int i = 0; i <= degree_bound; ++i) {
        const std::int64_t t = half_clique(k);
        diffs.push_back(gnka_blueprint(n0 + i, k, t).count_copies(p));
    }
    // diffs[j] becomes the j-th forward difference at n0
    std::vector<BigInt> head{diffs[0]};
    for (int j = 1; j <= degree_bound; ++j) {
        for (int i = 0; i + j <= degree_bound; ++i) diffs[static_cast<std::size_t>(i)] = diffs[static_cast<std::size_t>(i) + 1] - diffs[static_cast<std::size_t>(i)];
        head.push_back(diffs[0]);
    }
    for (int d = degree_bound; d >= 0; --d) {
        if (head[static_cast<std::size_t>(d)] != 0) return {ratio(head[static_cast<std::size_t>(d)], factorial(d)), d};
    }
    return {Rational(0), 0};
}

// ---------------------------------------------------------------------------
// dispatcher

namespace {

const std::vector<std::pair<FormulaId, std::string>>& formula_names() {
    static const std::vector<std::pair<FormulaId, std::string>> names = {
        {FormulaId::eg_bound, "eg_bound"},
        {FormulaId::eg_cycle_bound, "eg_cycle_bound"},
        {FormulaId::edges_gnkt, "edges_gnkt"},
        {FormulaId::luo_clique_bound, "luo_clique_bound"},
        {FormulaId::luo_cycle_clique_bound, "luo_cycle_clique_bound"},
        {FormulaId::c4_exact, "c4_exact"},
        {FormulaId::star_exact, "star_exact"},
        {FormulaId::p2_exact, "p2_exact"},
        {FormulaId::diff_c4, "diff_c4"},
        {FormulaId::diff_star, "diff_star"},
        {FormulaId::diff_p3, "diff_p3"},
        {FormulaId::diff_p4, "diff_p4"},
        {FormulaId::srab_path_count, "srab_path_count"},
        {FormulaId::leading_coeff, "leading_coeff"},
        {FormulaId::p5p6_leading, "p5p6_leading"},
        {FormulaId::double_star_p3_stated, "double_star_p3_stated"},
        {FormulaId::double_star_p3_direct, "double_star_p3_direct"},
    };
    return names;
}

class ParamReader {
public:
    ParamReader(const FormulaParams& params, std::set<std::string> allowed) : params_(params) {
        for (const auto& [key, value] : params) {
            if (!allowed.contains(key)) fail("unexpected formula parameter '" + key + "'");
        }
    }

    std::int64_t integer(const std::string& key) const { return parse_int(text(key), "parameter " + key); }

    const std::string& text(const std::string& key) const {
        const auto it = params_.find(key);
        if (it == params_.end()) fail("missing formula parameter '" + key + "'");
        return it->second;
    }

private:
    const FormulaParams& params_;
};

}  // namespace

std::optional<FormulaId> parse_formula_id(const std::string& s) {
    for (const auto& [id, name] : formula_names()) {
        if (name == s) return id;
    }
    return std::nullopt;
}

std::string to_string(FormulaId id) {
    for (const auto& [fid, name] : formula_names()) {
        if (fid == id) return name;
    }
    return "unknown";
}

const std::vector<FormulaId>& all_formula_ids() {
    static const std::vector<FormulaId> ids = [] {
        std::vector<FormulaId> out;
        for (const auto& entry : formula_names()) out.push_back(entry.first);
        return out;
    }();
    return ids;
}

bool FormulaResult::is_integer() const { return boost::multiprecision::denominator(value) == 1; }

std::string FormulaResult::value_string() const { return rational_string(value); }

std::string rational_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

FormulaResult evaluate_formula(FormulaId id, const FormulaParams& params) {
    FormulaResult out;
    out.id = id;
    out.params = params;
    switch (id) {
        case FormulaId::eg_bound: {
            ParamReader in(params, {"n", "k"});
            out.value = eg_bound(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::eg_cycle_bound: {
            ParamReader in(params, {"n", "k"});
            out.value = eg_cycle_bound(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::edges_gnkt: {
            ParamReader in(params, {"n", "k"});
            out.value = edges_gnkt(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::luo_clique_bound: {
            ParamReader in(params, {"n", "k", "r"});
            out.value = luo_clique_bound(in.integer("n"), in.integer("k"), in.integer("r"));
            break;
        }
        case FormulaId::luo_cycle_clique_bound: {
            ParamReader in(params, {"n", "k", "r"});
            out.value = luo_cycle_clique_bound(in.integer("n"), in.integer("k"), in.integer("r"));
            break;
        }
        case FormulaId::c4_exact: {
            ParamReader in(params, {"n", "k"});
            out.value = c4_exact(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::star_exact: {
            ParamReader in(params, {"n", "k", "r"});
            out.value = star_exact(in.integer("n"), in.integer("k"), in.integer("r"));
            break;
        }
        case FormulaId::p2_exact: {
            ParamReader in(params, {"n", "k"});
            out.value = p2_exact(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::diff_c4: {
            ParamReader in(params, {"n", "k"});
            out.value = diff_c4(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::diff_star: {
            ParamReader in(params, {"n", "k", "r"});
            out.value = diff_star(in.integer("n"), in.integer("k"), in.integer("r"));
            break;
        }
        case FormulaId::diff_p3: {
            ParamReader in(params, {"n", "k"});
            out.value = diff_p3(in.integer("n"), in.integer("k"));
            break;
        }
        case FormulaId::diff_p4: {
            ParamReader in(params, {"n", "k"});
            const DiffP4 d = diff_p4(in.integer("n"), in.integer("k"));
            out.value = d.value;
            out.direct_count = d.direct_count;
            break;
        }
        case FormulaId::srab_path_count: {
            ParamReader in(params, {"r", "a", "b"});
            out.value = srab_path_count(in.integer("r"), in.integer("a"), in.integer("b"));
            break;
        }
        case FormulaId::leading_coeff: {
            ParamReader in(params, {"kind", "k", "l"});
            const LeadingTerm term = leading_coeff(parse_growth_kind(in.text("kind")), in.integer("k"), in.integer("l"));
            out.value = term.coefficient;
            out.exponent = term.exponent;
            break;
        }
        case FormulaId::p5p6_leading: {
            ParamReader in(params, {"n"});
            out.value = p5p6_leading(in.integer("n"));
            out.exponent = 3;
            break;
        }
        case FormulaId::double_star_p3_stated: {
            ParamReader in(params, {"n"});
            out.value = double_star_p3_stated(in.integer("n"));
            break;
        }
        case FormulaId::double_star_p3_direct: {
            ParamReader in(params, {"n"});
            out.value = double_star_p3_direct(in.integer("n"));
            break;
        }
    }
    return out;
}

}  // namespace turanlab
