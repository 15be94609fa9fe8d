// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "turanlab/constructions.hpp"
#include "turanlab/search.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/verify.hpp"

using namespace turanlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string param(const SuiteCell& c, const std::string& key) {
    for (const auto& [k, v] : c.params)
        if (k == key) return v;
    return {};
}

std::string tally(const SuiteReport& r) {
    std::ostringstream s;
    s << r.suite << ": " << r.count(CellStatus::pass) << " pass, " << r.count(CellStatus::fail) << " fail, "
      << r.count(CellStatus::diagnostic) << " diagnostic";
    return s.str();
}

std::string first_failure(const SuiteReport& r) {
    for (const auto& c : r.cells) {
        if (c.status != CellStatus::fail) continue;
        std::string p;
        for (const auto& [k, v] : c.params) p += (p.empty() ? "" : ",") + k + "=" + v;
        return "; first fail " + p + " expected " + c.expected + " actual " + c.actual +
               (c.note.empty() ? "" : " (" + c.note + ")");
    }
    return {};
}

Outcome suites(const std::vector<std::string>& ids) {
    Outcome o{true, ""};
    for (const auto& id : ids) {
        const SuiteReport r = verify_suite(id);
        o.pass = o.pass && r.passed() && r.count(CellStatus::pass) > 0;
        o.detail += (o.detail.empty() ? "" : "; ") + tally(r) + first_failure(r);
    }
    return o;
}

Outcome srab_remark() {
    const SuiteReport r = verify_suite("thm_5_3");
    std::size_t checked = 0;
    std::size_t table = 0;
    bool ok = true;
    for (const auto& c : r.cells) {
        if (param(c, "check") != "srab_paths") continue;
        const int rr = std::stoi(param(c, "r"));
        if (rr <= 3) {
            ++checked;
            ok = ok && c.status == CellStatus::pass;
        } else {
            ++table;
            ok = ok && c.status == CellStatus::diagnostic;
        }
    }
    ok = ok && checked == 2 * 9 * 5 && table > 0;
    return {ok, std::to_string(checked) + " exact cells for r in {2,3}, " + std::to_string(table) +
                    " diagnostic cells for r = 4"};
}

Outcome spectral_chain() {
    std::size_t graphs = 0;
    std::size_t failures = 0;
    std::mt19937_64 rng(20240611);
    for (int rep = 0; rep < 200; ++rep) {
        std::uniform_int_distribution<int> size(1, 12);
        std::uniform_real_distribution<double> density(0.05, 0.95);
        const int n = size(rng);
        std::bernoulli_distribution coin(density(rng));
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng)) g.add_edge(i, j);
        ++graphs;
        for (int l = 1; l <= 3; ++l) failures += check_spectral_path_chain(g, l).pass() ? 0 : 1;
    }
    std::vector<ConstructionParams> cons;
    // construction parameters used by the suites: k <= 9, r <= 4
    for (int k = 3; k <= 9; ++k)
        for (int n = 1; n <= 20; ++n)
            for (int a = 1; 2 * a <= k && n - k + a >= 0; ++a) cons.push_back(ConstructionParams::gnka(n, k, a));
    for (int r = 2; r <= 4; ++r)
        for (int a = 0; r + a <= 20; ++a)
            for (int b = 0; r + a + b <= 20; ++b) cons.push_back(ConstructionParams::srab(r, a, b));
    for (int k = 4; k <= 8; k += 2)
        for (int n = k; n <= 20; ++n) cons.push_back(ConstructionParams::hnk(n, k));
    for (const auto& c : cons) {
        const Graph g = build(c);
        ++graphs;
        for (int l = 1; l <= 3; ++l) failures += check_spectral_path_chain(g, l).pass() ? 0 : 1;
    }
    std::size_t closed = 0;
    double worst = 0.0;
    const auto close = [&](const Graph& g, double want) {
        ++closed;
        worst = std::max(worst, std::abs(spectral_radius(g) - want));
    };
    for (int n = 1; n <= 30; ++n) close(complete_graph(n), n - 1.0);
    for (int m = 1; m <= 30; ++m) close(star_graph(m), std::sqrt(m));
    for (int n = 3; n <= 30; ++n) close(cycle_graph(n), 2.0);
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= 10; ++b) close(complete_bipartite_graph(a, b), std::sqrt(a * b));
    std::ostringstream s;
    s << graphs << " graphs (200 random, " << cons.size() << " constructions), " << failures
      << " chain failures; " << closed << " closed forms, max error " << worst;
    return {failures == 0 && worst <= 1e-6, s.str()};
}

Outcome section_five() {
    const HnkGraph h = build_hnk(7, 6);
    const BigInt hpaths = BigInt(count_paths(5, h.graph));
    const ExtremalRecord rec = brute_force_ex(7, make_path(5), Forbidden::single(make_path(6)));
    bool ok = hpaths == 12 && rec.max_count && BigInt(*rec.max_count) >= hpaths;
    std::string detail = "N(P_5, H_{7,6}) = " + hpaths.str() + ", brute force = " +
                         (rec.max_count ? std::to_string(*rec.max_count) : "none");
    if (rec.max_count) detail += std::string(BigInt(*rec.max_count) == hpaths ? " (equality" : " (excess") + ", witnesses";
    for (const auto& w : rec.witnesses) detail += " " + w;
    if (rec.max_count) detail += ")";

    const SuiteReport conj = verify_suite("conjecture_5_1");
    std::size_t verdicts = 0;
    for (const auto& c : conj.cells) {
        const std::string n = param(c, "n");
        if (param(c, "k") == "4" && (n == "6" || n == "7")) ++verdicts;
        if (param(c, "check") == "double_star_direct") ok = ok && c.status == CellStatus::pass;
        if (param(c, "check") == "exhaustive") detail += "; n=" + n + ",k=" + param(c, "k") + " exhaustive " + c.actual + " vs " + c.expected;
    }
    const SuiteReport thm = verify_suite("thm_5_3");
    ok = ok && verdicts >= 6 && conj.passed() && thm.passed();
    detail += "; " + tally(conj) + "; " + tally(thm);
    return {ok, detail};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        double budget_seconds;  // 0: none
    };
    const std::vector<Criterion> criteria{
        {1, "path-free edge bound, exhaustive n <= 7", [] { return suites({"eg_edges"}); }, 30},
        {2, "long-cycle-free edge bound, exhaustive n <= 7", [] { return suites({"eg_cycles"}); }, 0},
        {3, "clique bounds for path-free and long-cycle-free graphs",
         [] { return suites({"luo_cliques", "cycle_cliques"}); }, 0},
        {4, "connected triangle maximum", [] { return suites({"connected_cliques"}); }, 0},
        {5, "closed forms and difference identities on G_{n,k,t}",
         [] { return suites({"c4_exact", "star_exact", "p3_exact", "p4_exact"}); }, 60},
        {6, "path counts in S^{(r)}_{a,b}", srab_remark, 0},
        {7, "asymptotic ratios at n = 400", [] { return suites({"asymptotics"}); }, 0},
        {8, "spectral walk chain and closed-form radii", spectral_chain, 0},
        {9, "even-k probes and the k = 4 double star", section_five, 0},
        {10, "matching structures stay O(n^l)", [] { return suites({"matching_structures"}); }, 0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over the time budget";
        }
        all = all && o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << timing
                  << "]  " << o.detail << std::endl;
    }
    std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
    return all ? 0 : 1;
}
