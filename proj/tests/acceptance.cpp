// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or overruns its time limit.

#include <chrono>
#include <functional>
#include <iostream>

#include "oracles.hpp"

using namespace qcrystal;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Verdict golden_bb() {
    Verdict v;
    auto g = tensor_words({1}, {1}, 3);
    v.require(g.size() == 9, "vertex count " + std::to_string(g.size()));
    v.require(oracle::graph_edge_set(g) == oracle::golden_edge_set(bb_golden), "edge set differs from golden list");
    auto dashed = [&](const char* a, const char* b) {
        return oracle::graph_edge_set(g).count({a, "1~", b}) == 1;
    };
    v.require(dashed("11", "12") && dashed("21", "22") && dashed("31", "32"), "dashed odd edges missing");
    return v;
}

Verdict goldens_3_and_21() {
    Verdict v;
    auto b3 = build_crystal({3}, 3);
    auto b21 = build_crystal({2, 1}, 3);
    v.require(b3.size() == 19, "|B(3)| = " + std::to_string(b3.size()));
    v.require(b21.size() == 8, "|B(2,1)| = " + std::to_string(b21.size()));
    v.require(oracle::graph_edge_set(b3) == oracle::golden_edge_set(b3_golden), "B(3) edges differ");
    v.require(oracle::graph_edge_set(b21) == oracle::golden_edge_set(b21_golden), "B(2,1) edges differ");
    auto g = tensor_power(3, 3);
    auto comps = components(g);
    std::map<std::string, std::size_t> sizes;
    for (const auto& c : comps) sizes[format_word(g.vertex(c.highest))] = c.vertices.size();
    v.require(sizes == std::map<std::string, std::size_t>{{"111", 19}, {"121", 8}}, "B^3 components differ");
    return v;
}

Verdict golden_31() {
    Verdict v;
    auto g = build_crystal({3, 1}, 3);
    v.require(g.size() == 24, "|B(3,1)| = " + std::to_string(g.size()));
    auto comps = components(g);
    v.require(comps.size() == 1, "not connected");
    if (comps.size() == 1) {
        v.require(vertex_literal(g, comps[0].highest) == "211/1", "top " + vertex_literal(g, comps[0].highest));
        v.require(vertex_literal(g, comps[0].lowest) == "333/2", "bottom " + vertex_literal(g, comps[0].lowest));
    }
    v.require(oracle::graph_edge_set(g) == oracle::golden_edge_set(b31_golden), "edges differ");
    return v;
}

Verdict insertion_golden() {
    Verdict v;
    auto run = [](int n, const char* t, const char* w) {
        std::vector<std::string> out;
        for (const auto& s : insertion_trace(parse_tableau(n, t), parse_word(n, w))) out.push_back(format_tableau(s));
        return out;
    };
    v.require(run(6, "66135,324", "2") == std::vector<std::string>{"66325/421/3"}, "66135/324 <- 2");
    v.require(format_tableau(insert_letter(parse_tableau(6, "66135"), 2)) == "66325/1", "66135 <- 2");
    v.require(format_tableau(insert_letter(parse_tableau(6, "324"), 1)) == "421/3", "324 <- 1");
    v.require(run(3, "22/1", "333") == std::vector<std::string>{"223/1", "323/12", "333/22/1"}, "22/1 <- 333");
    return v;
}

Verdict lr_golden() {
    Verdict v;
    std::map<StrictPartition, std::size_t> expected{{{3, 2, 1}, 1}, {{4, 2}, 1}, {{5, 1}, 1}};
    auto words = lr_words({2, 1}, {3}, 3);
    auto ins = lr_insertion({2, 1}, {3}, 3);
    auto graph = lr_graph({2, 1}, {3}, 3);
    v.require(words.coefficients == expected, "words table");
    v.require(ins.coefficients == expected, "insertion table");
    v.require(graph.coefficients == expected, "graph table");
    std::set<std::string> u, t;
    for (const auto& w : words.witnesses) u.insert(format_word(w.word));
    for (const auto& w : ins.witnesses) t.insert(format_tableau(*w.tableau));
    v.require(u == std::set<std::string>{"122", "232", "233"}, "word witnesses");
    v.require(t == std::set<std::string>{"22/1", "32/2", "33/2"}, "tableau witnesses");
    return v;
}

Verdict extremal_tableaux() {
    Verdict v;
    v.require(format_tableau(highest_tableau({7, 4, 2}, 4)) == "3322111/2211/11", "T^(7,4,2)");
    v.require(format_tableau(lowest_tableau({7, 4, 2}, 4)) == "4444444/3333/22", "L^(7,4,2)");
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : strict_partitions(8, n)) {
            auto top = highest_tableau(lambda, n), bottom = lowest_tableau(lambda, n);
            v.require(validate(top) && validate(bottom), "invalid extremal tableau " + format_partition(lambda));
            v.require(w_action(top.reading_word(), Permutation::longest(n)) == bottom.reading_word(),
                      "S_w0 T != L for " + format_partition(lambda) + " n=" + std::to_string(n));
            ++checked;
        }
    }
    v.detail = v.ok ? std::to_string(checked) + " (lambda, n) pairs" : v.detail;
    return v;
}

Verdict highest_characterization() {
    Verdict v;
    for (int n = 1; n <= 4; ++n) {
        for (std::size_t len = 0; len <= 6; ++len) {
            auto built = enumerate_highest(len, n);
            auto scanned = scan_highest(len, n, default_threads());
            v.require(built == scanned, "N=" + std::to_string(len) + " n=" + std::to_string(n));
        }
    }
    v.detail = v.ok ? "N <= 6, n <= 4" : v.detail;
    return v;
}

Verdict operator_axioms() {
    Verdict v;
    std::size_t words = 0;
    for (int n = 1; n <= 4; ++n) {
        auto labels = all_labels(n);
        auto perms = all_permutations(n);
        std::vector<std::vector<std::vector<int>>> reduced;
        for (const auto& p : perms) reduced.push_back(p.all_reduced_words());
        for (std::size_t len = 0; len <= 5; ++len) {
            for (const Word& w : all_words(len, n)) {
                ++words;
                const WeightVec wt = weight(w);
                for (OperatorLabel g : labels) {
                    if (auto f = apply_f(w, g)) {
                        v.require(apply_e(*f, g) == w, "e(f(w)) != w");
                        v.require(weight(*f) == wt.minus_alpha(g.index), "weight law");
                    }
                    if (auto e = apply_e(w, g)) {
                        v.require(apply_f(*e, g) == w, "f(e(w)) != w");
                        v.require(weight(*e) == wt.plus_alpha(g.index), "weight law");
                    }
                }
                for (int i = 1; i < n; ++i) v.require(phi(w, i) - eps(w, i) == wt.pair_h(i), "phi - eps");
                if (n >= 2) {
                    auto f = f_odd1(w), e = e_odd1(w);
                    v.require(!f || !f_odd1(*f), "f_1bar^2 != 0 on " + format_word(w));
                    v.require(!e || !e_odd1(*e), "e_1bar^2 != 0 on " + format_word(w));
                }
                for (int i = 3; i < n; ++i) {
                    for (auto odd : {f_odd1, e_odd1}) {
                        for (auto even : {f_even, e_even}) {
                            auto a = even(w, i);
                            auto b = odd(w);
                            v.require((a ? odd(*a) : std::nullopt) == (b ? even(*b, i) : std::nullopt),
                                      "odd and far even operators do not commute on " + format_word(w));
                        }
                        if (auto b = odd(w)) {
                            v.require(eps(*b, i) == eps(w, i) && phi(*b, i) == phi(w, i),
                                      "odd operator changes a far string length on " + format_word(w));
                        }
                    }
                }
                for (std::size_t k = 0; k < perms.size(); ++k) {
                    Word image = w_action(w, perms[k]);
                    v.require(weight(image) == perms[k].act(wt), "wt(S_w b) != w(wt b)");
                    for (const auto& r : reduced[k])
                        v.require(apply_reduced_word(w, r) == image, "S_w depends on the reduced word");
                }
            }
        }
    }
    v.detail = v.ok ? std::to_string(words) + " words" : v.detail;
    return v;
}

Verdict lr_sweep() {
    Verdict v;
    std::size_t pairs = 0;
    unsigned threads = default_threads();
    for (int n = 2; n <= 4; ++n) {
        auto shapes = strict_partitions(8, n);
        std::map<StrictPartition, std::size_t> dim;
        for (const auto& s : shapes) dim[s] = build_crystal(s, n, structure_labels(n)).size();
        for (const auto& lambda : shapes) {
            for (const auto& mu : shapes) {
                if (lambda.size() + mu.size() > 8) continue;
                ++pairs;
                std::string tag = format_partition(lambda) + " x " + format_partition(mu) + " n=" + std::to_string(n);
                auto graph = lr_graph(lambda, mu, n, threads);
                v.require(lr_words(lambda, mu, n, threads).coefficients == graph.coefficients, "words vs graph " + tag);
                v.require(lr_insertion(lambda, mu, n, threads).coefficients == graph.coefficients,
                          "insertion vs graph " + tag);
                std::size_t total = 0;
                for (const auto& [nu, c] : graph.coefficients) {
                    if (!dim.count(nu)) dim[nu] = build_crystal(nu, n, structure_labels(n)).size();
                    total += c * dim[nu];
                }
                v.require(total == dim[lambda] * dim[mu], "conservation " + tag);
            }
        }
    }
    v.detail = v.ok ? std::to_string(pairs) + " (lambda, mu, n) triples" : v.detail;
    return v;
}

Verdict insertion_equivalence() {
    Verdict v;
    std::size_t cases = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : strict_partitions(4, n)) {
            auto g = build_crystal(lambda, n, structure_labels(n));
            for (std::size_t k = 0; k < g.size(); ++k) {
                auto t = g.tableau(k);
                for (int x = 1; x <= n; ++x) {
                    ++cases;
                    auto inserted = insert_letter(t, static_cast<Letter>(x));
                    v.require(validate(inserted), "invalid result " + format_tableau(t));
                    v.require(crystal_equivalent(t.reading_word() + Word(n, {x}), inserted.reading_word()),
                              format_tableau(t) + " <- " + std::to_string(x));
                }
            }
        }
    }
    v.detail = v.ok ? std::to_string(cases) + " (T, x) pairs" : v.detail;
    return v;
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "B (x) B, n=3: 9 vertices, edge-exact", 1, golden_bb},
        {2, "B(3), B(2,1), n=3 and B^3 = B(3) + B(2,1)", 1, goldens_3_and_21},
        {3, "B(3,1), n=3: 24 vertices, top 211/1, bottom 333/2", 1, golden_31},
        {4, "insertion golden traces", 1, insertion_golden},
        {5, "LR golden table (2,1) x (3), n=3, three methods", 1, lr_golden},
        {6, "extremal tableaux and S_w0 T = L", 30, extremal_tableaux},
        {7, "enumerate_highest equals brute-force scan", 300, highest_characterization},
        {8, "operator axiom suite", 300, operator_axioms},
        {9, "three-way LR agreement and conservation", 600, lr_sweep},
        {10, "insertion is crystal equivalent", 600, insertion_equivalence},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && seconds > c.limit_seconds) {
            v.ok = false;
            v.detail = "over time limit of " + std::to_string(c.limit_seconds) + " s";
        }
        failures += !v.ok;
        std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << "  ["
                  << std::fixed << std::setprecision(3) << seconds << " s]";
        if (!v.detail.empty()) std::cout << "  " << v.detail;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
