#pragma once

// Tensor products B(lambda) (x) B(mu), their connected components, and three
// independent ways of computing the shifted Littlewood-Richardson
// coefficients f^nu_{lambda,mu}.

#include <map>

#include "insertion.hpp"

namespace qcrystal {

// B(lambda) (x) B(mu) realized on concatenated reading words.
inline CrystalGraph tensor_words(const StrictPartition& lambda, const StrictPartition& mu, int rank,
                                 std::vector<OperatorLabel> labels = {}, std::size_t max_vertices = unlimited) {
    auto gens = structure_labels(rank);
    auto left = build_crystal(lambda, rank, gens, max_vertices);
    auto right = build_crystal(mu, rank, gens, max_vertices);
    if (max_vertices != unlimited && left.size() > max_vertices / std::max<std::size_t>(1, right.size())) {
        throw BudgetExceeded(max_vertices);
    }
    std::vector<Word> words;
    words.reserve(left.size() * right.size());
    for (const Word& a : left.vertices())
        for (const Word& b : right.vertices()) words.push_back(a + b);
    if (labels.empty()) labels = all_labels(rank);
    return CrystalGraph(rank, std::move(words), std::move(labels));
}

struct Component {
    std::size_t highest;  // vertex index
    std::size_t lowest;
    WeightVec top_weight;
    std::vector<std::size_t> vertices;  // ascending
};

// Weakly connected components. Each must contain exactly one highest and one
// lowest weight vertex; anything else is a bug and throws.
inline std::vector<Component> components(const CrystalGraph& g, unsigned threads = 1) {
    const std::size_t count = g.size();
    std::vector<std::vector<std::size_t>> adjacent(count);
    for (const CrystalEdge& e : g.edges()) {
        adjacent[e.source].push_back(e.target);
        adjacent[e.target].push_back(e.source);
    }
    std::vector<char> highest(count), lowest(count);
    parallel_for(count, threads, [&](std::size_t v) {
        highest[v] = is_highest(g.vertex(v));
        lowest[v] = is_lowest(g.vertex(v));
    });

    std::vector<Component> out;
    std::vector<bool> seen(count, false);
    for (std::size_t start = 0; start < count; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> members{start}, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : adjacent[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    members.push_back(u);
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<std::size_t> tops, bottoms;
        for (std::size_t v : members) {
            if (highest[v]) tops.push_back(v);
            if (lowest[v]) bottoms.push_back(v);
        }
        if (tops.size() != 1 || bottoms.size() != 1) {
            throw std::logic_error("component of " + std::to_string(members.size()) + " vertices has " +
                                   std::to_string(tops.size()) + " highest and " + std::to_string(bottoms.size()) +
                                   " lowest weight vertices");
        }
        out.push_back({tops[0], bottoms[0], weight(g.vertex(tops[0])), std::move(members)});
    }
    return out;
}

struct LRWitness {
    StrictPartition shape;                 // nu
    Word word;                             // u in B(lambda), or the top of a component
    std::optional<ShiftedTableau> tableau; // T in B(lambda), when the method has one
};

struct LRResult {
    std::map<StrictPartition, std::size_t> coefficients;
    std::vector<LRWitness> witnesses;

    std::size_t total() const {
        std::size_t s = 0;
        for (const auto& [nu, c] : coefficients) s += c;
        return s;
    }

    void add(LRWitness w) {
        ++coefficients[w.shape];
        witnesses.push_back(std::move(w));
    }
};

// For each u = u_1 ... u_N in B(lambda), add boxes to mu in rows
// n-u_N+1, ..., n-u_1+1 (last letter first), keeping u only if every
// intermediate array is a shifted shape.
inline LRResult lr_words(const StrictPartition& lambda, const StrictPartition& mu, int rank, unsigned threads = 1) {
    if (mu.length() > rank) throw std::invalid_argument("mu has more parts than the rank");
    auto crystal = build_crystal(lambda, rank, structure_labels(rank));
    std::vector<std::optional<StrictPartition>> shapes(crystal.size());
    parallel_for(crystal.size(), threads, [&](std::size_t v) {
        const Word& u = crystal.vertex(v);
        std::optional<StrictPartition> nu = mu;
        for (std::size_t p = u.size(); p-- > 0 && nu;) nu = nu->with_box(rank - u[p] + 1);
        if (!nu) return;
        // wt(u) = w_0(nu - mu)
        WeightVec diff = nu->to_weight(rank);
        WeightVec base = mu.to_weight(rank);
        for (int j = 1; j <= rank; ++j) diff[j] -= base[j];
        if (weight(u) != Permutation::longest(rank).act(diff)) {
            throw std::logic_error("box-addition chain disagrees with the weight of u");
        }
        shapes[v] = std::move(nu);
    });
    LRResult out;
    for (std::size_t v = 0; v < crystal.size(); ++v) {
        if (shapes[v]) out.add({*shapes[v], crystal.vertex(v), crystal.tableau(v)});
    }
    return out;
}

// T in B(lambda) contributes sh(T <- L^mu) when T <- L^mu is itself a lowest
// tableau L^nu.
inline LRResult lr_insertion(const StrictPartition& lambda, const StrictPartition& mu, int rank,
                             unsigned threads = 1) {
    auto crystal = build_crystal(lambda, rank, structure_labels(rank));
    Word lowest_mu = lowest_tableau(mu, rank).reading_word();
    std::vector<std::optional<StrictPartition>> shapes(crystal.size());
    parallel_for(crystal.size(), threads, [&](std::size_t v) {
        ShiftedTableau product = insert_word(crystal.tableau(v), lowest_mu);
        const StrictPartition& nu = product.shape();
        if (nu.length() <= rank && product == lowest_tableau(nu, rank)) shapes[v] = nu;
    });
    LRResult out;
    for (std::size_t v = 0; v < crystal.size(); ++v) {
        if (shapes[v]) out.add({*shapes[v], crystal.vertex(v), crystal.tableau(v)});
    }
    return out;
}

// Brute force: decompose the tensor product graph and read off top weights.
inline LRResult lr_graph(const StrictPartition& lambda, const StrictPartition& mu, int rank, unsigned threads = 1,
                         std::size_t max_vertices = unlimited) {
    auto graph = tensor_words(lambda, mu, rank, structure_labels(rank), max_vertices);
    LRResult out;
    for (const Component& c : components(graph, threads)) {
        auto nu = StrictPartition::from_weight(c.top_weight);
        if (!nu) throw std::logic_error("component top weight is not a strict partition");
        out.add({*nu, graph.vertex(c.highest), std::nullopt});
    }
    return out;
}

inline std::map<WeightVec, std::size_t> weight_multiplicities(const CrystalGraph& g) {
    std::map<WeightVec, std::size_t> out;
    for (const Word& w : g.vertices()) ++out[weight(w)];
    return out;
}

}  // namespace qcrystal
