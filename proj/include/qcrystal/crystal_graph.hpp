#pragma once

#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "ssdt.hpp"

namespace qcrystal {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("crystal exceeds the vertex budget of " + std::to_string(budget)) {}
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

// target = f_label(source)
struct CrystalEdge {
    std::size_t source;
    std::size_t target;
    OperatorLabel label;

    auto operator<=>(const CrystalEdge&) const = default;
};

// Finite crystal whose vertices are words, sorted lexicographically. When
// `shape` is set, every vertex is the reading word of a tableau of that shape.
class CrystalGraph {
public:
    CrystalGraph(int rank, std::vector<Word> vertices, std::vector<OperatorLabel> labels,
                 std::optional<StrictPartition> shape = std::nullopt)
        : rank_(rank), shape_(std::move(shape)), labels_(std::move(labels)), vertices_(std::move(vertices)) {
        check_rank(rank);
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        index_.reserve(vertices_.size());
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            if (vertices_[v].rank() != rank_) throw std::invalid_argument("vertex rank differs from graph rank");
            index_.emplace(vertices_[v], v);
        }
        out_begin_.assign(vertices_.size() + 1, 0);
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            out_begin_[v] = edges_.size();
            for (OperatorLabel label : labels_) {
                auto image = apply_f(vertices_[v], label);
                if (!image) continue;
                auto target = find(*image);
                if (!target) throw std::invalid_argument("vertex set is not closed under the operators");
                edges_.push_back({v, *target, label});
            }
        }
        out_begin_[vertices_.size()] = edges_.size();
    }

    int rank() const { return rank_; }
    const std::optional<StrictPartition>& shape() const { return shape_; }
    std::span<const OperatorLabel> labels() const { return labels_; }
    std::size_t size() const { return vertices_.size(); }
    std::span<const Word> vertices() const { return vertices_; }
    const Word& vertex(std::size_t v) const { return vertices_.at(v); }
    std::span<const CrystalEdge> edges() const { return edges_; }
    std::span<const CrystalEdge> out_edges(std::size_t v) const {
        return std::span<const CrystalEdge>(edges_).subspan(out_begin_.at(v), out_begin_.at(v + 1) - out_begin_[v]);
    }

    std::optional<std::size_t> find(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    ShiftedTableau tableau(std::size_t v) const {
        if (!shape_) throw std::logic_error("graph vertices are plain words");
        return ShiftedTableau::from_reading_word(*shape_, vertices_.at(v));
    }

private:
    int rank_;
    std::optional<StrictPartition> shape_;
    std::vector<OperatorLabel> labels_;
    std::vector<Word> vertices_;
    std::unordered_map<Word, std::size_t> index_;
    std::vector<CrystalEdge> edges_;
    std::vector<std::size_t> out_begin_;
};

// Closure of `seeds` under e and f for every label, breadth first.
inline std::vector<Word> closure(std::span<const Word> seeds, std::span<const OperatorLabel> labels,
                                 std::size_t max_vertices = unlimited) {
    std::unordered_set<Word> seen;
    std::deque<Word> frontier;
    auto visit = [&](const Word& w) {
        if (!seen.insert(w).second) return;
        if (seen.size() > max_vertices) throw BudgetExceeded(max_vertices);
        frontier.push_back(w);
    };
    for (const Word& s : seeds) visit(s);
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        for (OperatorLabel label : labels) {
            if (auto next = apply_f(w, label)) visit(*next);
            if (auto next = apply_e(w, label)) visit(*next);
        }
    }
    return {seen.begin(), seen.end()};
}

// B(lambda): closure of T^lambda, every vertex checked to be a decomposition
// tableau of shape lambda.
inline CrystalGraph build_crystal(const StrictPartition& shape, int rank,
                                  std::vector<OperatorLabel> labels = {},
                                  std::size_t max_vertices = unlimited) {
    if (labels.empty()) labels = all_labels(rank);
    Word top = highest_tableau(shape, rank).reading_word();
    auto gens = structure_labels(rank);
    auto words = closure(std::span<const Word>(&top, 1), gens, max_vertices);
    for (const Word& w : words) {
        auto t = ShiftedTableau::from_reading_word(shape, w);
        if (auto bad = check_ssdt(t)) {
            throw std::logic_error("closure of T^lambda produced an invalid tableau: " + describe(*bad));
        }
    }
    return CrystalGraph(rank, std::move(words), std::move(labels), shape);
}

// The crystal of all words of a given length.
inline CrystalGraph tensor_power(std::size_t length, int rank, std::vector<OperatorLabel> labels = {}) {
    if (labels.empty()) labels = all_labels(rank);
    return CrystalGraph(rank, all_words(length, rank), std::move(labels));
}

}  // namespace qcrystal
