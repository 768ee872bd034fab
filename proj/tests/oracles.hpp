#pragma once

// Test-only reference implementations. None of these call into the library's
// operator code; they work on plain std::vector<int> words.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "golden_graphs.hpp"
#include "qcrystal/qcrystal.hpp"

namespace oracle {

using Letters = std::vector<int>;

inline Letters letters(const qcrystal::Word& w) { return Letters(w.begin(), w.end()); }

// Even operators through the literal two-factor tensor rule, splitting a word
// as (first letter) (x) (rest):
//   f(b1 (x) b2) = f b1 (x) b2  if phi(b1) > eps(b2), else b1 (x) f b2
//   e(b1 (x) b2) = e b1 (x) b2  if phi(b1) >= eps(b2), else b1 (x) e b2
// with eps/phi of the rest computed as string lengths.
class EvenTensorRule {
public:
    explicit EvenTensorRule(int i) : i_(i) {}

    std::optional<Letters> f(const Letters& w) { return act(w, true); }
    std::optional<Letters> e(const Letters& w) { return act(w, false); }

    int eps(const Letters& w) { return string_length(w, false, eps_memo_); }
    int phi(const Letters& w) { return string_length(w, true, phi_memo_); }

private:
    std::optional<Letters> act(const Letters& w, bool lowering) {
        if (w.empty()) return std::nullopt;
        if (w.size() == 1) {
            if (lowering && w[0] == i_) return Letters{i_ + 1};
            if (!lowering && w[0] == i_ + 1) return Letters{i_};
            return std::nullopt;
        }
        int phi1 = w[0] == i_ ? 1 : 0;
        Letters rest(w.begin() + 1, w.end());
        int eps2 = eps(rest);
        bool on_first = lowering ? phi1 > eps2 : phi1 >= eps2;
        if (on_first) {
            auto head = act(Letters{w[0]}, lowering);
            if (!head) return std::nullopt;
            Letters out = *head;
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
        auto tail = act(rest, lowering);
        if (!tail) return std::nullopt;
        Letters out{w[0]};
        out.insert(out.end(), tail->begin(), tail->end());
        return out;
    }

    int string_length(const Letters& w, bool lowering, std::map<Letters, int>& memo) {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        int count = 0;
        std::optional<Letters> cur = w;
        while ((cur = act(*cur, lowering))) ++count;
        memo.emplace(w, count);
        return count;
    }

    int i_;
    std::map<Letters, int> eps_memo_, phi_memo_;
};

// Odd operators through the literal tensor rule: act on b1 iff b2 has no
// letters 1 or 2. `split_first` chooses (first)(x)(rest) versus
// (prefix)(x)(last).
inline std::optional<Letters> odd_tensor_rule(const Letters& w, bool lowering, bool split_first) {
    if (w.empty()) return std::nullopt;
    if (w.size() == 1) {
        if (lowering && w[0] == 1) return Letters{2};
        if (!lowering && w[0] == 2) return Letters{1};
        return std::nullopt;
    }
    std::size_t cut = split_first ? 1 : w.size() - 1;
    Letters b1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
    Letters b2(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    bool b2_blind = true;
    for (int x : b2) b2_blind = b2_blind && x != 1 && x != 2;
    if (b2_blind) {
        auto left = odd_tensor_rule(b1, lowering, split_first);
        if (!left) return std::nullopt;
        left->insert(left->end(), b2.begin(), b2.end());
        return left;
    }
    auto right = odd_tensor_rule(b2, lowering, split_first);
    if (!right) return std::nullopt;
    b1.insert(b1.end(), right->begin(), right->end());
    return b1;
}

// Hook-word test straight from the definition: try every split point.
inline bool is_hook_by_definition(const Letters& u) {
    if (u.empty()) return false;
    for (std::size_t k = 1; k <= u.size(); ++k) {
        bool ok = true;
        for (std::size_t p = 0; p + 1 < k; ++p) ok = ok && u[p] >= u[p + 1];
        if (k < u.size()) ok = ok && u[k - 1] < u[k];
        for (std::size_t p = k; p + 1 < u.size(); ++p) ok = ok && u[p] < u[p + 1];
        if (ok) return true;
    }
    return false;
}

// Longest hook subword over all 2^N subsets.
inline std::size_t max_hook_subword_brute(const Letters& w) {
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << w.size()); ++mask) {
        Letters sub;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (mask & (1u << p)) sub.push_back(w[p]);
        if (sub.size() > best && is_hook_by_definition(sub)) best = sub.size();
    }
    return best;
}

// Every filling of the shape with letters 1..n that passes validation.
inline std::set<qcrystal::Word> all_valid_fillings(const qcrystal::StrictPartition& shape, int rank) {
    std::set<qcrystal::Word> out;
    for (const auto& w : qcrystal::all_words(static_cast<std::size_t>(shape.size()), rank)) {
        if (qcrystal::validate(qcrystal::ShiftedTableau::from_reading_word(shape, w))) out.insert(w);
    }
    return out;
}

using EdgeSet = std::set<std::tuple<std::string, std::string, std::string>>;

inline EdgeSet golden_edge_set(const std::vector<GoldenEdge>& edges) {
    EdgeSet out;
    for (const auto& e : edges) out.emplace(e.source, e.label, e.target);
    return out;
}

// Edges of a graph restricted to the labels in the golden lists
// (even labels and the primitive odd label).
inline EdgeSet graph_edge_set(const qcrystal::CrystalGraph& g) {
    EdgeSet out;
    for (const auto& e : g.edges()) {
        if (e.label.is_odd() && e.label.index != 1) continue;
        out.emplace(qcrystal::vertex_literal(g, e.source), qcrystal::format_label(e.label, true),
                    qcrystal::vertex_literal(g, e.target));
    }
    return out;
}

// f-edges of B1 (x) B2 from the pairwise tensor rule, using only the edge
// data of the factor graphs: eps/phi are string lengths read off the graphs.
inline std::set<std::tuple<qcrystal::Word, qcrystal::OperatorLabel, qcrystal::Word>> pairwise_tensor_edges(
    const qcrystal::CrystalGraph& left, const qcrystal::CrystalGraph& right) {
    using qcrystal::OperatorLabel;
    auto successor = [](const qcrystal::CrystalGraph& g, std::size_t v, OperatorLabel label) -> std::optional<std::size_t> {
        for (const auto& e : g.out_edges(v))
            if (e.label == label) return e.target;
        return std::nullopt;
    };
    auto predecessor_map = [](const qcrystal::CrystalGraph& g) {
        std::map<std::pair<std::size_t, OperatorLabel>, std::size_t> pred;
        for (const auto& e : g.edges()) pred[{e.target, e.label}] = e.source;
        return pred;
    };
    auto left_pred = predecessor_map(left);
    auto right_pred = predecessor_map(right);
    auto phi = [&](const qcrystal::CrystalGraph& g, std::size_t v, OperatorLabel label) {
        int n = 0;
        for (auto cur = successor(g, v, label); cur; cur = successor(g, *cur, label)) ++n;
        return n;
    };
    auto eps = [&](const std::map<std::pair<std::size_t, OperatorLabel>, std::size_t>& pred, std::size_t v,
                   OperatorLabel label) {
        int n = 0;
        for (auto it = pred.find({v, label}); it != pred.end(); it = pred.find({it->second, label})) ++n;
        return n;
    };

    std::set<std::tuple<qcrystal::Word, OperatorLabel, qcrystal::Word>> out;
    for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = 0; b < right.size(); ++b) {
            for (OperatorLabel label : left.labels()) {
                bool on_left;
                if (!label.is_odd()) {
                    on_left = phi(left, a, label) > eps(right_pred, b, label);
                } else {
                    auto wt = qcrystal::weight(right.vertex(b));
                    on_left = wt[1] == 0 && wt[2] == 0;
                }
                std::optional<qcrystal::Word> image;
                if (on_left) {
                    if (auto t = successor(left, a, label)) image = left.vertex(*t) + right.vertex(b);
                } else {
                    if (auto t = successor(right, b, label)) image = left.vertex(a) + right.vertex(*t);
                }
                if (image) out.emplace(left.vertex(a) + right.vertex(b), label, *image);
            }
        }
    }
    return out;
}

inline std::set<std::tuple<qcrystal::Word, qcrystal::OperatorLabel, qcrystal::Word>> edge_triples(
    const qcrystal::CrystalGraph& g) {
    std::set<std::tuple<qcrystal::Word, qcrystal::OperatorLabel, qcrystal::Word>> out;
    for (const auto& e : g.edges()) out.emplace(g.vertex(e.source), e.label, g.vertex(e.target));
    return out;
}

}  // namespace oracle
