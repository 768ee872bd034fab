#pragma once

// Insertion T <- x for decomposition tableaux, the queer Knuth map, and
// crystal equivalence of words.

#include "crystal_graph.hpp"

namespace qcrystal {

inline void require_ssdt(const ShiftedTableau& t) {
    if (auto bad = check_ssdt(t)) throw std::invalid_argument("input tableau is invalid: " + describe(*bad));
}

// Bumps x through the rows of T, top to bottom. In each row v:
//   (1) if v x is a hook word, append x and stop;
//   (2) otherwise the leftmost u_j >= x of the increasing part becomes x, the
//       leftmost u_i < u_j of the decreasing part becomes u_j, and the old u_i
//       moves on to the next row.
inline ShiftedTableau insert_letter(const ShiftedTableau& t, Letter x) {
    require_ssdt(t);
    if (x < 1 || x > t.rank()) throw std::out_of_range("inserted letter out of range");
    std::vector<std::vector<Letter>> rows;
    for (const Word& row : t.rows()) rows.emplace_back(row.begin(), row.end());

    Letter carry = x;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({carry});
            break;
        }
        auto& v = rows[r];
        v.push_back(carry);
        if (hook_split(v)) break;
        v.pop_back();

        std::size_t k = *hook_split(v);
        auto j = static_cast<std::size_t>(
            std::find_if(v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), [&](Letter u) { return u >= carry; }) -
            v.begin());
        if (j == v.size()) throw std::logic_error("no bumpable entry in the increasing part");
        Letter uj = v[j];
        v[j] = carry;
        auto i = static_cast<std::size_t>(
            std::find_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), [&](Letter u) { return u < uj; }) -
            v.begin());
        if (i == k) throw std::logic_error("no bumpable entry in the decreasing part");
        carry = v[i];
        v[i] = uj;
    }

    std::vector<Word> out_rows;
    for (auto& row : rows) out_rows.emplace_back(t.rank(), std::move(row));
    ShiftedTableau out(t.rank(), std::move(out_rows));
#ifdef QCRYSTAL_CHECK_INVARIANTS
    if (auto bad = check_ssdt(out)) throw std::logic_error("insertion produced an invalid tableau: " + describe(*bad));
#endif
    return out;
}

// Every intermediate tableau of (((T <- u_1) <- u_2) ... ) <- u_N.
inline std::vector<ShiftedTableau> insertion_trace(const ShiftedTableau& t, const Word& letters) {
    if (letters.rank() != t.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<ShiftedTableau> steps;
    ShiftedTableau cur = t;
    for (Letter x : letters) {
        cur = insert_letter(cur, x);
        steps.push_back(cur);
    }
    return steps;
}

inline ShiftedTableau insert_word(const ShiftedTableau& t, const Word& letters) {
    if (letters.rank() != t.rank()) throw std::invalid_argument("rank mismatch");
    ShiftedTableau cur = t;
    for (Letter x : letters) cur = insert_letter(cur, x);
    return cur;
}

// T <- T' inserts the reading word of T'.
inline ShiftedTableau insert_tableau(const ShiftedTableau& t, const ShiftedTableau& u) {
    require_ssdt(u);
    return insert_word(t, u.reading_word());
}

// Which of the eight queer Knuth cases 'A'..'H' applies to abcd, if any.
inline std::optional<char> knuth_case(int a, int b, int c, int d) {
    if (d <= b && b <= a && a < c) return 'A';
    if (b < d && d <= a && a < c) return 'B';
    if (b <= a && a < d && d <= c) return 'C';
    if (a < b && b < d && d <= c) return 'D';
    if (b < d && d <= c && c <= a) return 'E';
    if (d <= b && b < c && c <= a) return 'F';
    if (a < d && d <= b && b < c) return 'G';
    if (d <= a && a < b && b < c) return 'H';
    return std::nullopt;
}

// psi: C(1121) -> C(1211). A-D give acbd, E-F give bacd, G-H give abdc.
inline std::optional<Word> knuth_map(const Word& w) {
    if (w.size() != 4) throw std::invalid_argument("the queer Knuth map acts on words of length 4");
    Letter a = w[0], b = w[1], c = w[2], d = w[3];
    auto which = knuth_case(a, b, c, d);
    if (!which) return std::nullopt;
    switch (*which) {
        case 'A': case 'B': case 'C': case 'D': return Word(w.rank(), {a, c, b, d});
        case 'E': case 'F': return Word(w.rank(), {b, a, c, d});
        default: return Word(w.rank(), {a, b, d, c});
    }
}

// Simultaneous BFS of C(w1) and C(w2): true iff w1 -> w2 extends to a
// label- and weight-preserving bijection of the two components.
inline bool crystal_equivalent(const Word& w1, const Word& w2) {
    if (w1.rank() != w2.rank()) throw std::invalid_argument("crystal equivalence needs equal ranks");
    auto labels = structure_labels(w1.rank());
    std::unordered_map<Word, Word> forward, backward;
    std::deque<std::pair<Word, Word>> queue;
    auto bind = [&](const Word& a, const Word& b) {
        auto fa = forward.find(a);
        auto bb = backward.find(b);
        if (fa != forward.end() || bb != backward.end()) {
            return fa != forward.end() && bb != backward.end() && fa->second == b && bb->second == a;
        }
        if (weight(a) != weight(b)) return false;
        forward.emplace(a, b);
        backward.emplace(b, a);
        queue.emplace_back(a, b);
        return true;
    };
    if (!bind(w1, w2)) return false;
    while (!queue.empty()) {
        auto [a, b] = std::move(queue.front());
        queue.pop_front();
        for (OperatorLabel label : labels) {
            for (bool lowering : {true, false}) {
                auto na = lowering ? apply_f(a, label) : apply_e(a, label);
                auto nb = lowering ? apply_f(b, label) : apply_e(b, label);
                if (na.has_value() != nb.has_value()) return false;
                if (na && !bind(*na, *nb)) return false;
            }
        }
    }
    return true;
}

}  // namespace qcrystal
