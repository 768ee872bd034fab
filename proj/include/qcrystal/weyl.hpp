#pragma once

// Weyl group action S_w on words, the conjugated odd operators, and highest /
// lowest weight vectors.

#include <cstdlib>
#include <numeric>
#include <set>

#include "parallel.hpp"
#include "word.hpp"

namespace qcrystal {

// Permutation of {1..n} in one-line notation; (p * q)(j) = p(q(j)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int x : images_) {
            if (x < 1 || x > size() || seen[static_cast<std::size_t>(x - 1)]) {
                throw std::invalid_argument("not a permutation");
            }
            seen[static_cast<std::size_t>(x - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        return Permutation(std::move(images));
    }

    static Permutation simple(int n, int i) {
        if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
        Permutation p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        return p;
    }

    // w_0, the order-reversing permutation
    static Permutation longest(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = n + 1 - j;
        return Permutation(std::move(images));
    }

    // s_{a_1} s_{a_2} ... s_{a_k}
    static Permutation from_word(int n, std::span<const int> word) {
        Permutation p = identity(n);
        for (int a : word) p = p * simple(n, a);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
    std::span<const int> images() const { return images_; }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> images(q.images_.size());
        for (int j = 1; j <= q.size(); ++j) images[static_cast<std::size_t>(j - 1)] = p(q(j));
        return Permutation(std::move(images));
    }

    Permutation inverse() const {
        std::vector<int> images(images_.size());
        for (int j = 1; j <= size(); ++j) images[static_cast<std::size_t>((*this)(j) - 1)] = j;
        return Permutation(std::move(images));
    }

    int length() const {
        int inversions = 0;
        for (std::size_t a = 0; a < images_.size(); ++a)
            for (std::size_t b = a + 1; b < images_.size(); ++b)
                if (images_[a] > images_[b]) ++inversions;
        return inversions;
    }

    // Canonical reduced word: repeatedly strip the smallest right descent.
    std::vector<int> reduced_word() const {
        std::vector<int> suffix;
        Permutation p = *this;
        while (true) {
            int i = p.first_descent();
            if (i == 0) break;
            suffix.push_back(i);
            std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
        }
        return {suffix.rbegin(), suffix.rend()};
    }

    std::vector<std::vector<int>> all_reduced_words() const {
        std::vector<std::vector<int>> out;
        std::vector<int> suffix;
        collect_reduced_words(*this, suffix, out);
        return out;
    }

    // (p . mu)_{p(j)} = mu_j, i.e. p(epsilon_j) = epsilon_{p(j)}
    WeightVec act(const WeightVec& mu) const {
        if (mu.rank() != size()) throw std::invalid_argument("weight rank mismatch");
        WeightVec out(size());
        for (int j = 1; j <= size(); ++j) out[(*this)(j)] = mu[j];
        return out;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    int first_descent() const {
        for (std::size_t a = 0; a + 1 < images_.size(); ++a)
            if (images_[a] > images_[a + 1]) return static_cast<int>(a + 1);
        return 0;
    }

    static void collect_reduced_words(const Permutation& p, std::vector<int>& suffix,
                                      std::vector<std::vector<int>>& out) {
        bool any = false;
        for (std::size_t a = 0; a + 1 < p.images_.size(); ++a) {
            if (p.images_[a] < p.images_[a + 1]) continue;
            any = true;
            Permutation q = p;
            std::swap(q.images_[a], q.images_[a + 1]);
            suffix.push_back(static_cast<int>(a + 1));
            collect_reduced_words(q, suffix, out);
            suffix.pop_back();
        }
        if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
    }

    std::vector<int> images_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// S_i b = f_i^m b if m = <h_i, wt b> >= 0, else e_i^{-m} b.
inline Word s_action(const Word& w, int i) {
    detail::check_even_index(w, i);
    int m = weight(w).pair_h(i);
    Word cur = w;
    for (int step = 0; step < std::abs(m); ++step) {
        auto next = m > 0 ? f_even(cur, i) : e_even(cur, i);
        if (!next) throw std::logic_error("i-string shorter than |<h_i, wt>|");
        cur = std::move(*next);
    }
    return cur;
}

// S_w for w = s_{a_1} ... s_{a_k}; S_{a_k} is applied first.
inline Word apply_reduced_word(const Word& w, std::span<const int> reduced) {
    Word cur = w;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) cur = s_action(cur, *it);
    return cur;
}

inline Word w_action(const Word& w, const Permutation& p) {
    if (p.size() != w.rank()) throw std::invalid_argument("permutation size differs from rank");
    auto reduced = p.reduced_word();
    return apply_reduced_word(w, reduced);
}

// Reduced word of w_i = s_2 ... s_i s_1 ... s_{i-1}, the shortest element
// with w_i(alpha_i) = alpha_1.
inline std::vector<int> odd_conjugator(int i) {
    std::vector<int> out;
    for (int a = 2; a <= i; ++a) out.push_back(a);
    for (int a = 1; a <= i - 1; ++a) out.push_back(a);
    return out;
}

namespace detail {

template <class OddOp>
std::optional<Word> conjugated_odd(const Word& w, int i, OddOp op) {
    if (i < 2) throw std::out_of_range("conjugated odd operators need index >= 2");
    check_label(OperatorLabel::odd(i), w.rank());
    auto conj = odd_conjugator(i);
    // S_{w_i} applies the letters of conj right to left; S_{w_i^{-1}} left to right.
    Word cur = apply_reduced_word(w, conj);
    auto mid = op(cur);
    if (!mid) return std::nullopt;
    cur = std::move(*mid);
    for (int a : conj) cur = s_action(cur, a);
    return cur;
}

}  // namespace detail

// f_{-i} = S_{w_i^{-1}} f_{-1} S_{w_i}
inline std::optional<Word> f_odd(const Word& w, int i) {
    return detail::conjugated_odd(w, i, [](const Word& u) { return f_odd1(u); });
}

inline std::optional<Word> e_odd(const Word& w, int i) {
    return detail::conjugated_odd(w, i, [](const Word& u) { return e_odd1(u); });
}

inline std::optional<Word> apply_f(const Word& w, OperatorLabel label) {
    check_label(label, w.rank());
    if (!label.is_odd()) return f_even(w, label.index);
    return label.index == 1 ? f_odd1(w) : f_odd(w, label.index);
}

inline std::optional<Word> apply_e(const Word& w, OperatorLabel label) {
    check_label(label, w.rank());
    if (!label.is_odd()) return e_even(w, label.index);
    return label.index == 1 ? e_odd1(w) : e_odd(w, label.index);
}

inline bool is_highest(const Word& w) {
    int n = w.rank();
    for (int i = 1; i < n; ++i)
        if (e_even(w, i)) return false;
    if (n >= 2 && e_odd1(w)) return false;
    for (int i = 2; i < n; ++i)
        if (e_odd(w, i)) return false;
    return true;
}

inline bool is_lowest(const Word& w) { return is_highest(w_action(w, Permutation::longest(w.rank()))); }

// Highest weight words of length N built letter by letter:
// b_0 = 1 (x) f_1 ... f_{j-1} b with wt(b) + epsilon_j strict.
inline std::set<Word> enumerate_highest(std::size_t length, int rank) {
    check_rank(rank);
    std::set<Word> level{Word(rank)};
    for (std::size_t step = 0; step < length; ++step) {
        std::set<Word> next;
        for (const Word& b : level) {
            WeightVec mu = weight(b);
            for (int j = 1; j <= rank; ++j) {
                if (!mu.plus_epsilon(j).is_strict_partition()) continue;
                Word cur = b;
                for (int a = j - 1; a >= 1; --a) {
                    auto lowered = f_even(cur, a);
                    if (!lowered) throw std::logic_error("f_1 ... f_{j-1} b vanished");
                    cur = std::move(*lowered);
                }
                next.insert(Word(rank, {1}) + cur);
            }
        }
        level = std::move(next);
    }
    return level;
}

// Brute-force scan of all rank^length words.
inline std::set<Word> scan_highest(std::size_t length, int rank, unsigned threads = 1) {
    auto words = all_words(length, rank);
    std::vector<char> keep(words.size(), 0);
    parallel_for(words.size(), threads, [&](std::size_t k) { keep[k] = is_highest(words[k]); });
    std::set<Word> out;
    for (std::size_t k = 0; k < words.size(); ++k)
        if (keep[k]) out.insert(words[k]);
    return out;
}

}  // namespace qcrystal
