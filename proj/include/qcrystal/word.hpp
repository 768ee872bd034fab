#pragma once

// Letters, words and weights of the vector-representation crystal of q(n),
// together with the even operators e_i, f_i and the primitive odd
// operators e_{-1}, f_{-1} acting on words.
//
// A word u_1 u_2 ... u_N stands for u_1 (x) u_2 (x) ... (x) u_N, the first
// letter being the leftmost tensor factor.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcrystal {

using Letter = std::uint8_t;

inline constexpr int max_rank = 255;

// Index of a Kashiwara operator. Odd(1) is the primitive odd operator;
// Odd(i) for i >= 2 is obtained from it by conjugation with the Weyl action.
struct OperatorLabel {
    enum class Parity : std::uint8_t { even, odd };

    Parity parity = Parity::even;
    int index = 1;

    static constexpr OperatorLabel even(int i) { return {Parity::even, i}; }
    static constexpr OperatorLabel odd(int i) { return {Parity::odd, i}; }

    constexpr bool is_odd() const { return parity == Parity::odd; }

    auto operator<=>(const OperatorLabel&) const = default;
};

inline void check_rank(int rank) {
    if (rank < 1 || rank > max_rank) {
        throw std::invalid_argument("rank must be in [1, " + std::to_string(max_rank) +
                                    "], got " + std::to_string(rank));
    }
}

inline void check_label(OperatorLabel label, int rank) {
    if (label.index < 1 || label.index > rank - 1) {
        throw std::out_of_range("operator index " + std::to_string(label.index) +
                                " out of range for rank " + std::to_string(rank));
    }
}

// Even labels 1..n-1 followed by the primitive odd label. These generate the
// crystal structure; the conjugated odd operators add no new connectivity.
inline std::vector<OperatorLabel> structure_labels(int rank) {
    std::vector<OperatorLabel> labels;
    for (int i = 1; i < rank; ++i) labels.push_back(OperatorLabel::even(i));
    if (rank >= 2) labels.push_back(OperatorLabel::odd(1));
    return labels;
}

inline std::vector<OperatorLabel> all_labels(int rank) {
    std::vector<OperatorLabel> labels;
    for (int i = 1; i < rank; ++i) labels.push_back(OperatorLabel::even(i));
    for (int i = 1; i < rank; ++i) labels.push_back(OperatorLabel::odd(i));
    return labels;
}

class Word {
public:
    explicit Word(int rank = 1) : rank_(rank) { check_rank(rank); }

    Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
        check_rank(rank);
        for (Letter x : letters_) check_letter(x);
    }

    Word(int rank, std::initializer_list<int> letters) : rank_(rank) {
        check_rank(rank);
        letters_.reserve(letters.size());
        for (int x : letters) {
            if (x < 1 || x > rank) throw_bad_letter(x);
            letters_.push_back(static_cast<Letter>(x));
        }
    }

    int rank() const { return rank_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Letter operator[](std::size_t pos) const { return letters_[pos]; }
    std::span<const Letter> letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word with_letter(std::size_t pos, Letter x) const {
        check_letter(x);
        Word copy = *this;
        copy.letters_.at(pos) = x;
        return copy;
    }

    void push_back(Letter x) {
        check_letter(x);
        letters_.push_back(x);
    }

    Word subword(std::size_t pos, std::size_t count) const {
        Word out(rank_);
        out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                            letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
        return out;
    }

    friend Word operator+(const Word& lhs, const Word& rhs) {
        if (lhs.rank_ != rhs.rank_) throw std::invalid_argument("concatenating words of different rank");
        Word out = lhs;
        out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
        return out;
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    void check_letter(Letter x) const {
        if (x < 1 || x > rank_) throw_bad_letter(x);
    }
    [[noreturn]] void throw_bad_letter(int x) const {
        throw std::out_of_range("letter " + std::to_string(x) + " out of range for rank " +
                                std::to_string(rank_));
    }

    int rank_;
    std::vector<Letter> letters_;
};

// Integer vector of length n; coordinate j (1-based) is the coefficient of
// epsilon_j.
class WeightVec {
public:
    explicit WeightVec(int rank) : counts_(static_cast<std::size_t>(rank), 0) {}
    explicit WeightVec(std::vector<int> counts) : counts_(std::move(counts)) {}

    int rank() const { return static_cast<int>(counts_.size()); }
    int operator[](int j) const { return counts_.at(static_cast<std::size_t>(j - 1)); }
    int& operator[](int j) { return counts_.at(static_cast<std::size_t>(j - 1)); }
    std::span<const int> counts() const { return counts_; }

    // <h_i, mu> and <k_i, mu>
    int pair_h(int i) const { return (*this)[i] - (*this)[i + 1]; }
    int pair_k(int i) const { return (*this)[i]; }

    // alpha_i = epsilon_i - epsilon_{i+1}
    WeightVec minus_alpha(int i) const {
        WeightVec out = *this;
        --out[i];
        ++out[i + 1];
        return out;
    }
    WeightVec plus_alpha(int i) const {
        WeightVec out = *this;
        ++out[i];
        --out[i + 1];
        return out;
    }
    WeightVec plus_epsilon(int j) const {
        WeightVec out = *this;
        ++out[j];
        return out;
    }

    int total() const {
        int s = 0;
        for (int c : counts_) s += c;
        return s;
    }

    bool is_nonnegative() const {
        return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c >= 0; });
    }

    // lambda_1 > lambda_2 > ... > lambda_r > 0 = ... = 0
    bool is_strict_partition() const {
        for (std::size_t j = 0; j < counts_.size(); ++j) {
            if (counts_[j] < 0) return false;
            if (j + 1 < counts_.size() && counts_[j] <= counts_[j + 1] && counts_[j] != 0) return false;
            if (j + 1 < counts_.size() && counts_[j] == 0 && counts_[j + 1] != 0) return false;
        }
        return true;
    }

    bool operator==(const WeightVec&) const = default;
    auto operator<=>(const WeightVec&) const = default;

private:
    std::vector<int> counts_;
};

inline WeightVec weight(const Word& w) {
    WeightVec wt(w.rank());
    for (Letter x : w) ++wt[x];
    return wt;
}

namespace detail {

// Bracket cancellation for index i: letter i is '+', letter i+1 is '-', and a
// '+' immediately left of a '-' (ignoring neutral and cancelled symbols)
// cancels. What survives reads - - ... - + + ... +.
struct Signature {
    std::vector<std::size_t> minus;  // uncancelled '-', left to right
    std::vector<std::size_t> plus;   // uncancelled '+', left to right
};

inline Signature signature(const Word& w, int i) {
    Signature sig;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i) {
            sig.plus.push_back(p);
        } else if (w[p] == i + 1) {
            if (!sig.plus.empty()) {
                sig.plus.pop_back();
            } else {
                sig.minus.push_back(p);
            }
        }
    }
    return sig;
}

inline void check_even_index(const Word& w, int i) { check_label(OperatorLabel::even(i), w.rank()); }

}  // namespace detail

inline int eps(const Word& w, int i) {
    detail::check_even_index(w, i);
    return static_cast<int>(detail::signature(w, i).minus.size());
}

inline int phi(const Word& w, int i) {
    detail::check_even_index(w, i);
    return static_cast<int>(detail::signature(w, i).plus.size());
}

// f_i changes the leftmost uncancelled i into i+1.
inline std::optional<Word> f_even(const Word& w, int i) {
    detail::check_even_index(w, i);
    auto sig = detail::signature(w, i);
    if (sig.plus.empty()) return std::nullopt;
    return w.with_letter(sig.plus.front(), static_cast<Letter>(i + 1));
}

// e_i changes the rightmost uncancelled i+1 into i.
inline std::optional<Word> e_even(const Word& w, int i) {
    detail::check_even_index(w, i);
    auto sig = detail::signature(w, i);
    if (sig.minus.empty()) return std::nullopt;
    return w.with_letter(sig.minus.back(), static_cast<Letter>(i));
}

namespace detail {

inline std::optional<std::size_t> rightmost_one_or_two(const Word& w) {
    for (std::size_t p = w.size(); p-- > 0;) {
        if (w[p] == 1 || w[p] == 2) return p;
    }
    return std::nullopt;
}

inline void check_odd_rank(const Word& w) {
    if (w.rank() < 2) throw std::out_of_range("odd operators need rank >= 2");
}

}  // namespace detail

// The odd operators only see the rightmost letter in {1, 2}.
inline std::optional<Word> f_odd1(const Word& w) {
    detail::check_odd_rank(w);
    auto p = detail::rightmost_one_or_two(w);
    if (!p || w[*p] != 1) return std::nullopt;
    return w.with_letter(*p, 2);
}

inline std::optional<Word> e_odd1(const Word& w) {
    detail::check_odd_rank(w);
    auto p = detail::rightmost_one_or_two(w);
    if (!p || w[*p] != 2) return std::nullopt;
    return w.with_letter(*p, 1);
}

// All words of length `length` over {1..rank}, in lexicographic order.
inline std::vector<Word> all_words(std::size_t length, int rank) {
    check_rank(rank);
    std::vector<Word> out;
    std::vector<Letter> cur(length, 1);
    while (true) {
        out.emplace_back(rank, cur);
        std::size_t p = length;
        while (p > 0 && cur[p - 1] == rank) cur[--p] = 1;
        if (p == 0) break;
        ++cur[p - 1];
    }
    return out;
}

}  // namespace qcrystal

template <>
struct std::hash<qcrystal::Word> {
    std::size_t operator()(const qcrystal::Word& w) const noexcept {
        std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9E3779B97F4A7C15ULL;
        for (qcrystal::Letter x : w) h = (h ^ x) * 0x100000001B3ULL;
        return h;
    }
};
