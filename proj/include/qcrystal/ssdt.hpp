#pragma once

// Strict partitions, hook words and semistandard decomposition tableaux.

#include <string>

#include "weyl.hpp"

namespace qcrystal {

// lambda_1 > lambda_2 > ... > lambda_r > 0
class StrictPartition {
public:
    StrictPartition() = default;

    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0 || (k > 0 && parts_[k - 1] <= parts_[k])) {
                throw std::invalid_argument("not a strict partition");
            }
        }
    }

    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

    static std::optional<StrictPartition> from_weight(const WeightVec& mu) {
        if (!mu.is_strict_partition()) return std::nullopt;
        std::vector<int> parts;
        for (int c : mu.counts())
            if (c > 0) parts.push_back(c);
        return StrictPartition(std::move(parts));
    }

    std::span<const int> parts() const { return parts_; }
    // 1-based row length, 0 past the last row
    int part(int row) const {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    WeightVec to_weight(int rank) const {
        if (length() > rank) throw std::invalid_argument("partition longer than rank");
        WeightVec mu(rank);
        for (int k = 1; k <= length(); ++k) mu[k] = part(k);
        return mu;
    }

    // lambda <- row: add a box at the end of the given row, if the result is
    // again a shifted shape.
    std::optional<StrictPartition> with_box(int row) const {
        if (row < 1 || row > length() + 1) return std::nullopt;
        int grown = part(row) + 1;
        if (row > 1 && part(row - 1) <= grown) return std::nullopt;
        StrictPartition out = *this;
        if (row > length()) {
            out.parts_.push_back(1);
        } else {
            out.parts_[static_cast<std::size_t>(row - 1)] = grown;
        }
        return out;
    }

    bool operator==(const StrictPartition&) const = default;
    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

// All strict partitions of size <= max_size with at most max_length parts.
inline std::vector<StrictPartition> strict_partitions(int max_size, int max_length) {
    std::vector<StrictPartition> out;
    std::vector<int> parts;
    auto extend = [&](auto& self, int budget, int bound) -> void {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) >= max_length) return;
        for (int p = std::min(budget, bound - 1); p >= 1; --p) {
            parts.push_back(p);
            self(self, budget - p, p);
            parts.pop_back();
        }
    };
    extend(extend, max_size, max_size + 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Length k of the decreasing part of a hook word
// u_1 >= ... >= u_k < u_{k+1} < ... < u_N, or nullopt if `w` is not one.
// The split is unique: k is the end of the longest weakly decreasing prefix.
inline std::optional<std::size_t> hook_split(std::span<const Letter> w) {
    if (w.empty()) return std::nullopt;
    std::size_t k = 1;
    while (k < w.size() && w[k - 1] >= w[k]) ++k;
    for (std::size_t p = k; p + 1 < w.size(); ++p)
        if (w[p] >= w[p + 1]) return std::nullopt;
    return k;
}

inline std::optional<std::size_t> hook_split(const Word& w) { return hook_split(w.letters()); }

inline bool is_hook(const Word& w) {
    if (w.empty()) throw std::invalid_argument("hook words are non-empty");
    return hook_split(w).has_value();
}

// Longest hook subword (not necessarily contiguous). For each pivot p this is
// the longest weakly decreasing subsequence ending at p plus the longest
// strictly increasing subsequence after p whose values all exceed w[p].
inline std::size_t max_hook_subword_len(std::span<const Letter> w) {
    const std::size_t len = w.size();
    if (len == 0) return 0;
    std::vector<std::size_t> dec_ending(len, 1), inc_starting(len, 1);
    for (std::size_t p = 0; p < len; ++p)
        for (std::size_t q = 0; q < p; ++q)
            if (w[q] >= w[p]) dec_ending[p] = std::max(dec_ending[p], dec_ending[q] + 1);
    for (std::size_t p = len; p-- > 0;)
        for (std::size_t q = p + 1; q < len; ++q)
            if (w[q] > w[p]) inc_starting[p] = std::max(inc_starting[p], inc_starting[q] + 1);
    std::size_t best = 0;
    for (std::size_t p = 0; p < len; ++p) {
        std::size_t tail = 0;
        for (std::size_t q = p + 1; q < len; ++q)
            if (w[q] > w[p]) tail = std::max(tail, inc_starting[q]);
        best = std::max(best, dec_ending[p] + tail);
    }
    return best;
}

inline std::size_t max_hook_subword_len(const Word& w) { return max_hook_subword_len(w.letters()); }

// Filling of a shifted shape, stored row by row (row 1 first). The shift of
// row i by i-1 units is a display matter only.
class ShiftedTableau {
public:
    explicit ShiftedTableau(int rank) : rank_(rank) { check_rank(rank); }

    ShiftedTableau(int rank, std::vector<Word> rows) : rank_(rank), rows_(std::move(rows)) {
        check_rank(rank);
        std::vector<int> lengths;
        for (const Word& row : rows_) {
            if (row.rank() != rank_) throw std::invalid_argument("row rank differs from tableau rank");
            lengths.push_back(static_cast<int>(row.size()));
        }
        try {
            shape_ = StrictPartition(std::move(lengths));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("row lengths do not form a shifted shape");
        }
    }

    // Cuts a reading word v_r ... v_1 into rows of the given shape.
    static ShiftedTableau from_reading_word(const StrictPartition& shape, const Word& read) {
        if (static_cast<int>(read.size()) != shape.size()) {
            throw std::invalid_argument("reading word length differs from shape size");
        }
        std::vector<Word> rows;
        std::size_t end = read.size();
        for (int k = 1; k <= shape.length(); ++k) {
            auto len = static_cast<std::size_t>(shape.part(k));
            rows.push_back(read.subword(end - len, len));
            end -= len;
        }
        return ShiftedTableau(read.rank(), std::move(rows));
    }

    int rank() const { return rank_; }
    const StrictPartition& shape() const { return shape_; }
    std::span<const Word> rows() const { return rows_; }
    const Word& row(int k) const { return rows_.at(static_cast<std::size_t>(k - 1)); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    // read(T) = v_r v_{r-1} ... v_1
    Word reading_word() const {
        Word out(rank_);
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out = out + *it;
        return out;
    }

    bool operator==(const ShiftedTableau&) const = default;

    // canonical order: shape, then reading word
    friend std::strong_ordering operator<=>(const ShiftedTableau& a, const ShiftedTableau& b) {
        if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.reading_word() <=> b.reading_word();
    }

private:
    int rank_;
    StrictPartition shape_;
    std::vector<Word> rows_;
};

struct SsdtViolation {
    enum class Condition {
        hook_row,      // (i): row i is not a hook word
        maximal_hook,  // (ii): row i is not a longest hook subword of v_{i+1} v_i
    };
    Condition condition;
    int row;
};

inline std::string describe(const SsdtViolation& v) {
    if (v.condition == SsdtViolation::Condition::hook_row) {
        return "condition (i) violated: row " + std::to_string(v.row) + " is not a hook word";
    }
    return "condition (ii) violated: row " + std::to_string(v.row) +
           " is not a hook subword of maximal length in rows " + std::to_string(v.row + 1) + "," +
           std::to_string(v.row);
}

inline std::optional<SsdtViolation> check_ssdt(const ShiftedTableau& t) {
    for (int k = 1; k <= t.num_rows(); ++k) {
        if (!hook_split(t.row(k))) return SsdtViolation{SsdtViolation::Condition::hook_row, k};
    }
    for (int k = 1; k < t.num_rows(); ++k) {
        Word below_then_row = t.row(k + 1) + t.row(k);
        if (max_hook_subword_len(below_then_row) != t.row(k).size()) {
            return SsdtViolation{SsdtViolation::Condition::maximal_hook, k};
        }
    }
    return std::nullopt;
}

inline bool validate(const ShiftedTableau& t) { return !check_ssdt(t).has_value(); }

inline Word reading_word(const ShiftedTableau& t) { return t.reading_word(); }

// T^lambda: row k (from the top) is
// (r-k+1)^{l_r} (r-k)^{l_{r-1}-l_r} ... 1^{l_k - l_{k+1}}.
inline ShiftedTableau highest_tableau(const StrictPartition& shape, int rank) {
    check_rank(rank);
    int r = shape.length();
    if (r > rank) throw std::invalid_argument("partition has more parts than the rank");
    std::vector<Word> rows;
    for (int k = 1; k <= r; ++k) {
        std::vector<Letter> row;
        for (int j = r; j >= k; --j) {
            row.insert(row.end(), static_cast<std::size_t>(shape.part(j) - shape.part(j + 1)),
                       static_cast<Letter>(j - k + 1));
        }
        rows.emplace_back(rank, std::move(row));
    }
    return ShiftedTableau(rank, std::move(rows));
}

// L^lambda: row k is filled with n-k+1.
inline ShiftedTableau lowest_tableau(const StrictPartition& shape, int rank) {
    check_rank(rank);
    if (shape.length() > rank) throw std::invalid_argument("partition has more parts than the rank");
    std::vector<Word> rows;
    for (int k = 1; k <= shape.length(); ++k) {
        rows.emplace_back(rank, std::vector<Letter>(static_cast<std::size_t>(shape.part(k)),
                                                    static_cast<Letter>(rank - k + 1)));
    }
    return ShiftedTableau(rank, std::move(rows));
}

namespace detail {

inline std::optional<ShiftedTableau> recut(const ShiftedTableau& t, std::optional<Word> image) {
    if (!image) return std::nullopt;
    auto out = ShiftedTableau::from_reading_word(t.shape(), *image);
    if (auto bad = check_ssdt(out)) {
        throw std::logic_error("operator left the set of decomposition tableaux: " + describe(*bad));
    }
    return out;
}

}  // namespace detail

// Operators act on tableaux through reading words.
inline std::optional<ShiftedTableau> apply_f(const ShiftedTableau& t, OperatorLabel label) {
    return detail::recut(t, apply_f(t.reading_word(), label));
}

inline std::optional<ShiftedTableau> apply_e(const ShiftedTableau& t, OperatorLabel label) {
    return detail::recut(t, apply_e(t.reading_word(), label));
}

}  // namespace qcrystal
