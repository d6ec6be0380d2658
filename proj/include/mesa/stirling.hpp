#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mesa/error.hpp"
#include "mesa/set.hpp"

namespace mesa {

// A word w(1)...w(2n) over {1,1,...,n,n} in which everything between the two
// copies of k is larger than k. Only obtainable through validate_stirling (or
// library constructions that are correct by construction), so holding one
// means the invariants hold.
class StirlingPermutation {
public:
    int order() const noexcept { return order_; }
    std::span<const int> word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }

    // 1-based, as w(i).
    int at(std::size_t i) const { return word_.at(i - 1); }

    // Digit string when every value is a single digit, comma-separated otherwise.
    std::string to_string() const {
        std::string s;
        const bool digits = order_ <= 9;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (!digits && i) s += ',';
            s += std::to_string(word_[i]);
        }
        return s;
    }

    friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;
    friend auto operator<=>(const StirlingPermutation&, const StirlingPermutation&) = default;

private:
    StirlingPermutation(std::vector<int> word, int order)
        : word_(std::move(word)), order_(order) {}

    friend StirlingPermutation validate_stirling(std::span<const int> word);

    std::vector<int> word_;
    int order_;
};

// Throws LengthError, MultisetError or StirlingViolation. Stirling violations
// are reported for the smallest offending k, naming the first smaller value
// found between its two copies.
inline StirlingPermutation validate_stirling(std::span<const int> word) {
    if (word.empty() || word.size() % 2 != 0) throw LengthError(word.size());
    const int n = static_cast<int>(word.size() / 2);

    std::vector<std::size_t> first(n + 1, 0), second(n + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int v = word[i];
        if (v < 1 || v > n)
            throw MultisetError(MultisetError::Kind::OutOfRange, v, i + 1);
        if (first[v] == 0)
            first[v] = i + 1;
        else if (second[v] == 0)
            second[v] = i + 1;
        else
            throw MultisetError(MultisetError::Kind::Repeated, v, i + 1);
    }
    for (int v = 1; v <= n; ++v)
        if (second[v] == 0) throw MultisetError(MultisetError::Kind::Missing, v, 0);

    for (int k = 1; k <= n; ++k)
        for (std::size_t i = first[k]; i + 1 < second[k]; ++i)
            if (word[i] < k) throw StirlingViolation(k, word[i]);

    return StirlingPermutation(std::vector<int>(word.begin(), word.end()), n);
}

inline StirlingPermutation validate_stirling(std::initializer_list<int> word) {
    return validate_stirling(std::span<const int>(word.begin(), word.size()));
}

// ---------------------------------------------------------------------------
// Statistics. The span overloads accept any word (they are used directly on
// the generator's scratch buffer); the StirlingPermutation overloads are the
// public operations.

// Mesas as a bitmask, bit v-1 for value v. Requires max value <= 64.
inline std::uint64_t mesa_mask(std::span<const int> w) {
    std::uint64_t mask = 0;
    for (std::size_t i = 1; i + 2 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] == w[i + 1] && w[i + 1] > w[i + 2])
            mask |= std::uint64_t{1} << (w[i] - 1);
    return mask;
}

inline std::vector<int> mesa_values(std::span<const int> w) {
    std::vector<int> out;
    for (std::size_t i = 1; i + 2 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] == w[i + 1] && w[i + 1] > w[i + 2]) out.push_back(w[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline MesaSet mesa_set(const StirlingPermutation& w) {
    return MesaSet(mesa_values(w.word()), w.order());
}

// Values smaller than their nearest non-equal neighbour on each side; a word
// boundary imposes no constraint.
inline std::vector<int> local_minima(std::span<const int> w) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
        const bool left_ok = i == 0 || w[i - 1] > w[i];
        const bool right_ok = j + 1 == w.size() || w[j + 1] > w[i];
        if (left_ok && right_ok) out.push_back(w[i]);
        i = j + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<int> local_minima(const StirlingPermutation& w) {
    return local_minima(w.word());
}

// A single-index peak w(i-1) < w(i) > w(i+1). Never true on a valid Stirling
// permutation; kept as an executable check of that fact.
inline bool has_pinnacle(std::span<const int> w) {
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) return true;
    return false;
}

inline bool has_pinnacle(const StirlingPermutation& w) { return has_pinnacle(w.word()); }

// ---------------------------------------------------------------------------
// Generation of Q_n.
//
// Q_n is built from Q_{n-1} by inserting the adjacent pair "n n" into one of
// the 2n-1 gaps of each shorter word. A word of Q_n is identified by its
// insertion tuple (p_2, ..., p_n), p_j in [0, 2j-2]; emission order is
// lexicographic in that tuple.

struct GenerationLimits {
    int ceiling = 10;
    bool override_ceiling = false;
};

inline void check_generation_guard(int n, const GenerationLimits& limits) {
    if (n < 1) throw Error("order must be positive");
    if (n > limits.ceiling && !limits.override_ceiling) throw ResourceGuard(n, limits.ceiling);
}

namespace detail {

// Scratch word with in-place pair insertion; no allocation after construction.
class InsertionBuffer {
public:
    explicit InsertionBuffer(int n) : buf_(2 * static_cast<std::size_t>(n)) {
        buf_[0] = buf_[1] = 1;
        len_ = 2;
    }

    void insert_pair(std::size_t gap, int value) {
        std::move_backward(buf_.begin() + gap, buf_.begin() + len_, buf_.begin() + len_ + 2);
        buf_[gap] = buf_[gap + 1] = value;
        len_ += 2;
    }

    void remove_pair(std::size_t gap) {
        std::move(buf_.begin() + gap + 2, buf_.begin() + len_, buf_.begin() + gap);
        len_ -= 2;
    }

    std::size_t length() const noexcept { return len_; }
    std::span<const int> view() const noexcept { return {buf_.data(), len_}; }

private:
    std::vector<int> buf_;
    std::size_t len_ = 0;
};

// Calls visit; a visitor returning bool stops the walk by returning false.
template <class Visitor>
bool emit(Visitor& visit, std::span<const int> w) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const int>>, bool>)
        return visit(w);
    else {
        visit(w);
        return true;
    }
}

template <class Visitor>
bool insert_from(InsertionBuffer& buf, int value, int n, Visitor& visit) {
    if (value > n) return emit(visit, buf.view());
    const std::size_t gaps = buf.length() + 1;
    for (std::size_t gap = 0; gap < gaps; ++gap) {
        buf.insert_pair(gap, value);
        const bool go_on = insert_from(buf, value + 1, n, visit);
        buf.remove_pair(gap);
        if (!go_on) return false;
    }
    return true;
}

} // namespace detail

// Visits every word of Q_n exactly once as a view into a scratch buffer (valid
// only for the duration of the call).
template <class Visitor>
void for_each_stirling(int n, Visitor&& visit, const GenerationLimits& limits = {}) {
    check_generation_guard(n, limits);
    detail::InsertionBuffer buf(n);
    detail::insert_from(buf, 2, n, visit);
}

// Q_n is split into blocks by fixing the first `depth` insertion positions
// (p_2 .. p_{depth+1}). Blocks are disjoint, cover Q_n, and visiting them in
// index order reproduces the order of for_each_stirling.
inline int clamp_partition_depth(int n, int depth) {
    return std::clamp(depth, 0, std::max(0, n - 1));
}

inline std::size_t partition_count(int n, int depth) {
    depth = clamp_partition_depth(n, depth);
    std::size_t blocks = 1;
    for (int j = 2; j <= depth + 1; ++j) blocks *= static_cast<std::size_t>(2 * j - 1);
    return blocks;
}

template <class Visitor>
void for_each_stirling_in_block(int n, int depth, std::size_t block, Visitor&& visit,
                                const GenerationLimits& limits = {}) {
    check_generation_guard(n, limits);
    depth = clamp_partition_depth(n, depth);
    if (block >= partition_count(n, depth)) throw Error("partition block index out of range");

    // Mixed radix decode, p_2 most significant.
    std::vector<std::size_t> gaps(static_cast<std::size_t>(depth));
    for (int j = depth + 1; j >= 2; --j) {
        const std::size_t radix = static_cast<std::size_t>(2 * j - 1);
        gaps[static_cast<std::size_t>(j - 2)] = block % radix;
        block /= radix;
    }
    detail::InsertionBuffer buf(n);
    for (int j = 2; j <= depth + 1; ++j) buf.insert_pair(gaps[static_cast<std::size_t>(j - 2)], j);
    detail::insert_from(buf, depth + 2, n, visit);
}

// Materialized Q_n in emission order.
inline std::vector<StirlingPermutation> generate_all(int n, const GenerationLimits& limits = {}) {
    std::vector<StirlingPermutation> out;
    for_each_stirling(
        n, [&](std::span<const int> w) { out.push_back(validate_stirling(w)); }, limits);
    return out;
}

} // namespace mesa
