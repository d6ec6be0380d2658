#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mesa/error.hpp"

namespace mesa {

// A finite set of positive integers {m_1 < ... < m_l} together with the order
// n of the Stirling permutations it is considered against. Admissibility is a
// property of the elements alone; the order only matters for witnesses and
// for extend/restrict.
class MesaSet {
public:
    MesaSet() = default;

    // Elements must be strictly increasing and positive; order must be at
    // least max(elements) and at least 1.
    MesaSet(std::vector<int> elements, int order)
        : elements_(std::move(elements)), order_(order) {
        if (order_ < 1) throw InvalidMesaSet("context order must be positive");
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] < 1)
                throw InvalidMesaSet("element " + std::to_string(elements_[i]) +
                                     " is not a positive integer");
            if (i > 0 && elements_[i] <= elements_[i - 1])
                throw InvalidMesaSet("elements must be strictly increasing");
        }
        if (!elements_.empty() && elements_.back() > order_)
            throw InvalidMesaSet("context order " + std::to_string(order_) +
                                 " is smaller than element " +
                                 std::to_string(elements_.back()));
    }

    // Sorts the input; duplicates are rejected. A non-positive order means
    // "smallest order that fits", i.e. max(elements) (or 1 for the empty set).
    static MesaSet from_values(std::vector<int> values, int order = 0) {
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw InvalidMesaSet("duplicate element in set");
        if (order <= 0) order = values.empty() ? 1 : std::max(1, values.back());
        return MesaSet(std::move(values), order);
    }

    // Bit v-1 of mask set <=> v in the set.
    static MesaSet from_mask(std::uint64_t mask, int order) {
        std::vector<int> values;
        for (int v = 1; mask != 0; ++v, mask >>= 1)
            if (mask & 1u) values.push_back(v);
        return MesaSet(std::move(values), order);
    }

    const std::vector<int>& elements() const noexcept { return elements_; }
    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    int max() const noexcept { return elements_.empty() ? 0 : elements_.back(); }

    bool contains(int v) const {
        return std::binary_search(elements_.begin(), elements_.end(), v);
    }

    // Requires max() <= 64.
    std::uint64_t mask() const noexcept {
        std::uint64_t m = 0;
        for (int v : elements_) m |= std::uint64_t{1} << (v - 1);
        return m;
    }

    // [order] \ M in increasing order (u_1 < u_2 < ...).
    std::vector<int> complement() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(order_) - elements_.size());
        auto it = elements_.begin();
        for (int v = 1; v <= order_; ++v) {
            if (it != elements_.end() && *it == v) {
                ++it;
                continue;
            }
            out.push_back(v);
        }
        return out;
    }

    MesaSet with_order(int order) const { return MesaSet(elements_, order); }

    // "{5,7}", "{}" for the empty set.
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(elements_[i]);
        }
        return s + '}';
    }

    friend bool operator==(const MesaSet&, const MesaSet&) = default;
    friend auto operator<=>(const MesaSet&, const MesaSet&) = default;

private:
    std::vector<int> elements_;
    int order_ = 1;
};

} // namespace mesa
