#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mesa/error.hpp"
#include "mesa/set.hpp"
#include "mesa/stirling.hpp"

namespace mesa {

// M_x = M n [1, x].
inline MesaSet truncate(const MesaSet& m, int x) {
    std::vector<int> kept;
    for (int v : m.elements()) {
        if (v > x) break;
        kept.push_back(v);
    }
    return MesaSet(std::move(kept), m.order());
}

// M is admissible iff 3|M_x| <= 2x - 1 for every x in M. Sorted elements
// make |M_x| at the i-th element equal to i.
inline bool is_admissible(std::span<const int> sorted_elements) {
    long long count = 0;
    for (int x : sorted_elements) {
        ++count;
        if (3 * count > 2 * static_cast<long long>(x) - 1) return false;
    }
    return true;
}

inline bool is_admissible(const MesaSet& m) { return is_admissible(m.elements()); }

// floor((2n-1)/3): the largest mesa count in Q_n.
inline int max_mesa_count(int n) {
    if (n < 1) throw Error("order must be positive");
    return (2 * n - 1) / 3;
}

// t_1 m_1 m_1 t_2 m_2 m_2 ... t_l m_l m_l t_{l+1} ... t_{2(n-l)}, where
// t_j = u_ceil(j/2) runs over the complement [n] \ M, each value twice.
inline StirlingPermutation canonical_witness(const MesaSet& m) {
    if (!is_admissible(m))
        throw NotAdmissible("set " + m.to_string() + " is not an admissible mesa set");
    const auto& mesas = m.elements();
    const auto u = m.complement();
    const std::size_t l = mesas.size();

    std::vector<int> t;
    t.reserve(2 * u.size());
    for (int v : u) {
        t.push_back(v);
        t.push_back(v);
    }

    std::vector<int> word;
    word.reserve(2 * static_cast<std::size_t>(m.order()));
    for (std::size_t i = 0; i < l; ++i) {
        word.push_back(t.at(i));
        word.push_back(mesas[i]);
        word.push_back(mesas[i]);
    }
    for (std::size_t j = l; j < t.size(); ++j) word.push_back(t[j]);
    return validate_stirling(word);
}

// A word of Q_n with exactly max_mesa_count(n) mesas:
// t_1 m_1 m_1 t_2 ... t_k m_k m_k t_{k+1} t_{k+2} t_{k+3} with m_i = n-k+i and
// t_i = ceil(i/2) while that is <= n-k; the remaining t_i are omitted.
inline StirlingPermutation sharp_witness(int n) {
    if (n < 2) throw Error("sharp_witness requires order at least 2");
    const int k = max_mesa_count(n);
    auto t = [&](int i) { return (i + 1) / 2; };
    auto emit_t = [&](std::vector<int>& w, int i) {
        if (t(i) <= n - k) w.push_back(t(i));
    };

    std::vector<int> word;
    for (int i = 1; i <= k; ++i) {
        emit_t(word, i);
        word.push_back(n - k + i);
        word.push_back(n - k + i);
    }
    for (int i = k + 1; i <= k + 3; ++i) emit_t(word, i);
    return validate_stirling(word);
}

// Component-wise lower bound on any admissible {m_1 < ... < m_l}:
// (2, 4, 5, 7, 8, 10, 11, ...), i-th entry floor(3i/2) + 1.
inline std::vector<int> minimal_mesa_floor(int l) {
    if (l < 1) throw Error("length must be positive");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) out.push_back(3 * i / 2 + 1);
    return out;
}

// M \ {n+1}, re-contextualized to order n. Inverse direction of extend.
inline MesaSet restrict_to(const MesaSet& m, int n) {
    if (n < 1) throw Error("order must be positive");
    std::vector<int> kept;
    for (int v : m.elements())
        if (v != n + 1) kept.push_back(v);
    return MesaSet(std::move(kept), n);
}

// M u {n+1} in order n+1, or ExtensionBlocked when that set is not admissible.
inline MesaSet extend(const MesaSet& m, int n) {
    if (n < 1) throw Error("order must be positive");
    if (m.max() > n)
        throw InvalidMesaSet("set " + m.to_string() + " does not fit in order " +
                             std::to_string(n));
    std::vector<int> grown = m.elements();
    grown.push_back(n + 1);
    if (!is_admissible(grown)) throw ExtensionBlocked(m.size(), n);
    return MesaSet(std::move(grown), n + 1);
}

} // namespace mesa
