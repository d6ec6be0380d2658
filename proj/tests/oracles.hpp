#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; each oracle recomputes its quantity the slow,
// obvious way from the definitions.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Set = std::vector<int>;

// Everything between the two copies of k exceeds k.
inline bool is_stirling(const Word& w) {
    const int n = static_cast<int>(w.size() / 2);
    if (w.size() % 2 != 0 || n == 0) return false;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == k) pos.push_back(i);
        if (pos.size() != 2) return false;
        for (std::size_t i = pos[0] + 1; i < pos[1]; ++i)
            if (w[i] <= k) return false;
    }
    return true;
}

// Q_n by filtering every arrangement of the multiset {1,1,...,n,n}.
inline std::vector<Word> stirling_by_multiset_filter(int n) {
    Word w;
    for (int v = 1; v <= n; ++v) {
        w.push_back(v);
        w.push_back(v);
    }
    std::vector<Word> out;
    do {
        if (is_stirling(w)) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Values v with some index i (1-based 2..2n-2) where w(i-1) < w(i) = w(i+1) > w(i+2).
inline Set mesas(const Word& w) {
    std::set<int> s;
    for (std::size_t i = 1; i + 2 < w.size(); ++i)
        if (w[i - 1] < w[i] && w[i] == w[i + 1] && w[i + 1] > w[i + 2]) s.insert(w[i]);
    return {s.begin(), s.end()};
}

// Nearest non-equal neighbour scan from each index outward.
inline Set local_minima(const Word& w) {
    std::set<int> s;
    const long long len = static_cast<long long>(w.size());
    for (long long i = 0; i < len; ++i) {
        long long l = i - 1, r = i + 1;
        while (l >= 0 && w[l] == w[i]) --l;
        while (r < len && w[r] == w[i]) ++r;
        if ((l < 0 || w[l] > w[i]) && (r >= len || w[r] > w[i])) s.insert(w[i]);
    }
    return {s.begin(), s.end()};
}

// Q_n built left to right: a letter x may be written only while no value
// above x has exactly one copy placed. Each finished word is passed to f.
template <class F>
void stirling_by_prefix_search(int n, F&& f) {
    Word w;
    std::vector<int> placed(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self) -> void {
        if (w.size() == 2 * static_cast<std::size_t>(n)) {
            f(w);
            return;
        }
        int open_max = 0;
        for (int v = 1; v <= n; ++v)
            if (placed[v] == 1) open_max = v;
        for (int x = open_max == 0 ? 1 : open_max; x <= n; ++x) {
            if (placed[x] == 2) continue;
            ++placed[x];
            w.push_back(x);
            self(self);
            w.pop_back();
            --placed[x];
        }
    };
    rec(rec);
}

// Admissibility by exhaustive search: does some word of Q_n have mesa set M?
inline std::set<Set> ams_by_brute_force(int n) {
    std::set<Set> out;
    stirling_by_prefix_search(n, [&](const Word& w) { out.insert(mesas(w)); });
    return out;
}

inline std::uint64_t binomial_pascal(int n, int k) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return k < 0 || k > n ? 0 : c[n][k];
}

// Paths as strings over {N,E}; every arrangement of m N's and l E's.
inline std::vector<std::string> all_paths(int north, int east) {
    std::string s(static_cast<std::size_t>(east), 'E');
    s += std::string(static_cast<std::size_t>(north), 'N');
    std::vector<std::string> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// Strictly below y = (m/l) x at every interior lattice point, compared as
// long double (no interior point lies on the line for coprime m, l).
inline bool below_line(const std::string& path) {
    const long double m = static_cast<long double>(std::count(path.begin(), path.end(), 'N'));
    const long double l = static_cast<long double>(std::count(path.begin(), path.end(), 'E'));
    long double a = 0, b = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        (path[i] == 'N' ? b : a) += 1;
        if (!(b < a * m / l)) return false;
    }
    return true;
}

// Area between the path and the x-axis via the shoelace formula on the
// polygon (0,0) -> path -> (l,0).
inline long long shoelace_area(const std::string& path) {
    std::vector<std::pair<long long, long long>> pts{{0, 0}};
    long long a = 0, b = 0;
    for (char c : path) {
        (c == 'N' ? b : a) += 1;
        pts.emplace_back(a, b);
    }
    pts.emplace_back(a, 0);
    long long twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& [x1, y1] = pts[i];
        const auto& [x2, y2] = pts[(i + 1) % pts.size()];
        twice += x1 * y2 - x2 * y1;
    }
    return (twice < 0 ? -twice : twice) / 2;
}

// Pairs (m, u), m in M, u in [n] \ M, m < u, by double loop.
inline long long inversion_pairs(const Set& m, int n) {
    long long count = 0;
    for (int x : m)
        for (int u = 1; u <= n; ++u)
            if (std::find(m.begin(), m.end(), u) == m.end() && x < u) ++count;
    return count;
}

// Every subset of [n] as a sorted vector.
inline std::vector<Set> all_subsets(int n) {
    std::vector<Set> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Set s;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) s.push_back(v);
        out.push_back(s);
    }
    return out;
}

inline Word digits(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

// Integers from a data file; '#' starts a comment.
inline std::vector<long long> read_sequence(const std::string& path) {
    std::ifstream f(path);
    std::vector<long long> out;
    std::string line;
    while (std::getline(f, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream is(line);
        long long v;
        while (is >> v) out.push_back(v);
    }
    return out;
}

} // namespace oracle
