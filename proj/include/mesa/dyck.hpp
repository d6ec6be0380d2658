#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "mesa/error.hpp"
#include "mesa/exact.hpp"
#include "mesa/mesa_sets.hpp"
#include "mesa/set.hpp"

namespace mesa {

enum class Step : std::uint8_t { North, East };

// North/east lattice path from (0,0) to (east_count, north_count). Text form
// is a string over {N, E}, first character = first step.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
        for (Step s : steps_) (s == Step::North ? north_ : east_) += 1;
    }

    // Accepts N/E (either case); whitespace and commas are ignored.
    static LatticePath parse(std::string_view text) {
        std::vector<Step> steps;
        for (char c : text) {
            switch (c) {
            case 'N': case 'n': steps.push_back(Step::North); break;
            case 'E': case 'e': steps.push_back(Step::East); break;
            case ' ': case ',': case '\t': break;
            default:
                throw ParseError(std::string("unexpected character '") + c +
                                 "' in lattice path (expected N or E)");
            }
        }
        return LatticePath(std::move(steps));
    }

    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    // Target (l, m): l east steps, m north steps.
    long long width() const noexcept { return east_; }
    long long height() const noexcept { return north_; }

    std::string to_string() const {
        std::string s;
        s.reserve(steps_.size());
        for (Step st : steps_) s += st == Step::North ? 'N' : 'E';
        return s;
    }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }

private:
    std::vector<Step> steps_;
    long long north_ = 0;
    long long east_ = 0;
};

// True iff every interior lattice point (a, b) of the path is strictly below
// y = (m/l) x, i.e. b*l < a*m. Coprimality of (m, l) means no interior point
// can lie on the line, so this is the same as "weakly below".
inline bool is_rational_dyck(const LatticePath& p) {
    const long long l = p.width();
    const long long m = p.height();
    if (l == 0 || m == 0) throw InvalidPath("path must have at least one north and one east step");
    if (std::gcd(m, l) != 1) throw NotCoprime(m, l);
    long long a = 0, b = 0;
    const auto& steps = p.steps();
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        (steps[i] == Step::North ? b : a) += 1;
        if (b * l >= a * m) return false;
    }
    return true;
}

// A LatticePath known to be a rational Dyck path.
class RationalDyckPath {
public:
    explicit RationalDyckPath(LatticePath path) : path_(std::move(path)) {
        if (!is_rational_dyck(path_))
            throw InvalidPath("path " + path_.to_string() + " leaves the region below y = (" +
                              std::to_string(path_.height()) + "/" +
                              std::to_string(path_.width()) + ")x");
    }

    const LatticePath& path() const noexcept { return path_; }
    long long width() const noexcept { return path_.width(); }
    long long height() const noexcept { return path_.height(); }
    std::string to_string() const { return path_.to_string(); }

    friend bool operator==(const RationalDyckPath&, const RationalDyckPath&) = default;

private:
    LatticePath path_;
};

// delta: maximal M in AMS_{3k-1} (|M| = 2k-1) -> path pi_1 ... pi_{3k-1} with
// pi_i = N iff i in M. Lands in the (2k-1, k)-Dyck paths.
inline RationalDyckPath delta(const MesaSet& m) {
    const int n = m.order();
    if (n % 3 != 2)
        throw WrongContext("delta requires context order 3k-1, got " + std::to_string(n));
    const int k = (n + 1) / 3;
    if (m.size() != static_cast<std::size_t>(2 * k - 1))
        throw NotMaximal("set " + m.to_string() + " has size " + std::to_string(m.size()) +
                         ", maximal size in order " + std::to_string(n) + " is " +
                         std::to_string(2 * k - 1));
    if (!is_admissible(m))
        throw NotAdmissible("set " + m.to_string() + " is not an admissible mesa set");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) steps.push_back(m.contains(i) ? Step::North : Step::East);
    return RationalDyckPath(LatticePath(std::move(steps)));
}

// Indices of the north steps, in order 3k-1.
inline MesaSet delta_inverse(const LatticePath& p) {
    const long long k = p.width();
    if (k < 1 || p.height() != 2 * k - 1)
        throw InvalidPath("path " + p.to_string() + " does not have shape (2k-1, k)");
    if (!is_rational_dyck(p))
        throw InvalidPath("path " + p.to_string() + " is not a rational Dyck path");
    std::vector<int> north;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p.steps()[i] == Step::North) north.push_back(static_cast<int>(i + 1));
    return MesaSet(std::move(north), static_cast<int>(p.length()));
}

inline MesaSet delta_inverse(const RationalDyckPath& p) { return delta_inverse(p.path()); }

// C_{m,l} = binom(l+m-1, m) / l for coprime m, l.
inline Count rational_catalan(std::uint64_t m, std::uint64_t l) {
    if (m == 0 || l == 0) throw Error("rational_catalan requires positive arguments");
    if (std::gcd(m, l) != 1)
        throw NotCoprime(static_cast<long long>(m), static_cast<long long>(l));
    Count b = binomial(l + m - 1, m);
    if (b % l != 0) throw Error("internal: binomial not divisible by l");
    return b / l;
}

// Sum over east steps of the height at which the step is taken; the number of
// full cells between the path and the x-axis.
inline long long area(const LatticePath& p) {
    long long height = 0, total = 0;
    for (Step s : p.steps()) {
        if (s == Step::North)
            ++height;
        else
            total += height;
    }
    return total;
}

inline long long area(const RationalDyckPath& p) { return area(p.path()); }

// |{(m, u) : m in M, u in [n] \ M, m < u}|.
inline long long inversions(const MesaSet& m) {
    long long total = 0, seen_mesas = 0;
    for (int v = 1; v <= m.order(); ++v) {
        if (m.contains(v))
            ++seen_mesas;
        else
            total += seen_mesas;
    }
    return total;
}

} // namespace mesa
