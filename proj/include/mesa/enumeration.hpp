#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "mesa/dyck.hpp"
#include "mesa/error.hpp"
#include "mesa/exact.hpp"
#include "mesa/mesa_sets.hpp"
#include "mesa/set.hpp"
#include "mesa/stirling.hpp"

namespace mesa {

// ---------------------------------------------------------------------------
// Brute force: exhaust Q_n and collect the distinct mesa sets.

struct BruteForceOptions {
    GenerationLimits limits{};
    unsigned workers = 1;
};

// Set-of-sets keyed by mesa bitmask. Merging is a bitwise OR, so partial
// results from any partition of Q_n combine in any order.
class MesaSetCollection {
public:
    explicit MesaSetCollection(int n) : n_(n), seen_(std::size_t{1} << n, 0) {}

    void add(std::uint64_t mask) { seen_[mask] = 1; }

    void merge(const MesaSetCollection& other) {
        for (std::size_t i = 0; i < seen_.size(); ++i) seen_[i] |= other.seen_[i];
    }

    std::size_t size() const {
        return static_cast<std::size_t>(std::count(seen_.begin(), seen_.end(), 1));
    }

    // Ascending by mask.
    std::vector<MesaSet> sets() const {
        std::vector<MesaSet> out;
        for (std::size_t i = 0; i < seen_.size(); ++i)
            if (seen_[i]) out.push_back(MesaSet::from_mask(i, n_));
        return out;
    }

private:
    int n_;
    std::vector<std::uint8_t> seen_;
};

inline MesaSetCollection collect_mesa_sets(int n, const BruteForceOptions& opts = {}) {
    check_generation_guard(n, opts.limits);
    if (n > 30) throw Error("brute force is limited to order 30");

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        MesaSetCollection seen(n);
        for_each_stirling(
            n, [&](std::span<const int> w) { seen.add(mesa_mask(w)); }, opts.limits);
        return seen;
    }

    // Enough blocks that uneven block sizes still balance across workers.
    int depth = 0;
    while (depth < n - 1 && partition_count(n, depth) < 8 * workers) ++depth;
    const std::size_t blocks = partition_count(n, depth);

    std::vector<MesaSetCollection> partial(workers, MesaSetCollection(n));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t b = next++; b < blocks; b = next++)
                    for_each_stirling_in_block(
                        n, depth, b,
                        [&](std::span<const int> w) { partial[t].add(mesa_mask(w)); },
                        opts.limits);
            });
        }
    }
    MesaSetCollection seen(n);
    for (const auto& p : partial) seen.merge(p);
    return seen;
}

inline Count count_brute_force(int n, const BruteForceOptions& opts = {}) {
    return Count(collect_mesa_sets(n, opts).size());
}

// ---------------------------------------------------------------------------
// Subset engine: depth-first over increasing element sequences, extending a
// partial set only by values that keep 3|M_x| <= 2x - 1 at the new maximum.

namespace detail {

template <class Visitor>
bool emit_set(Visitor& visit, const std::vector<int>& elems) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const std::vector<int>&>, bool>)
        return visit(elems);
    else {
        visit(elems);
        return true;
    }
}

template <class Visitor>
bool admissible_dfs(std::vector<int>& elems, int n, std::size_t max_size, Visitor& visit) {
    if (!emit_set(visit, elems)) return false;
    if (elems.size() >= max_size) return true;
    const int start = elems.empty() ? 1 : elems.back() + 1;
    const long long next_size = static_cast<long long>(elems.size()) + 1;
    for (int x = start; x <= n; ++x) {
        if (3 * next_size > 2 * static_cast<long long>(x) - 1) continue;
        elems.push_back(x);
        const bool go_on = admissible_dfs(elems, n, max_size, visit);
        elems.pop_back();
        if (!go_on) return false;
    }
    return true;
}

} // namespace detail

// Visits every admissible M subset of [n] exactly once, as a sorted element
// vector, in lexicographic order of the element sequence (prefixes first).
template <class Visitor>
void for_each_admissible(int n, Visitor&& visit, std::size_t max_size = SIZE_MAX) {
    if (n < 1) throw Error("order must be positive");
    std::vector<int> elems;
    detail::admissible_dfs(elems, n, max_size, visit);
}

inline std::vector<MesaSet> enumerate_ams(int n) {
    std::vector<MesaSet> out;
    for_each_admissible(n, [&](const std::vector<int>& e) { out.emplace_back(e, n); });
    return out;
}

// Number of sets the depth-first walk above would visit, with the walk
// collapsed on (current maximum, current size): the subtree below a node
// depends on nothing else.
inline Count count_subsets(int n) {
    if (n < 1) throw Error("order must be positive");
    const std::size_t N = static_cast<std::size_t>(n);
    // below[x][s]: sets visited from a node whose maximum is x and size is s.
    std::vector<std::vector<Count>> below(N + 1, std::vector<Count>(N + 1, 0));
    for (int x = n; x >= 0; --x) {
        for (int s = 0; s <= x; ++s) {
            Count c = 1;
            for (int y = x + 1; y <= n; ++y)
                if (3 * (s + 1) <= 2 * y - 1) c += below[y][s + 1];
            below[x][s] = c;
        }
    }
    return below[0][0];
}

// Admissible M subset of [n] with |M| = size, counted by the same collapsed walk.
inline Count count_subsets_of_size(int n, int size) {
    if (n < 1) throw Error("order must be positive");
    if (size < 0 || size > n) return 0;
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::vector<Count>> below(N + 1, std::vector<Count>(N + 1, 0));
    for (int x = n; x >= 0; --x) {
        for (int s = 0; s <= std::min(x, size); ++s) {
            Count c = s == size ? 1 : 0;
            if (s < size)
                for (int y = x + 1; y <= n; ++y)
                    if (3 * (s + 1) <= 2 * y - 1) c += below[y][s + 1];
            below[x][s] = c;
        }
    }
    return below[0][0];
}

// All M in AMS_{3k-1} with |M| = 2k-1.
inline std::vector<MesaSet> enumerate_maximal(int k) {
    if (k < 1) throw Error("k must be positive");
    const int n = 3 * k - 1;
    const std::size_t target = static_cast<std::size_t>(2 * k - 1);
    std::vector<MesaSet> out;
    for_each_admissible(
        n,
        [&](const std::vector<int>& e) {
            if (e.size() == target) out.emplace_back(e, n);
        },
        target);
    return out;
}

// ---------------------------------------------------------------------------
// Recurrence engine, from |AMS_1| = 1:
//   |AMS_{3k-1}| = 2|AMS_{3k-2}|
//   |AMS_{3k}|   = 2|AMS_{3k-1}| - C_{2k-1,k}
//   |AMS_{3k+1}| = 2|AMS_{3k}|
inline Count count_recurrence(int n) {
    if (n < 1) throw Error("order must be positive");
    Count c = 1;
    for (int j = 2; j <= n; ++j) {
        c *= 2;
        if (j % 3 == 0) {
            const std::uint64_t k = static_cast<std::uint64_t>(j / 3);
            c -= rational_catalan(2 * k - 1, k);
        }
    }
    return c;
}

// Closed form with n = 3k + r, r in {0, 1, 2}:
//   |AMS_n| = 2^{n-1} - sum_{i=0}^{k-1} 2^{3i+r} C_{2(k-i)-1, k-i}
inline Count count_closed_form(int n) {
    if (n < 1) throw Error("order must be positive");
    const unsigned k = static_cast<unsigned>(n / 3);
    const unsigned r = static_cast<unsigned>(n % 3);
    Count total = pow2(static_cast<unsigned>(n - 1));
    for (unsigned i = 0; i < k; ++i) {
        const std::uint64_t j = k - i;
        total -= pow2(3 * i + r) * rational_catalan(2 * j - 1, j);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Reconciliation.

enum class Engine { BruteForce, Subset, Recurrence, ClosedForm };

inline std::string engine_name(Engine e) {
    switch (e) {
    case Engine::BruteForce: return "brute";
    case Engine::Subset: return "subset";
    case Engine::Recurrence: return "recurrence";
    case Engine::ClosedForm: return "closed";
    }
    return "?";
}

inline std::optional<Engine> parse_engine(std::string_view name) {
    for (Engine e : {Engine::BruteForce, Engine::Subset, Engine::Recurrence, Engine::ClosedForm})
        if (engine_name(e) == name) return e;
    if (name == "brute_force" || name == "brute-force") return Engine::BruteForce;
    if (name == "closed_form" || name == "closed-form") return Engine::ClosedForm;
    return std::nullopt;
}

struct ReportOptions {
    bool brute_force = true;
    bool subset = true;
    bool recurrence = true;
    bool closed_form = true;
    bool maximal = true;
    BruteForceOptions brute{};
    // Test hook: the named engine's result is off by one.
    std::optional<Engine> inject_fault{};
};

struct CountReport {
    int order = 0;
    std::optional<Count> brute_force_count;
    std::optional<Count> subset_count;
    std::optional<Count> recurrence_count;
    std::optional<Count> closed_form_count;
    // Number of maximal-size sets; present for orders of the form 3k-1.
    std::optional<Count> maximal_count;
    bool agree = true;

    // The agreed value, when at least one engine ran and all agree.
    std::optional<Count> value() const {
        if (!agree) return std::nullopt;
        for (const auto* c : {&subset_count, &recurrence_count, &closed_form_count,
                              &brute_force_count})
            if (*c) return **c;
        return std::nullopt;
    }
};

inline bool counts_agree(const CountReport& r) {
    std::optional<Count> first;
    for (const auto* c : {&r.brute_force_count, &r.subset_count, &r.recurrence_count,
                          &r.closed_form_count}) {
        if (!*c) continue;
        if (!first)
            first = **c;
        else if (**c != *first)
            return false;
    }
    return true;
}

// Brute force is skipped (left absent) above the generation ceiling unless
// the ceiling is explicitly overridden.
inline CountReport full_report(int n, const ReportOptions& opts = {}) {
    if (n < 1) throw Error("order must be positive");
    CountReport r;
    r.order = n;

    auto run = [&](Engine e, bool enabled, auto&& engine) -> std::optional<Count> {
        if (!enabled) return std::nullopt;
        Count c = engine();
        if (opts.inject_fault == e) c += 1;
        return c;
    };

    const auto& limits = opts.brute.limits;
    const bool brute_allowed = n <= limits.ceiling || limits.override_ceiling;
    r.brute_force_count = run(Engine::BruteForce, opts.brute_force && brute_allowed,
                              [&] { return count_brute_force(n, opts.brute); });
    r.subset_count = run(Engine::Subset, opts.subset, [&] { return count_subsets(n); });
    r.recurrence_count =
        run(Engine::Recurrence, opts.recurrence, [&] { return count_recurrence(n); });
    r.closed_form_count =
        run(Engine::ClosedForm, opts.closed_form, [&] { return count_closed_form(n); });
    if (opts.maximal && n % 3 == 2)
        r.maximal_count = count_subsets_of_size(n, 2 * ((n + 1) / 3) - 1);
    r.agree = counts_agree(r);
    return r;
}

} // namespace mesa
