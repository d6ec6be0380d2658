#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "mesa/dyck.hpp"
#include "mesa/enumeration.hpp"
#include "mesa/exact.hpp"
#include "mesa/set.hpp"
#include "mesa/stirling.hpp"

namespace mesa {

// Counts are JSON integers while they fit in 64 bits and decimal strings
// beyond that, so no consumer ever sees a rounded value.
inline nlohmann::json count_to_json(const Count& c) {
    if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(c);
    return c.str();
}

inline nlohmann::json count_to_json(const std::optional<Count>& c) {
    return c ? count_to_json(*c) : nlohmann::json(nullptr);
}

inline nlohmann::json to_json(const MesaSet& m) { return m.elements(); }

inline nlohmann::json to_json(const CountReport& r) {
    return {
        {"order", r.order},
        {"brute_force_count", count_to_json(r.brute_force_count)},
        {"subset_count", count_to_json(r.subset_count)},
        {"recurrence_count", count_to_json(r.recurrence_count)},
        {"closed_form_count", count_to_json(r.closed_form_count)},
        {"maximal_count", count_to_json(r.maximal_count)},
        {"agree", r.agree},
    };
}

inline const char* csv_header() {
    return "order,brute_force_count,subset_count,recurrence_count,closed_form_count,"
           "maximal_count,agree";
}

// Absent counts are empty fields.
inline std::string to_csv_row(const CountReport& r) {
    std::ostringstream os;
    auto field = [&](const std::optional<Count>& c) {
        os << ',';
        if (c) os << c->str();
    };
    os << r.order;
    field(r.brute_force_count);
    field(r.subset_count);
    field(r.recurrence_count);
    field(r.closed_form_count);
    field(r.maximal_count);
    os << ',' << (r.agree ? "true" : "false");
    return os.str();
}

inline std::string to_plain(const CountReport& r) {
    std::ostringstream os;
    auto line = [&](const char* name, const std::optional<Count>& c) {
        os << "  " << name << ": " << (c ? c->str() : std::string("skipped")) << '\n';
    };
    os << "|AMS_" << r.order << "|\n";
    line("brute force", r.brute_force_count);
    line("subset     ", r.subset_count);
    line("recurrence ", r.recurrence_count);
    line("closed form", r.closed_form_count);
    if (r.maximal_count) os << "  maximal sets: " << r.maximal_count->str() << '\n';
    os << "  engines " << (r.agree ? "agree" : "DISAGREE") << '\n';
    return os.str();
}

} // namespace mesa
