#pragma once

#include <string>

#include "json.hpp"

#include "gpos/search.hpp"

namespace gpos {

/// One (graph, invariant) result row of the reporting CLI.
struct ReportRecord {
    std::string graph_id;
    std::string invariant;
    InvariantValue value;
    long long elapsed_ms = 0;

    nlohmann::ordered_json to_json(bool with_timing) const {
        nlohmann::ordered_json j;
        j["graph"] = graph_id;
        j["invariant"] = invariant;
        switch (value.kind) {
        case InvariantValue::Kind::finite:
            j["value"] = value.value;
            j["witness"] = value.witness.to_vector();
            break;
        case InvariantValue::Kind::infinite:
            j["value"] = "INFINITE";
            break;
        case InvariantValue::Kind::inconclusive:
            j["value"] = "INCONCLUSIVE";
            j["cap"] = value.cap;
            break;
        }
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    static std::string csv_header(bool with_timing) {
        std::string h = "graph,invariant,value,cap,witness";
        if (with_timing) h += ",elapsed_ms";
        return h;
    }

    std::string to_csv(bool with_timing) const {
        auto quote = [](const std::string& s) {
            if (s.find_first_of(",\"") == std::string::npos) return s;
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        };
        std::string witness;
        if (value.is_finite()) {
            bool first = true;
            value.witness.for_each([&](int v) {
                if (!first) witness += ' ';
                witness += std::to_string(v);
                first = false;
            });
        }
        std::string row = quote(graph_id) + "," + invariant + "," + value.value_string() + "," +
                          quote(value.cap) + "," + witness;
        if (with_timing) row += "," + std::to_string(elapsed_ms);
        return row;
    }
};

} // namespace gpos
