#pragma once

/// JSON views of the report types. Timing stays in a separate
/// "elapsed_ms" field so comparable payloads are stable across runs.

#include <string>

#include <json.hpp>

#include "primal/class_algebra.hpp"
#include "primal/conjecture.hpp"
#include "primal/dioph_search.hpp"
#include "primal/table_engine.hpp"

namespace primal {

using nlohmann::json;

inline std::string op_name(OpKind op) {
    switch (op) {
    case OpKind::Add: return "add";
    case OpKind::Sub: return "sub";
    case OpKind::Mul: return "mul";
    case OpKind::Div: return "div";
    case OpKind::Pow: return "pow";
    }
    return "?";
}

inline json to_json(const ClassOpOutcome& o) {
    json a = json::array();
    for (auto r : o.results) a.push_back(r.label());
    return a;
}

inline json to_json(const AxiomReport& r) {
    json j;
    j["op"] = op_name(r.op);
    j["closure_ok"] = r.closure_ok;
    j["associativity_ok"] = r.associativity_ok;
    j["neutral_label"] = r.neutral_label.label();
    json pairs = json::array();
    for (auto [a, o] : r.opposite_pairs) pairs.push_back({a.label(), o.label()});
    j["opposite_pairs"] = pairs;
    json missing = json::array();
    for (auto l : r.labels_without_opposite) missing.push_back(l.label());
    j["labels_without_opposite"] = missing;
    if (r.cancellation_ok) j["cancellation_ok"] = *r.cancellation_ok;
    j["counterexamples"] = r.counterexamples;
    return j;
}

inline json to_json(const TableAudit& a) {
    json j;
    j["table_id"] = a.table_id;
    j["match_count"] = a.match_count;
    j["mismatch_count"] = a.mismatch_count;
    json ms = json::array();
    for (const auto& m : a.mismatches)
        ms.push_back({{"row", m.row_label.label()},
                      {"col", m.col},
                      {"paper", m.paper_cell},
                      {"computed", m.computed_cell}});
    j["mismatches"] = ms;
    return j;
}

inline json to_json(const WitnessReport& r) {
    json j;
    j["query"] = {{"op", op_name(r.query.op)},
                  {"class_a", r.query.class_a.label()},
                  {"class_b", r.query.class_b.label()},
                  {"target", r.query.target},
                  {"bound", r.query.bound}};
    json ws = json::array();
    for (auto [a, b] : r.witnesses) ws.push_back({a, b});
    j["witnesses"] = ws;
    j["exhausted"] = r.exhausted;
    j["universal"] = r.universal;
    j["scanned"] = r.scanned;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline json to_json(const PowerCycleReport& r) {
    json j;
    j["max_n"] = r.max_n;
    j["checks"] = r.checks;
    j["violations"] = r.violations;
    json b = json::array();
    for (const auto& c : r.boundary)
        b.push_back({{"label", c.label.label()},
                     {"at_n1", c.at_n1},
                     {"at_n7", c.at_n7},
                     {"cycle_holds_at_n1", c.cycle_holds_at_n1}});
    j["boundary_n1"] = b;
    return j;
}

inline json to_json(const ResidueProfile& p) {
    json j;
    j["exponent"] = p.exponent;
    j["attainable"] = p.attainable;
    json w = json::object();
    for (const auto& [r, triple] : p.witness_per_residue)
        w[std::to_string(r)] = triple;
    j["witness_per_residue"] = w;
    return j;
}

inline json to_json(const NinthPowerReport& r) {
    return json{{"bound", r.bound}, {"checks", r.checks}, {"violations", r.violations}};
}

inline json to_json(const FermatProfile& p) {
    return json{{"n", p.n},
                {"lhs_attainable", p.lhs_attainable},
                {"rhs_attainable", p.rhs_attainable},
                {"intersection", p.intersection},
                {"cycle_stable", p.cycle_stable}};
}

inline const char* status_name(KStatus s) {
    switch (s) {
    case KStatus::Solved: return "solved";
    case KStatus::FilteredOut: return "filtered-out";
    case KStatus::Exhausted: return "exhausted";
    }
    return "?";
}

inline json to_json(const SearchReport& r) {
    json j;
    j["config"] = {{"k_min", r.config.k_min},
                   {"k_max", r.config.k_max},
                   {"bound", r.config.bound},
                   {"exponent", r.config.exponent},
                   {"filter_enabled", r.config.filter_enabled}};
    json per_k = json::array();
    for (const auto& kr : r.per_k) {
        json solutions = json::array();
        for (const auto& s : kr.solutions) solutions.push_back(s);
        per_k.push_back(
            {{"k", kr.k}, {"status", status_name(kr.status)}, {"solutions", solutions}});
    }
    j["per_k"] = per_k;
    j["candidates_examined"] = r.candidates_examined;
    j["filter_skips"] = r.filter_skips;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

/// The report without its timing field; equal inputs give equal payloads.
inline json comparable_json(const SearchReport& r) {
    json j = to_json(r);
    j.erase("elapsed_ms");
    return j;
}

inline json to_json(const BenchResult& b) {
    return json{{"filtered", to_json(b.filtered)},
                {"unfiltered", to_json(b.unfiltered)},
                {"solution_sets_equal", b.solution_sets_equal},
                {"candidate_ratio", b.candidate_ratio},
                {"wallclock_ratio", b.wallclock_ratio}};
}

} // namespace primal
