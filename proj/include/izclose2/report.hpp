#pragma once

#include <string>

#include <json.hpp>

#include "construct.hpp"
#include "modrank2.hpp"
#include "staircase.hpp"

namespace izclose2 {

/// JSON serialization of results, schema "izclose2/1". Every polynomial and
/// matrix is rendered in the documented text grammars, so reports can be fed
/// back into the parsers unchanged.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "izclose2/1";

inline Json to_json(const GL2Change& change) {
    return Json::array({Json::array({rat_to_string(change.u[0][0]), rat_to_string(change.u[0][1])}),
                        Json::array({rat_to_string(change.u[1][0]), rat_to_string(change.u[1][1])})});
}

inline Json to_json(const TranscriptOp& op) {
    Json j;
    switch (op.kind) {
    case TranscriptOp::Kind::RowChange:
        j["op"] = "row_change";
        j["matrix"] = to_json(op.row_change);
        break;
    case TranscriptOp::Kind::SwapVars:
        j["op"] = "swap_vars";
        break;
    case TranscriptOp::Kind::Adjoin:
        j["op"] = "adjoin";
        j["column"] = Json::array({to_string(op.column.first), to_string(op.column.second)});
        break;
    case TranscriptOp::Kind::ColAddMultiple:
        j["op"] = "col_add_multiple";
        j["dst"] = op.dst;
        j["src"] = op.src;
        j["coeff"] = to_string(op.coeff);
        break;
    case TranscriptOp::Kind::RemoveZero:
        j["op"] = "remove_zero";
        j["index"] = op.dst;
        break;
    case TranscriptOp::Kind::Permute:
        j["op"] = "permute";
        j["perm"] = op.perm;
        break;
    }
    return j;
}

inline Json to_json(const Transcript& transcript) {
    Json out = Json::array();
    for (const auto& op : transcript) out.push_back(to_json(op));
    return out;
}

inline Json to_json(const Certificate& cert) {
    Json facts = Json::array();
    for (const auto& [name, value] : cert.facts)
        facts.push_back(Json{{"name", name}, {"value", value}});
    return Json{{"kind", to_string(cert.kind)}, {"facts", facts}};
}

inline Json to_json(const Witness& witness, const WitnessChecks& checks) {
    Json jc = Json::array();
    for (const auto& [name, passed] : checks.checks)
        jc.push_back(Json{{"name", name}, {"passed", passed}});
    return Json{{"matrix", witness.module.render()},
                {"minimal_matrix", witness.minimal.render()},
                {"mu", witness.mu},
                {"certificate", to_json(witness.certificate)},
                {"checks", jc},
                {"verified", checks.all_passed}};
}

inline Json to_json(const Obstruction& obs) {
    return Json{{"m", obs.params.m},
                {"n", obs.params.n},
                {"family_ideal", obs.params.ideal().render_generators()},
                {"canonical_matrix", obs.canonical.render()},
                {"summands", Json::array({obs.summands.first.render_generators(),
                                          obs.summands.second.render_generators()})},
                {"transcript", to_json(obs.transcript)}};
}

inline Json to_json(const ClassificationResult& result, const Staircase& ideal) {
    Json j{{"verdict", to_string(result.verdict)}, {"branch", to_string(result.branch)}};
    if (!result.note.empty()) j["note"] = result.note;
    if (result.witness) j["witness"] = to_json(*result.witness, verify_witness(*result.witness, ideal));
    if (result.obstruction) j["obstruction"] = to_json(*result.obstruction);
    return j;
}

inline Json to_json(const ClosureResult& closure) {
    Json added = Json::array();
    for (const auto& col : closure.new_elements)
        added.push_back(Json::array({to_string(col.first), to_string(col.second)}));
    return Json{{"closed", closure.closed},
                {"closure_matrix", closure.closure_gens.render()},
                {"new_elements", added},
                {"cutoff", closure.cutoff}};
}

inline Json to_json(const std::vector<SimpleFactor>& factors) {
    Json out = Json::array();
    for (const auto& f : factors)
        out.push_back(Json{{"d", f.d},
                           {"e", f.e},
                           {"mult", f.mult},
                           {"simple_ideal", newton_closure({{f.d, 0}, {0, f.e}}).render_generators()}});
    return out;
}

/// Report envelope shared by every CLI command.
inline Json make_report(const std::string& command, const std::string& input,
                        std::uint64_t seed, int degree_bound) {
    return Json{{"schema", kReportSchema},
                {"command", command},
                {"input", input},
                {"seed", seed},
                {"degree_bound", degree_bound}};
}

} // namespace izclose2
