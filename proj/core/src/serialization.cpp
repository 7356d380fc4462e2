#include "exch/serialization.hpp"

#include <fstream>

#include "exch/errors.hpp"

namespace exch {

namespace {

std::vector<Symbol> alphabet_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw validation_error("alphabet must be a non-empty JSON array");
    std::vector<Symbol> a;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw validation_error("alphabet symbols must be integers");
        a.push_back(v.get<Symbol>());
    }
    return a;
}

} // namespace

Json space_to_json(const StateSpace& space) {
    Json j;
    switch (space.kind()) {
        case SpaceKind::Sequence:
            j["kind"] = "sequence";
            j["length"] = space.blocks().front().length;
            j["alphabet"] = space.blocks().front().alphabet;
            break;
        case SpaceKind::Array:
            j["kind"] = "array";
            j["rows"] = space.rows();
            j["cols"] = space.cols();
            j["alphabet"] = space.blocks().front().alphabet;
            break;
        case SpaceKind::Blocked: {
            j["kind"] = "blocked";
            Json blocks = Json::array();
            for (const Block& b : space.blocks()) blocks.push_back(Json{{"length", b.length}, {"alphabet", b.alphabet}});
            j["blocks"] = blocks;
            break;
        }
    }
    return j;
}

StateSpace space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw validation_error("state space JSON needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "sequence")
            return StateSpace::sequence(j.at("length").get<int>(), alphabet_from_json(j.at("alphabet")));
        if (kind == "array")
            return StateSpace::array(j.at("rows").get<int>(), j.at("cols").get<int>(),
                                     alphabet_from_json(j.at("alphabet")));
        if (kind == "blocked") {
            std::vector<Block> blocks;
            for (const auto& bj : j.at("blocks"))
                blocks.push_back(Block{bj.at("length").get<int>(), alphabet_from_json(bj.at("alphabet"))});
            return StateSpace::blocked(std::move(blocks));
        }
    } catch (const Json::exception& e) {
        throw validation_error(std::string("malformed state space JSON: ") + e.what());
    }
    throw validation_error("unknown state space kind '" + kind + "'");
}

Json distribution_to_json(const FiniteDistribution& P) {
    Json j;
    j["space"] = space_to_json(P.space());
    Json mass = Json::object();
    for (const auto& [idx, m] : P.mass()) mass[P.space().format_state(P.space().decode(idx))] = rational_str(m);
    j["mass"] = mass;
    return j;
}

FiniteDistribution distribution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("mass"))
        throw validation_error("distribution JSON needs \"space\" and \"mass\"");
    StateSpace space = space_from_json(j.at("space"));
    FiniteDistribution P(space);
    for (const auto& [key, val] : j.at("mass").items()) {
        if (!val.is_string()) throw validation_error("mass values must be rational strings");
        P.add(space.encode(space.parse_state(key)), parse_rational(val.get<std::string>()));
    }
    return P;
}

Json action_to_json(const GroupAction& action) {
    Json j;
    switch (action.kind()) {
        case ActionKind::Sequence:
            j["kind"] = "sequence";
            j["m"] = action.factor_sizes()[0];
            j["alphabet"] = action.space().blocks().front().alphabet;
            break;
        case ActionKind::JointRowCol:
            j["kind"] = "joint_row_col";
            j["m"] = action.factor_sizes()[0];
            j["alphabet"] = action.space().blocks().front().alphabet;
            break;
        case ActionKind::SeparateRowCol:
            j["kind"] = "separate_row_col";
            j["m"] = action.factor_sizes()[0];
            j["n"] = action.factor_sizes()[1];
            j["alphabet"] = action.space().blocks().front().alphabet;
            break;
        case ActionKind::BlockedSequences: {
            j["kind"] = "blocked_sequences";
            Json blocks = Json::array();
            for (const Block& b : action.space().blocks())
                blocks.push_back(Json{{"length", b.length}, {"alphabet", b.alphabet}});
            j["blocks"] = blocks;
            break;
        }
    }
    return j;
}

GroupAction action_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw validation_error("group action JSON needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "sequence") return GroupAction::sequence(j.at("m").get<int>(), alphabet_from_json(j.at("alphabet")));
        if (kind == "joint_row_col")
            return GroupAction::joint_row_col(j.at("m").get<int>(), alphabet_from_json(j.at("alphabet")));
        if (kind == "separate_row_col")
            return GroupAction::separate_row_col(j.at("m").get<int>(), j.at("n").get<int>(),
                                                 alphabet_from_json(j.at("alphabet")));
        if (kind == "blocked_sequences") {
            std::vector<Block> blocks;
            for (const auto& bj : j.at("blocks"))
                blocks.push_back(Block{bj.at("length").get<int>(), alphabet_from_json(bj.at("alphabet"))});
            return GroupAction::blocked_sequences(std::move(blocks));
        }
    } catch (const Json::exception& e) {
        throw validation_error(std::string("malformed group action JSON: ") + e.what());
    }
    throw validation_error("unknown group action kind '" + kind + "'");
}

Json orbit_table_to_json(const OrbitTable& table, bool include_members) {
    Json arr = Json::array();
    for (std::size_t o = 0; o < table.orbit_count(); ++o) {
        Json entry;
        entry["representative"] = table.space.format_state(table.space.decode(table.representative[o]));
        entry["size"] = table.size[o];
        if (include_members) {
            Json members = Json::array();
            for (std::uint64_t idx : table.members(static_cast<std::int32_t>(o)))
                members.push_back(table.space.format_state(table.space.decode(idx)));
            entry["members"] = members;
        }
        arr.push_back(entry);
    }
    return arr;
}

Json mixing_measure_to_json(const MixingMeasure& mu) {
    Json arr = Json::array();
    for (const MixingAtom& atom : mu.atoms) {
        Json a;
        Json comps = Json::array();
        for (const auto& comp : atom.components) {
            Json c = Json::array();
            for (const Rational& p : comp) c.push_back(rational_str(p));
            comps.push_back(c);
        }
        a["components"] = comps;
        a["weight"] = rational_str(atom.weight);
        arr.push_back(a);
    }
    return arr;
}

Json samples_to_json(const SampleSet& samples) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < samples.observations.size(); ++i) {
        long c = samples.counts.empty() ? 1 : samples.counts[i];
        std::string s = samples.space.format_state(samples.space.decode(samples.observations[i]));
        for (long r = 0; r < c; ++r) arr.push_back(s);
    }
    return arr;
}

SampleSet samples_from_json(const Json& j, const StateSpace& space) {
    if (!j.is_array()) throw validation_error("sample file must be a JSON array of state strings");
    SampleSet samples{space, {}, {}};
    std::map<std::uint64_t, long> counts;
    for (const auto& v : j) {
        if (!v.is_string()) throw validation_error("sample entries must be state strings");
        ++counts[space.encode(space.parse_state(v.get<std::string>()))];
    }
    for (const auto& [idx, c] : counts) {
        samples.observations.push_back(idx);
        samples.counts.push_back(c);
    }
    return samples;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw validation_error("cannot parse JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace exch
