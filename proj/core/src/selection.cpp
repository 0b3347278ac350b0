#include "spincamo/selection.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "spincamo/rng.hpp"

namespace spincamo {

std::vector<int> eligible_gates(const Circuit& c) {
    std::vector<int> ids;
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::Dff || g.kind == GateKind::Const0 || g.kind == GateKind::Const1)
            continue;
        ids.push_back(g.id);
    }
    return ids;
}

SelectionRecord select_gates(const Circuit& c, double fraction, uint64_t seed) {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw Error("fraction must be in (0, 1], got " + std::to_string(fraction));
    if (!c.combinational()) throw Error("gate selection requires a combinational circuit");
    std::vector<int> pool = eligible_gates(c);
    if (pool.empty()) throw Error("circuit " + c.name() + " has no eligible gates");

    const size_t take = static_cast<size_t>(std::llround(fraction * static_cast<double>(pool.size())));
    SelectionRecord record;
    record.benchmark = c.name();
    record.seed = seed;
    record.fraction = fraction;
    record.rng_algorithm = kRngAlgorithm;
    record.eligible_count = pool.size();

    Rng rng(hash_combine(seed, 0x73656c65ull));
    rng.partial_shuffle(pool, take);
    record.gate_ids.assign(pool.begin(), pool.begin() + static_cast<long>(take));
    std::sort(record.gate_ids.begin(), record.gate_ids.end());
    return record;
}

void check_selection(const Circuit& c, const SelectionRecord& record) {
    std::vector<int> pool = eligible_gates(c);
    if (record.eligible_count != pool.size())
        throw Error("selection record does not match circuit: eligible gate count differs");
    std::vector<uint8_t> ok(c.gates().size(), 0);
    for (int id : pool) ok[static_cast<size_t>(id)] = 1;
    std::vector<uint8_t> seen(c.gates().size(), 0);
    for (int id : record.gate_ids) {
        if (id < 0 || static_cast<size_t>(id) >= c.gates().size() || !ok[static_cast<size_t>(id)])
            throw Error("selection contains ineligible gate id " + std::to_string(id));
        if (seen[static_cast<size_t>(id)]++)
            throw Error("selection contains duplicate gate id " + std::to_string(id));
    }
}

std::string SelectionRecord::to_json() const {
    nlohmann::json j;
    j["format"] = "spincamo.selection.v1";
    j["benchmark"] = benchmark;
    j["seed"] = seed;
    j["fraction"] = fraction;
    j["rng"] = rng_algorithm;
    j["eligible_count"] = eligible_count;
    j["gate_ids"] = gate_ids;
    return j.dump(2);
}

SelectionRecord SelectionRecord::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "spincamo.selection.v1")
        throw Error("not a selection record");
    SelectionRecord r;
    r.benchmark = j.at("benchmark").get<std::string>();
    r.seed = j.at("seed").get<uint64_t>();
    r.fraction = j.at("fraction").get<double>();
    r.rng_algorithm = j.value("rng", "");
    r.eligible_count = j.at("eligible_count").get<size_t>();
    r.gate_ids = j.at("gate_ids").get<std::vector<int>>();
    return r;
}

}  // namespace spincamo
