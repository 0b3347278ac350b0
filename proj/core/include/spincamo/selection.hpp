#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spincamo/netlist.hpp"

namespace spincamo {

/// Gate ids eligible for protection: combinational, arity <= 2, non-constant.
std::vector<int> eligible_gates(const Circuit& c);

/// A memorized random gate selection, replayable across primitive families so
/// different function sets protect exactly the same gates.
struct SelectionRecord {
    std::string benchmark;
    uint64_t seed = 0;
    double fraction = 0.0;
    std::string rng_algorithm;   // see kRngAlgorithm
    size_t eligible_count = 0;   // guards against reapplying to a different netlist
    std::vector<int> gate_ids;   // ascending

    std::string to_json() const;
    static SelectionRecord from_json(const std::string& text);
};

/// Uniform sample without replacement of round(fraction * #eligible) gates.
/// Deterministic in (circuit, fraction, seed).
SelectionRecord select_gates(const Circuit& c, double fraction, uint64_t seed);

/// Validates a (possibly deserialized or hand-built) record against a circuit.
void check_selection(const Circuit& c, const SelectionRecord& record);

}  // namespace spincamo
