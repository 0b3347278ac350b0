#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spincamo/function_set.hpp"
#include "spincamo/netlist.hpp"
#include "spincamo/selection.hpp"

namespace spincamo {

enum class CamoMode : uint8_t {
    Substituted,  // the gate itself became a keyed primitive
    SeriesStage,  // a keyed INV/BUF-capable stage was inserted after the gate
};

struct CamoGate {
    int gate_id = -1;         // gate id in the locked skeleton
    int source_gate_id = -1;  // gate id in the original circuit (audit)
    CamoMode mode = CamoMode::Substituted;
    int key_offset = 0;
    int key_width = 0;  // ceil(log2 |members|); zero for singleton sets
    std::vector<TruthTable> members;
    // Index of the member the correct key selects. Known only on the
    // defender side; instances loaded from locked files carry -1.
    int correct_index = -1;
};

/// A circuit whose protected gates are key-indexed lookup primitives. The
/// skeleton keeps the full topology with placeholder gates standing in for
/// the primitives; everything function-related lives in `camo()`.
class LockedCircuit {
public:
    LockedCircuit(Circuit skeleton, std::vector<CamoGate> camo, int key_length,
                  std::vector<uint8_t> correct_key, SelectionRecord selection,
                  std::string set_name);

    const Circuit& skeleton() const { return skeleton_; }
    const std::vector<CamoGate>& camo() const { return camo_; }
    /// Index into camo() for a skeleton gate id, or -1 if the gate is plain.
    int camo_index(int gate_id) const;

    int key_length() const { return key_length_; }
    /// Correct key bits; empty when this instance was loaded from a locked
    /// file (the file format never contains the key).
    const std::vector<uint8_t>& correct_key() const { return correct_key_; }
    bool has_correct_key() const { return !correct_key_.empty() || key_length_ == 0; }

    const SelectionRecord& selection() const { return selection_; }
    const std::string& set_name() const { return set_name_; }

    /// Serialization of everything an attacker may see (no key material).
    std::string to_json() const;
    static LockedCircuit from_json(const std::string& text);

private:
    Circuit skeleton_;
    std::vector<CamoGate> camo_;
    std::vector<int> camo_of_gate_;
    int key_length_ = 0;
    std::vector<uint8_t> correct_key_;
    SelectionRecord selection_;
    std::string set_name_;
};

/// Replace every selected gate with a keyed primitive cloaking `set`.
/// Gates whose function the set can express directly are substituted; when
/// that fails and the set carries INV and BUF, a keyed stage is inserted
/// after the gate instead. Anything else is an error.
LockedCircuit camouflage(const Circuit& c, const SelectionRecord& selection,
                         const FunctionSet& set);

/// Materialize the plain circuit a key selects. Key codes outside a
/// primitive's member range are rejected.
Circuit decode(const LockedCircuit& locked, std::span<const uint8_t> key);

/// Per-primitive key codes, little-endian within each span.
std::vector<uint32_t> key_codes(const LockedCircuit& locked, std::span<const uint8_t> key);

std::string key_to_hex(std::span<const uint8_t> bits);
std::vector<uint8_t> key_from_hex(const std::string& hex, int key_length);

/// Secret-key sidecar file content ("spincamo.secret.v1").
std::string secret_to_json(const LockedCircuit& locked);
std::vector<uint8_t> secret_from_json(const std::string& text, const LockedCircuit& locked);

}  // namespace spincamo
