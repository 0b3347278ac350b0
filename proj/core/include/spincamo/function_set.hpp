#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincamo/truth_table.hpp"

namespace spincamo {

enum class ArityClass { OneInput, TwoInput, Mixed };

/// Ordered, duplicate-free list of two-input tables a polymorphic primitive
/// can cloak. Key codes index into `members`, so the order is part of the
/// locked-circuit contract.
class FunctionSet {
public:
    FunctionSet(std::string name, std::vector<TruthTable> members);

    const std::string& name() const { return name_; }
    const std::vector<TruthTable>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool contains(TruthTable t) const;

    /// Key bits needed to index one primitive: ceil(log2 |members|).
    int key_bits_per_gate() const;

    ArityClass arity_class() const;

    /// True when the set can realize a keyed identity/inverter stage,
    /// i.e. it contains both INV(A) and BUF(A).
    bool supports_series_stage() const;

    /// Subset relation on the underlying table sets (order ignored).
    bool subset_of(const FunctionSet& other) const;

private:
    std::string name_;
    std::vector<TruthTable> members_;
};

/// Named presets mirroring common primitive families:
///   invbuf2        {INV, BUF}
///   lookalike3     {NAND, NOR, XOR}
///   sinw4          {NAND, NOR, XOR, XNOR}   (overridable; exact set not pinned)
///   quad4          {AND, OR, NAND, NOR}
///   lut6           {NAND, NOR, XOR, XNOR, AND, OR}
///   dwm8           {NAND, NOR, XOR, XNOR, AND, OR, INV, BUF}
///   gshe16         all 16 two-input functions
const std::vector<FunctionSet>& builtin_function_sets();
std::optional<FunctionSet> find_function_set(const std::string& name);

/// Accepts a preset name or "custom:<id>,<id>,..." with table ids 0..15.
FunctionSet parse_function_set_spec(const std::string& spec);

}  // namespace spincamo
