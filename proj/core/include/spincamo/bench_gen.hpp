#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spincamo/netlist.hpp"

namespace spincamo {

/// Recipe for a seeded synthetic benchmark: a wide shallow bulk, one long
/// chain so the delay profile is skewed (few critical paths, many short
/// ones), optional flip-flops, and output trees that sweep up dangling nets.
struct GenProfile {
    std::string name;
    int n_inputs = 8;
    int n_outputs = 4;
    int n_gates = 100;  // bulk + chain target; output trees add a few more
    int chain_len = 20;
    int n_dffs = 0;
    uint64_t seed = 1;
};

Circuit generate_circuit(const GenProfile& profile);

/// Profiles shipped with the workbench. Input/output counts of the c*, b14
/// and ex1010 entries follow the published benchmark characteristics; the
/// internal structure is synthetic.
const std::vector<GenProfile>& builtin_profiles();
std::optional<GenProfile> find_profile(const std::string& name);

}  // namespace spincamo
