#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spincamo/common.hpp"
#include "spincamo/truth_table.hpp"

namespace spincamo {

enum class GateKind : uint8_t {
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Inv,
    Buf,
    Dff,
    Const0,
    Const1,
};

std::string to_string(GateKind kind);
int gate_arity(GateKind kind);
bool is_combinational(GateKind kind);

/// Two-input table of a combinational gate with fanins read as (a, b).
/// One-input kinds embed as functions of input A.
TruthTable gate_truth_table(GateKind kind);

struct Gate {
    int id = -1;  // index into Circuit::gates()
    GateKind kind = GateKind::Buf;
    std::vector<NetId> fanin;
    NetId out = -1;
};

/// Immutable gate-level netlist. Nets are interned integers; original names
/// are kept for diagnostics and BENCH round trips. Construction validates
/// the structural invariants (single driver per net, arity, acyclicity of
/// the combinational core) and fixes a deterministic topological order.
class Circuit {
public:
    static Circuit build(std::string name, std::vector<std::string> net_names,
                         std::vector<NetId> inputs, std::vector<NetId> outputs,
                         std::vector<Gate> gates);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& net_names() const { return net_names_; }
    const std::string& net_name(NetId n) const { return net_names_[static_cast<size_t>(n)]; }
    size_t net_count() const { return net_names_.size(); }

    const std::vector<NetId>& inputs() const { return inputs_; }
    const std::vector<NetId>& outputs() const { return outputs_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& gate(int id) const { return gates_[static_cast<size_t>(id)]; }

    /// Driving gate id for a net, or -1 when the net is a primary input.
    int driver(NetId n) const { return driver_[static_cast<size_t>(n)]; }
    bool is_primary_input(NetId n) const { return driver_[static_cast<size_t>(n)] < 0; }

    /// Gate ids in a deterministic topological order (DFF gates last).
    const std::vector<int>& topo_order() const { return topo_; }

    bool combinational() const { return dff_count_ == 0; }
    int dff_count() const { return dff_count_; }

    std::optional<NetId> find_net(const std::string& name) const;

private:
    Circuit() = default;

    std::string name_;
    std::vector<std::string> net_names_;
    std::vector<NetId> inputs_;
    std::vector<NetId> outputs_;
    std::vector<Gate> gates_;
    std::vector<int> driver_;
    std::vector<int> topo_;
    int dff_count_ = 0;
};

/// Parse BENCH text. Gates with more than two inputs are decomposed into
/// balanced two-input trees; the circuit name defaults to `name`.
Circuit parse_bench(std::istream& in, const std::string& name = "circuit");
Circuit parse_bench_string(const std::string& text, const std::string& name = "circuit");
Circuit parse_bench_file(const std::string& path);

void write_bench(const Circuit& c, std::ostream& out);
std::string write_bench_string(const Circuit& c);
void write_bench_file(const Circuit& c, const std::string& path);

/// Scan-style preprocessing: every DFF data input becomes a primary output,
/// every DFF output a primary input, and the DFF gates are dropped.
Circuit strip_flip_flops(const Circuit& c);

/// Single-pattern evaluation in topological order. `assignment[i]` drives
/// `inputs()[i]`; the result follows `outputs()` order.
std::vector<uint8_t> evaluate(const Circuit& c, std::span<const uint8_t> assignment);

/// 64-way bit-parallel evaluation: lane k of every word carries pattern k.
std::vector<uint64_t> evaluate_words(const Circuit& c, std::span<const uint64_t> assignment);

/// Name-preserving structural equality: same inputs/outputs by name and the
/// same driver kind and fanin names behind every net. Gate order may differ.
bool structurally_equal(const Circuit& a, const Circuit& b);

/// Functional equality on all 2^|PI| patterns; |PI| <= max_inputs guards cost.
bool exhaustively_equivalent(const Circuit& a, const Circuit& b, int max_inputs = 24);

}  // namespace spincamo
