#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "spincamo/common.hpp"

namespace spincamo {

// A two-input Boolean function as a 4-bit table. Bit position (2a + b)
// holds f(a, b), so ids run 0..15:
//   FALSE=0  NOR=1  AND=8  OR=14  NAND=7  XOR=6  XNOR=9  TRUE=15
//   BUF(A)=12  INV(A)=3  BUF(B)=10  INV(B)=5
class TruthTable {
public:
    TruthTable() = default;
    explicit constexpr TruthTable(int id) : id_(static_cast<uint8_t>(id)) {
        if (id < 0 || id > 15) throw Error("truth table id out of range: " + std::to_string(id));
    }

    constexpr int id() const { return id_; }
    constexpr bool eval(bool a, bool b) const { return (id_ >> ((a ? 2 : 0) | (b ? 1 : 0))) & 1; }

    /// Restriction to tied inputs f(y, y); true when the table acts as a
    /// single-input function of y with values (f(0,0), f(1,1)).
    constexpr bool eval_tied(bool y) const { return eval(y, y); }

    constexpr bool operator==(const TruthTable&) const = default;
    constexpr auto operator<=>(const TruthTable&) const = default;

    std::string name() const;

private:
    uint8_t id_ = 0;
};

inline constexpr TruthTable tt_false{0}, tt_nor{1}, tt_inv_a{3}, tt_inv_b{5}, tt_xor{6},
    tt_nand{7}, tt_and{8}, tt_xnor{9}, tt_buf_b{10}, tt_buf_a{12}, tt_or{14}, tt_true{15};

inline std::string TruthTable::name() const {
    static const std::array<const char*, 16> names = {
        "FALSE", "NOR",  "NOTA_AND_B", "INV_A", "A_AND_NOTB", "INV_B", "XOR", "NAND",
        "AND",   "XNOR", "BUF_B",      "NOTA_OR_B", "BUF_A",  "A_OR_NOTB", "OR", "TRUE"};
    return names[id_];
}

}  // namespace spincamo
