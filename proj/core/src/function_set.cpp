#include "spincamo/function_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "spincamo/common.hpp"

namespace spincamo {

namespace {

bool is_one_input_table(TruthTable t) {
    // Depends on at most one of the two inputs (constants count as neither).
    const int id = t.id();
    bool dep_a = ((id >> 2) & 3) != (id & 3);
    bool dep_b = ((id & 1) != ((id >> 1) & 1)) || (((id >> 2) & 1) != ((id >> 3) & 1));
    return !(dep_a && dep_b);
}

}  // namespace

FunctionSet::FunctionSet(std::string name, std::vector<TruthTable> members)
    : name_(std::move(name)), members_(std::move(members)) {
    if (members_.empty()) throw Error("function set " + name_ + " is empty");
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("function set " + name_ + " has duplicate members");
}

bool FunctionSet::contains(TruthTable t) const {
    return std::find(members_.begin(), members_.end(), t) != members_.end();
}

int FunctionSet::key_bits_per_gate() const {
    return static_cast<int>(std::bit_width(members_.size() - 1));
}

ArityClass FunctionSet::arity_class() const {
    bool any_one = false, any_two = false;
    for (TruthTable t : members_)
        (is_one_input_table(t) ? any_one : any_two) = true;
    if (any_one && any_two) return ArityClass::Mixed;
    return any_one ? ArityClass::OneInput : ArityClass::TwoInput;
}

bool FunctionSet::supports_series_stage() const {
    return contains(tt_inv_a) && contains(tt_buf_a);
}

bool FunctionSet::subset_of(const FunctionSet& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](TruthTable t) { return other.contains(t); });
}

const std::vector<FunctionSet>& builtin_function_sets() {
    static const std::vector<FunctionSet> sets = [] {
        std::vector<FunctionSet> s;
        s.emplace_back("invbuf2", std::vector<TruthTable>{tt_inv_a, tt_buf_a});
        s.emplace_back("lookalike3", std::vector<TruthTable>{tt_nand, tt_nor, tt_xor});
        s.emplace_back("sinw4", std::vector<TruthTable>{tt_nand, tt_nor, tt_xor, tt_xnor});
        s.emplace_back("quad4", std::vector<TruthTable>{tt_and, tt_or, tt_nand, tt_nor});
        s.emplace_back("lut6",
                       std::vector<TruthTable>{tt_nand, tt_nor, tt_xor, tt_xnor, tt_and, tt_or});
        s.emplace_back("dwm8", std::vector<TruthTable>{tt_nand, tt_nor, tt_xor, tt_xnor, tt_and,
                                                       tt_or, tt_inv_a, tt_buf_a});
        std::vector<TruthTable> all;
        for (int i = 0; i < 16; ++i) all.emplace_back(i);
        s.emplace_back("gshe16", std::move(all));
        return s;
    }();
    return sets;
}

std::optional<FunctionSet> find_function_set(const std::string& name) {
    for (const auto& s : builtin_function_sets())
        if (s.name() == name) return s;
    return std::nullopt;
}

FunctionSet parse_function_set_spec(const std::string& spec) {
    if (auto preset = find_function_set(spec)) return *preset;
    const std::string prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<TruthTable> members;
        std::stringstream ss(spec.substr(prefix.size()));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            members.emplace_back(std::stoi(tok));
        }
        return FunctionSet(spec, std::move(members));
    }
    throw Error("unknown function set: " + spec);
}

}  // namespace spincamo
