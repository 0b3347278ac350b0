#include "spincamo/bench_gen.hpp"

#include <algorithm>
#include <deque>

#include "spincamo/rng.hpp"

namespace spincamo {

namespace {

GateKind pick_bulk_kind(Rng& rng) {
    // Weighted toward the four basic NAND/NOR-family gates.
    const uint64_t roll = rng.below(100);
    if (roll < 18) return GateKind::And;
    if (roll < 36) return GateKind::Nand;
    if (roll < 54) return GateKind::Or;
    if (roll < 72) return GateKind::Nor;
    if (roll < 79) return GateKind::Xor;
    if (roll < 86) return GateKind::Xnor;
    if (roll < 96) return GateKind::Inv;
    return GateKind::Buf;
}

GateKind pick_fold_kind(Rng& rng) {
    switch (rng.below(4)) {
        case 0: return GateKind::Xor;
        case 1: return GateKind::And;
        case 2: return GateKind::Or;
        default: return GateKind::Nand;
    }
}

GateKind pick_chain_kind(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return GateKind::Nand;
        case 1: return GateKind::Nor;
        default: return GateKind::Xor;
    }
}

}  // namespace

Circuit generate_circuit(const GenProfile& p) {
    if (p.n_inputs < 1 || p.n_outputs < 1) throw Error("profile needs at least one input and output");
    Rng rng(hash_combine(p.seed, 0x67656e62ull));

    std::vector<std::string> net_names;
    std::vector<NetId> avail;       // nets usable as fanin
    std::vector<uint32_t> usage;    // fanin reference count, indexed like net_names
    auto new_net = [&](const std::string& name) {
        NetId id = static_cast<NetId>(net_names.size());
        net_names.push_back(name);
        usage.push_back(0);
        return id;
    };
    auto use = [&](NetId n) {
        ++usage[static_cast<size_t>(n)];
        return n;
    };

    std::vector<NetId> inputs;
    for (int i = 0; i < p.n_inputs; ++i) {
        NetId n = new_net("in" + std::to_string(i));
        inputs.push_back(n);
        avail.push_back(n);
    }
    std::vector<NetId> state_nets;  // DFF outputs, usable as fanin everywhere
    for (int i = 0; i < p.n_dffs; ++i) {
        NetId n = new_net("s" + std::to_string(i));
        state_nets.push_back(n);
        avail.push_back(n);
    }

    std::vector<Gate> gates;
    auto pick_recent = [&]() {
        const size_t window = std::max<size_t>(8, avail.size() / 4);
        if (rng.chance(0.6) && avail.size() > window) {
            size_t lo = avail.size() - window;
            return avail[lo + static_cast<size_t>(rng.below(window))];
        }
        return avail[static_cast<size_t>(rng.below(avail.size()))];
    };
    auto pick_any = [&]() { return avail[static_cast<size_t>(rng.below(avail.size()))]; };

    int internal = 0;
    auto emit = [&](GateKind kind, std::vector<NetId> fanin, const std::string& name) {
        NetId out = new_net(name.empty() ? "n" + std::to_string(internal++) : name);
        for (NetId f : fanin) use(f);
        gates.push_back(Gate{-1, kind, std::move(fanin), out});
        avail.push_back(out);
        return out;
    };

    const int bulk = std::max(0, p.n_gates - p.chain_len);
    for (int i = 0; i < bulk; ++i) {
        GateKind kind = pick_bulk_kind(rng);
        if (gate_arity(kind) == 1) {
            emit(kind, {pick_recent()}, "");
        } else {
            NetId a = pick_recent();
            NetId b = pick_any();
            for (int tries = 0; b == a && tries < 8; ++tries) b = pick_any();
            emit(kind, {a, b}, "");
        }
    }

    NetId chain_tail = avail.back();
    for (int i = 0; i < p.chain_len; ++i)
        chain_tail = emit(pick_chain_kind(rng), {chain_tail, pick_any()}, "");

    for (int i = 0; i < p.n_dffs; ++i) {
        // Data comes from the deeper half so state depends on real logic.
        size_t lo = avail.size() / 2;
        NetId data = avail[lo + static_cast<size_t>(rng.below(avail.size() - lo))];
        use(data);
        gates.push_back(Gate{-1, GateKind::Dff, {data}, state_nets[static_cast<size_t>(i)]});
    }

    // Sweep dangling nets into per-output fold trees; the chain tail goes
    // first so the longest path always reaches a primary output.
    std::deque<NetId> dangling;
    dangling.push_back(chain_tail);
    for (NetId n : avail)
        if (usage[static_cast<size_t>(n)] == 0 && n != chain_tail) dangling.push_back(n);

    std::vector<NetId> outputs;
    for (int j = 0; j < p.n_outputs; ++j) {
        const int remaining_outputs = p.n_outputs - j;
        size_t share = (dangling.size() + static_cast<size_t>(remaining_outputs) - 1) /
                       static_cast<size_t>(remaining_outputs);
        share = std::max<size_t>(share, 1);
        std::vector<NetId> cand;
        while (cand.size() < share && !dangling.empty()) {
            cand.push_back(dangling.front());
            dangling.pop_front();
        }
        if (cand.empty()) cand.push_back(pick_any());
        const std::string out_name = "out" + std::to_string(j);
        if (cand.size() == 1) {
            emit(GateKind::Buf, {cand[0]}, out_name);
        } else {
            NetId acc = cand[0];
            for (size_t i = 1; i < cand.size(); ++i) {
                bool last = i + 1 == cand.size();
                acc = emit(pick_fold_kind(rng), {acc, cand[i]}, last ? out_name : "");
            }
        }
        outputs.push_back(avail.back());
    }

    return Circuit::build(p.name, std::move(net_names), std::move(inputs), std::move(outputs),
                          std::move(gates));
}

const std::vector<GenProfile>& builtin_profiles() {
    static const std::vector<GenProfile> profiles = {
        {"c432", 36, 7, 180, 85, 0, 432001},
        {"c880", 60, 26, 360, 90, 0, 880001},
        {"c1908", 33, 25, 400, 95, 0, 1908001},
        {"c7552", 207, 108, 2000, 110, 0, 7552001},
        {"ex1010", 10, 10, 420, 85, 0, 1010001},
        {"b14c", 32, 54, 1150, 95, 245, 14001},
    };
    return profiles;
}

std::optional<GenProfile> find_profile(const std::string& name) {
    for (const auto& p : builtin_profiles())
        if (p.name == name) return p;
    return std::nullopt;
}

}  // namespace spincamo
