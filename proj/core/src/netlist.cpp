#include "spincamo/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace spincamo {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::And: return "AND";
        case GateKind::Nand: return "NAND";
        case GateKind::Or: return "OR";
        case GateKind::Nor: return "NOR";
        case GateKind::Xor: return "XOR";
        case GateKind::Xnor: return "XNOR";
        case GateKind::Inv: return "INV";
        case GateKind::Buf: return "BUF";
        case GateKind::Dff: return "DFF";
        case GateKind::Const0: return "CONST0";
        case GateKind::Const1: return "CONST1";
    }
    return "?";
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::Inv:
        case GateKind::Buf:
        case GateKind::Dff: return 1;
        case GateKind::Const0:
        case GateKind::Const1: return 0;
        default: return 2;
    }
}

bool is_combinational(GateKind kind) { return kind != GateKind::Dff; }

TruthTable gate_truth_table(GateKind kind) {
    switch (kind) {
        case GateKind::And: return tt_and;
        case GateKind::Nand: return tt_nand;
        case GateKind::Or: return tt_or;
        case GateKind::Nor: return tt_nor;
        case GateKind::Xor: return tt_xor;
        case GateKind::Xnor: return tt_xnor;
        case GateKind::Inv: return tt_inv_a;
        case GateKind::Buf: return tt_buf_a;
        case GateKind::Const0: return tt_false;
        case GateKind::Const1: return tt_true;
        case GateKind::Dff: break;
    }
    throw Error("DFF has no combinational truth table");
}

Circuit Circuit::build(std::string name, std::vector<std::string> net_names,
                       std::vector<NetId> inputs, std::vector<NetId> outputs,
                       std::vector<Gate> gates) {
    Circuit c;
    c.name_ = std::move(name);
    c.net_names_ = std::move(net_names);
    c.inputs_ = std::move(inputs);
    c.outputs_ = std::move(outputs);
    c.gates_ = std::move(gates);

    const auto nets = static_cast<NetId>(c.net_names_.size());
    auto check_net = [&](NetId n, const char* what) {
        if (n < 0 || n >= nets) throw Error(std::string("unknown net id in ") + what);
    };

    c.driver_.assign(static_cast<size_t>(nets), -1);
    std::vector<uint8_t> driven(static_cast<size_t>(nets), 0);
    for (NetId n : c.inputs_) {
        check_net(n, "inputs");
        if (driven[static_cast<size_t>(n)]) throw Error("duplicate definition of net " + c.net_name(n));
        driven[static_cast<size_t>(n)] = 1;
    }
    for (size_t i = 0; i < c.gates_.size(); ++i) {
        Gate& g = c.gates_[i];
        g.id = static_cast<int>(i);
        if (static_cast<int>(g.fanin.size()) != gate_arity(g.kind))
            throw Error(to_string(g.kind) + " gate has arity " + std::to_string(g.fanin.size()));
        for (NetId n : g.fanin) check_net(n, "gate fanin");
        check_net(g.out, "gate output");
        if (driven[static_cast<size_t>(g.out)])
            throw Error("duplicate definition of net " + c.net_name(g.out));
        driven[static_cast<size_t>(g.out)] = 1;
        c.driver_[static_cast<size_t>(g.out)] = static_cast<int>(i);
        if (g.kind == GateKind::Dff) ++c.dff_count_;
    }
    for (NetId n : c.outputs_) check_net(n, "outputs");
    for (size_t n = 0; n < static_cast<size_t>(nets); ++n)
        if (!driven[n]) throw Error("undefined net reference: " + c.net_names_[n]);

    // Kahn over combinational gates; DFFs count as sequential boundaries and
    // are appended after the combinational core.
    std::vector<int> pending(c.gates_.size(), 0);
    std::vector<std::vector<int>> consumers(c.gates_.size());
    for (const Gate& g : c.gates_) {
        if (g.kind == GateKind::Dff) continue;
        for (NetId n : g.fanin) {
            int d = c.driver_[static_cast<size_t>(n)];
            if (d >= 0 && c.gates_[static_cast<size_t>(d)].kind != GateKind::Dff) {
                ++pending[static_cast<size_t>(g.id)];
                consumers[static_cast<size_t>(d)].push_back(g.id);
            }
        }
    }
    std::vector<int> ready;
    for (const Gate& g : c.gates_)
        if (g.kind != GateKind::Dff && pending[static_cast<size_t>(g.id)] == 0) ready.push_back(g.id);
    // Min-id ordering keeps the result independent of construction history.
    std::sort(ready.begin(), ready.end());
    c.topo_.reserve(c.gates_.size());
    size_t head = 0;
    while (head < ready.size()) {
        int id = ready[head++];
        c.topo_.push_back(id);
        for (int consumer : consumers[static_cast<size_t>(id)])
            if (--pending[static_cast<size_t>(consumer)] == 0) ready.push_back(consumer);
    }
    size_t comb_gates = c.gates_.size() - static_cast<size_t>(c.dff_count_);
    if (c.topo_.size() != comb_gates) throw Error("combinational cycle in circuit " + c.name_);
    for (const Gate& g : c.gates_)
        if (g.kind == GateKind::Dff) c.topo_.push_back(g.id);
    return c;
}

std::optional<NetId> Circuit::find_net(const std::string& name) const {
    for (size_t i = 0; i < net_names_.size(); ++i)
        if (net_names_[i] == name) return static_cast<NetId>(i);
    return std::nullopt;
}

namespace {

struct GateDecl {
    std::string out;
    std::string kind;
    std::vector<std::string> args;
    int line;
};

std::string upper(std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::optional<GateKind> kind_from_name(const std::string& u) {
    if (u == "AND") return GateKind::And;
    if (u == "NAND") return GateKind::Nand;
    if (u == "OR") return GateKind::Or;
    if (u == "NOR") return GateKind::Nor;
    if (u == "XOR") return GateKind::Xor;
    if (u == "XNOR") return GateKind::Xnor;
    if (u == "INV" || u == "NOT") return GateKind::Inv;
    if (u == "BUF" || u == "BUFF") return GateKind::Buf;
    if (u == "DFF") return GateKind::Dff;
    if (u == "CONST0") return GateKind::Const0;
    if (u == "CONST1") return GateKind::Const1;
    return std::nullopt;
}

GateKind tree_inner_kind(GateKind k) {
    switch (k) {
        case GateKind::Nand: return GateKind::And;
        case GateKind::Nor: return GateKind::Or;
        case GateKind::Xnor: return GateKind::Xor;
        default: return k;
    }
}

}  // namespace

Circuit parse_bench(std::istream& in, const std::string& name) {
    std::vector<std::string> input_names, output_names;
    std::vector<GateDecl> decls;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        auto paren = [&](const std::string& body) {
            size_t open = body.find('(');
            size_t close = body.rfind(')');
            if (open == std::string::npos || close == std::string::npos || close < open)
                throw ParseError("expected '(...)'", line_no);
            return trim(body.substr(open + 1, close - open - 1));
        };

        std::string u = upper(line);
        if (u.rfind("INPUT", 0) == 0 && line.find('=') == std::string::npos) {
            std::string arg = paren(line);
            if (arg.empty()) throw ParseError("empty INPUT declaration", line_no);
            input_names.push_back(arg);
            continue;
        }
        if (u.rfind("OUTPUT", 0) == 0 && line.find('=') == std::string::npos) {
            std::string arg = paren(line);
            if (arg.empty()) throw ParseError("empty OUTPUT declaration", line_no);
            output_names.push_back(arg);
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected assignment or declaration", line_no);
        GateDecl d;
        d.line = line_no;
        d.out = trim(line.substr(0, eq));
        if (d.out.empty()) throw ParseError("missing net name before '='", line_no);
        std::string rhs = trim(line.substr(eq + 1));
        size_t open = rhs.find('(');
        if (open == std::string::npos || rhs.back() != ')')
            throw ParseError("expected KIND(args)", line_no);
        d.kind = upper(trim(rhs.substr(0, open)));
        std::string args = rhs.substr(open + 1, rhs.size() - open - 2);
        std::stringstream as(args);
        std::string tok;
        while (std::getline(as, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) throw ParseError("empty argument", line_no);
            d.args.push_back(tok);
        }
        decls.push_back(std::move(d));
    }

    std::vector<std::string> net_names;
    std::unordered_map<std::string, NetId> by_name;
    auto intern = [&](const std::string& n) {
        auto it = by_name.find(n);
        if (it != by_name.end()) return it->second;
        NetId id = static_cast<NetId>(net_names.size());
        net_names.push_back(n);
        by_name.emplace(n, id);
        return id;
    };

    std::vector<NetId> inputs;
    inputs.reserve(input_names.size());
    for (const auto& n : input_names) inputs.push_back(intern(n));
    for (const auto& d : decls) intern(d.out);
    for (const auto& d : decls)
        for (const auto& a : d.args)
            if (!by_name.count(a))
                throw ParseError("undefined net reference: " + a, d.line);

    std::vector<NetId> outputs;
    for (const auto& n : output_names) {
        auto it = by_name.find(n);
        if (it == by_name.end()) throw Error("undefined net reference in OUTPUT: " + n);
        outputs.push_back(it->second);
    }

    auto fresh_net = [&](const std::string& base) {
        std::string candidate = base;
        int suffix = 0;
        while (by_name.count(candidate)) candidate = base + "_" + std::to_string(suffix++);
        return intern(candidate);
    };

    std::vector<Gate> gates;
    for (const auto& d : decls) {
        auto kind = kind_from_name(d.kind);
        if (!kind) throw ParseError("unsupported gate kind: " + d.kind, d.line);
        int arity = gate_arity(*kind);
        const int n = static_cast<int>(d.args.size());
        if (arity == 0) {
            if (n != 0) throw ParseError(d.kind + " takes no arguments", d.line);
        } else if (arity == 1) {
            if (n != 1) throw ParseError(d.kind + " takes exactly one argument", d.line);
        } else if (n < 2) {
            throw ParseError(d.kind + " needs at least two arguments", d.line);
        }

        std::vector<NetId> args;
        args.reserve(d.args.size());
        for (const auto& a : d.args) args.push_back(by_name.at(a));
        NetId out = by_name.at(d.out);

        if (arity < 2 || n == 2) {
            gates.push_back(Gate{-1, *kind, std::move(args), out});
            continue;
        }

        // Balanced decomposition of wide gates. Inner nodes use the
        // non-inverting base kind; the declared kind sits at the root so
        // NAND/NOR/XNOR keep their inversion exactly once.
        GateKind inner = tree_inner_kind(*kind);
        std::function<NetId(size_t, size_t, bool)> build_tree =
            [&](size_t lo, size_t hi, bool root) -> NetId {
            if (hi - lo == 1) return args[lo];
            size_t mid = lo + (hi - lo + 1) / 2;
            NetId l = build_tree(lo, mid, false);
            NetId r = build_tree(mid, hi, false);
            NetId o = root ? out : fresh_net(d.out + "_t");
            gates.push_back(Gate{-1, root ? *kind : inner, {l, r}, o});
            return o;
        };
        build_tree(0, args.size(), true);
    }

    return Circuit::build(name, std::move(net_names), std::move(inputs), std::move(outputs),
                          std::move(gates));
}

Circuit parse_bench_string(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_bench(in, name);
}

Circuit parse_bench_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos) stem.erase(0, slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem.erase(dot);
    return parse_bench(in, stem);
}

void write_bench(const Circuit& c, std::ostream& out) {
    out << "# " << c.name() << "\n";
    for (NetId n : c.inputs()) out << "INPUT(" << c.net_name(n) << ")\n";
    for (NetId n : c.outputs()) out << "OUTPUT(" << c.net_name(n) << ")\n";
    for (const Gate& g : c.gates()) {
        out << c.net_name(g.out) << " = " << to_string(g.kind) << "(";
        for (size_t i = 0; i < g.fanin.size(); ++i) {
            if (i) out << ", ";
            out << c.net_name(g.fanin[i]);
        }
        out << ")\n";
    }
}

std::string write_bench_string(const Circuit& c) {
    std::ostringstream out;
    write_bench(c, out);
    return out.str();
}

void write_bench_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_bench(c, out);
}

Circuit strip_flip_flops(const Circuit& c) {
    if (c.dff_count() == 0) return c;
    std::vector<NetId> inputs = c.inputs();
    std::vector<NetId> outputs = c.outputs();
    std::vector<Gate> gates;
    gates.reserve(c.gates().size() - static_cast<size_t>(c.dff_count()));
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::Dff) {
            inputs.push_back(g.out);        // former state output becomes a PI
            outputs.push_back(g.fanin[0]);  // former data input becomes a PO
        } else {
            Gate copy = g;
            copy.id = -1;
            gates.push_back(std::move(copy));
        }
    }
    return Circuit::build(c.name(), c.net_names(), std::move(inputs), std::move(outputs),
                          std::move(gates));
}

namespace {

template <typename Word>
Word eval_gate(GateKind kind, Word a, Word b) {
    switch (kind) {
        case GateKind::And: return a & b;
        case GateKind::Nand: return ~(a & b);
        case GateKind::Or: return a | b;
        case GateKind::Nor: return ~(a | b);
        case GateKind::Xor: return a ^ b;
        case GateKind::Xnor: return ~(a ^ b);
        case GateKind::Inv: return ~a;
        case GateKind::Buf: return a;
        case GateKind::Const0: return Word(0);
        case GateKind::Const1: return ~Word(0);
        case GateKind::Dff: break;
    }
    throw Error("cannot evaluate DFF");
}

template <typename Word>
std::vector<Word> evaluate_impl(const Circuit& c, std::span<const Word> assignment) {
    if (!c.combinational()) throw Error("evaluate requires a combinational circuit");
    if (assignment.size() != c.inputs().size())
        throw Error("assignment length " + std::to_string(assignment.size()) +
                    " does not match input count " + std::to_string(c.inputs().size()));
    std::vector<Word> value(c.net_count(), Word(0));
    for (size_t i = 0; i < assignment.size(); ++i)
        value[static_cast<size_t>(c.inputs()[i])] = assignment[i];
    for (int id : c.topo_order()) {
        const Gate& g = c.gate(id);
        Word a = g.fanin.empty() ? Word(0) : value[static_cast<size_t>(g.fanin[0])];
        Word b = g.fanin.size() > 1 ? value[static_cast<size_t>(g.fanin[1])] : Word(0);
        value[static_cast<size_t>(g.out)] = eval_gate(g.kind, a, b);
    }
    std::vector<Word> result;
    result.reserve(c.outputs().size());
    for (NetId n : c.outputs()) result.push_back(value[static_cast<size_t>(n)]);
    return result;
}

}  // namespace

std::vector<uint8_t> evaluate(const Circuit& c, std::span<const uint8_t> assignment) {
    auto r = evaluate_impl<uint8_t>(c, assignment);
    for (auto& v : r) v &= 1;
    return r;
}

std::vector<uint64_t> evaluate_words(const Circuit& c, std::span<const uint64_t> assignment) {
    return evaluate_impl<uint64_t>(c, assignment);
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
    auto names_of = [](const Circuit& c, const std::vector<NetId>& nets) {
        std::vector<std::string> r;
        r.reserve(nets.size());
        for (NetId n : nets) r.push_back(c.net_name(n));
        return r;
    };
    if (names_of(a, a.inputs()) != names_of(b, b.inputs())) return false;
    if (names_of(a, a.outputs()) != names_of(b, b.outputs())) return false;
    if (a.gates().size() != b.gates().size()) return false;

    auto signature = [&](const Circuit& c) {
        std::unordered_map<std::string, std::string> sig;
        for (const Gate& g : c.gates()) {
            std::string s = to_string(g.kind);
            for (NetId n : g.fanin) s += "," + c.net_name(n);
            sig[c.net_name(g.out)] = std::move(s);
        }
        return sig;
    };
    return signature(a) == signature(b);
}

bool exhaustively_equivalent(const Circuit& a, const Circuit& b, int max_inputs) {
    if (a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size())
        return false;
    const int n = static_cast<int>(a.inputs().size());
    if (n > max_inputs) throw Error("too many inputs for exhaustive equivalence");
    const uint64_t total = 1ull << n;
    std::vector<uint64_t> words(static_cast<size_t>(n), 0);
    for (uint64_t base = 0; base < total; base += 64) {
        const uint64_t lanes = std::min<uint64_t>(64, total - base);
        for (int i = 0; i < n; ++i) {
            uint64_t w = 0;
            for (uint64_t lane = 0; lane < lanes; ++lane)
                if (((base + lane) >> i) & 1) w |= 1ull << lane;
            words[static_cast<size_t>(i)] = w;
        }
        auto ra = evaluate_words(a, words);
        auto rb = evaluate_words(b, words);
        const uint64_t mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
        for (size_t o = 0; o < ra.size(); ++o)
            if ((ra[o] & mask) != (rb[o] & mask)) return false;
    }
    return true;
}

}  // namespace spincamo
