#include "nfacomp/powerset.hh"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"
#include "nfacomp/reduction.hh"

namespace nfacomp {

namespace {

struct SetHash {
    std::size_t operator()(const StateSet& s) const noexcept {
        std::size_t h = s.size();
        for (State q : s) { h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }
        return h;
    }
};

struct Subsets {
    TransitionSystem ts;
    std::vector<StateSet> macrostates;
    std::vector<State> roots;
};

std::vector<Symbol> symbols_of(const TransitionSystem& ts, const std::optional<std::vector<Symbol>>& symbols) {
    if (!symbols) { return ts.alphabet().symbols(); }
    std::vector<Symbol> out = *symbols;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Symbol a : out) {
        if (a >= ts.alphabet().size()) { throw std::out_of_range("symbol outside alphabet"); }
    }
    return out;
}

Subsets subset_construction(const TransitionSystem& a, const std::vector<StateSet>& initial,
                            const PowersetOptions& opts) {
    const auto symbols = symbols_of(a, opts.symbols);
    Subsets res{TransitionSystem(a.alphabet()), {}, {}};
    std::unordered_map<StateSet, State, SetHash> ids;
    std::deque<State> work;
    auto get = [&](StateSet s) {
        auto it = ids.find(s);
        if (it != ids.end()) { return it->second; }
        if (res.macrostates.size() >= opts.max_states) { throw BudgetExceeded("powerset construction", opts.max_states); }
        State id = res.ts.add_state();
        ids.emplace(s, id);
        res.macrostates.push_back(std::move(s));
        work.push_back(id);
        return id;
    };
    for (const auto& i : initial) { res.roots.push_back(get(i)); }
    std::vector<State> buf;
    while (!work.empty()) {
        State id = work.front();
        work.pop_front();
        for (Symbol s : symbols) {
            buf.clear();
            for (State q : res.macrostates[id]) {
                for (const Move& m : a.moves(q, s)) { buf.push_back(m.target); }
            }
            State t = get(make_state_set(buf));
            res.ts.add_transition(id, s, t);
        }
    }
    return res;
}

StateSet meeting(const std::vector<StateSet>& macrostates, const StateSet& f) {
    StateSet out;
    for (State q = 0; q < macrostates.size(); ++q) {
        if (intersects(macrostates[q], f)) { out.push_back(q); }
    }
    return out;
}

StateSet all_states_except(std::size_t n, const StateSet& s) {
    StateSet out;
    for (State q = 0; q < n; ++q) {
        if (!contains(s, q)) { out.push_back(q); }
    }
    return out;
}

void require_dfa(const TransitionSystem& ts, std::span<const Symbol> symbols) {
    if (!has_deterministic_moves(ts) || !has_complete_moves(ts, symbols)) {
        throw std::invalid_argument("complementation by flipping requires a deterministic and complete automaton");
    }
}

PowersetOptions powerset_options(const ComplementOptions& opts) { return {opts.max_states, opts.symbols}; }

/// Determinize, optionally minimize, and flip every exit set.
PortNfa complemented_powerset(const PortNfa& a, const ComplementOptions& opts) {
    PortNfa det = port_determinize(a, powerset_options(opts)).dfa;
    const auto symbols = symbols_of(a, opts.symbols);
    if (opts.minimize) { det = minimize_port_dfa(det, symbols).dfa; }
    return complement_port_dfa(det, symbols);
}

} // namespace

MacrostateDfa determinize(const Nfa& a, const PowersetOptions& opts) {
    Subsets s = subset_construction(a, {a.initial()}, opts);
    StateSet final = meeting(s.macrostates, a.final());
    return {make_nfa(s.ts, {s.roots.front()}, std::move(final)), std::move(s.macrostates)};
}

PortMacrostateDfa port_determinize(const PortNfa& a, const PowersetOptions& opts) {
    Subsets s = subset_construction(a, a.entries(), opts);
    std::vector<StateSet> entries;
    for (State r : s.roots) { entries.push_back({r}); }
    std::vector<StateSet> exits;
    for (const auto& f : a.exits()) { exits.push_back(meeting(s.macrostates, f)); }
    return {PortNfa::with_ports(s.ts, std::move(entries), std::move(exits)), std::move(s.macrostates)};
}

Nfa complement_dfa(const Nfa& dfa) {
    auto symbols = dfa.alphabet().symbols();
    return complement_dfa(dfa, symbols);
}

Nfa complement_dfa(const Nfa& dfa, std::span<const Symbol> symbols) {
    if (dfa.initial().size() != 1) { throw std::invalid_argument("complementation by flipping requires one initial state"); }
    require_dfa(dfa, symbols);
    return make_nfa(dfa, dfa.initial(), all_states_except(dfa.num_states(), dfa.final()));
}

PortNfa complement_port_dfa(const PortNfa& dfa, std::span<const Symbol> symbols) {
    if (!is_deterministic(dfa)) { throw std::invalid_argument("complementation by flipping requires singleton entry sets"); }
    require_dfa(dfa, symbols);
    std::vector<StateSet> exits;
    for (const auto& f : dfa.exits()) { exits.push_back(all_states_except(dfa.num_states(), f)); }
    return PortNfa::with_ports(dfa, dfa.entries(), std::move(exits));
}

Nfa forward_complement(const Nfa& a, const ComplementOptions& opts) {
    return slice(port_forward_complement(PortNfa::from_nfa(a), opts), 0, 0);
}

Nfa reverse_complement(const Nfa& a, const ComplementOptions& opts) {
    return slice(port_reverse_complement(PortNfa::from_nfa(a), opts), 0, 0);
}

PortNfa port_forward_complement(const PortNfa& a, const ComplementOptions& opts) {
    PortNfa c = complemented_powerset(a, opts);
    return opts.trim ? trim(c) : c;
}

PortNfa port_reverse_complement(const PortNfa& a, const ComplementOptions& opts) {
    PortNfa c = reverse(complemented_powerset(reverse(a), opts));
    return opts.trim ? trim(c) : c;
}

PortNfa port_complement(const PortNfa& a, Direction direction, const ComplementOptions& opts) {
    return direction == Direction::Forward ? port_forward_complement(a, opts) : port_reverse_complement(a, opts);
}

Nfa complement(const Nfa& a, Direction direction, const ComplementOptions& opts) {
    return direction == Direction::Forward ? forward_complement(a, opts) : reverse_complement(a, opts);
}

} // namespace nfacomp
