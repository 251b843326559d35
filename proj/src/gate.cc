#include "nfacomp/gate.hh"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <tuple>

#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"

namespace nfacomp {

namespace {

bool clean(const TransitionSystem& ts, const std::vector<Symbol>& gamma) {
    for (const auto& t : ts.transitions()) {
        if (std::binary_search(gamma.begin(), gamma.end(), t.symbol)) { return false; }
    }
    return true;
}

bool has_outer(const std::vector<StateSet>& sets) {
    return std::any_of(sets.begin(), sets.end(), [](const StateSet& s) { return !s.empty(); });
}

bool intersection_needed(const GatePartition& g) {
    return g.direction == GateDirection::FrontClean ? has_outer(g.base.rear.entries()) : has_outer(g.base.front.exits());
}

std::vector<Symbol> without(const Alphabet& alphabet, const std::vector<Symbol>& gamma) {
    std::vector<Symbol> out;
    for (Symbol a = 0; a < alphabet.size(); ++a) {
        if (!std::binary_search(gamma.begin(), gamma.end(), a)) { out.push_back(a); }
    }
    return out;
}

StateSet shifted(const StateSet& s, State offset) {
    StateSet out;
    for (State q : s) { out.push_back(q + offset); }
    return out;
}

/// Equal condition for a partition whose front has no gate symbols.
bool equal_condition(const PortNfa& front, const std::vector<Transition>& transfers, const std::vector<Symbol>& gamma,
                     const GateCheckOptions& opts) {
    const InclusionOptions io{opts.max_expansions};
    const State nf = static_cast<State>(front.num_states());
    for (Symbol c : gamma) {
        std::vector<State> targets;
        for (const auto& t : transfers) {
            if (t.symbol == c) { targets.push_back(t.target); }
        }
        const StateSet tset = make_state_set(std::move(targets));
        if (tset.size() <= 1) { continue; }
        TransitionSystem ts = front;
        ts.add_states(tset.size());
        for (const auto& t : transfers) {
            if (t.symbol == c) { ts.add_transition(t.source, c, nf + static_cast<State>(std::lower_bound(tset.begin(), tset.end(), t.target) - tset.begin())); }
        }
        StateSet all;
        for (std::size_t x = 0; x < tset.size(); ++x) { all.push_back(nf + static_cast<State>(x)); }
        for (const auto& entry : front.entries()) {
            if (entry.empty()) { continue; }
            const Nfa whole = make_nfa(ts, entry, all);
            for (State x : all) {
                if (!antichain_inclusion(whole, make_nfa(ts, entry, {x}), io)) { return false; }
            }
        }
    }
    return true;
}

/// Both components' ports restricted to the cut, with gates.
struct GateParts {
    StateSet inner;
    std::size_t outer_entries;
    std::size_t outer_exits;
};

GateParts parts_of(const GatePartition& p) {
    return {p.base.inner_entry_ports_rear(), p.base.front.num_entries(), p.base.front.num_exits()};
}

/// C_pre: c1, fresh s reached from the inner exit complements under their gate symbol.
PortNfa build_pre(const GatePartition& p, const PortNfa& c1) {
    const auto& gamma = p.gate_symbols;
    const GateParts parts = parts_of(p);
    if (c1.num_entries() != parts.outer_entries || c1.num_exits() != parts.outer_exits + gamma.size()) {
        throw std::invalid_argument("front complement port arity mismatch");
    }
    TransitionSystem ts = c1;
    const State s = ts.add_state("s");
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        for (State q : c1.exit(parts.outer_exits + g)) { ts.add_transition(q, gamma[g], s); }
    }
    const auto loop = p.direction == GateDirection::FrontClean ? c1.alphabet().symbols() : without(c1.alphabet(), gamma);
    for (Symbol a : loop) { ts.add_transition(s, a, s); }
    std::vector<StateSet> exits;
    for (std::size_t j = 0; j < parts.outer_exits; ++j) {
        StateSet f = p.direction == GateDirection::FrontClean ? c1.exit(j) : StateSet{};
        insert(f, s);
        exits.push_back(std::move(f));
    }
    return PortNfa::with_ports(ts, c1.entries(), std::move(exits));
}

PortNfa complement_component(const PortNfa& a, std::vector<Symbol> symbols, std::optional<Direction> dir,
                             const GateOptions& opts) {
    ComplementOptions co;
    co.max_states = opts.max_states;
    co.symbols = std::move(symbols);
    co.minimize = opts.minimize;
    if (dir) { return port_complement(a, *dir, co); }
    std::optional<PortNfa> best;
    std::exception_ptr failure;
    for (Direction d : {Direction::Forward, Direction::Reverse}) {
        try {
            PortNfa c = port_complement(a, d, co);
            if (!best || c.num_states() < best->num_states()) { best = std::move(c); }
        } catch (const BudgetExceeded&) {
            failure = std::current_exception();
        }
    }
    if (!best) { std::rethrow_exception(failure); }
    return *best;
}

/// Downward-closed SCC sets (neither empty nor full), or prefixes when there are too many.
std::vector<StateSet> candidate_cuts(const PortNfa& a, std::size_t cap) {
    const SccDag dag = scc_condensation(a);
    const std::size_t m = dag.components.size();
    std::vector<std::vector<std::size_t>> preds(m);
    for (const auto& e : dag.edges) { preds[e.to].push_back(e.from); }
    auto states_of = [&](const std::vector<bool>& inc) {
        std::vector<State> out;
        for (std::size_t c = 0; c < m; ++c) {
            if (inc[c]) { out.insert(out.end(), dag.components[c].begin(), dag.components[c].end()); }
        }
        return make_state_set(std::move(out));
    };

    std::vector<StateSet> cuts;
    bool overflow = false;
    std::vector<bool> inc(m, false);
    std::size_t count = 0;
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (overflow) { return; }
        if (c == m) {
            if (count == 0 || count == m) { return; }
            if (cuts.size() >= cap) {
                overflow = true;
                return;
            }
            cuts.push_back(states_of(inc));
            return;
        }
        if (std::all_of(preds[c].begin(), preds[c].end(), [&](std::size_t d) { return inc[d]; })) {
            inc[c] = true;
            ++count;
            self(self, c + 1);
            --count;
            inc[c] = false;
        }
        self(self, c + 1);
    };
    rec(rec, 0);
    if (!overflow) { return cuts; }
    cuts.clear();
    std::fill(inc.begin(), inc.end(), false);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        inc[k] = true;
        cuts.push_back(states_of(inc));
    }
    return cuts;
}

std::optional<GatePartition> tag(GatePartition g, const GateCheckOptions& opts) {
    try {
        if (check_equal(g, opts)) {
            g.method = GateMethod::Equal;
            return g;
        }
        if (check_disjoint(g, opts)) {
            g.method = GateMethod::Disjoint;
            return g;
        }
    } catch (const BudgetExceeded&) {
    }
    return std::nullopt;
}

std::optional<GatePartition> classify(const PortNfa& a, const StateSet& front, const GateCheckOptions& opts) {
    auto g = as_gate_partition(make_sequential_partition(a, front));
    if (!g) { return std::nullopt; }
    if (auto t = tag(*g, opts)) { return t; }
    if (g->direction == GateDirection::FrontClean && clean(g->base.rear, g->gate_symbols) && g->base.rear.num_transitions() > 0) {
        g->direction = GateDirection::RearClean;
        g->needs_intersection = intersection_needed(*g);
        return tag(*g, opts);
    }
    return std::nullopt;
}

} // namespace

std::optional<GatePartition> as_gate_partition(const SequentialPartition& base) {
    if (base.transfers.empty()) { return std::nullopt; }
    GatePartition g;
    g.base = base;
    g.gate_symbols = base.transfer_symbols();
    if (clean(base.front, g.gate_symbols) && base.front.num_transitions() > 0) {
        g.direction = GateDirection::FrontClean;
    } else if (clean(base.rear, g.gate_symbols) && base.rear.num_transitions() > 0) {
        g.direction = GateDirection::RearClean;
    } else {
        return std::nullopt;
    }
    g.needs_intersection = intersection_needed(g);
    return g;
}

bool check_equal(const GatePartition& p, const GateCheckOptions& opts) {
    if (p.direction == GateDirection::FrontClean) {
        return equal_condition(p.base.front, p.base.transfers, p.gate_symbols, opts);
    }
    std::vector<Transition> mirrored;
    for (const auto& t : p.base.transfers) { mirrored.push_back({t.target, t.symbol, t.source}); }
    return equal_condition(reverse(p.base.rear), mirrored, p.gate_symbols, opts);
}

bool check_disjoint(const GatePartition& p, const GateCheckOptions& opts) {
    const InclusionOptions io{opts.max_expansions};
    const PortNfa& front = p.base.front;
    const PortNfa& rear = p.base.rear;
    std::map<std::tuple<State, State, std::size_t>, bool> overlap;
    std::map<std::tuple<State, State, std::size_t>, bool> same_suffix;
    const auto& gates = p.base.transfers;
    for (std::size_t x = 0; x < gates.size(); ++x) {
        for (std::size_t y = x + 1; y < gates.size(); ++y) {
            const Transition& g1 = gates[x];
            const Transition& g2 = gates[y];
            if (g1.symbol != g2.symbol || g1.target == g2.target) { continue; }
            for (std::size_t i = 0; i < front.num_entries(); ++i) {
                const StateSet& entry = front.entry(i);
                if (entry.empty()) { continue; }
                auto okey = std::make_tuple(std::min(g1.source, g2.source), std::max(g1.source, g2.source), i);
                auto oit = overlap.find(okey);
                if (oit == overlap.end()) {
                    bool o = !language_disjoint(make_nfa(front, entry, {g1.source}), make_nfa(front, entry, {g2.source}), io);
                    oit = overlap.emplace(okey, o).first;
                }
                if (!oit->second) { continue; }
                for (std::size_t j = 0; j < rear.num_exits(); ++j) {
                    auto skey = std::make_tuple(std::min(g1.target, g2.target), std::max(g1.target, g2.target), j);
                    auto sit = same_suffix.find(skey);
                    if (sit == same_suffix.end()) {
                        bool e = language_equivalent(make_nfa(rear, {g1.target}, rear.exit(j)),
                                                     make_nfa(rear, {g2.target}, rear.exit(j)), io);
                        sit = same_suffix.emplace(skey, e).first;
                    }
                    if (!sit->second) { return false; }
                }
            }
        }
    }
    return true;
}

std::vector<GatePartition> find_gate_partitions(const PortNfa& a, const GateSearchOptions& opts) {
    const std::vector<StateSet> cuts = candidate_cuts(a, opts.max_candidates);
    std::vector<std::optional<GatePartition>> found(cuts.size());
    std::exception_ptr failure;
    const long n = static_cast<long>(cuts.size());
    if (opts.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < n; ++k) {
            try {
                found[k] = classify(a, cuts[k], opts.check);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
    } else {
        for (long k = 0; k < n; ++k) { found[k] = classify(a, cuts[k], opts.check); }
    }
    if (failure) { std::rethrow_exception(failure); }
    std::vector<GatePartition> out;
    for (auto& g : found) {
        if (g) { out.push_back(std::move(*g)); }
    }
    return out;
}

std::optional<GatePartition> select_partition(const std::vector<GatePartition>& ps) {
    if (ps.empty()) { return std::nullopt; }
    auto key = [](const GatePartition& g) {
        const std::size_t n1 = g.base.front.num_states();
        const std::size_t n2 = g.base.rear.num_states();
        return std::make_tuple(g.needs_intersection, g.method != GateMethod::Equal, n1 > n2 ? n1 - n2 : n2 - n1,
                               g.base.front_origin, g.direction);
    };
    return *std::min_element(ps.begin(), ps.end(), [&](const GatePartition& x, const GatePartition& y) { return key(x) < key(y); });
}

PortNfa gate_front(const GatePartition& p) {
    PortNfa f = p.base.front;
    for (Symbol c : p.gate_symbols) {
        std::vector<State> sources;
        for (const auto& t : p.base.transfers) {
            if (t.symbol == c) { sources.push_back(t.source); }
        }
        f.add_exit_set(make_state_set(std::move(sources)));
    }
    return f;
}

PortNfa gate_rear(const GatePartition& p) {
    if (p.method == GateMethod::Disjoint) { return rear_with_singleton_entries(p.base); }
    PortNfa r = p.base.rear;
    for (Symbol c : p.gate_symbols) {
        std::vector<State> targets;
        for (const auto& t : p.base.transfers) {
            if (t.symbol == c) { targets.push_back(t.target); }
        }
        r.add_entry_set(make_state_set(std::move(targets)));
    }
    return r;
}

PortNfa gate_complement_equal(const GatePartition& p, const PortNfa& c1, const PortNfa& c2) {
    const auto& gamma = p.gate_symbols;
    const GateParts parts = parts_of(p);
    if (c2.num_entries() != parts.outer_entries + gamma.size() || c2.num_exits() != parts.outer_exits) {
        throw std::invalid_argument("rear complement port arity mismatch");
    }
    const PortNfa pre = build_pre(p, c1);

    TransitionSystem ts(c2.alphabet());
    const State t = ts.add_state("t");
    ts.add_states(c2.num_states());
    for (const auto& tr : c2.transitions()) { ts.add_transition(tr.source + 1, tr.symbol, tr.target + 1); }
    const auto loop = p.direction == GateDirection::FrontClean ? without(c2.alphabet(), gamma) : c2.alphabet().symbols();
    for (Symbol a : loop) { ts.add_transition(t, a, t); }
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        for (State q : c2.entry(parts.outer_entries + g)) { ts.add_transition(t, gamma[g], q + 1); }
    }
    std::vector<StateSet> entries;
    for (std::size_t i = 0; i < parts.outer_entries; ++i) {
        StateSet e = p.direction == GateDirection::FrontClean ? StateSet{} : shifted(c2.entry(i), 1);
        insert(e, t);
        entries.push_back(std::move(e));
    }
    std::vector<StateSet> exits;
    for (const auto& f : c2.exits()) { exits.push_back(shifted(f, 1)); }
    return unite(pre, PortNfa::with_ports(ts, std::move(entries), std::move(exits)));
}

PortNfa gate_complement_disjoint(const GatePartition& p, const PortNfa& c1, const PortNfa& c2) {
    const GateParts parts = parts_of(p);
    if (c2.num_entries() != parts.outer_entries + parts.inner.size() || c2.num_exits() != parts.outer_exits) {
        throw std::invalid_argument("rear complement port arity mismatch");
    }
    const PortNfa pre = build_pre(p, c1);

    const PortNfa& front = p.base.front;
    const State nf = static_cast<State>(front.num_states());
    TransitionSystem ts = front;
    ts.add_states(c2.num_states());
    for (const auto& tr : c2.transitions()) { ts.add_transition(tr.source + nf, tr.symbol, tr.target + nf); }
    for (const auto& g : p.base.transfers) {
        std::size_t idx = static_cast<std::size_t>(std::lower_bound(parts.inner.begin(), parts.inner.end(), g.target) - parts.inner.begin());
        for (State q : c2.entry(parts.outer_entries + idx)) { ts.add_transition(g.source, g.symbol, q + nf); }
    }
    std::vector<StateSet> entries;
    for (std::size_t i = 0; i < parts.outer_entries; ++i) {
        StateSet e = front.entry(i);
        if (p.direction == GateDirection::RearClean) { e = set_union(e, shifted(c2.entry(i), nf)); }
        entries.push_back(std::move(e));
    }
    std::vector<StateSet> exits;
    for (const auto& f : c2.exits()) { exits.push_back(shifted(f, nf)); }
    return unite(pre, PortNfa::with_ports(ts, std::move(entries), std::move(exits)));
}

PortNfa gate_complement(const GatePartition& p, const GateOptions& opts) {
    GatePartition q = p;
    if (p.needs_intersection) {
        if (p.direction == GateDirection::FrontClean) {
            for (std::size_t i = 0; i < q.base.rear.num_entries(); ++i) { q.base.rear.set_entry_set(i, {}); }
        } else {
            for (std::size_t j = 0; j < q.base.front.num_exits(); ++j) { q.base.front.set_exit_set(j, {}); }
        }
        q.needs_intersection = false;
    }
    const Alphabet& sigma = p.base.front.alphabet();
    const auto all = sigma.symbols();
    const auto rest = without(sigma, p.gate_symbols);
    const bool front_clean = p.direction == GateDirection::FrontClean;
    const PortNfa c1 = complement_component(gate_front(q), front_clean ? rest : all, opts.front_method, opts);
    const PortNfa c2 = complement_component(gate_rear(q), front_clean ? all : rest, opts.rear_method, opts);
    PortNfa c = q.method == GateMethod::Equal ? gate_complement_equal(q, c1, c2) : gate_complement_disjoint(q, c1, c2);
    if (!p.needs_intersection) { return c; }
    const PortNfa& side = front_clean ? p.base.rear : p.base.front;
    const PortNfa other = complement_component(side, all, front_clean ? opts.rear_method : opts.front_method, opts);
    return product_intersection(c, other);
}

GateBasicResult gate_complement_basic(const Nfa& a1, const Nfa& a2, Symbol c, const GateOptions& opts) {
    if (!(a1.alphabet() == a2.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    if (c >= a1.alphabet().size()) { throw std::out_of_range("gate symbol outside alphabet"); }
    if (a1.final().size() != 1) { throw std::invalid_argument("front must have a single final state"); }
    if (a2.initial().size() != 1) { throw std::invalid_argument("rear must have a single initial state"); }
    if (!clean(a1, {c})) { throw std::invalid_argument("gate symbol occurs in the front"); }
    const auto rest = without(a1.alphabet(), {c});
    const Nfa c1 = slice(complement_component(PortNfa::from_nfa(a1), rest, opts.front_method, opts), 0, 0);
    const Nfa c2 = slice(complement_component(PortNfa::from_nfa(a2), a1.alphabet().symbols(), opts.rear_method, opts), 0, 0);

    TransitionSystem ts = c1;
    const State s = ts.add_state("s");
    const State t = ts.add_state("t");
    const State off = static_cast<State>(ts.num_states());
    ts.add_states(c2.num_states());
    for (const auto& tr : c2.transitions()) { ts.add_transition(tr.source + off, tr.symbol, tr.target + off); }
    for (State q : c1.final()) { ts.add_transition(q, c, s); }
    for (Symbol a = 0; a < a1.alphabet().size(); ++a) {
        ts.add_transition(s, a, s);
        if (a != c) { ts.add_transition(t, a, t); }
    }
    for (State q : c2.initial()) { ts.add_transition(t, c, q + off); }
    StateSet init = c1.initial();
    insert(init, t);
    StateSet fin = shifted(c2.final(), off);
    insert(fin, s);
    insert(fin, t);
    return {make_nfa(ts, std::move(init), std::move(fin)), c1.num_states(), c2.num_states()};
}

GateResult gate_method(const Nfa& a, const GateOptions& opts) {
    const PortNfa pa = PortNfa::from_nfa(a);
    auto chosen = select_partition(find_gate_partitions(pa, opts.search));
    if (!chosen) { throw NoGatePartition(); }
    GateResult res;
    Nfa c = slice(gate_complement(*chosen, opts), 0, 0);
    res.states_before_trim = c.num_states();
    res.automaton = trim(c);
    res.partition = std::move(*chosen);
    return res;
}

} // namespace nfacomp
