#include "nfacomp/sequential.hh"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"
#include "nfacomp/reduction.hh"

namespace nfacomp {

std::string to_string(PartitionStrategy s) {
    switch (s) {
    case PartitionStrategy::DeterministicComponents: return "det";
    case PartitionStrategy::DetPlusRevDetBottom: return "detrev";
    case PartitionStrategy::MinCut: return "mincut";
    }
    return "unknown";
}

namespace {

struct SccGraph {
    SccDag dag;
    std::vector<std::vector<std::size_t>> preds;
    std::vector<std::vector<std::size_t>> succs;
};

SccGraph scc_graph(const TransitionSystem& ts) {
    SccGraph g{scc_condensation(ts), {}, {}};
    g.preds.resize(g.dag.components.size());
    g.succs.resize(g.dag.components.size());
    for (const auto& e : g.dag.edges) {
        g.preds[e.to].push_back(e.from);
        g.succs[e.from].push_back(e.to);
    }
    return g;
}

/// Every state has at most one successor (or predecessor, when reversed) per symbol inside the set.
bool deterministic_within(const TransitionSystem& ts, const std::vector<bool>& member, const StateSet& states, bool reversed) {
    std::map<std::pair<State, Symbol>, int> count;
    for (State q : states) {
        for (const Move& m : ts.moves(q)) {
            if (!member[m.target]) { continue; }
            auto key = reversed ? std::make_pair(m.target, m.symbol) : std::make_pair(q, m.symbol);
            if (++count[key] > 1) { return false; }
        }
    }
    return true;
}

/// Greedy absorption of SCCs (topological order) while the union stays (reverse-)deterministic.
/// order lists candidate SCC indices; the first entry seeds the component. closure_of returns the SCCs that
/// must already belong to the component before a candidate can join.
std::vector<std::size_t> absorb(const TransitionSystem& ts, const SccGraph& g, const std::vector<std::size_t>& order,
                                const std::vector<bool>& available, bool reversed) {
    std::vector<bool> member(ts.num_states(), false);
    std::vector<bool> taken(g.dag.components.size(), false);
    StateSet states;
    auto add = [&](std::size_t c) {
        taken[c] = true;
        for (State q : g.dag.components[c]) {
            member[q] = true;
            states.push_back(q);
        }
        std::sort(states.begin(), states.end());
    };
    std::vector<std::size_t> chosen{order.front()};
    add(order.front());
    if (!deterministic_within(ts, member, states, reversed)) { return chosen; }
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        std::size_t c = order[idx];
        const auto& required = reversed ? g.succs[c] : g.preds[c];
        bool closed = std::all_of(required.begin(), required.end(), [&](std::size_t d) { return !available[d] || taken[d]; });
        if (!closed) { continue; }
        std::vector<bool> trial_member = member;
        StateSet trial = states;
        for (State q : g.dag.components[c]) {
            trial_member[q] = true;
            trial.push_back(q);
        }
        std::sort(trial.begin(), trial.end());
        if (deterministic_within(ts, trial_member, trial, reversed)) {
            add(c);
            chosen.push_back(c);
        }
    }
    return chosen;
}

StateSet states_of(const SccGraph& g, const std::vector<std::size_t>& comps) {
    std::vector<State> out;
    for (std::size_t c : comps) {
        out.insert(out.end(), g.dag.components[c].begin(), g.dag.components[c].end());
    }
    return make_state_set(std::move(out));
}

std::vector<StateSet> deterministic_components(const TransitionSystem& ts, const SccGraph& g, std::vector<bool> available) {
    std::vector<StateSet> result;
    while (true) {
        std::vector<std::size_t> order;
        for (std::size_t c = 0; c < available.size(); ++c) {
            if (available[c]) { order.push_back(c); }
        }
        if (order.empty()) { break; }
        auto chosen = absorb(ts, g, order, available, false);
        result.push_back(states_of(g, chosen));
        for (std::size_t c : chosen) { available[c] = false; }
    }
    return result;
}

std::size_t count_transfers(const TransitionSystem& ts, const std::vector<StateSet>& comps) {
    std::vector<std::size_t> comp_of(ts.num_states(), 0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (State q : comps[i]) { comp_of[q] = i; }
    }
    std::size_t count = 0;
    for (const auto& t : ts.transitions()) {
        if (comp_of[t.source] != comp_of[t.target]) { ++count; }
    }
    return count;
}

} // namespace

MinCut min_cut_partition(const Nfa& a) {
    const SccGraph g = scc_graph(a);
    const std::size_t m = g.dag.components.size();
    MinCut res;
    if (m <= 1) { return res; }
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
    const std::size_t source = m;
    const std::size_t sink = m - 1;
    std::vector<std::vector<std::size_t>> cap(m + 1, std::vector<std::size_t>(m + 1, 0));
    for (const auto& e : g.dag.edges) {
        cap[e.from][e.to] += e.capacity;
        cap[e.to][e.from] = inf;
    }
    for (std::size_t c = 0; c < m; ++c) {
        if (g.preds[c].empty() && c != sink) { cap[source][c] = inf; }
    }

    std::size_t flow = 0;
    std::vector<std::size_t> parent(m + 1);
    auto bfs = [&]() {
        constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
        std::fill(parent.begin(), parent.end(), none);
        parent[source] = source;
        std::deque<std::size_t> q{source};
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v <= m; ++v) {
                if (parent[v] == none && cap[u][v] > 0) {
                    parent[v] = u;
                    q.push_back(v);
                }
            }
        }
        return parent[sink] != none;
    };
    while (bfs()) {
        std::size_t push = inf;
        for (std::size_t v = sink; v != source; v = parent[v]) { push = std::min(push, cap[parent[v]][v]); }
        for (std::size_t v = sink; v != source; v = parent[v]) {
            cap[parent[v]][v] -= push;
            cap[v][parent[v]] += push;
        }
        flow += push;
    }
    bfs();
    std::vector<std::size_t> front;
    for (std::size_t c = 0; c < m; ++c) {
        if (parent[c] != std::numeric_limits<std::size_t>::max()) { front.push_back(c); }
    }
    res.front = states_of(g, front);
    res.capacity = flow;
    return res;
}

Partitioning partition(const Nfa& a, PartitionStrategy strategy) {
    Partitioning res;
    if (a.num_states() == 0) { return res; }
    const SccGraph g = scc_graph(a);
    const std::size_t m = g.dag.components.size();
    switch (strategy) {
    case PartitionStrategy::DeterministicComponents:
        res.components = deterministic_components(a, g, std::vector<bool>(m, true));
        break;
    case PartitionStrategy::DetPlusRevDetBottom: {
        std::vector<std::size_t> order;
        for (std::size_t c = m; c-- > 0;) { order.push_back(c); }
        auto bottom = absorb(a, g, order, std::vector<bool>(m, true), true);
        std::vector<bool> available(m, true);
        for (std::size_t c : bottom) { available[c] = false; }
        res.components = deterministic_components(a, g, available);
        res.components.push_back(states_of(g, bottom));
        break;
    }
    case PartitionStrategy::MinCut: {
        MinCut cut = min_cut_partition(a);
        StateSet all;
        for (State q = 0; q < a.num_states(); ++q) { all.push_back(q); }
        if (cut.front.empty() || cut.front.size() == a.num_states()) {
            res.components.push_back(all);
        } else {
            res.components.push_back(cut.front);
            res.components.push_back(set_difference(all, cut.front));
        }
        break;
    }
    }
    res.transfer_count = count_transfers(a, res.components);
    return res;
}

namespace {

struct PairKeyHash {
    std::size_t operator()(const std::pair<State, StateSet>& k) const noexcept {
        std::size_t h = k.first * 0x9e3779b97f4a7c15ULL;
        for (State q : k.second) { h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }
        return h;
    }
};

/// All sets obtained by picking one element from every group, added to base.
std::set<StateSet> choice_product(const std::vector<std::vector<State>>& groups) {
    std::set<StateSet> sets{StateSet{}};
    for (const auto& group : groups) {
        std::set<StateSet> next;
        for (const auto& s : sets) {
            for (State x : group) {
                StateSet t = s;
                insert(t, x);
                next.insert(std::move(t));
            }
        }
        sets = std::move(next);
    }
    return sets;
}

/// Hash-consed (front state, tracked set) pairs explored breadth-first.
class ProductSpace {
public:
    ProductSpace(const Alphabet& alphabet, std::size_t max_states) : ts_(alphabet), max_states_(max_states) {}

    State get(State q, StateSet r) {
        auto key = std::make_pair(q, std::move(r));
        auto it = ids_.find(key);
        if (it != ids_.end()) { return it->second; }
        if (front_.size() >= max_states_) { throw BudgetExceeded("sequential complement", max_states_); }
        State id = ts_.add_state();
        front_.push_back(key.first);
        tracked_.push_back(key.second);
        ids_.emplace(std::move(key), id);
        work_.push_back(id);
        return id;
    }
    bool pending() const { return !work_.empty(); }
    State next() {
        State id = work_.front();
        work_.pop_front();
        return id;
    }

    TransitionSystem ts_;
    std::vector<State> front_;
    std::vector<StateSet> tracked_;

private:
    std::unordered_map<std::pair<State, StateSet>, State, PairKeyHash> ids_;
    std::deque<State> work_;
    std::size_t max_states_;
};

} // namespace

Nfa seq_compose_basic(const Nfa& a1, const Nfa& c2, Symbol c, std::size_t max_states) {
    if (!(a1.alphabet() == c2.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    const MacrostateDfa d = determinize(a1, {max_states, std::nullopt});
    const Nfa& front = d.dfa;
    ProductSpace space(a1.alphabet(), max_states);
    const State init = space.get(front.initial().front(), {});
    while (space.pending()) {
        const State id = space.next();
        const State q = space.front_[id];
        const StateSet r = space.tracked_[id];
        for (Symbol a = 0; a < a1.alphabet().size(); ++a) {
            const State q2 = front.moves(q, a).front().target;
            std::vector<std::vector<State>> groups;
            bool blocked = false;
            for (State x : r) {
                groups.push_back(c2.post(x, a));
                blocked = blocked || groups.back().empty();
            }
            if (front.is_final(q) && a == c) {
                groups.push_back(c2.initial());
                blocked = blocked || groups.back().empty();
            }
            if (blocked) { continue; }
            for (auto& target : choice_product(groups)) { space.ts_.add_transition(id, a, space.get(q2, target)); }
        }
    }
    StateSet final;
    for (State id = 0; id < space.tracked_.size(); ++id) {
        if (is_subset(space.tracked_[id], c2.final())) { final.push_back(id); }
    }
    return make_nfa(space.ts_, {init}, std::move(final));
}

Nfa seq_complement_basic(const Nfa& a1, const Nfa& a2, Symbol c, Direction rear_method, std::size_t max_states) {
    if (a1.final().size() != 1) { throw std::invalid_argument("front must have a single final state"); }
    if (a2.initial().size() != 1) { throw std::invalid_argument("rear must have a single initial state"); }
    if (c >= a1.alphabet().size()) { throw std::out_of_range("transfer symbol outside alphabet"); }
    ComplementOptions opts;
    opts.max_states = max_states;
    return seq_compose_basic(a1, complement(a2, rear_method, opts), c, max_states);
}

SeqComplement seq_complement_generalized(const SequentialPartition& p, const PortNfa& c2, std::size_t max_states) {
    const PortNfa& front = p.front;
    if (!is_deterministic(front) || !is_complete(front)) {
        throw std::invalid_argument("front must be deterministic and complete");
    }
    const StateSet inner = p.inner_entry_ports_rear();
    const std::size_t outer = p.rear.num_entries();
    if (front.num_entries() != outer || front.num_exits() != p.rear.num_exits()) {
        throw std::invalid_argument("front and rear port arities differ");
    }
    if (c2.num_entries() != outer + inner.size() || c2.num_exits() != p.rear.num_exits()) {
        throw std::invalid_argument("rear complement port arity mismatch");
    }
    if (!(front.alphabet() == c2.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }

    // gates[q] = (symbol, entry index of the target in c2)
    std::vector<std::vector<std::pair<Symbol, std::size_t>>> gates(front.num_states());
    for (const auto& t : p.transfers) {
        std::size_t idx = outer + static_cast<std::size_t>(std::lower_bound(inner.begin(), inner.end(), t.target) - inner.begin());
        gates[t.source].emplace_back(t.symbol, idx);
    }

    ProductSpace space(front.alphabet(), max_states);
    std::vector<StateSet> entries;
    for (std::size_t i = 0; i < outer; ++i) {
        const State q0 = front.entry(i).front();
        StateSet e;
        if (p.rear.entry(i).empty()) {
            e.push_back(space.get(q0, {}));
        } else {
            for (State r0 : c2.entry(i)) { e.push_back(space.get(q0, {r0})); }
        }
        entries.push_back(make_state_set(std::move(e)));
    }
    while (space.pending()) {
        const State id = space.next();
        const State q = space.front_[id];
        const StateSet r = space.tracked_[id];
        for (Symbol a = 0; a < front.alphabet().size(); ++a) {
            const State q2 = front.moves(q, a).front().target;
            std::vector<std::vector<State>> groups;
            bool blocked = false;
            for (State x : r) {
                groups.push_back(c2.post(x, a));
                blocked = blocked || groups.back().empty();
            }
            for (const auto& [sym, idx] : gates[q]) {
                if (sym != a) { continue; }
                groups.push_back(c2.entry(idx));
                blocked = blocked || groups.back().empty();
            }
            if (blocked) { continue; }
            for (auto& target : choice_product(groups)) { space.ts_.add_transition(id, a, space.get(q2, target)); }
        }
    }
    std::vector<StateSet> exits;
    for (std::size_t j = 0; j < front.num_exits(); ++j) {
        StateSet f;
        for (State id = 0; id < space.front_.size(); ++id) {
            if (!front.exit(j).empty() && contains(front.exit(j), space.front_[id])) { continue; }
            if (is_subset(space.tracked_[id], c2.exit(j))) { f.push_back(id); }
        }
        exits.push_back(std::move(f));
    }
    return {PortNfa::with_ports(space.ts_, std::move(entries), std::move(exits)), space.front_, space.tracked_};
}

SequentialPartition determinize_front(const SequentialPartition& p, bool minimize, std::size_t max_states) {
    const PortMacrostateDfa d = port_determinize(p.front, {max_states, std::nullopt});
    std::vector<std::vector<std::pair<Symbol, State>>> signature(d.dfa.num_states());
    {
        std::vector<std::vector<std::pair<Symbol, State>>> by_state(p.front.num_states());
        for (const auto& t : p.transfers) { by_state[t.source].emplace_back(t.symbol, t.target); }
        for (State m = 0; m < d.macrostates.size(); ++m) {
            auto& sig = signature[m];
            for (State q : d.macrostates[m]) { sig.insert(sig.end(), by_state[q].begin(), by_state[q].end()); }
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
        }
    }
    SequentialPartition out;
    out.rear = p.rear;
    out.rear_origin = p.rear_origin;
    std::vector<State> map(d.dfa.num_states());
    if (minimize) {
        std::map<std::vector<std::pair<Symbol, State>>, std::uint64_t> ids;
        std::vector<std::uint64_t> colors;
        for (const auto& sig : signature) { colors.push_back(ids.emplace(sig, ids.size()).first->second); }
        auto symbols = p.front.alphabet().symbols();
        PortMinimization min = minimize_port_dfa(d.dfa, symbols, colors);
        out.front = std::move(min.dfa);
        map = std::move(min.class_of);
    } else {
        out.front = d.dfa;
        for (State m = 0; m < map.size(); ++m) { map[m] = m; }
    }
    std::set<Transition> lifted;
    for (State m = 0; m < signature.size(); ++m) {
        if (map[m] == no_state) { continue; }
        for (const auto& [a, t] : signature[m]) { lifted.insert({map[m], a, t}); }
    }
    out.transfers.assign(lifted.begin(), lifted.end());
    return out;
}

PortNfa rear_complement(const SequentialPartition& p, Direction method, const ComplementOptions& opts) {
    return port_complement(rear_with_singleton_entries(p), method, opts);
}

namespace {

struct Stage {
    PortNfa complement;
    std::vector<StateSet> entry_origins;
};

/// Rear complement view with the entry layout of the partition's rear.
PortNfa select_entries(const SequentialPartition& p, const InducedPortNfa& composite, const Stage& next) {
    PortNfa rear = rear_with_singleton_entries(p);
    std::vector<StateSet> entries;
    for (const auto& e : rear.entries()) {
        std::vector<State> orig;
        for (State x : e) { orig.push_back(composite.origin[p.rear_origin[x]]); }
        StateSet key = make_state_set(std::move(orig));
        if (key.empty()) {
            entries.emplace_back();
            continue;
        }
        auto it = std::find(next.entry_origins.begin(), next.entry_origins.end(), key);
        if (it == next.entry_origins.end()) { throw std::logic_error("rear entry set without a complement"); }
        entries.push_back(next.complement.entry(static_cast<std::size_t>(it - next.entry_origins.begin())));
    }
    return PortNfa::with_ports(next.complement, std::move(entries), next.complement.exits());
}

} // namespace

PipelineResult seq_pipeline(const Nfa& a, PartitionStrategy strategy, const PipelineOptions& opts) {
    ComplementOptions copts;
    copts.max_states = opts.max_states;
    copts.minimize = opts.minimize;
    const Partitioning parts = partition(a, strategy);
    PipelineResult res;
    for (const auto& c : parts.components) { res.component_sizes.push_back(c.size()); }
    if (parts.components.size() <= 1) {
        copts.trim = false;
        Nfa c = complement(a, opts.rear_method, copts);
        res.states_before_trim = c.num_states();
        res.automaton = trim(c);
        return res;
    }

    const PortNfa whole = PortNfa::from_nfa(a);
    const std::size_t m = parts.components.size();
    StateSet suffix = parts.components[m - 1];
    InducedPortNfa bottom = induced_port_nfa(whole, suffix);
    Stage stage{port_complement(bottom.automaton, opts.rear_method, copts), bottom.entry_origins};
    if (opts.reduce) { stage.complement = simulation_reduce(stage.complement); }

    for (std::size_t i = m - 1; i-- > 0;) {
        suffix = set_union(suffix, parts.components[i]);
        InducedPortNfa composite = induced_port_nfa(whole, suffix);
        std::vector<State> front_local;
        for (State q : parts.components[i]) {
            auto it = std::lower_bound(composite.origin.begin(), composite.origin.end(), q);
            front_local.push_back(static_cast<State>(it - composite.origin.begin()));
        }
        SequentialPartition p = make_sequential_partition(composite.automaton, make_state_set(front_local));
        SequentialPartition dp = determinize_front(p, opts.minimize, opts.max_states);
        PortNfa c2 = select_entries(dp, composite, stage);
        PortNfa c = seq_complement_generalized(dp, c2, opts.max_states).automaton;
        if (i == 0) {
            res.states_before_trim = c.num_states();
            stage.complement = trim(c);
        } else {
            stage.complement = opts.reduce ? simulation_reduce(c) : trim(c);
        }
        stage.entry_origins = composite.entry_origins;
    }
    res.automaton = slice(stage.complement, 0, 0);
    return res;
}

bool single_instance_class(const SequentialPartition& p) {
    const StateSet exits = p.inner_exit_ports_front();
    std::map<std::pair<State, Symbol>, int> per_symbol;
    for (const auto& t : p.transfers) {
        if (++per_symbol[{t.source, t.symbol}] > 1) { return false; }
    }
    for (const auto& e : p.rear.entries()) {
        if (!e.empty()) { return false; }
    }
    std::vector<bool> is_exit(p.front.num_states(), false);
    for (State q : exits) { is_exit[q] = true; }
    for (const auto& [key, count] : per_symbol) {
        auto [q, a] = key;
        StateSet start = p.front.post(q, a);
        auto reach = reachable_states(p.front, start);
        for (State x = 0; x < reach.size(); ++x) {
            if (reach[x] && is_exit[x]) { return false; }
        }
    }
    return true;
}

std::size_t exit_port_successor_count(const SequentialPartition& p) {
    std::vector<State> succ;
    for (State q : p.inner_exit_ports_front()) {
        for (const Move& m : p.front.moves(q)) { succ.push_back(m.target); }
    }
    return make_state_set(std::move(succ)).size();
}

} // namespace nfacomp
