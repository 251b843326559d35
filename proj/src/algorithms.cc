#include "nfacomp/algorithms.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "nfacomp/error.hh"

namespace nfacomp {

namespace {

TransitionSystem reversed_structure(const TransitionSystem& ts) {
    TransitionSystem out(ts.alphabet(), ts.num_states());
    for (State q = 0; q < ts.num_states(); ++q) {
        for (const Move& m : ts.moves(q)) { out.add_transition(m.target, m.symbol, q); }
        if (ts.has_explicit_name(q)) { out.set_state_name(q, ts.state_name(q)); }
    }
    return out;
}

/// Appends the states of src to dst; returns the offset.
State append_structure(TransitionSystem& dst, const TransitionSystem& src) {
    if (!(dst.alphabet() == src.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    State offset = static_cast<State>(dst.num_states());
    dst.add_states(src.num_states());
    for (State q = 0; q < src.num_states(); ++q) {
        for (const Move& m : src.moves(q)) { dst.add_transition(q + offset, m.symbol, m.target + offset); }
        if (src.has_explicit_name(q)) { dst.set_state_name(q + offset, src.state_name(q)); }
    }
    return offset;
}

StateSet shifted(const StateSet& s, State offset) {
    StateSet out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) { out[i] = s[i] + offset; }
    return out;
}

StateSet renamed(const StateSet& s, const Restriction& r) {
    StateSet out;
    for (State q : s) {
        if (r.new_id[q] != no_state) { out.push_back(r.new_id[q]); }
    }
    return out;
}

TransitionSystem restrict_structure(const TransitionSystem& ts, const Restriction& r) {
    TransitionSystem out(ts.alphabet(), r.kept.size());
    for (State nq = 0; nq < r.kept.size(); ++nq) {
        State q = r.kept[nq];
        for (const Move& m : ts.moves(q)) {
            State t = r.new_id[m.target];
            if (t != no_state) { out.add_transition(nq, m.symbol, t); }
        }
        if (ts.has_explicit_name(q)) { out.set_state_name(nq, ts.state_name(q)); }
    }
    return out;
}

StateSet union_of(const std::vector<StateSet>& sets) {
    StateSet out;
    for (const auto& s : sets) { out = set_union(out, s); }
    return out;
}

StateSet post_set(const TransitionSystem& ts, const StateSet& from, Symbol a) {
    std::vector<State> out;
    for (State q : from) {
        for (const Move& m : ts.moves(q, a)) { out.push_back(m.target); }
    }
    return make_state_set(std::move(out));
}

} // namespace

Nfa reverse(const Nfa& a) { return make_nfa(reversed_structure(a), a.final(), a.initial()); }

PortNfa reverse(const PortNfa& a) { return PortNfa::with_ports(reversed_structure(a), a.exits(), a.entries()); }

Nfa unite(const Nfa& a, const Nfa& b) {
    TransitionSystem ts = a;
    State off = append_structure(ts, b);
    return make_nfa(ts, set_union(a.initial(), shifted(b.initial(), off)), set_union(a.final(), shifted(b.final(), off)));
}

PortNfa unite(const PortNfa& a, const PortNfa& b) {
    if (a.num_entries() != b.num_entries() || a.num_exits() != b.num_exits()) {
        throw std::invalid_argument("port union requires equal entry and exit arities");
    }
    TransitionSystem ts = a;
    State off = append_structure(ts, b);
    std::vector<StateSet> entries;
    std::vector<StateSet> exits;
    for (std::size_t i = 0; i < a.num_entries(); ++i) { entries.push_back(set_union(a.entry(i), shifted(b.entry(i), off))); }
    for (std::size_t j = 0; j < a.num_exits(); ++j) { exits.push_back(set_union(a.exit(j), shifted(b.exit(j), off))); }
    return PortNfa::with_ports(ts, std::move(entries), std::move(exits));
}

Nfa slice(const PortNfa& a, std::size_t i, std::size_t j) {
    if (i >= a.num_entries() || j >= a.num_exits()) { throw std::out_of_range("slice index out of range"); }
    return make_nfa(a, a.entry(i), a.exit(j));
}

Restriction make_restriction(const std::vector<bool>& keep) {
    Restriction r;
    r.new_id.assign(keep.size(), no_state);
    for (State q = 0; q < keep.size(); ++q) {
        if (keep[q]) {
            r.new_id[q] = static_cast<State>(r.kept.size());
            r.kept.push_back(q);
        }
    }
    return r;
}

Nfa restrict_to(const Nfa& a, const Restriction& r) {
    return make_nfa(restrict_structure(a, r), renamed(a.initial(), r), renamed(a.final(), r));
}

PortNfa restrict_to(const PortNfa& a, const Restriction& r) {
    std::vector<StateSet> entries;
    std::vector<StateSet> exits;
    for (const auto& e : a.entries()) { entries.push_back(renamed(e, r)); }
    for (const auto& f : a.exits()) { exits.push_back(renamed(f, r)); }
    return PortNfa::with_ports(restrict_structure(a, r), std::move(entries), std::move(exits));
}

std::vector<bool> reachable_states(const TransitionSystem& ts, const StateSet& from) {
    std::vector<bool> seen(ts.num_states(), false);
    std::vector<State> stack;
    for (State q : from) {
        if (!seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (const Move& m : ts.moves(q)) {
            if (!seen[m.target]) {
                seen[m.target] = true;
                stack.push_back(m.target);
            }
        }
    }
    return seen;
}

std::vector<bool> coreachable_states(const TransitionSystem& ts, const StateSet& to) {
    return reachable_states(reversed_structure(ts), to);
}

Nfa trim(const Nfa& a) {
    auto fw = reachable_states(a, a.initial());
    auto bw = coreachable_states(a, a.final());
    std::vector<bool> keep(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) { keep[q] = fw[q] && bw[q]; }
    return restrict_to(a, make_restriction(keep));
}

PortNfa trim(const PortNfa& a) {
    auto fw = reachable_states(a, union_of(a.entries()));
    auto bw = coreachable_states(a, union_of(a.exits()));
    std::vector<bool> keep(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) { keep[q] = fw[q] && bw[q]; }
    return restrict_to(a, make_restriction(keep));
}

SccDag scc_condensation(const TransitionSystem& ts) {
    const std::size_t n = ts.num_states();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<StateSet> emitted;
    std::size_t counter = 0;

    struct Frame {
        State q;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) { continue; }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            auto mv = ts.moves(f.q);
            if (f.next < mv.size()) {
                State t = mv[f.next++].target;
                if (index[t] == unvisited) {
                    index[t] = low[t] = counter++;
                    stack.push_back(t);
                    on_stack[t] = true;
                    call.push_back({t, 0});
                } else if (on_stack[t]) {
                    low[f.q] = std::min(low[f.q], index[t]);
                }
                continue;
            }
            State q = f.q;
            call.pop_back();
            if (!call.empty()) { low[call.back().q] = std::min(low[call.back().q], low[q]); }
            if (low[q] == index[q]) {
                StateSet comp;
                State x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    comp.push_back(x);
                } while (x != q);
                emitted.push_back(make_state_set(std::move(comp)));
            }
        }
    }

    SccDag dag;
    dag.components.assign(emitted.rbegin(), emitted.rend());
    dag.component_of.assign(n, 0);
    for (std::size_t c = 0; c < dag.components.size(); ++c) {
        for (State q : dag.components[c]) { dag.component_of[q] = c; }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> caps;
    for (State q = 0; q < n; ++q) {
        for (const Move& m : ts.moves(q)) {
            std::size_t cf = dag.component_of[q];
            std::size_t ct = dag.component_of[m.target];
            if (cf != ct) { ++caps[{cf, ct}]; }
        }
    }
    for (const auto& [key, cap] : caps) { dag.edges.push_back({key.first, key.second, cap}); }
    return dag;
}

bool accepts(const Nfa& a, std::span<const Symbol> word) {
    StateSet current = a.initial();
    for (Symbol s : word) {
        if (s >= a.alphabet().size()) { throw std::out_of_range("symbol outside alphabet"); }
        current = post_set(a, current, s);
        if (current.empty()) { return false; }
    }
    return intersects(current, a.final());
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<State, State>& p) const noexcept {
        return (static_cast<std::size_t>(p.first) << 32) ^ p.second;
    }
};

/// On-the-fly product over the given initial pairs; returns transition system and pair table.
struct ProductResult {
    TransitionSystem ts;
    std::unordered_map<std::pair<State, State>, State, PairHash> ids;
};

ProductResult build_product(const TransitionSystem& a, const TransitionSystem& b,
                            const std::vector<std::pair<State, State>>& roots) {
    if (!(a.alphabet() == b.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    ProductResult res{TransitionSystem(a.alphabet()), {}};
    std::deque<std::pair<State, State>> work;
    auto get = [&](std::pair<State, State> p) {
        auto it = res.ids.find(p);
        if (it != res.ids.end()) { return it->second; }
        State id = res.ts.add_state();
        res.ids.emplace(p, id);
        work.push_back(p);
        return id;
    };
    for (const auto& r : roots) { get(r); }
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        State src = res.ids.at({p, q});
        auto mp = a.moves(p);
        auto mq = b.moves(q);
        auto i = mp.begin();
        auto j = mq.begin();
        while (i != mp.end() && j != mq.end()) {
            if (i->symbol < j->symbol) {
                ++i;
            } else if (j->symbol < i->symbol) {
                ++j;
            } else {
                Symbol s = i->symbol;
                auto iend = i;
                while (iend != mp.end() && iend->symbol == s) { ++iend; }
                auto jend = j;
                while (jend != mq.end() && jend->symbol == s) { ++jend; }
                for (auto x = i; x != iend; ++x) {
                    for (auto y = j; y != jend; ++y) { res.ts.add_transition(src, s, get({x->target, y->target})); }
                }
                i = iend;
                j = jend;
            }
        }
    }
    return res;
}

std::vector<std::pair<State, State>> pairs_of(const StateSet& x, const StateSet& y) {
    std::vector<std::pair<State, State>> out;
    for (State p : x) {
        for (State q : y) { out.emplace_back(p, q); }
    }
    return out;
}

StateSet pair_ids(const ProductResult& pr, const StateSet& x, const StateSet& y) {
    std::vector<State> out;
    for (State p : x) {
        for (State q : y) {
            auto it = pr.ids.find({p, q});
            if (it != pr.ids.end()) { out.push_back(it->second); }
        }
    }
    return make_state_set(std::move(out));
}

} // namespace

Nfa product_intersection(const Nfa& a, const Nfa& b) {
    auto pr = build_product(a, b, pairs_of(a.initial(), b.initial()));
    return make_nfa(pr.ts, pair_ids(pr, a.initial(), b.initial()), pair_ids(pr, a.final(), b.final()));
}

PortNfa product_intersection(const PortNfa& a, const PortNfa& b) {
    if (a.num_entries() != b.num_entries() || a.num_exits() != b.num_exits()) {
        throw std::invalid_argument("port intersection requires equal entry and exit arities");
    }
    std::vector<std::pair<State, State>> roots;
    for (std::size_t i = 0; i < a.num_entries(); ++i) {
        auto r = pairs_of(a.entry(i), b.entry(i));
        roots.insert(roots.end(), r.begin(), r.end());
    }
    auto pr = build_product(a, b, roots);
    std::vector<StateSet> entries;
    std::vector<StateSet> exits;
    for (std::size_t i = 0; i < a.num_entries(); ++i) { entries.push_back(pair_ids(pr, a.entry(i), b.entry(i))); }
    for (std::size_t j = 0; j < a.num_exits(); ++j) { exits.push_back(pair_ids(pr, a.exit(j), b.exit(j))); }
    return PortNfa::with_ports(pr.ts, std::move(entries), std::move(exits));
}

bool is_empty(const Nfa& a) {
    auto fw = reachable_states(a, a.initial());
    for (State q : a.final()) {
        if (fw[q]) { return false; }
    }
    return true;
}

std::optional<Word> inclusion_counterexample(const Nfa& a, const Nfa& b, const InclusionOptions& opts) {
    if (!(a.alphabet() == b.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    struct Node {
        State p;
        StateSet macro;
        std::size_t parent;
        Symbol symbol;
    };
    constexpr std::size_t root = std::numeric_limits<std::size_t>::max();
    std::vector<Node> nodes;
    std::vector<std::vector<StateSet>> antichain(a.num_states());
    std::deque<std::size_t> work;

    auto word_of = [&](std::size_t idx) {
        Word w;
        while (idx != root) {
            if (nodes[idx].parent != root) { w.push_back(nodes[idx].symbol); }
            idx = nodes[idx].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    // Returns true if the node was added.
    auto offer = [&](State p, StateSet macro, std::size_t parent, Symbol s) -> std::optional<std::size_t> {
        auto& chain = antichain[p];
        for (const auto& m : chain) {
            if (is_subset(m, macro)) { return std::nullopt; }
        }
        std::erase_if(chain, [&](const StateSet& m) { return is_subset(macro, m); });
        chain.push_back(macro);
        nodes.push_back({p, std::move(macro), parent, s});
        work.push_back(nodes.size() - 1);
        return nodes.size() - 1;
    };
    auto violates = [&](const Node& n) { return a.is_final(n.p) && !intersects(n.macro, b.final()); };

    for (State p : a.initial()) {
        if (auto idx = offer(p, b.initial(), root, 0); idx && violates(nodes[*idx])) { return Word{}; }
    }
    std::size_t expansions = 0;
    while (!work.empty()) {
        std::size_t idx = work.front();
        work.pop_front();
        if (++expansions > opts.max_expansions) { throw BudgetExceeded("antichain inclusion", opts.max_expansions); }
        const State p = nodes[idx].p;
        const StateSet macro = nodes[idx].macro;
        for (const Move& m : a.moves(p)) {
            StateSet next = post_set(b, macro, m.symbol);
            auto added = offer(m.target, std::move(next), idx, m.symbol);
            if (added && violates(nodes[*added])) { return word_of(*added); }
        }
    }
    return std::nullopt;
}

bool antichain_inclusion(const Nfa& a, const Nfa& b, const InclusionOptions& opts) {
    return !inclusion_counterexample(a, b, opts).has_value();
}

bool language_equivalent(const Nfa& a, const Nfa& b, const InclusionOptions& opts) {
    return antichain_inclusion(a, b, opts) && antichain_inclusion(b, a, opts);
}

bool language_disjoint(const Nfa& a, const Nfa& b, const InclusionOptions& opts) {
    if (!(a.alphabet() == b.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    std::unordered_map<std::pair<State, State>, bool, PairHash> seen;
    std::deque<std::pair<State, State>> work;
    for (const auto& r : pairs_of(a.initial(), b.initial())) {
        if (seen.emplace(r, true).second) { work.push_back(r); }
    }
    std::size_t expansions = 0;
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop_front();
        if (a.is_final(p) && b.is_final(q)) { return false; }
        if (++expansions > opts.max_expansions) { throw BudgetExceeded("product emptiness", opts.max_expansions); }
        for (const Move& x : a.moves(p)) {
            for (const Move& y : b.moves(q, x.symbol)) {
                std::pair<State, State> nxt{x.target, y.target};
                if (seen.emplace(nxt, true).second) { work.push_back(nxt); }
            }
        }
    }
    return true;
}

bool has_deterministic_moves(const TransitionSystem& ts) {
    for (State q = 0; q < ts.num_states(); ++q) {
        auto mv = ts.moves(q);
        for (std::size_t i = 1; i < mv.size(); ++i) {
            if (mv[i].symbol == mv[i - 1].symbol) { return false; }
        }
    }
    return true;
}

bool has_complete_moves(const TransitionSystem& ts, std::span<const Symbol> symbols) {
    for (State q = 0; q < ts.num_states(); ++q) {
        for (Symbol a : symbols) {
            if (ts.moves(q, a).empty()) { return false; }
        }
    }
    return true;
}

bool has_complete_moves(const TransitionSystem& ts) {
    auto all = ts.alphabet().symbols();
    return has_complete_moves(ts, all);
}

bool has_reverse_deterministic_moves(const TransitionSystem& ts) {
    std::vector<std::vector<bool>> hit(ts.num_states(), std::vector<bool>(ts.alphabet().size(), false));
    for (State q = 0; q < ts.num_states(); ++q) {
        for (const Move& m : ts.moves(q)) {
            if (hit[m.target][m.symbol]) { return false; }
            hit[m.target][m.symbol] = true;
        }
    }
    return true;
}

bool is_deterministic(const Nfa& a) { return a.initial().size() == 1 && has_deterministic_moves(a); }

bool is_complete(const Nfa& a) { return !a.initial().empty() && has_complete_moves(a); }

bool is_reverse_deterministic(const Nfa& a) { return a.final().size() == 1 && has_reverse_deterministic_moves(a); }

bool is_deterministic(const PortNfa& a) {
    for (const auto& e : a.entries()) {
        if (e.size() != 1) { return false; }
    }
    return has_deterministic_moves(a);
}

bool is_complete(const PortNfa& a) {
    for (const auto& e : a.entries()) {
        if (e.empty()) { return false; }
    }
    return has_complete_moves(a);
}

bool is_reverse_deterministic(const PortNfa& a) {
    for (const auto& f : a.exits()) {
        if (f.size() != 1) { return false; }
    }
    return has_reverse_deterministic_moves(a);
}

} // namespace nfacomp
