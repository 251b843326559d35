#include "nfacomp/reduction.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "nfacomp/algorithms.hh"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nfacomp {

namespace {

StateSet all_entries(const PortNfa& a) {
    StateSet out;
    for (const auto& e : a.entries()) { out = set_union(out, e); }
    return out;
}

} // namespace

PortMinimization minimize_port_dfa(const PortNfa& dfa, std::span<const Symbol> symbols,
                                   std::span<const std::uint64_t> colors) {
    if (!is_deterministic(dfa) || !has_complete_moves(dfa, symbols)) {
        throw std::invalid_argument("minimization requires a deterministic and complete automaton");
    }
    for (State q = 0; q < dfa.num_states(); ++q) {
        for (const Move& m : dfa.moves(q)) {
            if (std::find(symbols.begin(), symbols.end(), m.symbol) == symbols.end()) {
                throw std::invalid_argument("transition on a symbol outside the minimization alphabet");
            }
        }
    }
    if (!colors.empty() && colors.size() != dfa.num_states()) { throw std::invalid_argument("color count mismatch"); }

    const auto reach = reachable_states(dfa, all_entries(dfa));
    const Restriction r = make_restriction(reach);
    const PortNfa a = restrict_to(dfa, r);
    const std::size_t n = a.num_states();
    const std::size_t k = symbols.size();

    std::vector<std::vector<State>> succ(n, std::vector<State>(k));
    std::vector<std::vector<std::vector<State>>> pre(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q) {
        for (std::size_t s = 0; s < k; ++s) {
            State t = a.moves(q, symbols[s]).front().target;
            succ[q][s] = t;
            pre[s][t].push_back(q);
        }
    }

    std::vector<std::size_t> block_of(n);
    std::vector<std::vector<State>> blocks;
    {
        std::map<std::pair<std::vector<bool>, std::uint64_t>, std::size_t> keys;
        for (State q = 0; q < n; ++q) {
            std::vector<bool> membership;
            for (const auto& f : a.exits()) { membership.push_back(contains(f, q)); }
            std::uint64_t color = colors.empty() ? 0 : colors[r.kept[q]];
            auto [it, fresh] = keys.emplace(std::make_pair(std::move(membership), color), blocks.size());
            if (fresh) { blocks.emplace_back(); }
            block_of[q] = it->second;
            blocks[it->second].push_back(q);
        }
    }

    std::deque<std::pair<std::size_t, std::size_t>> work;
    std::vector<std::vector<bool>> in_work;
    auto push = [&](std::size_t b, std::size_t s) {
        if (!in_work[b][s]) {
            in_work[b][s] = true;
            work.emplace_back(b, s);
        }
    };
    in_work.assign(blocks.size(), std::vector<bool>(k, false));
    if (!blocks.empty()) {
        std::size_t largest = 0;
        for (std::size_t b = 1; b < blocks.size(); ++b) {
            if (blocks[b].size() > blocks[largest].size()) { largest = b; }
        }
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (b != largest) { push(b, s); }
            }
        }
    }

    std::vector<bool> marked(n, false);
    std::vector<std::size_t> hits(n, 0);
    while (!work.empty()) {
        auto [splitter, s] = work.front();
        work.pop_front();
        in_work[splitter][s] = false;

        std::vector<State> touched;
        for (State t : blocks[splitter]) {
            for (State p : pre[s][t]) {
                if (!marked[p]) {
                    marked[p] = true;
                    touched.push_back(p);
                }
            }
        }
        std::vector<std::size_t> touched_blocks;
        for (State p : touched) {
            if (hits[block_of[p]]++ == 0) { touched_blocks.push_back(block_of[p]); }
        }
        for (std::size_t y : touched_blocks) {
            if (hits[y] < blocks[y].size()) {
                std::vector<State> in;
                std::vector<State> out;
                for (State q : blocks[y]) { (marked[q] ? in : out).push_back(q); }
                std::size_t z = blocks.size();
                blocks[y] = std::move(out);
                blocks.push_back(std::move(in));
                in_work.emplace_back(k, false);
                for (State q : blocks[z]) { block_of[q] = z; }
                for (std::size_t s2 = 0; s2 < k; ++s2) {
                    if (in_work[y][s2]) {
                        push(z, s2);
                    } else {
                        push(blocks[z].size() <= blocks[y].size() ? z : y, s2);
                    }
                }
            }
            hits[y] = 0;
        }
        for (State p : touched) { marked[p] = false; }
    }

    // Number classes in BFS order from the entries.
    std::vector<State> class_id(blocks.size(), no_state);
    std::vector<std::size_t> order;
    std::deque<std::size_t> bfs;
    auto visit = [&](std::size_t b) {
        if (class_id[b] == no_state) {
            class_id[b] = static_cast<State>(order.size());
            order.push_back(b);
            bfs.push_back(b);
        }
    };
    for (const auto& e : a.entries()) {
        for (State q : e) { visit(block_of[q]); }
    }
    while (!bfs.empty()) {
        std::size_t b = bfs.front();
        bfs.pop_front();
        State rep = blocks[b].front();
        for (std::size_t s = 0; s < k; ++s) { visit(block_of[succ[rep][s]]); }
    }

    TransitionSystem ts(a.alphabet(), order.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
        State rep = blocks[order[c]].front();
        for (std::size_t s = 0; s < k; ++s) {
            ts.add_transition(static_cast<State>(c), symbols[s], class_id[block_of[succ[rep][s]]]);
        }
    }
    std::vector<StateSet> entries;
    for (const auto& e : a.entries()) {
        std::vector<State> ids;
        for (State q : e) { ids.push_back(class_id[block_of[q]]); }
        entries.push_back(make_state_set(std::move(ids)));
    }
    std::vector<StateSet> exits;
    for (const auto& f : a.exits()) {
        std::vector<State> ids;
        for (State q : f) { ids.push_back(class_id[block_of[q]]); }
        exits.push_back(make_state_set(std::move(ids)));
    }

    PortMinimization res{PortNfa::with_ports(ts, std::move(entries), std::move(exits)),
                         std::vector<State>(dfa.num_states(), no_state)};
    for (State q = 0; q < dfa.num_states(); ++q) {
        if (r.new_id[q] != no_state) { res.class_of[q] = class_id[block_of[r.new_id[q]]]; }
    }
    return res;
}

PortNfa hopcroft_minimize(const PortNfa& dfa) {
    auto symbols = dfa.alphabet().symbols();
    return minimize_port_dfa(dfa, symbols).dfa;
}

Nfa hopcroft_minimize(const Nfa& dfa) {
    auto symbols = dfa.alphabet().symbols();
    return hopcroft_minimize(dfa, symbols);
}

Nfa hopcroft_minimize(const Nfa& dfa, std::span<const Symbol> symbols) {
    return slice(minimize_port_dfa(PortNfa::from_nfa(dfa), symbols).dfa, 0, 0);
}

SimulationPreorder::SimulationPreorder(std::size_t n) : n_(n), rows_(n, std::vector<std::uint64_t>((n + 63) / 64, 0)) {}

void SimulationPreorder::set(State p, State q, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (q & 63);
    if (value) {
        rows_[p][q >> 6] |= bit;
    } else {
        rows_[p][q >> 6] &= ~bit;
    }
}

namespace {

/// Pairs allowed before any refinement: exit membership and enabled symbols are inherited.
bool locally_compatible(const PortNfa& a, State p, State q) {
    for (const auto& f : a.exits()) {
        if (contains(f, p) && !contains(f, q)) { return false; }
    }
    auto mp = a.moves(p);
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i > 0 && mp[i].symbol == mp[i - 1].symbol) { continue; }
        if (a.moves(q, mp[i].symbol).empty()) { return false; }
    }
    return true;
}

} // namespace

SimulationPreorder compute_simulation_serial(const PortNfa& a) {
    const std::size_t n = a.num_states();
    SimulationPreorder sim(n);
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) { sim.set(p, q, locally_compatible(a, p, q)); }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            for (State q = 0; q < n; ++q) {
                if (!sim.simulates(p, q)) { continue; }
                bool ok = true;
                for (const Move& mp : a.moves(p)) {
                    bool matched = false;
                    for (const Move& mq : a.moves(q, mp.symbol)) {
                        if (sim.simulates(mp.target, mq.target)) {
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    sim.set(p, q, false);
                    changed = true;
                }
            }
        }
    }
    return sim;
}

SimulationPreorder compute_simulation(const PortNfa& a, Execution exec) {
    if (exec == Execution::Serial) { return compute_simulation_serial(a); }
    const std::size_t n = a.num_states();
    const std::size_t words = (n + 63) / 64;
    const std::size_t k = a.alphabet().size();
    const auto ni = static_cast<std::int64_t>(n);
    SimulationPreorder sim(n);

#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < ni; ++p) {
        for (State q = 0; q < n; ++q) { sim.set(static_cast<State>(p), q, locally_compatible(a, static_cast<State>(p), q)); }
    }

    // matched[s][t] = { q : some s-successor of q is simulating t }, rebuilt every round.
    std::vector<std::vector<std::vector<std::uint64_t>>> matched(k, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(words)));
    bool changed = true;
    while (changed) {
        changed = false;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t t = 0; t < ni; ++t) {
            const auto& row = sim.row(static_cast<State>(t));
            for (std::size_t s = 0; s < k; ++s) {
                auto& m = matched[s][t];
                std::fill(m.begin(), m.end(), 0);
                for (State q = 0; q < n; ++q) {
                    for (const Move& mv : a.moves(q, static_cast<Symbol>(s))) {
                        if ((row[mv.target >> 6] >> (mv.target & 63)) & 1U) {
                            m[q >> 6] |= std::uint64_t{1} << (q & 63);
                            break;
                        }
                    }
                }
            }
        }
        bool any = false;
#pragma omp parallel for schedule(dynamic, 16) reduction(|| : any)
        for (std::int64_t p = 0; p < ni; ++p) {
            auto& row = sim.row(static_cast<State>(p));
            for (const Move& mv : a.moves(static_cast<State>(p))) {
                const auto& m = matched[mv.symbol][mv.target];
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t next = row[w] & m[w];
                    if (next != row[w]) {
                        row[w] = next;
                        any = true;
                    }
                }
            }
        }
        changed = any;
    }
    return sim;
}

PortNfa simulation_reduce(const PortNfa& a, Execution exec) {
    const std::size_t n = a.num_states();
    const SimulationPreorder sim = compute_simulation(a, exec);

    std::vector<State> class_of(n, no_state);
    std::vector<State> reps;
    for (State p = 0; p < n; ++p) {
        if (class_of[p] != no_state) { continue; }
        class_of[p] = static_cast<State>(reps.size());
        for (State q = p + 1; q < n; ++q) {
            if (class_of[q] == no_state && sim.simulates(p, q) && sim.simulates(q, p)) { class_of[q] = class_of[p]; }
        }
        reps.push_back(p);
    }
    auto strictly_below = [&](State c1, State c2) { return c1 != c2 && sim.simulates(reps[c1], reps[c2]); };

    TransitionSystem ts(a.alphabet(), reps.size());
    for (State c = 0; c < reps.size(); ++c) {
        if (a.has_explicit_name(reps[c])) { ts.set_state_name(c, a.state_name(reps[c])); }
    }
    std::vector<std::vector<State>> members(reps.size());
    for (State p = 0; p < n; ++p) { members[class_of[p]].push_back(p); }
    for (State c = 0; c < reps.size(); ++c) {
        // Quotient moves of the whole class.
        std::map<Symbol, std::vector<State>> targets;
        for (State p : members[c]) {
            for (const Move& m : a.moves(p)) { targets[m.symbol].push_back(class_of[m.target]); }
        }
        for (auto& [s, ts_targets] : targets) {
            StateSet tset = make_state_set(std::move(ts_targets));
            for (State t1 : tset) {
                bool dominated = std::any_of(tset.begin(), tset.end(), [&](State t2) { return strictly_below(t1, t2); });
                if (!dominated) { ts.add_transition(c, s, t1); }
            }
        }
    }
    auto map_set = [&](const StateSet& s, bool prune) {
        std::vector<State> ids;
        for (State q : s) { ids.push_back(class_of[q]); }
        StateSet cs = make_state_set(std::move(ids));
        if (!prune) { return cs; }
        StateSet kept;
        for (State c1 : cs) {
            if (std::none_of(cs.begin(), cs.end(), [&](State c2) { return strictly_below(c1, c2); })) { kept.push_back(c1); }
        }
        return kept;
    };
    std::vector<StateSet> entries;
    std::vector<StateSet> exits;
    for (const auto& e : a.entries()) { entries.push_back(map_set(e, true)); }
    for (const auto& f : a.exits()) { exits.push_back(map_set(f, false)); }
    return trim(PortNfa::with_ports(ts, std::move(entries), std::move(exits)));
}

Nfa simulation_reduce(const Nfa& a, Execution exec) { return slice(simulation_reduce(PortNfa::from_nfa(a), exec), 0, 0); }

} // namespace nfacomp
