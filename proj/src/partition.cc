#include "nfacomp/partition.hh"

#include <algorithm>
#include <stdexcept>

#include "nfacomp/algorithms.hh"

namespace nfacomp {

StateSet SequentialPartition::inner_exit_ports_front() const {
    std::vector<State> out;
    for (const auto& t : transfers) { out.push_back(t.source); }
    return make_state_set(std::move(out));
}

StateSet SequentialPartition::inner_entry_ports_rear() const {
    std::vector<State> out;
    for (const auto& t : transfers) { out.push_back(t.target); }
    return make_state_set(std::move(out));
}

std::vector<Symbol> SequentialPartition::transfer_symbols() const {
    std::vector<Symbol> out;
    for (const auto& t : transfers) { out.push_back(t.symbol); }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SequentialPartition make_sequential_partition(const PortNfa& a, const StateSet& front_states) {
    std::vector<bool> in_front(a.num_states(), false);
    for (State q : front_states) {
        if (q >= a.num_states()) { throw std::out_of_range("front state out of range"); }
        in_front[q] = true;
    }
    std::vector<bool> in_rear(a.num_states());
    for (State q = 0; q < a.num_states(); ++q) { in_rear[q] = !in_front[q]; }
    const Restriction rf = make_restriction(in_front);
    const Restriction rr = make_restriction(in_rear);

    SequentialPartition p;
    p.front = restrict_to(a, rf);
    p.rear = restrict_to(a, rr);
    p.front_origin = rf.kept;
    p.rear_origin = rr.kept;
    for (const auto& t : a.transitions()) {
        if (in_front[t.source] && !in_front[t.target]) {
            p.transfers.push_back({rf.new_id[t.source], t.symbol, rr.new_id[t.target]});
        } else if (!in_front[t.source] && in_front[t.target]) {
            throw std::invalid_argument("transition from rear to front; not a sequential partition");
        }
    }
    return p;
}

PortNfa reconstitute(const SequentialPartition& p) {
    const std::size_t nf = p.front.num_states();
    const std::size_t n = nf + p.rear.num_states();
    std::vector<State> fid(nf);
    std::vector<State> rid(p.rear.num_states());
    const bool mapped = p.front_origin.size() == nf && p.rear_origin.size() == p.rear.num_states();
    for (State q = 0; q < nf; ++q) { fid[q] = mapped ? p.front_origin[q] : q; }
    for (State q = 0; q < rid.size(); ++q) { rid[q] = mapped ? p.rear_origin[q] : static_cast<State>(nf + q); }

    TransitionSystem ts(p.front.alphabet(), n);
    auto copy = [&](const PortNfa& part, const std::vector<State>& id) {
        for (State q = 0; q < part.num_states(); ++q) {
            for (const Move& m : part.moves(q)) { ts.add_transition(id[q], m.symbol, id[m.target]); }
            if (part.has_explicit_name(q)) { ts.set_state_name(id[q], part.state_name(q)); }
        }
    };
    copy(p.front, fid);
    copy(p.rear, rid);
    for (const auto& t : p.transfers) { ts.add_transition(fid[t.source], t.symbol, rid[t.target]); }

    auto merged = [&](const StateSet& f, const StateSet& r) {
        std::vector<State> out;
        for (State q : f) { out.push_back(fid[q]); }
        for (State q : r) { out.push_back(rid[q]); }
        return make_state_set(std::move(out));
    };
    std::vector<StateSet> entries;
    std::vector<StateSet> exits;
    for (std::size_t i = 0; i < p.front.num_entries(); ++i) { entries.push_back(merged(p.front.entry(i), p.rear.entry(i))); }
    for (std::size_t j = 0; j < p.front.num_exits(); ++j) { exits.push_back(merged(p.front.exit(j), p.rear.exit(j))); }
    return PortNfa::with_ports(ts, std::move(entries), std::move(exits));
}

PortNfa rear_with_singleton_entries(const SequentialPartition& p) {
    PortNfa r = p.rear;
    for (State q : p.inner_entry_ports_rear()) { r.add_entry_set({q}); }
    return r;
}

InducedPortNfa induced_port_nfa(const PortNfa& a, const StateSet& states) {
    std::vector<bool> keep(a.num_states(), false);
    for (State q : states) { keep[q] = true; }
    const Restriction r = make_restriction(keep);
    InducedPortNfa res{restrict_to(a, r), r.kept, {}};

    std::vector<bool> entered(a.num_states(), false);
    for (State q = 0; q < a.num_states(); ++q) {
        if (keep[q]) { continue; }
        for (const Move& m : a.moves(q)) {
            if (keep[m.target]) { entered[m.target] = true; }
        }
    }
    for (const auto& e : a.entries()) { res.entry_origins.push_back(set_intersection(e, states)); }
    for (State q = 0; q < a.num_states(); ++q) {
        if (entered[q]) {
            res.automaton.add_entry_set({r.new_id[q]});
            res.entry_origins.push_back({q});
        }
    }
    return res;
}

} // namespace nfacomp
