// Sequential partitions of port NFAs into a front and a rear subautomaton.
#pragma once

#include <vector>

#include "nfacomp/nfa.hh"

namespace nfacomp {

/// front and rear carry the outer port sets only: every entry (exit) set of the composite
/// intersected with the component, in the composite's order.
struct SequentialPartition {
    PortNfa front;
    PortNfa rear;
    /// Transfer transitions; sources are front ids, targets are rear ids.
    std::vector<Transition> transfers;
    /// Composite id of every front / rear state. Empty when the component was rebuilt.
    std::vector<State> front_origin;
    std::vector<State> rear_origin;

    /// Front states with an outgoing transfer.
    StateSet inner_exit_ports_front() const;
    /// Rear states with an incoming transfer.
    StateSet inner_entry_ports_rear() const;
    /// Symbols occurring on transfers.
    std::vector<Symbol> transfer_symbols() const;
};

/// Throws std::invalid_argument if some transition leads from the rear back into the front.
SequentialPartition make_sequential_partition(const PortNfa& a, const StateSet& front_states);

/// Inverse of make_sequential_partition when the origins are present; otherwise front states first.
PortNfa reconstitute(const SequentialPartition& p);

/// Rear with the singletons {p} of its inner entry ports appended to its entry sets.
PortNfa rear_with_singleton_entries(const SequentialPartition& p);

/// Subautomaton on states with ports [I ∩ states for each entry set] ++ [{p} for each state p
/// entered from outside], [F ∩ states for each exit set].
struct InducedPortNfa {
    PortNfa automaton;
    /// Id in a of every state of automaton.
    std::vector<State> origin;
    /// Entry sets of automaton expressed over the ids of a.
    std::vector<StateSet> entry_origins;
};
InducedPortNfa induced_port_nfa(const PortNfa& a, const StateSet& states);

} // namespace nfacomp
