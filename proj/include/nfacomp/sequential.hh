// Sequential complementation: basic and generalized constructions, partitioning, pipeline.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nfacomp/nfa.hh"
#include "nfacomp/partition.hh"
#include "nfacomp/powerset.hh"

namespace nfacomp {

enum class PartitionStrategy { DeterministicComponents, DetPlusRevDetBottom, MinCut };

std::string to_string(PartitionStrategy s);

struct Partitioning {
    /// Disjoint components covering all states; transitions only lead to the same or a later component.
    std::vector<StateSet> components;
    /// Number of transitions between different components.
    std::size_t transfer_count = 0;
};

Partitioning partition(const Nfa& a, PartitionStrategy strategy);

struct MinCut {
    StateSet front;
    std::size_t capacity = 0;
};

/// Edmonds-Karp on the SCC condensation. Source: fresh vertex feeding every SCC without
/// predecessors; sink: the last SCC in topological order. Backward edges carry infinite
/// capacity so that no transition leads from the rear to the front.
MinCut min_cut_partition(const Nfa& a);

/// Complement of L(a1).c.L(a2) composed from det(a1) and the rear complement.
/// Requires a single final state in a1 and a single initial state in a2.
Nfa seq_complement_basic(const Nfa& a1, const Nfa& a2, Symbol c, Direction rear_method = Direction::Reverse,
                         std::size_t max_states = unlimited);
/// Same construction with the rear complement supplied.
Nfa seq_compose_basic(const Nfa& a1, const Nfa& c2, Symbol c, std::size_t max_states = unlimited);

struct SeqComplement {
    PortNfa automaton;
    /// Front state and tracked rear-complement states of every output state.
    std::vector<State> front_state;
    std::vector<StateSet> tracked;
};

/// Port-based composition. p.front must be deterministic and complete; c2 must have the
/// entry sets of p.rear followed by one per inner entry port (in id order), and the exit sets of p.rear.
SeqComplement seq_complement_generalized(const SequentialPartition& p, const PortNfa& c2,
                                         std::size_t max_states = unlimited);

/// Port-determinizes the front and lifts the transfers to macrostates.
/// When minimize is set the DFA is minimized, keeping exits and transfer signatures apart.
SequentialPartition determinize_front(const SequentialPartition& p, bool minimize = false,
                                      std::size_t max_states = unlimited);

/// Rear complement with the entry layout expected by seq_complement_generalized.
PortNfa rear_complement(const SequentialPartition& p, Direction method, const ComplementOptions& opts = {});

struct PipelineOptions {
    Direction rear_method = Direction::Reverse;
    /// Minimize powerset DFAs (fronts and the bottom complement).
    bool minimize = true;
    /// Simulation-reduce intermediate complements.
    bool reduce = true;
    std::size_t max_states = unlimited;
};

struct PipelineResult {
    Nfa automaton;
    std::size_t states_before_trim = 0;
    std::vector<std::size_t> component_sizes;
};

PipelineResult seq_pipeline(const Nfa& a, PartitionStrategy strategy, const PipelineOptions& opts = {});

/// Conditions: (1) no inner exit port reaches an inner exit port by a path that starts with one of
/// its transfer symbols, (2) at most one transfer per inner exit port and symbol, (3) the rear has
/// no outer entry ports. Meaningful for a deterministic front, as produced by determinize_front.
bool single_instance_class(const SequentialPartition& p);

/// Number of front states that are successors of an inner exit port.
std::size_t exit_port_successor_count(const SequentialPartition& p);

} // namespace nfacomp
