// Gate complementation: basic construction, Equal/Disjoint variants, partition search.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nfacomp/nfa.hh"
#include "nfacomp/partition.hh"
#include "nfacomp/powerset.hh"
#include "nfacomp/reduction.hh"

namespace nfacomp {

/// Which component has no transitions under the gate symbols.
enum class GateDirection { FrontClean, RearClean };
enum class GateMethod { Equal, Disjoint };

struct GatePartition {
    SequentialPartition base;
    /// Symbols on the transfer transitions, sorted.
    std::vector<Symbol> gate_symbols;
    GateDirection direction = GateDirection::FrontClean;
    GateMethod method = GateMethod::Equal;
    /// FrontClean: the rear has outer entry ports. RearClean: the front has outer exit ports.
    bool needs_intersection = false;
};

/// Gate symbols and cleanliness of base; nullopt when base is not a gate partition.
/// A clean component without any transition is rejected as degenerate.
std::optional<GatePartition> as_gate_partition(const SequentialPartition& base);

struct GateCheckOptions {
    /// Antichain expansions per language check.
    std::size_t max_expansions = 10'000'000;
};

/// Prefix languages into every c-gate target agree with the language into all c-gate targets.
/// For RearClean the condition is checked on the mirrored (reversed) partition.
/// Throws BudgetExceeded when a check runs out of budget.
bool check_equal(const GatePartition& p, const GateCheckOptions& opts = {});
/// Overlapping prefix languages of two c-gate sources imply equal suffix languages of their targets.
bool check_disjoint(const GatePartition& p, const GateCheckOptions& opts = {});

struct GateSearchOptions {
    /// Downward-closed SCC sets enumerated before falling back to topological prefixes.
    std::size_t max_candidates = 4096;
    GateCheckOptions check;
    Execution execution = Execution::Parallel;
};

/// Candidate cuts of the SCC condensation that are gate partitions with an Equal or Disjoint tag.
/// The result is ordered by candidate index and independent of the execution mode.
std::vector<GatePartition> find_gate_partitions(const PortNfa& a, const GateSearchOptions& opts = {});

/// Prefers partitions without intersection, then Equal, then the smallest size difference,
/// then the lexicographically smallest front state set.
std::optional<GatePartition> select_partition(const std::vector<GatePartition>& ps);

/// Front with exit sets [outer exits..., gate sources of c for c in gate_symbols].
PortNfa gate_front(const GatePartition& p);
/// Equal: rear with entry sets [outer entries..., gate targets of c for c in gate_symbols].
/// Disjoint: rear with entry sets [outer entries..., {r} for every gate target r].
PortNfa gate_rear(const GatePartition& p);

/// c1 and c2 complement gate_front(p) and gate_rear(p): FrontClean over (Σ∖Γ, Σ), RearClean over (Σ, Σ∖Γ).
PortNfa gate_complement_equal(const GatePartition& p, const PortNfa& c1, const PortNfa& c2);
PortNfa gate_complement_disjoint(const GatePartition& p, const PortNfa& c1, const PortNfa& c2);

struct GateOptions {
    /// Powerset direction per component; both are tried and the smaller kept when unset.
    std::optional<Direction> front_method;
    std::optional<Direction> rear_method;
    bool minimize = true;
    std::size_t max_states = unlimited;
    GateSearchOptions search;
};

/// Gate complement of a for the partition p, which must come from a.
/// Partitions needing intersection are complemented without the offending outer ports and
/// intersected with a complement of the affected component.
PortNfa gate_complement(const GatePartition& p, const GateOptions& opts = {});

/// Basic gate complement with the sizes of the component complements it was built from.
struct GateBasicResult {
    Nfa automaton;
    std::size_t c1_states = 0;
    std::size_t c2_states = 0;
};

/// Complement of L(a1).c.L(a2) where c does not occur in a1. States: C_1, s, t, C_2 in this order.
GateBasicResult gate_complement_basic(const Nfa& a1, const Nfa& a2, Symbol c, const GateOptions& opts = {});

struct GateResult {
    Nfa automaton;
    std::size_t states_before_trim = 0;
    GatePartition partition;
};

/// Searches, selects, and complements. Throws NoGatePartition when no candidate qualifies.
GateResult gate_method(const Nfa& a, const GateOptions& opts = {});

} // namespace nfacomp
