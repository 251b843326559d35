// Structural and language-level operations on plain and port NFAs.
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "nfacomp/nfa.hh"

namespace nfacomp {

Nfa reverse(const Nfa& a);
/// Flips transitions and swaps the entry and exit sequences.
PortNfa reverse(const PortNfa& a);

/// Disjoint union; states of b are shifted by a.num_states().
Nfa unite(const Nfa& a, const Nfa& b);
/// Element-wise port union. Throws std::invalid_argument on arity mismatch.
PortNfa unite(const PortNfa& a, const PortNfa& b);

/// Nfa with initial = I_i and final = F_j. Throws std::out_of_range.
Nfa slice(const PortNfa& a, std::size_t i, std::size_t j);

/// Copies the states marked in keep (in id order), dropping the rest.
/// new_id[q] is the id of q in the result or no_state.
struct Restriction {
    std::vector<State> new_id;
    std::vector<State> kept;
};
inline constexpr State no_state = std::numeric_limits<State>::max();
Restriction make_restriction(const std::vector<bool>& keep);
Nfa restrict_to(const Nfa& a, const Restriction& r);
PortNfa restrict_to(const PortNfa& a, const Restriction& r);

std::vector<bool> reachable_states(const TransitionSystem& ts, const StateSet& from);
std::vector<bool> coreachable_states(const TransitionSystem& ts, const StateSet& to);

/// Removes unreachable and dead states.
Nfa trim(const Nfa& a);
/// Keeps states reachable from some entry set and co-reachable to some exit set.
PortNfa trim(const PortNfa& a);

struct SccDag {
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::size_t capacity;
        auto operator<=>(const Edge&) const = default;
    };
    /// Maximal SCCs in topological order.
    std::vector<StateSet> components;
    std::vector<std::size_t> component_of;
    /// Sorted by (from, to); capacity counts the transitions between the two components.
    std::vector<Edge> edges;

};
/// Tarjan's algorithm; the reverse of its emission order is the topological order.
SccDag scc_condensation(const TransitionSystem& ts);

/// Throws std::out_of_range for a symbol outside the alphabet.
bool accepts(const Nfa& a, std::span<const Symbol> word);

/// Reachable part of the synchronised product.
Nfa product_intersection(const Nfa& a, const Nfa& b);
/// Slice-wise intersection: entries I'_i x I''_i, exits F'_j x F''_j.
PortNfa product_intersection(const PortNfa& a, const PortNfa& b);

bool is_empty(const Nfa& a);

struct InclusionOptions {
    /// Number of expanded product nodes before BudgetExceeded is thrown.
    std::size_t max_expansions = unlimited;
};

/// Shortest word in L(a) \ L(b), found by forward antichains.
std::optional<Word> inclusion_counterexample(const Nfa& a, const Nfa& b, const InclusionOptions& opts = {});
bool antichain_inclusion(const Nfa& a, const Nfa& b, const InclusionOptions& opts = {});
bool language_equivalent(const Nfa& a, const Nfa& b, const InclusionOptions& opts = {});
/// Emptiness of the on-the-fly product.
bool language_disjoint(const Nfa& a, const Nfa& b, const InclusionOptions& opts = {});

/// At most one successor per state and symbol.
bool has_deterministic_moves(const TransitionSystem& ts);
/// At least one successor per state and symbol in symbols.
bool has_complete_moves(const TransitionSystem& ts, std::span<const Symbol> symbols);
bool has_complete_moves(const TransitionSystem& ts);
/// At most one predecessor per state and symbol.
bool has_reverse_deterministic_moves(const TransitionSystem& ts);

bool is_deterministic(const Nfa& a);
bool is_complete(const Nfa& a);
bool is_reverse_deterministic(const Nfa& a);
bool is_deterministic(const PortNfa& a);
bool is_complete(const PortNfa& a);
bool is_reverse_deterministic(const PortNfa& a);

} // namespace nfacomp
