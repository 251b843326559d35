// Plain and port NFA data model.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nfacomp {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Sorted, duplicate-free sequence of states.
using StateSet = std::vector<State>;

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

struct Move {
    Symbol symbol;
    State target;
    auto operator<=>(const Move&) const = default;
};

struct Transition {
    State source;
    Symbol symbol;
    State target;
    auto operator<=>(const Transition&) const = default;
};

/// Sort and deduplicate.
StateSet make_state_set(std::vector<State> states);
bool contains(const StateSet& set, State q);
void insert(StateSet& set, State q);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersection(const StateSet& a, const StateSet& b);
StateSet set_difference(const StateSet& a, const StateSet& b);
bool intersects(const StateSet& a, const StateSet& b);
bool is_subset(const StateSet& a, const StateSet& b);

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Symbol a) const { return names_.at(a); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Throws std::invalid_argument for an unknown symbol.
    Symbol id(std::string_view name) const;
    bool has(std::string_view name) const;
    std::vector<Symbol> symbols() const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

/// States, alphabet and transition relation shared by Nfa and PortNfa.
/// States are dense ids 0..num_states()-1; optional external names live in a side table.
class TransitionSystem {
public:
    TransitionSystem() = default;
    explicit TransitionSystem(Alphabet alphabet, std::size_t num_states = 0);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return moves_.size(); }
    std::size_t num_transitions() const noexcept { return num_transitions_; }

    State add_state();
    State add_state(std::string name);
    void add_states(std::size_t count);
    /// Relation semantics: adding an existing transition is a no-op.
    void add_transition(State source, Symbol symbol, State target);
    void add_transition(const Transition& t) { add_transition(t.source, t.symbol, t.target); }
    bool has_transition(State source, Symbol symbol, State target) const;

    /// Outgoing moves of q sorted by (symbol, target).
    std::span<const Move> moves(State q) const { return moves_.at(q); }
    /// Targets of q under symbol a, as a sorted range of moves.
    std::span<const Move> moves(State q, Symbol a) const;
    StateSet post(State q, Symbol a) const;
    /// All transitions sorted by (source, symbol, target).
    std::vector<Transition> transitions() const;
    /// Symbols occurring on at least one transition.
    std::vector<Symbol> used_symbols() const;

    void set_state_name(State q, std::string name);
    /// Explicit name or the decimal id.
    std::string state_name(State q) const;
    bool has_explicit_name(State q) const { return q < names_.size() && !names_[q].empty(); }

    /// Structural equality; state names are ignored.
    bool same_structure(const TransitionSystem& other) const;

protected:
    void check_state(State q) const;
    void check_symbol(Symbol a) const;

    Alphabet alphabet_;
    std::vector<std::vector<Move>> moves_;
    std::vector<std::string> names_;
    std::size_t num_transitions_ = 0;
};

class Nfa : public TransitionSystem {
public:
    using TransitionSystem::TransitionSystem;

    const StateSet& initial() const noexcept { return initial_; }
    const StateSet& final() const noexcept { return final_; }
    bool is_initial(State q) const { return contains(initial_, q); }
    bool is_final(State q) const { return contains(final_, q); }

    void add_initial(State q);
    void add_final(State q);
    void set_initial(StateSet states);
    void set_final(StateSet states);

    bool operator==(const Nfa& other) const;

private:
    StateSet initial_;
    StateSet final_;
};

class PortNfa : public TransitionSystem {
public:
    using TransitionSystem::TransitionSystem;

    static PortNfa from_nfa(const Nfa& a);
    /// Same states and transitions with the given port sets.
    static PortNfa with_ports(const TransitionSystem& ts, std::vector<StateSet> entries, std::vector<StateSet> exits);

    const std::vector<StateSet>& entries() const noexcept { return entries_; }
    const std::vector<StateSet>& exits() const noexcept { return exits_; }
    const StateSet& entry(std::size_t i) const { return entries_.at(i); }
    const StateSet& exit(std::size_t j) const { return exits_.at(j); }
    std::size_t num_entries() const noexcept { return entries_.size(); }
    std::size_t num_exits() const noexcept { return exits_.size(); }

    std::size_t add_entry_set(StateSet states);
    std::size_t add_exit_set(StateSet states);
    void set_entry_set(std::size_t i, StateSet states);
    void set_exit_set(std::size_t j, StateSet states);

    bool operator==(const PortNfa& other) const;

private:
    std::vector<StateSet> entries_;
    std::vector<StateSet> exits_;
};

/// Builds a plain NFA over the states and transitions of ts.
Nfa make_nfa(const TransitionSystem& ts, StateSet initial, StateSet final);

/// One-state automaton accepting every word.
Nfa universal_nfa(const Alphabet& alphabet);
/// Automaton with no states.
Nfa empty_nfa(const Alphabet& alphabet);

} // namespace nfacomp
