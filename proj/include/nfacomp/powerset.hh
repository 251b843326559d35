// Forward and reverse powerset determinization and complementation.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nfacomp/nfa.hh"

namespace nfacomp {

struct PowersetOptions {
    /// Macrostate budget; BudgetExceeded is thrown when it is exceeded.
    std::size_t max_states = unlimited;
    /// Construct over these symbols only (complement w.r.t. a sub-alphabet). All symbols when unset.
    std::optional<std::vector<Symbol>> symbols;
};

struct MacrostateDfa {
    Nfa dfa;
    /// macrostates[q] is the set of input states represented by q.
    std::vector<StateSet> macrostates;
};

struct PortMacrostateDfa {
    PortNfa dfa;
    std::vector<StateSet> macrostates;
};

/// Reachable part of the powerset construction, FIFO order, the empty macrostate added on demand.
MacrostateDfa determinize(const Nfa& a, const PowersetOptions& opts = {});
/// Entry sets become {I_i}; exit j becomes the macrostates meeting F_j.
PortMacrostateDfa port_determinize(const PortNfa& a, const PowersetOptions& opts = {});

/// Flips the final states. Throws std::invalid_argument unless dfa is deterministic and complete over symbols.
Nfa complement_dfa(const Nfa& dfa);
Nfa complement_dfa(const Nfa& dfa, std::span<const Symbol> symbols);
PortNfa complement_port_dfa(const PortNfa& dfa, std::span<const Symbol> symbols);

struct ComplementOptions {
    std::size_t max_states = unlimited;
    std::optional<std::vector<Symbol>> symbols;
    /// Minimize the powerset DFA before flipping.
    bool minimize = false;
    /// Remove unreachable and dead states from the result.
    bool trim = true;
};

/// co(det(a)).
Nfa forward_complement(const Nfa& a, const ComplementOptions& opts = {});
/// rev(co(det(rev(a)))).
Nfa reverse_complement(const Nfa& a, const ComplementOptions& opts = {});
PortNfa port_forward_complement(const PortNfa& a, const ComplementOptions& opts = {});
PortNfa port_reverse_complement(const PortNfa& a, const ComplementOptions& opts = {});

enum class Direction { Forward, Reverse };

PortNfa port_complement(const PortNfa& a, Direction direction, const ComplementOptions& opts = {});
Nfa complement(const Nfa& a, Direction direction, const ComplementOptions& opts = {});

} // namespace nfacomp
