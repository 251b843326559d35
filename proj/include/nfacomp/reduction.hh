// DFA minimization and simulation-based NFA reduction.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nfacomp/nfa.hh"

namespace nfacomp {

struct PortMinimization {
    PortNfa dfa;
    /// Class of each input state in dfa; no_state for states unreachable from every entry.
    std::vector<State> class_of;
};

/// Hopcroft partition refinement over the given symbols. The initial partition separates
/// exit-set membership and, if given, the per-state colors.
/// Throws std::invalid_argument when the input is not deterministic and complete over symbols.
PortMinimization minimize_port_dfa(const PortNfa& dfa, std::span<const Symbol> symbols,
                                   std::span<const std::uint64_t> colors = {});
PortNfa hopcroft_minimize(const PortNfa& dfa);
Nfa hopcroft_minimize(const Nfa& dfa);
Nfa hopcroft_minimize(const Nfa& dfa, std::span<const Symbol> symbols);

enum class Execution { Serial, Parallel };

/// Maximal direct simulation. simulates(p, q) means q simulates p.
class SimulationPreorder {
public:
    explicit SimulationPreorder(std::size_t n = 0);

    std::size_t size() const noexcept { return n_; }
    bool simulates(State p, State q) const { return (rows_[p][q >> 6] >> (q & 63)) & 1U; }
    void set(State p, State q, bool value);
    bool operator==(const SimulationPreorder& other) const = default;

    std::vector<std::uint64_t>& row(State p) { return rows_[p]; }
    const std::vector<std::uint64_t>& row(State p) const { return rows_[p]; }

private:
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Respects membership in every exit set.
SimulationPreorder compute_simulation(const PortNfa& a, Execution exec = Execution::Parallel);
/// Pair-by-pair fixpoint; reference for compute_simulation.
SimulationPreorder compute_simulation_serial(const PortNfa& a);

/// Quotient by simulation equivalence, prune transitions and entries dominated by a
/// simulating sibling, then trim.
PortNfa simulation_reduce(const PortNfa& a, Execution exec = Execution::Parallel);
Nfa simulation_reduce(const Nfa& a, Execution exec = Execution::Parallel);

} // namespace nfacomp
