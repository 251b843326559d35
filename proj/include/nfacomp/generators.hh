// Witness families and random automata.
#pragma once

#include <cstddef>
#include <random>

#include "nfacomp/nfa.hh"

namespace nfacomp {

enum class Family { ReverseFriendly, Sequential, Gate };

/// ReverseFriendly: {a,b}*.a.{a,b}^n with n+2 states (n >= 0).
/// Sequential: {a,b}^n.a.{a,b}*.a.{a,b}^n with 2n+3 states (n >= 1).
/// Gate: {a,b}*.a.{a,b}^n.c.{a,b}^n.a.{a,b}* with 2n+4 states (n >= 1).
Nfa generate_family(Family kind, std::size_t n);

Nfa reverse_friendly(std::size_t n);
Nfa sequential_family(std::size_t n);
Nfa gate_family(std::size_t n);

struct RandomNfaOptions {
    std::size_t min_states = 1;
    std::size_t max_states = 8;
    std::size_t min_symbols = 1;
    std::size_t max_symbols = 3;
    /// Probability of each potential transition.
    double density = 0.25;
    /// Probability of each state being initial / final.
    double initial_probability = 0.3;
    double final_probability = 0.3;
};

Nfa random_nfa(std::mt19937_64& rng, const RandomNfaOptions& opts = {});

/// Random port NFA with the given number of entry and exit sets, all drawn at random.
PortNfa random_port_nfa(std::mt19937_64& rng, std::size_t entries, std::size_t exits, const RandomNfaOptions& opts = {});

/// Alphabet with symbols a, b, c, ... of the given size.
Alphabet letters(std::size_t size);

} // namespace nfacomp
