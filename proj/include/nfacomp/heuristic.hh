// Forward/reverse choice by counting powerset successors.
#pragma once

#include <cstddef>

#include "nfacomp/nfa.hh"
#include "nfacomp/powerset.hh"

namespace nfacomp {

/// |I| plus, for every state, the sizes of its distinct non-empty successor sets.
std::size_t det_successor_score(const Nfa& a);

struct DirectionChoice {
    std::size_t score_forward;
    std::size_t score_reverse;
    /// Reverse iff score_forward >= score_reverse.
    Direction choice;
};

DirectionChoice choose_direction(const Nfa& a);

} // namespace nfacomp
