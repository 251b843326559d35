// Hand-written example automata.
#pragma once

#include "naive.hh"

namespace fixtures {

/// {a,b}*.a.{a,b}^2
inline nfacomp::Nfa a2() {
    return naive::build(2, 4, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}, {2, 'a', 3}, {2, 'b', 3}},
                        {0}, {3});
}

/// {a,b}.a.{a,b}*.a.{a,b}
inline nfacomp::Nfa seq1() {
    return naive::build(2, 5,
                        {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 2}, {2, 'a', 2}, {2, 'b', 2}, {2, 'a', 3}, {3, 'a', 4},
                         {3, 'b', 4}},
                        {0}, {4});
}

/// {a,b}*.a.{a,b}.c.{a,b}.a.{a,b}*
inline nfacomp::Nfa gate1() {
    return naive::build(3, 6,
                        {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}, {2, 'c', 3}, {3, 'a', 4},
                         {3, 'b', 4}, {4, 'a', 5}, {5, 'a', 5}, {5, 'b', 5}},
                        {0}, {5});
}

} // namespace fixtures
