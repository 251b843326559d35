// Brute-force complement check by word enumeration.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "nfacomp/nfa.hh"
#include "nfacomp/reduction.hh"

namespace nfacomp {

struct OracleVerdict {
    bool ok = true;
    /// First word in length-lexicographic order accepted by both automata, or, if there is none,
    /// the first word rejected by both.
    std::optional<Word> counterexample;
    std::size_t words_checked = 0;
};

/// Checks accepts(c, w) != accepts(a, w) for every word of length <= max_len over a's alphabet.
OracleVerdict oracle_complement_check(const Nfa& a, const Nfa& c, std::size_t max_len,
                                      Execution exec = Execution::Parallel);

/// Symbol names joined; single-character names are concatenated, others separated by spaces.
std::string word_to_string(const Alphabet& alphabet, const Word& w);

} // namespace nfacomp
