#include "nfacomp/heuristic.hh"

#include <set>

#include "nfacomp/algorithms.hh"

namespace nfacomp {

std::size_t det_successor_score(const Nfa& a) {
    std::size_t score = a.initial().size();
    for (State q = 0; q < a.num_states(); ++q) {
        std::set<StateSet> successors;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            StateSet post = a.post(q, s);
            if (!post.empty()) { successors.insert(std::move(post)); }
        }
        for (const auto& s : successors) { score += s.size(); }
    }
    return score;
}

DirectionChoice choose_direction(const Nfa& a) {
    DirectionChoice c{det_successor_score(a), det_successor_score(reverse(a)), Direction::Forward};
    c.choice = c.score_forward >= c.score_reverse ? Direction::Reverse : Direction::Forward;
    return c;
}

} // namespace nfacomp
