#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hh"
#include "naive.hh"
#include "nfacomp/algorithms.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/heuristic.hh"

using namespace nfacomp;

namespace {

Nfa relabel(const Nfa& a, const std::vector<State>& perm) {
    TransitionSystem ts(a.alphabet(), a.num_states());
    auto ts_all = a.transitions();
    std::reverse(ts_all.begin(), ts_all.end());
    for (const auto& t : ts_all) { ts.add_transition(perm[t.source], t.symbol, perm[t.target]); }
    StateSet init;
    StateSet fin;
    for (State q : a.initial()) { init.push_back(perm[q]); }
    for (State q : a.final()) { fin.push_back(perm[q]); }
    return make_nfa(ts, make_state_set(init), make_state_set(fin));
}

} // namespace

TEST_CASE("successor score of the example and its reverse", "[heuristic]") {
    CHECK(det_successor_score(fixtures::a2()) == 6);
    CHECK(det_successor_score(reverse(fixtures::a2())) == 5);
    const DirectionChoice c = choose_direction(fixtures::a2());
    CHECK(c.score_forward == 6);
    CHECK(c.score_reverse == 5);
    CHECK(c.choice == Direction::Reverse);
}

TEST_CASE("successor score without transitions counts initial states", "[heuristic]") {
    CHECK(det_successor_score(naive::build(1, 3, {}, {0, 1, 2}, {})) == 3);
}

TEST_CASE("ties choose reverse", "[heuristic]") {
    // A single a-loop is its own reverse.
    const Nfa loop = naive::build(1, 1, {{0, 'a', 0}}, {0}, {0});
    const DirectionChoice c = choose_direction(loop);
    CHECK(c.score_forward == c.score_reverse);
    CHECK(c.choice == Direction::Reverse);
}

TEST_CASE("a DFA with a highly nondeterministic reverse chooses forward", "[heuristic]") {
    // States 0..3 all move to 4 on b and every state is final, so the reverse starts from all states.
    const Nfa a = naive::build(2, 5,
                               {{0, 'a', 1}, {1, 'a', 2}, {2, 'a', 3}, {0, 'b', 4}, {1, 'b', 4}, {2, 'b', 4},
                                {3, 'b', 4}},
                               {0}, {0, 1, 2, 3, 4});
    REQUIRE(is_deterministic(a));
    const DirectionChoice c = choose_direction(a);
    CHECK(c.score_forward < c.score_reverse);
    CHECK(c.choice == Direction::Forward);
}

TEST_CASE("reverse on the whole witness family", "[heuristic]") {
    for (std::size_t n = 1; n <= 8; ++n) { CHECK(choose_direction(reverse_friendly(n)).choice == Direction::Reverse); }
}

TEST_CASE("successor score properties", "[heuristic]") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 100; ++k) {
        const Nfa a = random_nfa(rng);
        std::vector<State> perm(a.num_states());
        std::iota(perm.begin(), perm.end(), State{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(det_successor_score(relabel(a, perm)) == det_successor_score(a));

        const DirectionChoice c = choose_direction(a);
        const DirectionChoice r = choose_direction(reverse(a));
        CHECK(c.score_forward == r.score_reverse);
        CHECK(c.score_reverse == r.score_forward);
        CHECK((c.choice == Direction::Reverse) == (c.score_forward >= c.score_reverse));
    }
}

TEST_CASE("successor score of complete DFAs", "[heuristic]") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 50; ++k) {
        const Nfa d = determinize(random_nfa(rng)).dfa;
        std::size_t distinct = 0;
        for (State q = 0; q < d.num_states(); ++q) {
            std::vector<State> targets;
            for (const Move& m : d.moves(q)) { targets.push_back(m.target); }
            distinct += make_state_set(targets).size();
        }
        CHECK(det_successor_score(d) == 1 + distinct);
        CHECK(det_successor_score(d) <= 1 + d.num_states() * d.alphabet().size());
    }
}
