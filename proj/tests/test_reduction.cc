#include <catch_amalgamated.hpp>

#include <random>

#include "fixtures.hh"
#include "naive.hh"
#include "nfacomp/algorithms.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/powerset.hh"
#include "nfacomp/reduction.hh"

using namespace nfacomp;

namespace {

/// Greatest direct simulation by repeated removal of violating pairs.
std::vector<std::vector<bool>> naive_simulation(const PortNfa& a) {
    const std::size_t n = a.num_states();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, true));
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            for (const auto& f : a.exits()) {
                if (contains(f, p) && !contains(f, q)) { r[p][q] = false; }
            }
        }
    }
    const auto all = a.transitions();
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            for (State q = 0; q < n; ++q) {
                if (!r[p][q]) { continue; }
                for (const auto& t : all) {
                    if (t.source != p) { continue; }
                    bool matched = false;
                    for (const auto& u : all) {
                        if (u.source == q && u.symbol == t.symbol && r[t.target][u.target]) { matched = true; }
                    }
                    if (!matched) {
                        r[p][q] = false;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return r;
}

Nfa from_state(const Nfa& a, State q) { return make_nfa(a, {q}, a.final()); }

} // namespace

TEST_CASE("minimizing the example DFA", "[reduction]") {
    const Nfa d = determinize(fixtures::a2()).dfa;
    const Nfa m = hopcroft_minimize(d);
    CHECK(m.num_states() == 8);
    CHECK(hopcroft_minimize(m).num_states() == m.num_states());
    CHECK(language_equivalent(m, d));
}

TEST_CASE("minimal DFAs of the witness family", "[reduction]") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(hopcroft_minimize(determinize(reverse_friendly(n)).dfa).num_states() == (std::size_t{1} << (n + 1)));
    }
}

TEST_CASE("minimization matches Moore refinement", "[reduction]") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        const Nfa a = random_nfa(rng);
        const Nfa m = hopcroft_minimize(determinize(a).dfa);
        CHECK(m.num_states() == naive::minimal_dfa_size(a));
        CHECK(is_deterministic(m));
        CHECK(is_complete(m));
        CHECK(naive::same_language(a, m, 6));
        CHECK(hopcroft_minimize(m) == m);
    }
}

TEST_CASE("states of a minimal DFA have distinct residuals", "[reduction]") {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 30; ++k) {
        RandomNfaOptions o;
        o.max_states = 5;
        o.max_symbols = 2;
        const Nfa m = hopcroft_minimize(determinize(random_nfa(rng, o)).dfa);
        if (m.num_states() > 10) { continue; }
        for (State p = 0; p < m.num_states(); ++p) {
            for (State q = p + 1; q < m.num_states(); ++q) {
                CHECK_FALSE(naive::same_language(from_state(m, p), from_state(m, q), m.num_states()));
            }
        }
    }
}

TEST_CASE("colors keep states apart during minimization", "[reduction]") {
    // Two equivalent sink states that differ only by color.
    const Nfa d = naive::build(1, 3, {{0, 'a', 1}, {1, 'a', 2}, {2, 'a', 2}}, {0}, {});
    const PortNfa pd = PortNfa::from_nfa(d);
    const std::vector<Symbol> syms{0};
    CHECK(minimize_port_dfa(pd, syms).dfa.num_states() == 1);
    const std::vector<std::uint64_t> colors{0, 1, 0};
    const PortMinimization m = minimize_port_dfa(pd, syms, colors);
    CHECK(m.dfa.num_states() == 3);
    CHECK(m.class_of.size() == 3);
    CHECK_THROWS_AS(hopcroft_minimize(fixtures::a2()), std::invalid_argument);
}

TEST_CASE("simulation matches a naive fixpoint", "[reduction]") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 200; ++k) {
        const PortNfa a = random_port_nfa(rng, 1, 2);
        const auto expected = naive_simulation(a);
        const SimulationPreorder par = compute_simulation(a, Execution::Parallel);
        const SimulationPreorder ser = compute_simulation_serial(a);
        CHECK(par == ser);
        CHECK(compute_simulation(a, Execution::Serial) == ser);
        for (State p = 0; p < a.num_states(); ++p) {
            for (State q = 0; q < a.num_states(); ++q) { CHECK(ser.simulates(p, q) == static_cast<bool>(expected[p][q])); }
        }
    }
}

TEST_CASE("simulation reduction preserves the language", "[reduction]") {
    std::mt19937_64 rng(34);
    for (int k = 0; k < 200; ++k) {
        const Nfa a = random_nfa(rng);
        const Nfa r = simulation_reduce(a);
        CHECK(r.num_states() <= a.num_states());
        CHECK(naive::same_language(a, r, 6));
        CHECK(simulation_reduce(a, Execution::Serial) == r);
    }
    std::mt19937_64 prng(35);
    for (int k = 0; k < 100; ++k) {
        const PortNfa a = random_port_nfa(prng, 2, 2);
        const PortNfa r = simulation_reduce(a);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) { CHECK(naive::same_language(slice(a, i, j), slice(r, i, j), 5)); }
        }
    }
}

TEST_CASE("simulation reduction merges twin states", "[reduction]") {
    // 1 and 2 have identical futures.
    const Nfa a = naive::build(2, 4, {{0, 'a', 1}, {0, 'a', 2}, {1, 'b', 3}, {2, 'b', 3}}, {0}, {3});
    const Nfa r = simulation_reduce(a);
    CHECK(r.num_states() == 3);
    CHECK(language_equivalent(a, r));
}
