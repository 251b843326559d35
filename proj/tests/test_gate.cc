#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hh"
#include "naive.hh"
#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"
#include "nfacomp/gate.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/powerset.hh"

using namespace nfacomp;

namespace {

GatePartition partition_of(const Nfa& a, const StateSet& front) {
    auto g = as_gate_partition(make_sequential_partition(PortNfa::from_nfa(a), front));
    REQUIRE(g.has_value());
    return *g;
}

GatePartition tagged(GatePartition g) {
    g.method = check_equal(g) ? GateMethod::Equal : GateMethod::Disjoint;
    return g;
}

/// Front of the gate example, final state 2, over {a,b,c}.
Nfa gate1_front() { return naive::build(3, 3, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}}, {0}, {2}); }
/// Rear of the gate example.
Nfa gate1_rear() { return naive::build(3, 3, {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 2}, {2, 'a', 2}, {2, 'b', 2}}, {0}, {2}); }

/// Synthetic partition with the given component sizes for selection tests.
GatePartition sized(std::size_t n1, std::size_t n2, GateMethod m, bool intersection, State first = 0) {
    GatePartition g;
    g.base.front = PortNfa(letters(1), n1);
    g.base.rear = PortNfa(letters(1), n2);
    for (State q = 0; q < n1; ++q) { g.base.front_origin.push_back(first + q); }
    g.method = m;
    g.needs_intersection = intersection;
    return g;
}

} // namespace

TEST_CASE("basic gate complement of the example", "[gate]") {
    const GateBasicResult r = gate_complement_basic(gate1_front(), gate1_rear(), 2);
    CHECK(r.c1_states == 3);
    CHECK(r.c2_states == 4);
    CHECK(r.automaton.num_states() == 9);
    CHECK(r.automaton.num_states() == r.c1_states + r.c2_states + 2);
    CHECK(naive::complements(fixtures::gate1(), r.automaton, 7));
}

TEST_CASE("basic gate complement preconditions", "[gate]") {
    const Nfa dirty = naive::build(3, 2, {{0, 'c', 1}}, {0}, {1});
    CHECK_THROWS_AS(gate_complement_basic(dirty, gate1_rear(), 2), std::invalid_argument);
    CHECK_THROWS_AS(gate_complement_basic(gate1_front(), gate1_rear(), 9), std::out_of_range);
    const Nfa two_final = naive::build(3, 2, {{0, 'a', 1}}, {0}, {0, 1});
    CHECK_THROWS_AS(gate_complement_basic(two_final, gate1_rear(), 2), std::invalid_argument);
}

TEST_CASE("gate partition search on the example", "[gate]") {
    const auto ps = find_gate_partitions(PortNfa::from_nfa(fixtures::gate1()));
    const auto it = std::find_if(ps.begin(), ps.end(), [](const GatePartition& g) { return g.base.front_origin == std::vector<State>{0, 1, 2}; });
    REQUIRE(it != ps.end());
    CHECK(it->method == GateMethod::Equal);
    CHECK(it->direction == GateDirection::FrontClean);
    CHECK(it->gate_symbols == std::vector<Symbol>{2});
    CHECK_FALSE(it->needs_intersection);
    CHECK(check_equal(*it));
    CHECK(check_disjoint(*it));

    const GateResult r = gate_method(fixtures::gate1());
    CHECK(r.automaton.num_states() == 9);
    CHECK(naive::complements(fixtures::gate1(), r.automaton, 7));
}

TEST_CASE("no gate partition exists without a clean side", "[gate]") {
    CHECK(find_gate_partitions(PortNfa::from_nfa(fixtures::a2())).empty());
    CHECK_THROWS_AS(gate_method(fixtures::a2()), NoGatePartition);
    const Nfa mixing = naive::build(1, 3, {{0, 'a', 1}, {1, 'a', 2}, {2, 'a', 0}}, {0}, {2});
    CHECK(find_gate_partitions(PortNfa::from_nfa(mixing)).empty());
}

TEST_CASE("condition checks on two-branch witnesses", "[gate]") {
    // Disjoint prefixes {a}, {b}; different suffixes.
    const Nfa split = naive::build(3, 6, {{0, 'a', 1}, {0, 'b', 2}, {1, 'c', 3}, {2, 'c', 4}, {3, 'a', 5}, {4, 'b', 5}}, {0}, {5});
    const GatePartition g = partition_of(split, {0, 1, 2});
    CHECK_FALSE(check_equal(g));
    CHECK(check_disjoint(g));
    CHECK(language_disjoint(make_nfa(g.base.front, {0}, {1}), make_nfa(g.base.front, {0}, {2})));
    const GatePartition d = tagged(g);
    REQUIRE(d.method == GateMethod::Disjoint);
    CHECK(naive::complements_slices(PortNfa::from_nfa(split), gate_complement(d), 6));

    // Equal prefix languages into both targets but different suffixes.
    const Nfa same = naive::build(3, 5, {{0, 'a', 1}, {0, 'a', 2}, {1, 'c', 3}, {2, 'c', 4}, {4, 'a', 3}}, {0}, {3});
    const GatePartition e = partition_of(same, {0, 1, 2});
    CHECK(check_equal(e));
    CHECK_FALSE(check_disjoint(e));
    CHECK(naive::complements_slices(PortNfa::from_nfa(same), gate_complement(tagged(e)), 6));

    // Overlapping but unequal prefixes and different suffixes satisfy neither.
    const Nfa mixed =
        naive::build(3, 5, {{0, 'a', 1}, {0, 'a', 2}, {0, 'b', 2}, {1, 'c', 3}, {2, 'c', 4}, {4, 'a', 3}}, {0}, {3});
    const GatePartition m = partition_of(mixed, {0, 1, 2});
    CHECK_FALSE(check_equal(m));
    CHECK_FALSE(check_disjoint(m));
    for (const auto& p : find_gate_partitions(PortNfa::from_nfa(mixed))) { CHECK(p.base.front_origin != std::vector<State>{0, 1, 2}); }
}

TEST_CASE("equal and disjoint constructions agree when both apply", "[gate]") {
    std::mt19937_64 rng(51);
    RandomNfaOptions o;
    o.max_states = 7;
    o.min_symbols = 2;
    int compared = 0;
    for (int k = 0; k < 400 && compared < 40; ++k) {
        const PortNfa a = random_port_nfa(rng, 1, 1, o);
        for (const auto& g : find_gate_partitions(a)) {
            if (g.method != GateMethod::Equal || !check_disjoint(g)) { continue; }
            GatePartition d = g;
            d.method = GateMethod::Disjoint;
            const PortNfa ce = gate_complement(g);
            const PortNfa cd = gate_complement(d);
            CHECK(language_equivalent(slice(ce, 0, 0), slice(cd, 0, 0)));
            ++compared;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("gate complements of random partitions", "[gate]") {
    std::mt19937_64 rng(52);
    RandomNfaOptions o;
    o.max_states = 7;
    o.min_symbols = 2;
    int checked = 0;
    int disjoint = 0;
    int rear_clean = 0;
    for (int k = 0; k < 600; ++k) {
        const PortNfa a = random_port_nfa(rng, 2, 2, o);
        GateSearchOptions serial;
        serial.execution = Execution::Serial;
        const auto ps = find_gate_partitions(a);
        const auto ss = find_gate_partitions(a, serial);
        REQUIRE(ps.size() == ss.size());
        for (std::size_t x = 0; x < ps.size(); ++x) {
            CHECK(ps[x].base.front_origin == ss[x].base.front_origin);
            CHECK(ps[x].method == ss[x].method);
            CHECK(ps[x].direction == ss[x].direction);
        }
        for (const auto& g : ps) {
            const bool front_clean = g.direction == GateDirection::FrontClean;
            CHECK((front_clean ? g.base.front : g.base.rear).num_transitions() > 0);
            for (const auto& t : (front_clean ? g.base.front : g.base.rear).transitions()) {
                CHECK_FALSE(std::binary_search(g.gate_symbols.begin(), g.gate_symbols.end(), t.symbol));
            }
            CHECK(g.gate_symbols == g.base.transfer_symbols());
            CHECK(naive::complements_slices(a, gate_complement(g), 5));
            ++checked;
            disjoint += g.method == GateMethod::Disjoint;
            rear_clean += !front_clean;
        }
    }
    CHECK(checked > 50);
    CHECK(rear_clean > 0);
    INFO("disjoint partitions: " << disjoint);
}

TEST_CASE("reversed gate example complemented as a rear-clean partition", "[gate]") {
    const Nfa r = reverse(fixtures::gate1());
    GatePartition g = partition_of(r, {3, 4, 5});
    g.direction = GateDirection::RearClean;
    g.needs_intersection = false;
    g = tagged(g);
    CHECK(g.method == GateMethod::Equal);
    CHECK(naive::complements(r, slice(gate_complement(g), 0, 0), 7));
    const GateResult res = gate_method(r);
    CHECK(naive::complements(r, res.automaton, 7));
}

TEST_CASE("gate symbol inside the front gives a rear-clean partition", "[gate]") {
    const Nfa a = naive::build(3, 4, {{0, 'c', 0}, {0, 'a', 1}, {1, 'c', 2}, {2, 'a', 3}, {3, 'a', 3}, {3, 'b', 3}}, {0}, {3});
    const GatePartition g = tagged(partition_of(a, {0, 1}));
    CHECK(g.direction == GateDirection::RearClean);
    CHECK_FALSE(g.needs_intersection);
    CHECK(naive::complements(a, slice(gate_complement(g), 0, 0), 7));
}

TEST_CASE("outer entry into the rear needs intersection", "[gate]") {
    // The gate example with an extra initial state 6 feeding the rear.
    const Nfa a = naive::build(3, 7,
                               {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}, {2, 'c', 3}, {3, 'a', 4},
                                {3, 'b', 4}, {4, 'a', 5}, {5, 'a', 5}, {5, 'b', 5}, {6, 'b', 4}},
                               {0, 6}, {5});
    const GatePartition g = tagged(partition_of(a, {0, 1, 2}));
    CHECK(g.direction == GateDirection::FrontClean);
    CHECK(g.needs_intersection);
    CHECK(naive::complements(a, slice(gate_complement(g), 0, 0), 7));
    const GateResult r = gate_method(a);
    CHECK(r.partition.needs_intersection);
    CHECK(naive::complements(a, r.automaton, 7));
    // A word accepted inside the rear alone is rejected.
    CHECK_FALSE(naive::accepts(r.automaton, naive::word("bab")));
}

TEST_CASE("prefix and suffix parts are disjoint from the input", "[gate]") {
    std::mt19937_64 rng(53);
    RandomNfaOptions o;
    o.max_states = 7;
    o.min_symbols = 2;
    int checked = 0;
    for (int k = 0; k < 2000; ++k) {
        const PortNfa a = random_port_nfa(rng, 1, 1, o);
        for (const auto& g : find_gate_partitions(a)) {
            if (g.needs_intersection || g.direction != GateDirection::FrontClean) { continue; }
            const auto rest = [&] {
                std::vector<Symbol> out;
                for (Symbol s = 0; s < a.alphabet().size(); ++s) {
                    if (!std::binary_search(g.gate_symbols.begin(), g.gate_symbols.end(), s)) { out.push_back(s); }
                }
                return out;
            }();
            const PortNfa c1 = port_complement(gate_front(g), Direction::Forward, {.symbols = rest});
            const PortNfa c2 = port_complement(gate_rear(g), Direction::Forward);
            const PortNfa c = g.method == GateMethod::Equal ? gate_complement_equal(g, c1, c2) : gate_complement_disjoint(g, c1, c2);
            const std::size_t pre = c1.num_states() + 1;
            std::vector<bool> keep_pre(c.num_states(), false);
            for (std::size_t q = 0; q < pre; ++q) { keep_pre[q] = true; }
            std::vector<bool> keep_suf(c.num_states());
            for (std::size_t q = 0; q < c.num_states(); ++q) { keep_suf[q] = !keep_pre[q]; }
            const Nfa sa = slice(a, 0, 0);
            CHECK(language_disjoint(slice(restrict_to(c, make_restriction(keep_pre)), 0, 0), sa));
            CHECK(language_disjoint(slice(restrict_to(c, make_restriction(keep_suf)), 0, 0), sa));
            CHECK(naive::complements(sa, slice(c, 0, 0), 5));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("gate family with fixed component methods", "[gate]") {
    GateOptions opts;
    opts.front_method = Direction::Reverse;
    opts.rear_method = Direction::Forward;
    for (std::size_t n = 1; n <= 6; ++n) {
        const Nfa a = gate_family(n);
        const GateResult r = gate_method(a, opts);
        CHECK(r.automaton.num_states() == 2 * n + 7);
        CHECK(language_equivalent(r.automaton, reverse_complement(a)));
    }
}

TEST_CASE("partition selection", "[gate]") {
    const auto pick = [](std::vector<GatePartition> ps) {
        const auto g = select_partition(ps);
        REQUIRE(g.has_value());
        return std::make_pair(g->base.front.num_states(), g->base.rear.num_states());
    };
    CHECK(pick({sized(5, 5, GateMethod::Disjoint, false), sized(2, 8, GateMethod::Equal, false)}) == std::make_pair<std::size_t, std::size_t>(2, 8));
    CHECK(pick({sized(3, 7, GateMethod::Equal, false), sized(4, 6, GateMethod::Equal, false)}) == std::make_pair<std::size_t, std::size_t>(4, 6));
    CHECK(pick({sized(5, 5, GateMethod::Equal, true), sized(1, 9, GateMethod::Disjoint, false)}) == std::make_pair<std::size_t, std::size_t>(1, 9));
    CHECK_FALSE(select_partition({}).has_value());

    std::vector<GatePartition> ps{sized(4, 6, GateMethod::Equal, false, 3), sized(6, 4, GateMethod::Equal, false, 0),
                                  sized(5, 5, GateMethod::Disjoint, false), sized(4, 6, GateMethod::Equal, false, 1),
                                  sized(2, 2, GateMethod::Equal, true)};
    const auto first = select_partition(ps);
    REQUIRE(first.has_value());
    CHECK(first->base.front_origin == std::vector<State>{0, 1, 2, 3, 4, 5});
    std::mt19937_64 rng(54);
    for (int k = 0; k < 20; ++k) {
        std::shuffle(ps.begin(), ps.end(), rng);
        const auto g = select_partition(ps);
        CHECK(g->base.front_origin == first->base.front_origin);
        CHECK(g->base.front.num_states() == first->base.front.num_states());
    }
}
