#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hh"
#include "naive.hh"
#include "nfacomp/algorithms.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/powerset.hh"
#include "nfacomp/sequential.hh"

using namespace nfacomp;

namespace {

constexpr PartitionStrategy all_strategies[] = {PartitionStrategy::DeterministicComponents,
                                                PartitionStrategy::DetPlusRevDetBottom, PartitionStrategy::MinCut};

/// Front {0,1} of the sequential example, with 1 as its only final state.
Nfa seq1_front() { return naive::build(2, 2, {{0, 'a', 1}, {0, 'b', 1}}, {0}, {1}); }
/// Rear {2,3,4} of the sequential example.
Nfa seq1_rear() { return naive::build(2, 3, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}}, {0}, {2}); }

/// Brute-force minimum number of transitions leaving a predecessor-closed front that contains
/// every SCC without predecessors and excludes the last SCC; nullopt when no such front exists.
std::optional<std::size_t> brute_force_cut(const Nfa& a) {
    const SccDag d = scc_condensation(a);
    const std::size_t m = d.components.size();
    if (m < 2 || m > 16) { return std::nullopt; }
    std::vector<bool> has_pred(m, false);
    for (const auto& e : d.edges) { has_pred[e.to] = true; }
    std::optional<std::size_t> best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        auto in = [&](std::size_t c) { return ((mask >> c) & 1U) != 0; };
        if (in(m - 1)) { continue; }
        bool ok = true;
        for (std::size_t c = 0; c < m; ++c) { ok = ok && (has_pred[c] || in(c)); }
        std::size_t cut = 0;
        for (const auto& t : a.transitions()) {
            const bool s = in(d.component_of[t.source]);
            const bool r = in(d.component_of[t.target]);
            if (!s && r) { ok = false; }
            if (s && !r) { ++cut; }
        }
        if (ok && (!best || cut < *best)) { best = cut; }
    }
    return best;
}

/// Random sequential partition: the front is a nonempty proper prefix of the SCC order.
std::optional<SequentialPartition> random_partition(std::mt19937_64& rng, const PortNfa& a) {
    const SccDag d = scc_condensation(a);
    if (d.components.size() < 2) { return std::nullopt; }
    std::uniform_int_distribution<std::size_t> pick(1, d.components.size() - 1);
    const std::size_t k = pick(rng);
    StateSet front;
    for (std::size_t c = 0; c < k; ++c) { front = set_union(front, d.components[c]); }
    return make_sequential_partition(a, front);
}

} // namespace

TEST_CASE("basic sequential complement of the example", "[sequential]") {
    const Nfa c = seq_complement_basic(seq1_front(), seq1_rear(), 0);
    CHECK(c.num_states() == 6);
    CHECK(naive::complements(fixtures::seq1(), c, 8));
    CHECK(naive::complements(fixtures::seq1(), seq_complement_basic(seq1_front(), seq1_rear(), 0, Direction::Forward), 8));
}

TEST_CASE("basic sequential complement with a universal rear", "[sequential]") {
    const Nfa a1 = seq1_front();
    const Nfa a2 = universal_nfa(a1.alphabet());
    const Nfa c = seq_complement_basic(a1, a2, 0);
    // The composite L(a1).a.Σ*.
    const Nfa whole = naive::build(2, 3, {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 2}, {2, 'a', 2}, {2, 'b', 2}}, {0}, {2});
    CHECK(naive::complements(whole, c, 6));
}

TEST_CASE("basic sequential complement preconditions", "[sequential]") {
    const Nfa two_final = naive::build(2, 2, {{0, 'a', 1}}, {0}, {0, 1});
    CHECK_THROWS_AS(seq_complement_basic(two_final, seq1_rear(), 0), std::invalid_argument);
    const Nfa two_init = naive::build(2, 2, {{0, 'a', 1}}, {0, 1}, {1});
    CHECK_THROWS_AS(seq_complement_basic(seq1_front(), two_init, 0), std::invalid_argument);
    CHECK_THROWS_AS(seq_complement_basic(seq1_front(), seq1_rear(), 7), std::out_of_range);
}

TEST_CASE("minimum cut of the sequential example", "[sequential]") {
    const MinCut cut = min_cut_partition(fixtures::seq1());
    CHECK(cut.capacity == 1);
    CHECK(cut.front == StateSet{0, 1});
    const Partitioning p = partition(fixtures::seq1(), PartitionStrategy::MinCut);
    CHECK(p.components == std::vector<StateSet>{{0, 1}, {2, 3, 4}});
    CHECK(p.transfer_count == 1);
}

TEST_CASE("minimum cut matches brute force", "[sequential]") {
    std::mt19937_64 rng(41);
    RandomNfaOptions o;
    o.density = 0.15;
    int compared = 0;
    for (int k = 0; k < 300; ++k) {
        const Nfa a = random_nfa(rng, o);
        const auto expected = brute_force_cut(a);
        if (!expected) { continue; }
        ++compared;
        const MinCut cut = min_cut_partition(a);
        CHECK(cut.capacity == *expected);
        std::size_t crossing = 0;
        for (const auto& t : a.transitions()) {
            CHECK_FALSE((!contains(cut.front, t.source) && contains(cut.front, t.target)));
            if (contains(cut.front, t.source) && !contains(cut.front, t.target)) { ++crossing; }
        }
        CHECK(crossing == cut.capacity);
    }
    CHECK(compared > 50);
}

TEST_CASE("deterministic components of the example", "[sequential]") {
    const Partitioning p = partition(fixtures::a2(), PartitionStrategy::DeterministicComponents);
    CHECK(p.components == std::vector<StateSet>{{0}, {1, 2, 3}});
    CHECK(p.transfer_count == 1);
}

TEST_CASE("strongly connected automata are not partitioned", "[sequential]") {
    const Nfa cycle = naive::build(2, 3, {{0, 'a', 1}, {0, 'b', 0}, {1, 'b', 2}, {2, 'a', 0}, {2, 'a', 1}}, {0}, {2});
    for (PartitionStrategy s : all_strategies) {
        const Partitioning p = partition(cycle, s);
        CHECK(p.components.size() == 1);
        CHECK(p.transfer_count == 0);
        const PipelineResult r = seq_pipeline(cycle, s);
        CHECK(r.automaton.num_states() == trim(complement(cycle, Direction::Reverse, {.minimize = true})).num_states());
        CHECK(naive::complements(cycle, r.automaton, 6));
    }
}

TEST_CASE("partitions cover the automaton and only move forward", "[sequential]") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 100; ++k) {
        const Nfa a = random_nfa(rng);
        const SccDag d = scc_condensation(a);
        for (PartitionStrategy s : all_strategies) {
            const Partitioning p = partition(a, s);
            std::vector<std::size_t> comp(a.num_states(), 0);
            std::vector<int> seen(a.num_states(), 0);
            for (std::size_t c = 0; c < p.components.size(); ++c) {
                for (State q : p.components[c]) {
                    comp[q] = c;
                    ++seen[q];
                }
            }
            for (int x : seen) { CHECK(x == 1); }
            std::size_t transfers = 0;
            for (const auto& t : a.transitions()) {
                CHECK(comp[t.source] <= comp[t.target]);
                if (comp[t.source] != comp[t.target]) { ++transfers; }
            }
            CHECK(transfers == p.transfer_count);
            if (s == PartitionStrategy::DeterministicComponents) {
                for (const auto& c : p.components) {
                    const PortNfa sub = induced_port_nfa(PortNfa::from_nfa(a), c).automaton;
                    const bool single_scc = d.components[d.component_of[c.front()]] == c;
                    CHECK((has_deterministic_moves(sub) || single_scc));
                }
            }
            if (p.components.size() >= 2) {
                const SequentialPartition sp = make_sequential_partition(PortNfa::from_nfa(a), p.components[0]);
                CHECK(reconstitute(sp) == PortNfa::from_nfa(a));
            }
        }
    }
}

TEST_CASE("pipeline on the sequential family", "[sequential]") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const Nfa a = sequential_family(n);
        for (PartitionStrategy s : {PartitionStrategy::DetPlusRevDetBottom, PartitionStrategy::MinCut}) {
            const PipelineResult r = seq_pipeline(a, s);
            CHECK(r.automaton.num_states() == 2 * n + 4);
            CHECK(language_equivalent(r.automaton, forward_complement(a)));
        }
    }
}

TEST_CASE("pipeline complements random automata", "[sequential]") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        const Nfa a = random_nfa(rng);
        const Nfa reference = forward_complement(a);
        for (PartitionStrategy s : all_strategies) {
            for (Direction rear : {Direction::Reverse, Direction::Forward}) {
                PipelineOptions opts;
                opts.rear_method = rear;
                opts.reduce = (k % 2) == 0;
                opts.minimize = (k % 3) != 0;
                const PipelineResult r = seq_pipeline(a, s, opts);
                CHECK(naive::complements(a, r.automaton, 6));
                CHECK(language_equivalent(r.automaton, reference));
                CHECK(r.states_before_trim >= r.automaton.num_states());
            }
        }
    }
}

TEST_CASE("generalized complement of random partitions", "[sequential]") {
    std::mt19937_64 rng(44);
    RandomNfaOptions o;
    o.min_symbols = 2;
    int built = 0;
    for (int k = 0; k < 200; ++k) {
        const PortNfa a = random_port_nfa(rng, 2, 2, o);
        const auto p = random_partition(rng, a);
        if (!p || p->transfers.empty() || p->transfers.size() > 3) { continue; }
        ++built;
        for (Direction rear : {Direction::Reverse, Direction::Forward}) {
            const SequentialPartition dp = determinize_front(*p, rear == Direction::Forward);
            const SeqComplement c = seq_complement_generalized(dp, rear_complement(dp, rear));
            CHECK(naive::complements_slices(a, c.automaton, 5));
            REQUIRE(c.tracked.size() == c.automaton.num_states());
            REQUIRE(c.front_state.size() == c.automaton.num_states());
            for (const auto& e : c.automaton.entries()) {
                for (State q : e) { CHECK(c.tracked[q].size() <= 1); }
            }
        }
    }
    CHECK(built > 30);
}

TEST_CASE("generalized complement with one gate and no outer ports matches the basic one", "[sequential]") {
    const PortNfa a = PortNfa::from_nfa(fixtures::seq1());
    const SequentialPartition p = make_sequential_partition(a, {0, 1});
    CHECK(single_instance_class(p));
    const SequentialPartition dp = determinize_front(p);
    const SeqComplement g = seq_complement_generalized(dp, rear_complement(dp, Direction::Reverse));
    const Nfa basic = seq_complement_basic(seq1_front(), seq1_rear(), 0);
    const Nfa sl = slice(g.automaton, 0, 0);
    CHECK(sl.num_states() == basic.num_states());
    CHECK(sl.same_structure(basic));
    CHECK(sl.initial() == basic.initial());
    CHECK(sl.final() == basic.final());
}

TEST_CASE("generalized complement enters a rear with outer entries", "[sequential]") {
    // 0 -a-> 1 -b-> 2 -a-> 3, entry {0, 2}, exit {3}; the rear {2, 3} is entered directly.
    const Nfa whole = naive::build(2, 4, {{0, 'a', 1}, {1, 'b', 2}, {2, 'a', 3}}, {0, 2}, {3});
    const PortNfa a = PortNfa::from_nfa(whole);
    const SequentialPartition p = make_sequential_partition(a, {0, 1});
    CHECK_FALSE(single_instance_class(p));
    const SequentialPartition dp = determinize_front(p);
    const SeqComplement c = seq_complement_generalized(dp, rear_complement(dp, Direction::Reverse));
    REQUIRE_FALSE(c.automaton.entry(0).empty());
    for (State q : c.automaton.entry(0)) { CHECK(c.tracked[q].size() == 1); }
    CHECK(naive::complements(whole, slice(c.automaton, 0, 0), 6));
}

TEST_CASE("generalized complement preconditions", "[sequential]") {
    const PortNfa a = PortNfa::from_nfa(fixtures::a2());
    const SequentialPartition p = make_sequential_partition(a, {0, 1});
    const SequentialPartition dp = determinize_front(p);
    const PortNfa c2 = rear_complement(dp, Direction::Reverse);
    CHECK_THROWS_AS(seq_complement_generalized(p, c2), std::invalid_argument);
    PortNfa wrong = c2;
    wrong.add_entry_set({});
    CHECK_THROWS_AS(seq_complement_generalized(dp, wrong), std::invalid_argument);
}

TEST_CASE("single instance class conditions", "[sequential]") {
    // Two a-gates from state 1.
    const Nfa two = naive::build(2, 4, {{0, 'a', 1}, {1, 'a', 2}, {1, 'a', 3}, {2, 'b', 3}}, {0}, {3});
    CHECK_FALSE(single_instance_class(make_sequential_partition(PortNfa::from_nfa(two), {0, 1})));
    // Exit port 0 reaches itself after its gate symbol.
    const Nfa loop = naive::build(2, 2, {{0, 'a', 0}, {0, 'a', 1}}, {0}, {1});
    CHECK_FALSE(single_instance_class(make_sequential_partition(PortNfa::from_nfa(loop), {0})));
    const SequentialPartition sp = make_sequential_partition(PortNfa::from_nfa(fixtures::seq1()), {0, 1});
    CHECK(exit_port_successor_count(sp) == 0);
}

TEST_CASE("single instance class is decided on the deterministic front", "[sequential]") {
    // Front {0,1,2,3}: the exit port 3 is revisited through the loop on 2.
    const SequentialPartition p = make_sequential_partition(PortNfa::from_nfa(fixtures::seq1()), {0, 1, 2, 3});
    CHECK(single_instance_class(p));
    const SequentialPartition dp = determinize_front(p);
    CHECK_FALSE(single_instance_class(dp));
    const SeqComplement c = seq_complement_generalized(dp, rear_complement(dp, Direction::Reverse));
    CHECK(std::any_of(c.tracked.begin(), c.tracked.end(), [](const StateSet& r) { return r.size() > 1; }));
    CHECK(naive::complements(fixtures::seq1(), slice(c.automaton, 0, 0), 8));

    const SequentialPartition front2 = determinize_front(make_sequential_partition(PortNfa::from_nfa(fixtures::seq1()), {0, 1}));
    CHECK(single_instance_class(front2));
    const SeqComplement c2 = seq_complement_generalized(front2, rear_complement(front2, Direction::Reverse));
    for (const auto& r : c2.tracked) { CHECK(r.size() <= 1); }
}

TEST_CASE("partition strategy names", "[sequential]") {
    CHECK(to_string(PartitionStrategy::DeterministicComponents) == "det");
    CHECK(to_string(PartitionStrategy::DetPlusRevDetBottom) == "detrev");
    CHECK(to_string(PartitionStrategy::MinCut) == "mincut");
}
