#include "nfacomp/generators.hh"

#include <stdexcept>
#include <string>

namespace nfacomp {

Alphabet letters(std::size_t size) {
    if (size > 26) { throw std::invalid_argument("at most 26 letters"); }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) { names.emplace_back(1, static_cast<char>('a' + i)); }
    return Alphabet(std::move(names));
}

Nfa reverse_friendly(std::size_t n) {
    TransitionSystem ts(letters(2), n + 2);
    const Symbol a = 0;
    const Symbol b = 1;
    ts.add_transition(0, a, 0);
    ts.add_transition(0, b, 0);
    ts.add_transition(0, a, 1);
    for (State i = 1; i <= n; ++i) {
        ts.add_transition(i, a, i + 1);
        ts.add_transition(i, b, i + 1);
    }
    return make_nfa(std::move(ts), {0}, {static_cast<State>(n + 1)});
}

Nfa sequential_family(std::size_t n) {
    if (n == 0) { throw std::invalid_argument("sequential family requires n >= 1"); }
    const State m = static_cast<State>(n);
    TransitionSystem ts(letters(2), 2 * n + 3);
    auto both = [&](State p, State q) {
        ts.add_transition(p, 0, q);
        ts.add_transition(p, 1, q);
    };
    for (State i = 0; i < m; ++i) { both(i, i + 1); }
    ts.add_transition(m, 0, m + 1);
    both(m + 1, m + 1);
    ts.add_transition(m + 1, 0, m + 2);
    for (State i = m + 2; i < 2 * m + 2; ++i) { both(i, i + 1); }
    return make_nfa(std::move(ts), {0}, {2 * m + 2});
}

Nfa gate_family(std::size_t n) {
    if (n == 0) { throw std::invalid_argument("gate family requires n >= 1"); }
    const State m = static_cast<State>(n);
    TransitionSystem ts(letters(3), 2 * n + 4);
    auto both = [&](State p, State q) {
        ts.add_transition(p, 0, q);
        ts.add_transition(p, 1, q);
    };
    both(0, 0);
    ts.add_transition(0, 0, 1);
    for (State i = 1; i < m + 1; ++i) { both(i, i + 1); }
    ts.add_transition(m + 1, 2, m + 2);
    for (State i = m + 2; i < 2 * m + 2; ++i) { both(i, i + 1); }
    ts.add_transition(2 * m + 2, 0, 2 * m + 3);
    both(2 * m + 3, 2 * m + 3);
    return make_nfa(std::move(ts), {0}, {2 * m + 3});
}

Nfa generate_family(Family kind, std::size_t n) {
    switch (kind) {
    case Family::ReverseFriendly: return reverse_friendly(n);
    case Family::Sequential: return sequential_family(n);
    case Family::Gate: return gate_family(n);
    }
    throw std::invalid_argument("unknown family");
}

namespace {

TransitionSystem random_system(std::mt19937_64& rng, const RandomNfaOptions& opts) {
    std::uniform_int_distribution<std::size_t> ns(opts.min_states, opts.max_states);
    std::uniform_int_distribution<std::size_t> nsym(opts.min_symbols, opts.max_symbols);
    const std::size_t n = ns(rng);
    TransitionSystem ts(letters(nsym(rng)), n);
    std::bernoulli_distribution edge(opts.density);
    for (State p = 0; p < n; ++p) {
        for (Symbol a = 0; a < ts.alphabet().size(); ++a) {
            for (State q = 0; q < n; ++q) {
                if (edge(rng)) { ts.add_transition(p, a, q); }
            }
        }
    }
    return ts;
}

StateSet random_subset(std::mt19937_64& rng, std::size_t n, double probability) {
    std::bernoulli_distribution pick(probability);
    StateSet out;
    for (State q = 0; q < n; ++q) {
        if (pick(rng)) { out.push_back(q); }
    }
    return out;
}

} // namespace

Nfa random_nfa(std::mt19937_64& rng, const RandomNfaOptions& opts) {
    TransitionSystem ts = random_system(rng, opts);
    const std::size_t n = ts.num_states();
    StateSet init = random_subset(rng, n, opts.initial_probability);
    StateSet fin = random_subset(rng, n, opts.final_probability);
    return make_nfa(std::move(ts), std::move(init), std::move(fin));
}

PortNfa random_port_nfa(std::mt19937_64& rng, std::size_t entries, std::size_t exits, const RandomNfaOptions& opts) {
    TransitionSystem ts = random_system(rng, opts);
    const std::size_t n = ts.num_states();
    std::vector<StateSet> in;
    std::vector<StateSet> out;
    for (std::size_t i = 0; i < entries; ++i) { in.push_back(random_subset(rng, n, opts.initial_probability)); }
    for (std::size_t j = 0; j < exits; ++j) { out.push_back(random_subset(rng, n, opts.final_probability)); }
    return PortNfa::with_ports(std::move(ts), std::move(in), std::move(out));
}

} // namespace nfacomp
