#include "nfacomp/nfa.hh"

#include <algorithm>
#include <stdexcept>

namespace nfacomp {

StateSet make_state_set(std::vector<State> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

bool contains(const StateSet& set, State q) { return std::binary_search(set.begin(), set.end(), q); }

void insert(StateSet& set, State q) {
    auto it = std::lower_bound(set.begin(), set.end(), q);
    if (it == set.end() || *it != q) { set.insert(it, q); }
}

StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

StateSet set_intersection(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

StateSet set_difference(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const StateSet& a, const StateSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

bool is_subset(const StateSet& a, const StateSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) { throw std::invalid_argument("empty symbol name"); }
        if (!index_.emplace(names_[i], static_cast<Symbol>(i)).second) {
            throw std::invalid_argument("duplicate symbol '" + names_[i] + "'");
        }
    }
}

Symbol Alphabet::id(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) { throw std::invalid_argument("unknown symbol '" + std::string(name) + "'"); }
    return it->second;
}

bool Alphabet::has(std::string_view name) const { return index_.contains(std::string(name)); }

std::vector<Symbol> Alphabet::symbols() const {
    std::vector<Symbol> out(names_.size());
    for (std::size_t i = 0; i < out.size(); ++i) { out[i] = static_cast<Symbol>(i); }
    return out;
}

TransitionSystem::TransitionSystem(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)), moves_(num_states) {}

State TransitionSystem::add_state() {
    moves_.emplace_back();
    return static_cast<State>(moves_.size() - 1);
}

State TransitionSystem::add_state(std::string name) {
    State q = add_state();
    set_state_name(q, std::move(name));
    return q;
}

void TransitionSystem::add_states(std::size_t count) { moves_.resize(moves_.size() + count); }

void TransitionSystem::check_state(State q) const {
    if (q >= moves_.size()) { throw std::out_of_range("state " + std::to_string(q) + " out of range"); }
}

void TransitionSystem::check_symbol(Symbol a) const {
    if (a >= alphabet_.size()) { throw std::out_of_range("symbol " + std::to_string(a) + " out of range"); }
}

void TransitionSystem::add_transition(State source, Symbol symbol, State target) {
    check_state(source);
    check_state(target);
    check_symbol(symbol);
    auto& out = moves_[source];
    Move m{symbol, target};
    auto it = std::lower_bound(out.begin(), out.end(), m);
    if (it != out.end() && *it == m) { return; }
    out.insert(it, m);
    ++num_transitions_;
}

bool TransitionSystem::has_transition(State source, Symbol symbol, State target) const {
    if (source >= moves_.size()) { return false; }
    const auto& out = moves_[source];
    return std::binary_search(out.begin(), out.end(), Move{symbol, target});
}

std::span<const Move> TransitionSystem::moves(State q, Symbol a) const {
    const auto& out = moves_.at(q);
    auto lo = std::lower_bound(out.begin(), out.end(), Move{a, 0});
    auto hi = lo;
    while (hi != out.end() && hi->symbol == a) { ++hi; }
    return {lo, hi};
}

StateSet TransitionSystem::post(State q, Symbol a) const {
    StateSet out;
    for (const Move& m : moves(q, a)) { out.push_back(m.target); }
    return out;
}

std::vector<Transition> TransitionSystem::transitions() const {
    std::vector<Transition> out;
    out.reserve(num_transitions_);
    for (State q = 0; q < moves_.size(); ++q) {
        for (const Move& m : moves_[q]) { out.push_back({q, m.symbol, m.target}); }
    }
    return out;
}

std::vector<Symbol> TransitionSystem::used_symbols() const {
    std::vector<bool> seen(alphabet_.size(), false);
    for (const auto& out : moves_) {
        for (const Move& m : out) { seen[m.symbol] = true; }
    }
    std::vector<Symbol> res;
    for (Symbol a = 0; a < seen.size(); ++a) {
        if (seen[a]) { res.push_back(a); }
    }
    return res;
}

void TransitionSystem::set_state_name(State q, std::string name) {
    check_state(q);
    if (names_.size() < moves_.size()) { names_.resize(moves_.size()); }
    names_[q] = std::move(name);
}

std::string TransitionSystem::state_name(State q) const {
    if (has_explicit_name(q)) { return names_[q]; }
    return std::to_string(q);
}

bool TransitionSystem::same_structure(const TransitionSystem& other) const {
    return alphabet_ == other.alphabet_ && moves_ == other.moves_;
}

void Nfa::add_initial(State q) {
    check_state(q);
    insert(initial_, q);
}

void Nfa::add_final(State q) {
    check_state(q);
    insert(final_, q);
}

void Nfa::set_initial(StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    initial_ = std::move(states);
}

void Nfa::set_final(StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    final_ = std::move(states);
}

bool Nfa::operator==(const Nfa& other) const {
    return same_structure(other) && initial_ == other.initial_ && final_ == other.final_;
}

PortNfa PortNfa::from_nfa(const Nfa& a) { return with_ports(a, {a.initial()}, {a.final()}); }

PortNfa PortNfa::with_ports(const TransitionSystem& ts, std::vector<StateSet> entries, std::vector<StateSet> exits) {
    PortNfa out;
    static_cast<TransitionSystem&>(out) = ts;
    for (auto& e : entries) { out.add_entry_set(std::move(e)); }
    for (auto& f : exits) { out.add_exit_set(std::move(f)); }
    return out;
}

std::size_t PortNfa::add_entry_set(StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    entries_.push_back(std::move(states));
    return entries_.size() - 1;
}

std::size_t PortNfa::add_exit_set(StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    exits_.push_back(std::move(states));
    return exits_.size() - 1;
}

void PortNfa::set_entry_set(std::size_t i, StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    entries_.at(i) = std::move(states);
}

void PortNfa::set_exit_set(std::size_t j, StateSet states) {
    states = make_state_set(std::move(states));
    for (State q : states) { check_state(q); }
    exits_.at(j) = std::move(states);
}

bool PortNfa::operator==(const PortNfa& other) const {
    return same_structure(other) && entries_ == other.entries_ && exits_ == other.exits_;
}

Nfa make_nfa(const TransitionSystem& ts, StateSet initial, StateSet final) {
    Nfa out;
    static_cast<TransitionSystem&>(out) = ts;
    out.set_initial(std::move(initial));
    out.set_final(std::move(final));
    return out;
}

Nfa universal_nfa(const Alphabet& alphabet) {
    Nfa out(alphabet, 1);
    for (Symbol a = 0; a < alphabet.size(); ++a) { out.add_transition(0, a, 0); }
    out.add_initial(0);
    out.add_final(0);
    return out;
}

Nfa empty_nfa(const Alphabet& alphabet) { return Nfa(alphabet, 0); }

} // namespace nfacomp
