// Line-oriented automaton file format.
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "nfacomp/nfa.hh"

namespace nfacomp {

struct AutomatonFile {
    std::string name;
    std::variant<Nfa, PortNfa> automaton;

    bool is_port() const { return std::holds_alternative<PortNfa>(automaton); }
};

/// Throws ParseError with 1-based line and column.
/// When every state token is a decimal number the numbers are the state ids; otherwise states are
/// numbered in first-seen order and keep their tokens as names.
AutomatonFile parse_automaton(std::string_view text);
/// An @NFA file, or a @PortNFA with one entry and one exit set.
Nfa parse_nfa(std::string_view text);

std::string serialize(const Nfa& a, std::string_view name = "A");
std::string serialize(const PortNfa& a, std::string_view name = "A");
std::string serialize(const AutomatonFile& f);

} // namespace nfacomp
