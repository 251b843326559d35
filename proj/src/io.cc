#include "nfacomp/io.hh"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "nfacomp/error.hh"

namespace nfacomp {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) { end = text.size(); }
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) { raw = raw.substr(0, hash); }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; }
            if (i > start) { line.tokens.push_back({raw.substr(start, i - start), start + 1}); }
        }
        if (!line.tokens.empty()) { lines.push_back(std::move(line)); }
        if (end == text.size()) { break; }
        pos = end + 1;
    }
    return lines;
}

std::optional<std::size_t> number_of(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) { return std::nullopt; }
    return v;
}

bool is_canonical_number(std::string_view s) {
    return number_of(s).has_value() && (s.size() == 1 || s.front() != '0');
}

[[noreturn]] void fail(const std::string& msg, const Line& line, const Token& tok) { throw ParseError(msg, line.number, tok.column); }

} // namespace

AutomatonFile parse_automaton(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) { throw ParseError("missing header", 1, 1); }
    const Line& head = lines.front();
    const Token& kind = head.tokens.front();
    if (kind.text != "@NFA" && kind.text != "@PortNFA") { fail("expected @NFA or @PortNFA header", head, kind); }
    if (head.tokens.size() != 2) { fail("header takes exactly one name", head, head.tokens.size() > 2 ? head.tokens[2] : kind); }
    const bool port = kind.text == "@PortNFA";

    // First pass: every state token, to decide between numeric ids and first-seen naming.
    std::optional<std::vector<std::string>> alphabet;
    std::size_t alphabet_line = 0;
    std::vector<const Token*> state_tokens;
    std::vector<const Line*> initial_lines;
    std::vector<const Line*> final_lines;
    std::map<std::size_t, const Line*> entry_lines;
    std::map<std::size_t, const Line*> exit_lines;
    std::vector<const Line*> transition_lines;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const Token& first = line.tokens.front();
        std::string_view key = first.text;
        if (key == "@NFA" || key == "@PortNFA") { fail("duplicate header", line, first); }
        if (key == "%Alphabet") {
            if (alphabet) { fail("duplicate %Alphabet", line, first); }
            if (line.tokens.size() < 2) { fail("%Alphabet needs at least one symbol", line, first); }
            alphabet.emplace();
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                std::string sym(line.tokens[i].text);
                if (std::find(alphabet->begin(), alphabet->end(), sym) != alphabet->end()) {
                    fail("duplicate symbol '" + sym + "'", line, line.tokens[i]);
                }
                alphabet->push_back(std::move(sym));
            }
            alphabet_line = line.number;
            continue;
        }
        if (key == "%Initial" || key == "%Final") {
            if (port) { fail(std::string(key) + " not allowed in @PortNFA", line, first); }
            auto& target = key == "%Initial" ? initial_lines : final_lines;
            if (!target.empty()) { fail("duplicate " + std::string(key), line, first); }
            target.push_back(&line);
            for (std::size_t i = 1; i < line.tokens.size(); ++i) { state_tokens.push_back(&line.tokens[i]); }
            continue;
        }
        if (key == "%Entry" || key == "%Exit") {
            if (!port) { fail(std::string(key) + " not allowed in @NFA", line, first); }
            if (line.tokens.size() < 2) { fail(std::string(key) + " needs an index", line, first); }
            auto idx = number_of(line.tokens[1].text);
            if (!idx) { fail("invalid port index '" + std::string(line.tokens[1].text) + "'", line, line.tokens[1]); }
            auto& target = key == "%Entry" ? entry_lines : exit_lines;
            if (!target.emplace(*idx, &line).second) { fail("duplicate port index " + std::to_string(*idx), line, line.tokens[1]); }
            for (std::size_t i = 2; i < line.tokens.size(); ++i) { state_tokens.push_back(&line.tokens[i]); }
            continue;
        }
        if (key.front() == '%') { fail("unknown section '" + std::string(key) + "'", line, first); }
        if (line.tokens.size() != 3) { fail("transition must be '<src> <sym> <dst>'", line, first); }
        state_tokens.push_back(&line.tokens[0]);
        state_tokens.push_back(&line.tokens[2]);
        transition_lines.push_back(&line);
    }
    if (!alphabet) { throw ParseError("missing %Alphabet", head.number, 1); }
    for (const Line* line : transition_lines) {
        if (line->number < alphabet_line) { fail("transition before %Alphabet", *line, line->tokens.front()); }
    }
    for (const auto* ports : {&entry_lines, &exit_lines}) {
        std::size_t expect = 0;
        for (const auto& [idx, line] : *ports) {
            if (idx != expect) { fail("port indices must be contiguous from 0; missing " + std::to_string(expect), *line, line->tokens[1]); }
            ++expect;
        }
    }

    const bool numeric = std::all_of(state_tokens.begin(), state_tokens.end(), [](const Token* t) { return is_canonical_number(t->text); });
    Alphabet alph(*alphabet);
    TransitionSystem ts(alph);
    std::unordered_map<std::string_view, State> ids;
    auto state = [&](const Token& t) -> State {
        if (numeric) {
            State q = static_cast<State>(*number_of(t.text));
            if (q >= ts.num_states()) { ts.add_states(q + 1 - ts.num_states()); }
            return q;
        }
        auto it = ids.find(t.text);
        if (it != ids.end()) { return it->second; }
        State q = ts.add_state(std::string(t.text));
        ids.emplace(t.text, q);
        return q;
    };
    auto collect = [&](const Line* line, std::size_t from) {
        StateSet s;
        for (std::size_t i = from; i < line->tokens.size(); ++i) { s.push_back(state(line->tokens[i])); }
        return make_state_set(std::move(s));
    };
    std::vector<StateSet> init_sets;
    std::vector<StateSet> final_sets;
    std::vector<StateSet> entry_sets(entry_lines.size());
    std::vector<StateSet> exit_sets(exit_lines.size());
    // Walk the lines in file order so that first-seen numbering follows the text.
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        std::string_view key = line.tokens.front().text;
        if (key == "%Alphabet") { continue; }
        if (key == "%Initial") { init_sets.push_back(collect(&line, 1)); continue; }
        if (key == "%Final") { final_sets.push_back(collect(&line, 1)); continue; }
        if (key == "%Entry") { entry_sets[*number_of(line.tokens[1].text)] = collect(&line, 2); continue; }
        if (key == "%Exit") { exit_sets[*number_of(line.tokens[1].text)] = collect(&line, 2); continue; }
        const Token& sym = line.tokens[1];
        if (!alph.has(std::string(sym.text))) { fail("undeclared symbol '" + std::string(sym.text) + "'", line, sym); }
        State src = state(line.tokens[0]);
        State dst = state(line.tokens[2]);
        ts.add_transition(src, alph.id(std::string(sym.text)), dst);
    }

    AutomatonFile f;
    f.name = std::string(head.tokens[1].text);
    if (port) {
        f.automaton = PortNfa::with_ports(ts, std::move(entry_sets), std::move(exit_sets));
    } else {
        f.automaton = make_nfa(ts, init_sets.empty() ? StateSet{} : init_sets.front(), final_sets.empty() ? StateSet{} : final_sets.front());
    }
    return f;
}

Nfa parse_nfa(std::string_view text) {
    AutomatonFile f = parse_automaton(text);
    if (auto* a = std::get_if<Nfa>(&f.automaton)) { return std::move(*a); }
    const PortNfa& p = std::get<PortNfa>(f.automaton);
    if (p.num_entries() != 1 || p.num_exits() != 1) { throw ParseError("expected an @NFA or a single-slice @PortNFA", 1, 1); }
    return make_nfa(p, p.entry(0), p.exit(0));
}

namespace {

/// One distinct token per state; a prime is appended when a name collides with another state's token.
std::vector<std::string> state_tokens(const TransitionSystem& ts) {
    std::vector<std::string> out(ts.num_states());
    std::set<std::string> used;
    for (State q = 0; q < ts.num_states(); ++q) {
        if (!ts.has_explicit_name(q)) {
            out[q] = ts.state_name(q);
            used.insert(out[q]);
        }
    }
    for (State q = 0; q < ts.num_states(); ++q) {
        if (ts.has_explicit_name(q)) {
            std::string t = ts.state_name(q);
            while (used.count(t) != 0) { t += '\''; }
            out[q] = t;
            used.insert(t);
        }
    }
    return out;
}

void write_states(std::ostringstream& out, const std::vector<std::string>& names, const StateSet& s) {
    for (State q : s) { out << ' ' << names[q]; }
    out << '\n';
}

void write_body(std::ostringstream& out, const TransitionSystem& ts, const std::vector<std::string>& names) {
    for (const auto& t : ts.transitions()) {
        out << names[t.source] << ' ' << ts.alphabet().name(t.symbol) << ' ' << names[t.target] << '\n';
    }
}

void write_alphabet(std::ostringstream& out, const Alphabet& alph) {
    out << "%Alphabet";
    for (Symbol a = 0; a < alph.size(); ++a) { out << ' ' << alph.name(a); }
    out << '\n';
}

} // namespace

std::string serialize(const Nfa& a, std::string_view name) {
    std::ostringstream out;
    const auto names = state_tokens(a);
    out << "@NFA " << name << '\n';
    write_alphabet(out, a.alphabet());
    out << "%Initial";
    write_states(out, names, a.initial());
    out << "%Final";
    write_states(out, names, a.final());
    write_body(out, a, names);
    return out.str();
}

std::string serialize(const PortNfa& a, std::string_view name) {
    std::ostringstream out;
    const auto names = state_tokens(a);
    out << "@PortNFA " << name << '\n';
    write_alphabet(out, a.alphabet());
    for (std::size_t i = 0; i < a.num_entries(); ++i) {
        out << "%Entry " << i;
        write_states(out, names, a.entry(i));
    }
    for (std::size_t j = 0; j < a.num_exits(); ++j) {
        out << "%Exit " << j;
        write_states(out, names, a.exit(j));
    }
    write_body(out, a, names);
    return out.str();
}

std::string serialize(const AutomatonFile& f) {
    return std::visit([&](const auto& a) { return serialize(a, f.name); }, f.automaton);
}

} // namespace nfacomp
