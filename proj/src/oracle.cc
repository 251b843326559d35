#include "nfacomp/oracle.hh"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nfacomp/algorithms.hh"

namespace nfacomp {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

Word decode(std::size_t index, std::size_t length, std::size_t base) {
    Word w(length);
    for (std::size_t k = length; k-- > 0;) {
        w[k] = static_cast<Symbol>(index % base);
        index /= base;
    }
    return w;
}

} // namespace

OracleVerdict oracle_complement_check(const Nfa& a, const Nfa& c, std::size_t max_len, Execution exec) {
    if (!(a.alphabet() == c.alphabet())) { throw std::invalid_argument("alphabet mismatch"); }
    const std::size_t base = a.alphabet().size();
    OracleVerdict v;
    std::optional<Word> first_gap;
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::size_t count = 1;
        for (std::size_t k = 0; k < len; ++k) {
            if (base != 0 && count > std::numeric_limits<std::size_t>::max() / base) { throw std::overflow_error("too many words"); }
            count *= base;
        }
        if (base == 0 && len > 0) { break; }
        std::size_t overlap = none;
        std::size_t gap = none;
        const long n = static_cast<long>(count);
        if (exec == Execution::Parallel) {
#pragma omp parallel for reduction(min : overlap, gap) schedule(static)
            for (long i = 0; i < n; ++i) {
                Word w = decode(static_cast<std::size_t>(i), len, base);
                bool in_a = accepts(a, w);
                bool in_c = accepts(c, w);
                if (in_a && in_c) { overlap = std::min(overlap, static_cast<std::size_t>(i)); }
                if (!in_a && !in_c) { gap = std::min(gap, static_cast<std::size_t>(i)); }
            }
        } else {
            for (long i = 0; i < n; ++i) {
                Word w = decode(static_cast<std::size_t>(i), len, base);
                bool in_a = accepts(a, w);
                bool in_c = accepts(c, w);
                if (in_a && in_c && overlap == none) { overlap = static_cast<std::size_t>(i); }
                if (!in_a && !in_c && gap == none) { gap = static_cast<std::size_t>(i); }
            }
        }
        v.words_checked += count;
        if (overlap != none) {
            v.ok = false;
            v.counterexample = decode(overlap, len, base);
            return v;
        }
        if (gap != none && !first_gap) { first_gap = decode(gap, len, base); }
    }
    if (first_gap) {
        v.ok = false;
        v.counterexample = std::move(first_gap);
    }
    return v;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
    bool single = true;
    for (Symbol a = 0; a < alphabet.size(); ++a) { single = single && alphabet.name(a).size() == 1; }
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!single && k > 0) { out += ' '; }
        out += alphabet.name(w[k]);
    }
    return out;
}

} // namespace nfacomp
