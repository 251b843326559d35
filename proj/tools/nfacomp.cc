// Command-line front end: complement, generate, check, oracle, stats.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/harness.hh"
#include "nfacomp/heuristic.hh"
#include "nfacomp/io.hh"
#include "nfacomp/oracle.hh"
#include "nfacomp/powerset.hh"

using namespace nfacomp;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_parse = 2;
constexpr int exit_no_gate = 3;
constexpr int exit_budget = 4;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw std::runtime_error("cannot open " + path); }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw std::runtime_error("cannot write " + path); }
    out << text;
}

Nfa load_nfa(const std::string& path) { return parse_nfa(read_input(path)); }

int exit_code(Status s) {
    switch (s) {
    case Status::Ok: return exit_ok;
    case Status::BudgetExceeded: return exit_budget;
    case Status::NoGatePartition: return exit_no_gate;
    }
    return exit_false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"NFA complementation toolkit"};
    app.require_subcommand(1);

    auto* comp = app.add_subcommand("complement", "Complement an NFA");
    std::string method = "auto";
    std::string in_path;
    std::string out_path;
    std::string stats_path;
    bool minimize = false;
    bool reduce = false;
    std::string strategy = "all";
    std::string rear = "reverse";
    std::size_t budget = default_macrostate_budget;
    comp->add_option("-m,--method", method, "Complementation method")
        ->check(CLI::IsMember({"forward", "reverse", "auto", "sequential", "gate", "portfolio"}));
    comp->add_option("-i,--input", in_path, "Input file (stdin if omitted)");
    comp->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
    comp->add_option("--stats", stats_path, "Write a JSON report");
    comp->add_flag("--minimize", minimize, "Minimize powerset DFAs");
    comp->add_flag("--reduce", reduce, "Simulation-reduce the output");
    comp->add_option("--strategy", strategy, "Sequential partitioning strategy")
        ->check(CLI::IsMember({"det", "detrev", "mincut", "all"}));
    comp->add_option("--rear", rear, "Rear complementation method")->check(CLI::IsMember({"forward", "reverse"}));
    comp->add_option("--budget", budget, "Macrostates per powerset construction");

    auto* gen = app.add_subcommand("generate", "Write a witness family member");
    std::string family;
    std::size_t n = 1;
    std::string gen_out;
    gen->add_option("-f,--family", family, "Family")->required()->check(CLI::IsMember({"reverse", "sequential", "gate"}));
    gen->add_option("-n", n, "Parameter")->required();
    gen->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

    auto* check = app.add_subcommand("check", "Language relation between two NFAs");
    std::string relation;
    std::string path_a;
    std::string path_b;
    check->add_option("--relation", relation, "Relation")->required()->check(CLI::IsMember({"equiv", "incl", "disjoint"}));
    check->add_option("-a", path_a, "First automaton")->required();
    check->add_option("-b", path_b, "Second automaton")->required();

    auto* oracle = app.add_subcommand("oracle", "Check a complement by enumerating words");
    std::string path_c;
    std::size_t max_len = 6;
    oracle->add_option("-a", path_a, "Automaton")->required();
    oracle->add_option("-c", path_c, "Claimed complement")->required();
    oracle->add_option("--max-len", max_len, "Maximum word length");

    auto* stats = app.add_subcommand("stats", "Print automaton statistics");
    std::string stats_in;
    stats->add_option("-i,--input", stats_in, "Input file (stdin if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*comp) {
            Nfa a = load_nfa(in_path);
            RunOptions opts;
            opts.minimize = minimize;
            opts.reduce = reduce;
            if (strategy != "all") { opts.strategy = strategy_from_string(strategy); }
            opts.rear = rear == "forward" ? Direction::Forward : Direction::Reverse;
            opts.budget = budget;
            std::vector<ComplementReport> reports;
            MethodOutcome chosen;
            if (method == "portfolio") {
                PortfolioOutcome p = run_portfolio(a, opts);
                for (const auto& m : p.members) { reports.push_back(m.report); }
                if (!p.best) {
                    if (!stats_path.empty()) { write_output(stats_path, to_json(reports) + "\n"); }
                    std::cerr << "error: no method succeeded\n";
                    return exit_budget;
                }
                chosen = p.members[*p.best];
            } else {
                chosen = run_method(a, method_from_string(method), opts);
                reports.push_back(chosen.report);
            }
            if (!stats_path.empty()) {
                write_output(stats_path, (method == "portfolio" ? to_json(reports) : to_json(chosen.report)) + "\n");
            }
            if (!chosen.automaton) {
                std::cerr << "error: " << chosen.report.message << "\n";
                return exit_code(chosen.report.status);
            }
            write_output(out_path, serialize(*chosen.automaton, "complement"));
            return exit_ok;
        }
        if (*gen) {
            Family f = family == "reverse" ? Family::ReverseFriendly : family == "sequential" ? Family::Sequential : Family::Gate;
            write_output(gen_out, serialize(generate_family(f, n), family + "_" + std::to_string(n)));
            return exit_ok;
        }
        if (*check) {
            Nfa a = load_nfa(path_a);
            Nfa b = load_nfa(path_b);
            InclusionOptions io{default_antichain_budget};
            bool holds = relation == "equiv" ? language_equivalent(a, b, io)
                         : relation == "incl" ? antichain_inclusion(a, b, io)
                                              : language_disjoint(a, b, io);
            std::cout << (holds ? "true" : "false") << "\n";
            return holds ? exit_ok : exit_false;
        }
        if (*oracle) {
            Nfa a = load_nfa(path_a);
            Nfa c = load_nfa(path_c);
            OracleVerdict v = oracle_complement_check(a, c, max_len);
            if (v.ok) {
                std::cout << "OK " << v.words_checked << " words\n";
                return exit_ok;
            }
            std::cout << "counterexample \"" << word_to_string(a.alphabet(), *v.counterexample) << "\"\n";
            return exit_false;
        }
        if (*stats) {
            Nfa a = load_nfa(stats_in);
            DirectionChoice d = choose_direction(a);
            nlohmann::json j;
            j["states"] = a.num_states();
            j["transitions"] = a.num_transitions();
            j["alphabet"] = a.alphabet().size();
            j["initial"] = a.initial().size();
            j["final"] = a.final().size();
            j["deterministic"] = is_deterministic(a);
            j["complete"] = is_complete(a);
            j["sccs"] = scc_condensation(a).components.size();
            j["det_successor_score"] = {{"forward", d.score_forward}, {"reverse", d.score_reverse}};
            j["suggested_direction"] = d.choice == Direction::Forward ? "forward" : "reverse";
            std::cout << j.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const NoGatePartition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_no_gate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_false;
    }
    return exit_ok;
}
