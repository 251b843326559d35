// Method dispatch, portfolio, and machine-readable reports.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nfacomp/nfa.hh"
#include "nfacomp/sequential.hh"

namespace nfacomp {

inline constexpr std::size_t default_macrostate_budget = 1'000'000;
inline constexpr std::size_t default_antichain_budget = 10'000'000;

enum class Method { Forward, Reverse, Auto, Sequential, Gate, Portfolio };

std::string to_string(Method m);
/// Throws std::invalid_argument on an unknown name.
Method method_from_string(const std::string& s);
PartitionStrategy strategy_from_string(const std::string& s);

struct PartitionSummary {
    std::string strategy;
    std::vector<std::size_t> component_sizes;
    std::optional<std::size_t> gate_symbols;
    std::optional<std::string> method_tag;
};

struct HeuristicScores {
    std::size_t forward = 0;
    std::size_t reverse = 0;
};

enum class Status { Ok, BudgetExceeded, NoGatePartition };

struct ComplementReport {
    std::string method;
    Status status = Status::Ok;
    std::string message;
    std::size_t input_states = 0;
    std::size_t output_states_pre_trim = 0;
    std::size_t output_states = 0;
    std::size_t transitions = 0;
    std::optional<PartitionSummary> partition_summary;
    std::optional<HeuristicScores> heuristic_scores;
    /// "none" or "direct-simulation"; the latter stands in for lookahead simulation.
    std::string reduction = "none";
    std::size_t wall_time_ms = 0;
};

/// JSON object with every report field; optional fields are null when absent.
std::string to_json(const ComplementReport& r);
std::string to_json(const std::vector<ComplementReport>& rs);

struct RunOptions {
    /// Minimize powerset DFAs.
    bool minimize = false;
    /// Simulation-reduce the output.
    bool reduce = false;
    /// Unset means all strategies, keeping the smallest result.
    std::optional<PartitionStrategy> strategy;
    Direction rear = Direction::Reverse;
    std::size_t budget = default_macrostate_budget;
};

struct MethodOutcome {
    ComplementReport report;
    /// Present iff report.status is Ok.
    std::optional<Nfa> automaton;
};

/// Runs one method; budget and no-partition failures are reported, not thrown.
/// Portfolio returns the smallest successful outcome, with method set to the winner.
MethodOutcome run_method(const Nfa& a, Method m, const RunOptions& opts = {});

struct PortfolioOutcome {
    /// Per member in the fixed order forward, reverse, sequential, gate.
    std::vector<MethodOutcome> members;
    /// Index of the smallest successful member; ties resolved by order.
    std::optional<std::size_t> best;
};

PortfolioOutcome run_portfolio(const Nfa& a, const RunOptions& opts = {});

} // namespace nfacomp
