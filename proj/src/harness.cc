#include "nfacomp/harness.hh"

#include <chrono>
#include <stdexcept>

#include "json.hpp"

#include "nfacomp/algorithms.hh"
#include "nfacomp/error.hh"
#include "nfacomp/gate.hh"
#include "nfacomp/heuristic.hh"
#include "nfacomp/powerset.hh"
#include "nfacomp/reduction.hh"

namespace nfacomp {

std::string to_string(Method m) {
    switch (m) {
    case Method::Forward: return "forward";
    case Method::Reverse: return "reverse";
    case Method::Auto: return "auto";
    case Method::Sequential: return "sequential";
    case Method::Gate: return "gate";
    case Method::Portfolio: return "portfolio";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    for (Method m : {Method::Forward, Method::Reverse, Method::Auto, Method::Sequential, Method::Gate, Method::Portfolio}) {
        if (to_string(m) == s) { return m; }
    }
    throw std::invalid_argument("unknown method '" + s + "'");
}

PartitionStrategy strategy_from_string(const std::string& s) {
    for (auto st : {PartitionStrategy::DeterministicComponents, PartitionStrategy::DetPlusRevDetBottom, PartitionStrategy::MinCut}) {
        if (to_string(st) == s) { return st; }
    }
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

namespace {

const char* status_name(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::BudgetExceeded: return "budget-exceeded";
    case Status::NoGatePartition: return "no-gate-partition";
    }
    return "unknown";
}

nlohmann::json json_of(const ComplementReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["status"] = status_name(r.status);
    j["message"] = r.message;
    j["input_states"] = r.input_states;
    j["output_states_pre_trim"] = r.output_states_pre_trim;
    j["output_states"] = r.output_states;
    j["transitions"] = r.transitions;
    if (r.partition_summary) {
        const auto& p = *r.partition_summary;
        j["partition_summary"] = {{"strategy", p.strategy}, {"component_sizes", p.component_sizes}};
        j["partition_summary"]["gate_symbols"] = p.gate_symbols ? nlohmann::json(*p.gate_symbols) : nlohmann::json();
        j["partition_summary"]["method_tag"] = p.method_tag ? nlohmann::json(*p.method_tag) : nlohmann::json();
    } else {
        j["partition_summary"] = nullptr;
    }
    if (r.heuristic_scores) {
        j["heuristic_scores"] = {{"forward", r.heuristic_scores->forward}, {"reverse", r.heuristic_scores->reverse}};
    } else {
        j["heuristic_scores"] = nullptr;
    }
    j["reduction"] = r.reduction;
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

struct Built {
    Nfa automaton;
    std::size_t pre_trim;
};

Built powerset_method(const Nfa& a, Direction d, const RunOptions& opts) {
    ComplementOptions co;
    co.max_states = opts.budget;
    co.minimize = opts.minimize;
    co.trim = false;
    Nfa c = complement(a, d, co);
    return {trim(c), c.num_states()};
}

void finish(MethodOutcome& out, Built built, const Nfa& a, const RunOptions& opts) {
    Nfa c = std::move(built.automaton);
    if (opts.reduce) {
        c = simulation_reduce(c);
        out.report.reduction = "direct-simulation";
    }
    out.report.input_states = a.num_states();
    out.report.output_states_pre_trim = built.pre_trim;
    out.report.output_states = c.num_states();
    out.report.transitions = c.num_transitions();
    out.automaton = std::move(c);
}

MethodOutcome sequential_method(const Nfa& a, const RunOptions& opts) {
    PipelineOptions po;
    po.rear_method = opts.rear;
    po.max_states = opts.budget;
    std::vector<PartitionStrategy> strategies;
    if (opts.strategy) {
        strategies.push_back(*opts.strategy);
    } else {
        strategies = {PartitionStrategy::DeterministicComponents, PartitionStrategy::DetPlusRevDetBottom, PartitionStrategy::MinCut};
    }
    std::optional<PipelineResult> best;
    PartitionStrategy best_strategy = strategies.front();
    std::optional<BudgetExceeded> failure;
    for (auto s : strategies) {
        try {
            PipelineResult r = seq_pipeline(a, s, po);
            if (!best || r.automaton.num_states() < best->automaton.num_states()) {
                best = std::move(r);
                best_strategy = s;
            }
        } catch (const BudgetExceeded& e) {
            failure = e;
        }
    }
    if (!best) { throw *failure; }
    MethodOutcome out;
    out.report.method = "sequential";
    std::vector<std::size_t> sizes = best->component_sizes;
    out.report.partition_summary = PartitionSummary{to_string(best_strategy), std::move(sizes), std::nullopt, std::nullopt};
    finish(out, {std::move(best->automaton), best->states_before_trim}, a, opts);
    return out;
}

MethodOutcome gate_method_outcome(const Nfa& a, const RunOptions& opts) {
    GateOptions go;
    go.max_states = opts.budget;
    go.minimize = true;
    GateResult r = gate_method(a, go);
    MethodOutcome out;
    out.report.method = "gate";
    const auto& p = r.partition;
    std::string tag = p.method == GateMethod::Equal ? "equal" : "disjoint";
    tag += p.direction == GateDirection::FrontClean ? "/front-clean" : "/rear-clean";
    if (p.needs_intersection) { tag += "/intersection"; }
    out.report.partition_summary = PartitionSummary{"gate", {p.base.front.num_states(), p.base.rear.num_states()},
                                                    p.gate_symbols.size(), tag};
    finish(out, {std::move(r.automaton), r.states_before_trim}, a, opts);
    return out;
}

MethodOutcome dispatch(const Nfa& a, Method m, const RunOptions& opts) {
    MethodOutcome out;
    out.report.method = to_string(m);
    switch (m) {
    case Method::Forward: finish(out, powerset_method(a, Direction::Forward, opts), a, opts); return out;
    case Method::Reverse: finish(out, powerset_method(a, Direction::Reverse, opts), a, opts); return out;
    case Method::Auto: {
        DirectionChoice d = choose_direction(a);
        out.report.heuristic_scores = HeuristicScores{d.score_forward, d.score_reverse};
        finish(out, powerset_method(a, d.choice, opts), a, opts);
        return out;
    }
    case Method::Sequential: return sequential_method(a, opts);
    case Method::Gate: return gate_method_outcome(a, opts);
    case Method::Portfolio: break;
    }
    throw std::logic_error("portfolio is not a single method");
}

} // namespace

std::string to_json(const ComplementReport& r) { return json_of(r).dump(2); }

std::string to_json(const std::vector<ComplementReport>& rs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rs) { j.push_back(json_of(r)); }
    return j.dump(2);
}

MethodOutcome run_method(const Nfa& a, Method m, const RunOptions& opts) {
    if (m == Method::Portfolio) {
        PortfolioOutcome p = run_portfolio(a, opts);
        if (p.best) { return p.members[*p.best]; }
        MethodOutcome out;
        out.report.method = "portfolio";
        out.report.status = Status::BudgetExceeded;
        out.report.message = "no method succeeded";
        out.report.input_states = a.num_states();
        return out;
    }
    const auto start = std::chrono::steady_clock::now();
    MethodOutcome out;
    try {
        out = dispatch(a, m, opts);
    } catch (const BudgetExceeded& e) {
        out = MethodOutcome{};
        out.report.method = to_string(m);
        out.report.status = Status::BudgetExceeded;
        out.report.message = e.what();
        out.report.input_states = a.num_states();
    } catch (const NoGatePartition& e) {
        out = MethodOutcome{};
        out.report.method = to_string(m);
        out.report.status = Status::NoGatePartition;
        out.report.message = e.what();
        out.report.input_states = a.num_states();
    }
    out.report.wall_time_ms = static_cast<std::size_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return out;
}

PortfolioOutcome run_portfolio(const Nfa& a, const RunOptions& opts) {
    const Method order[] = {Method::Forward, Method::Reverse, Method::Sequential, Method::Gate};
    PortfolioOutcome p;
    p.members.resize(4);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < 4; ++k) { p.members[k] = run_method(a, order[k], opts); }
    for (std::size_t k = 0; k < p.members.size(); ++k) {
        const auto& m = p.members[k];
        if (!m.automaton) { continue; }
        if (!p.best || m.report.output_states < p.members[*p.best].report.output_states) { p.best = k; }
    }
    return p;
}

} // namespace nfacomp
