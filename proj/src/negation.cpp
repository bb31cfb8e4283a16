#include "dsneg/negation.hpp"

#include <bit>
#include <cstdint>
#include <map>

#include "dsneg/errors.hpp"

namespace dsneg {

FocalSet negate_focal(const FocalSet& set) {
    if (set.empty()) {
        throw ValidationError("cannot negate the empty set");
    }
    if (set.cardinality() == 1) {
        return set.complement();
    }
    // The union of (Θ - θ) over two or more members covers the whole frame.
    return set.frame().full_set();
}

BeliefStructure negate(const BeliefStructure& m) {
    if (m.frame().size() < 2) {
        throw SingletonFrameError("negation is undefined over a one-element frame");
    }
    std::map<std::uint64_t, double> targets;
    for (const auto& [bits, mass] : m.mass_map()) {
        targets[negate_focal(m.frame().subset(bits)).bits()] += mass;
    }
    std::vector<std::pair<FocalSet, double>> entries;
    entries.reserve(targets.size());
    for (const auto& [bits, mass] : targets) {
        entries.emplace_back(m.frame().subset(bits), mass);
    }
    return BeliefStructure(m.frame(), entries);
}

std::string_view to_string(TraceTerminal terminal) noexcept {
    switch (terminal) {
        case TraceTerminal::fixed_point: return "fixed_point";
        case TraceTerminal::two_cycle: return "two_cycle";
        case TraceTerminal::step_limit: return "step_limit";
    }
    return "unknown";
}

NegationTrace iterate_negation(const BeliefStructure& m, std::size_t max_steps) {
    if (max_steps < 1) {
        throw ValidationError("max_steps must be at least 1");
    }
    NegationTrace trace;
    trace.steps.push_back(m);
    for (std::size_t k = 1; k <= max_steps; ++k) {
        trace.steps.push_back(negate(trace.steps.back()));
        const auto& steps = trace.steps;
        if (approx_equal(steps[k - 1], steps[k])) {
            trace.terminal = TraceTerminal::fixed_point;
            trace.terminal_index = k - 1;
            return trace;
        }
        // The fixed-point check at k-1 already failed, so steps[k-2] is
        // known to differ from steps[k-1].
        if (k >= 2 && approx_equal(steps[k - 2], steps[k])) {
            trace.terminal = TraceTerminal::two_cycle;
            trace.terminal_index = k - 2;
            return trace;
        }
    }
    trace.terminal = TraceTerminal::step_limit;
    trace.terminal_index = trace.steps.size() - 1;
    return trace;
}

ProbabilityDistribution yager_negation(const ProbabilityDistribution& p) {
    const std::size_t n = p.size();
    if (n < 2) {
        throw SingletonFrameError("negation is undefined for a single-state distribution");
    }
    std::vector<double> negated(n);
    for (std::size_t i = 0; i < n; ++i) {
        negated[i] = (1.0 - p.probs()[i]) / static_cast<double>(n - 1);
    }
    return ProbabilityDistribution(p.frame(), std::move(negated));
}

ProbabilityDistribution bayesian_negation_reduced(const BeliefStructure& m) {
    if (!m.is_bayesian()) {
        throw ValidationError("reduction requires a Bayesian structure");
    }
    const BeliefStructure negated = negate(m);
    std::vector<double> probs(m.frame().size(), 0.0);
    for (const auto& [bits, mass] : negated.mass_map()) {
        const double share = mass / static_cast<double>(std::popcount(bits));
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if ((bits >> i) & 1u) {
                probs[i] += share;
            }
        }
    }
    return ProbabilityDistribution(m.frame(), std::move(probs));
}

}  // namespace dsneg
