#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dsneg/belief_structure.hpp"
#include "dsneg/probability.hpp"

namespace dsneg {

/// Negation of a non-empty set: the union of (Θ - θ) over its members.
/// The complement for a singleton; the whole frame for anything larger.
FocalSet negate_focal(const FocalSet& set);

/// Negation of a belief structure: each focal element's mass moves to the
/// negated focal element, and masses landing on the same target merge by
/// summation. Undefined over one-element frames.
BeliefStructure negate(const BeliefStructure& m);

enum class TraceTerminal { fixed_point, two_cycle, step_limit };

std::string_view to_string(TraceTerminal terminal) noexcept;

/// Orbit of repeated negation: steps[0] is the input and each following
/// entry is the negation of its predecessor.
///
/// terminal_index marks where the terminal condition was detected:
///   fixed_point - first index whose structure equals its own negation;
///   two_cycle   - first index k with steps[k] = steps[k+2] != steps[k+1];
///   step_limit  - index of the last structure produced.
struct NegationTrace {
    std::vector<BeliefStructure> steps;
    TraceTerminal terminal;
    std::size_t terminal_index;
};

/// Repeatedly negate until a fixed point or two-cycle is detected, or
/// max_steps negations have been applied. Structures are compared per
/// subset under compare_tolerance. Requires max_steps >= 1.
NegationTrace iterate_negation(const BeliefStructure& m, std::size_t max_steps);

/// Negation of a probability distribution: (1 - p_i) / (n - 1).
/// Undefined for single-state distributions.
ProbabilityDistribution yager_negation(const ProbabilityDistribution& p);

/// Negation of a Bayesian structure pushed back down to a distribution:
/// negate, then split each focal element's mass equally among its members.
/// Agrees with yager_negation applied to the structure's distribution.
ProbabilityDistribution bayesian_negation_reduced(const BeliefStructure& m);

}  // namespace dsneg
