#pragma once

#include <array>
#include <string_view>

#include "dsneg/belief_structure.hpp"
#include "dsneg/probability.hpp"

namespace dsneg {

/// Total mass of focal elements contained in `set`: the lower support bound.
double bel(const BeliefStructure& m, const FocalSet& set);

/// Total mass of focal elements intersecting `set`: the upper support bound.
/// Equal to 1 - bel of the complement.
double pl(const BeliefStructure& m, const FocalSet& set);

/// [Bel, Pl]; the interval length is the imprecision of the proposition.
struct BeliefInterval {
    double lower;
    double upper;

    BeliefInterval(double lower, double upper);
    double length() const noexcept { return upper - lower; }
};

BeliefInterval belief_interval(const BeliefStructure& m, const FocalSet& set);

/// Split every focal element's mass equally among its members.
ProbabilityDistribution pignistic(const BeliefStructure& m);

/// Entropy in bits, with 0 log 0 taken as 0.
double shannon_entropy(const ProbabilityDistribution& p);

/// Sum of m(A) * log2|A|. Zero exactly on Bayesian structures; log2 n
/// exactly on the vacuous structure, which is the unique maximizer.
double nonspecificity(const BeliefStructure& m);

/// Entropy of the pignistic transform.
double ambiguity_measure(const BeliefStructure& m);

/// An uncertainty measure over belief structures that takes its maximum
/// on the vacuous structure.
struct UncertaintyMeasure {
    std::string_view name;
    double (*value)(const BeliefStructure&);
};

inline constexpr std::array<UncertaintyMeasure, 2> uncertainty_measures{{
    {"nonspecificity", &nonspecificity},
    {"ambiguity_measure", &ambiguity_measure},
}};

}  // namespace dsneg
