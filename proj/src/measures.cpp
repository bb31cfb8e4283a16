#include "dsneg/measures.hpp"

#include <bit>
#include <cmath>

#include "dsneg/errors.hpp"

namespace dsneg {

namespace {

void require_frame_of(const BeliefStructure& m, const FocalSet& set) {
    if (set.frame() != m.frame()) {
        throw FrameMismatchError("set belongs to a different frame than the structure");
    }
}

}  // namespace

double bel(const BeliefStructure& m, const FocalSet& set) {
    require_frame_of(m, set);
    const std::uint64_t target = set.bits();
    double total = 0.0;
    for (const auto& [bits, mass] : m.mass_map()) {
        if ((bits & target) == bits) {
            total += mass;
        }
    }
    return total;
}

double pl(const BeliefStructure& m, const FocalSet& set) {
    require_frame_of(m, set);
    const std::uint64_t target = set.bits();
    double total = 0.0;
    for (const auto& [bits, mass] : m.mass_map()) {
        if ((bits & target) != 0) {
            total += mass;
        }
    }
    return total;
}

BeliefInterval::BeliefInterval(double lower, double upper) : lower(lower), upper(upper) {
    if (!(lower >= -compare_tolerance && upper <= 1.0 + compare_tolerance &&
          lower <= upper + compare_tolerance)) {
        throw ValidationError("belief interval bounds out of order or outside [0,1]");
    }
}

BeliefInterval belief_interval(const BeliefStructure& m, const FocalSet& set) {
    return BeliefInterval(bel(m, set), pl(m, set));
}

ProbabilityDistribution pignistic(const BeliefStructure& m) {
    std::vector<double> probs(m.frame().size(), 0.0);
    for (const auto& [bits, mass] : m.mass_map()) {
        const double share = mass / static_cast<double>(std::popcount(bits));
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if ((bits >> i) & 1u) {
                probs[i] += share;
            }
        }
    }
    return ProbabilityDistribution(m.frame(), std::move(probs));
}

double shannon_entropy(const ProbabilityDistribution& p) {
    double entropy = 0.0;
    for (double x : p.probs()) {
        if (x > 0.0) {
            entropy -= x * std::log2(x);
        }
    }
    return entropy;
}

double nonspecificity(const BeliefStructure& m) {
    double total = 0.0;
    for (const auto& [bits, mass] : m.mass_map()) {
        total += mass * std::log2(static_cast<double>(std::popcount(bits)));
    }
    return total;
}

double ambiguity_measure(const BeliefStructure& m) { return shannon_entropy(pignistic(m)); }

}  // namespace dsneg
