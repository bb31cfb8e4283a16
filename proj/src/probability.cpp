#include "dsneg/probability.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "dsneg/errors.hpp"

namespace dsneg {

ProbabilityDistribution::ProbabilityDistribution(Frame frame, std::vector<double> probs)
    : frame_(std::move(frame)), probs_(std::move(probs)) {
    if (probs_.size() != frame_.size()) {
        throw ValidationError("distribution has " + std::to_string(probs_.size()) +
                              " entries for a frame of " + std::to_string(frame_.size()));
    }
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= -compare_tolerance && p <= 1.0 + compare_tolerance)) {
            throw ValidationError("probability " + std::to_string(p) + " outside [0,1]");
        }
        total += p;
    }
    if (!(std::abs(total - 1.0) <= mass_tolerance)) {
        throw ValidationError("probabilities sum to " + std::to_string(total) + ", expected 1");
    }
}

ProbabilityDistribution uniform_distribution(const Frame& frame) {
    return ProbabilityDistribution(
        frame, std::vector<double>(frame.size(), 1.0 / static_cast<double>(frame.size())));
}

ProbabilityDistribution distribution_of(const BeliefStructure& m) {
    if (!m.is_bayesian()) {
        throw ValidationError("structure has non-singleton focal elements");
    }
    std::vector<double> probs(m.frame().size(), 0.0);
    for (const auto& [bits, mass] : m.mass_map()) {
        probs[static_cast<std::size_t>(std::countr_zero(bits))] = mass;
    }
    return ProbabilityDistribution(m.frame(), std::move(probs));
}

bool approx_equal(const ProbabilityDistribution& a, const ProbabilityDistribution& b,
                  double tolerance) {
    if (a.frame() != b.frame()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.probs()[i] - b.probs()[i]) > tolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace dsneg
