#pragma once

#include <cstddef>
#include <vector>

#include "dsneg/belief_structure.hpp"
#include "dsneg/frame.hpp"
#include "dsneg/tolerances.hpp"

namespace dsneg {

/// Probability vector over a frame's states, in frame order. Entries lie
/// in [0,1] and the total is within mass_tolerance of 1. Immutable.
class ProbabilityDistribution {
public:
    ProbabilityDistribution(Frame frame, std::vector<double> probs);

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<double>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t index) const { return probs_.at(index); }

private:
    Frame frame_;
    std::vector<double> probs_;
};

ProbabilityDistribution uniform_distribution(const Frame& frame);

/// Read the distribution off a Bayesian structure; singletons without mass
/// get probability zero. Rejects non-Bayesian structures.
ProbabilityDistribution distribution_of(const BeliefStructure& m);

bool approx_equal(const ProbabilityDistribution& a, const ProbabilityDistribution& b,
                  double tolerance = compare_tolerance);

}  // namespace dsneg
