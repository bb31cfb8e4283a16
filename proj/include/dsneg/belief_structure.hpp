#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dsneg/frame.hpp"
#include "dsneg/tolerances.hpp"

namespace dsneg {

/// Mass assignment over non-empty subsets of a frame.
///
/// Validated on construction: no mass on the empty set, every stored mass
/// strictly positive, total within mass_tolerance of 1. Duplicate focal
/// sets in the input are merged by summation; totals are never silently
/// renormalized. Immutable after construction.
class BeliefStructure {
public:
    BeliefStructure(Frame frame, const std::vector<std::pair<FocalSet, double>>& entries);

    const Frame& frame() const noexcept { return frame_; }

    /// Focal-element masses keyed by bitmask, in ascending mask order.
    const std::map<std::uint64_t, double>& mass_map() const noexcept { return masses_; }
    std::size_t focal_count() const noexcept { return masses_.size(); }

    /// Mass of the exact subset; zero when it is not a focal element.
    double mass(const FocalSet& set) const;
    double mass_bits(std::uint64_t bits) const noexcept;

    /// Union of all focal elements.
    FocalSet core() const;

    /// All focal elements are singletons.
    bool is_bayesian() const noexcept;
    /// The single focal element is the whole frame.
    bool is_vacuous() const noexcept;

    std::vector<std::pair<FocalSet, double>> entries() const;

private:
    Frame frame_;
    std::map<std::uint64_t, double> masses_;
};

/// The structure of total ignorance: m(Θ) = 1.
BeliefStructure vacuous(const Frame& frame);

/// Per-subset mass comparison under the given tolerance. Structures over
/// different frames are never equal.
bool approx_equal(const BeliefStructure& a, const BeliefStructure& b,
                  double tolerance = compare_tolerance);

}  // namespace dsneg
