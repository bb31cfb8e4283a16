#include "dsneg/belief_structure.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "dsneg/errors.hpp"

namespace dsneg {

BeliefStructure::BeliefStructure(Frame frame,
                                 const std::vector<std::pair<FocalSet, double>>& entries)
    : frame_(std::move(frame)) {
    if (entries.empty()) {
        throw ValidationError("belief structure needs at least one focal element");
    }
    for (const auto& [set, mass] : entries) {
        if (set.frame() != frame_) {
            throw FrameMismatchError("focal element belongs to a different frame");
        }
        if (set.empty()) {
            throw ValidationError("the empty set cannot carry mass");
        }
        if (!(mass > 0.0)) {
            throw ValidationError("mass for " + to_string(set) + " must be strictly positive");
        }
        masses_[set.bits()] += mass;
    }
    double total = 0.0;
    for (const auto& [bits, mass] : masses_) {
        total += mass;
    }
    if (!(std::abs(total - 1.0) <= mass_tolerance)) {
        throw ValidationError("masses sum to " + std::to_string(total) + ", expected 1");
    }
}

double BeliefStructure::mass(const FocalSet& set) const {
    if (set.frame() != frame_) {
        throw FrameMismatchError("set belongs to a different frame");
    }
    return mass_bits(set.bits());
}

double BeliefStructure::mass_bits(std::uint64_t bits) const noexcept {
    auto it = masses_.find(bits);
    return it == masses_.end() ? 0.0 : it->second;
}

FocalSet BeliefStructure::core() const {
    std::uint64_t bits = 0;
    for (const auto& [mask, mass] : masses_) {
        bits |= mask;
    }
    return frame_.subset(bits);
}

bool BeliefStructure::is_bayesian() const noexcept {
    for (const auto& [bits, mass] : masses_) {
        if (std::popcount(bits) != 1) {
            return false;
        }
    }
    return true;
}

bool BeliefStructure::is_vacuous() const noexcept {
    return masses_.size() == 1 && masses_.begin()->first == frame_.full_mask();
}

std::vector<std::pair<FocalSet, double>> BeliefStructure::entries() const {
    std::vector<std::pair<FocalSet, double>> out;
    out.reserve(masses_.size());
    for (const auto& [bits, mass] : masses_) {
        out.emplace_back(frame_.subset(bits), mass);
    }
    return out;
}

BeliefStructure vacuous(const Frame& frame) {
    return BeliefStructure(frame, {{frame.full_set(), 1.0}});
}

bool approx_equal(const BeliefStructure& a, const BeliefStructure& b, double tolerance) {
    if (a.frame() != b.frame()) {
        return false;
    }
    auto ia = a.mass_map().begin();
    auto ib = b.mass_map().begin();
    const auto ea = a.mass_map().end();
    const auto eb = b.mass_map().end();
    while (ia != ea || ib != eb) {
        double ma = 0.0;
        double mb = 0.0;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            ma = (ia++)->second;
        } else if (ia == ea || ib->first < ia->first) {
            mb = (ib++)->second;
        } else {
            ma = (ia++)->second;
            mb = (ib++)->second;
        }
        if (std::abs(ma - mb) > tolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace dsneg
