#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsneg/belief_structure.hpp"
#include "dsneg/frame.hpp"

namespace dsneg::test {

/// Frame with single-letter labels a, b, c, ...
inline Frame letters(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i));
    }
    return Frame(std::move(labels));
}

/// Dirichlet-style masses: independent unit-rate gamma draws, normalized.
/// Draws are floored away from zero so every mass stays well positive.
inline std::vector<double> random_masses(std::mt19937_64& rng, std::size_t count) {
    std::gamma_distribution<double> gamma(1.0, 1.0);
    std::vector<double> masses(count);
    double total = 0.0;
    for (auto& mass : masses) {
        do {
            mass = gamma(rng);
        } while (mass < 1e-6);
        total += mass;
    }
    for (auto& mass : masses) {
        mass /= total;
    }
    return masses;
}

/// Structure with a random non-empty support of at most max_focal subsets.
inline BeliefStructure random_structure(std::mt19937_64& rng, const Frame& frame,
                                        std::size_t max_focal = 8) {
    const std::uint64_t full = frame.full_mask();
    const std::uint64_t candidates = full;  // non-empty subsets: 1 .. full
    const std::size_t limit = std::min<std::uint64_t>(max_focal, candidates);
    std::uniform_int_distribution<std::size_t> count_dist(1, limit);
    const std::size_t count = count_dist(rng);

    std::set<std::uint64_t> support;
    std::uniform_int_distribution<std::uint64_t> mask_dist(1, full);
    while (support.size() < count) {
        support.insert(mask_dist(rng));
    }

    auto masses = random_masses(rng, support.size());
    std::vector<std::pair<FocalSet, double>> entries;
    entries.reserve(support.size());
    std::size_t i = 0;
    for (std::uint64_t bits : support) {
        entries.emplace_back(frame.subset(bits), masses[i++]);
    }
    return BeliefStructure(frame, entries);
}

/// Bayesian structure: random subset of singletons with random masses.
inline BeliefStructure random_bayesian(std::mt19937_64& rng, const Frame& frame) {
    std::uniform_int_distribution<std::size_t> count_dist(1, frame.size());
    const std::size_t count = count_dist(rng);
    std::vector<std::size_t> indices(frame.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    std::shuffle(indices.begin(), indices.end(), rng);

    auto masses = random_masses(rng, count);
    std::vector<std::pair<FocalSet, double>> entries;
    entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        entries.emplace_back(frame.singleton(indices[i]), masses[i]);
    }
    return BeliefStructure(frame, entries);
}

/// Independent bel oracle: enumerate all 2^n subsets against a dense mass
/// table instead of walking the structure's focal-element map.
inline double bel_oracle(const BeliefStructure& m, std::uint64_t target) {
    const std::uint64_t subsets = m.frame().full_mask() + 1;
    std::vector<double> dense(subsets, 0.0);
    for (const auto& [bits, mass] : m.mass_map()) {
        dense[bits] += mass;
    }
    double total = 0.0;
    for (std::uint64_t b = 0; b < subsets; ++b) {
        if ((b & target) == b) {
            total += dense[b];
        }
    }
    return total;
}

inline double pl_oracle(const BeliefStructure& m, std::uint64_t target) {
    const std::uint64_t subsets = m.frame().full_mask() + 1;
    std::vector<double> dense(subsets, 0.0);
    for (const auto& [bits, mass] : m.mass_map()) {
        dense[bits] += mass;
    }
    double total = 0.0;
    for (std::uint64_t b = 0; b < subsets; ++b) {
        if ((b & target) != 0) {
            total += dense[b];
        }
    }
    return total;
}

}  // namespace dsneg::test
