#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsneg {

class FocalSet;

/// Frame of discernment: a fixed, ordered set of distinct state labels.
/// The position of a label defines the bit used for it in FocalSet masks.
/// Immutable; copies share the underlying label storage.
class Frame {
public:
    /// Subsets are stored in one 64-bit word.
    static constexpr std::size_t max_size = 64;

    explicit Frame(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_->size(); }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    const std::string& label(std::size_t index) const { return labels_->at(index); }
    std::optional<std::size_t> index_of(std::string_view label) const noexcept;

    /// Mask with the low size() bits set.
    std::uint64_t full_mask() const noexcept;

    FocalSet empty_set() const;
    FocalSet full_set() const;
    FocalSet singleton(std::size_t index) const;
    FocalSet subset(std::uint64_t bits) const;
    FocalSet subset(std::span<const std::string> members) const;

    friend bool operator==(const Frame& a, const Frame& b) noexcept {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }
    friend bool operator!=(const Frame& a, const Frame& b) noexcept { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Subset of a frame, encoded as a bitmask over label positions.
/// The empty set is a valid FocalSet; it only cannot carry mass.
class FocalSet {
public:
    FocalSet(Frame frame, std::uint64_t bits);

    const Frame& frame() const noexcept { return frame_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t cardinality() const noexcept {
        return static_cast<std::size_t>(std::popcount(bits_));
    }
    bool empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == frame_.full_mask(); }
    bool contains(std::size_t index) const noexcept { return (bits_ >> index) & 1u; }

    bool subset_of(const FocalSet& other) const;
    bool intersects(const FocalSet& other) const;

    /// Bits flipped within the frame's low n positions.
    FocalSet complement() const { return FocalSet(frame_, bits_ ^ frame_.full_mask()); }
    FocalSet set_union(const FocalSet& other) const;

    std::vector<std::string> member_labels() const;

    friend bool operator==(const FocalSet& a, const FocalSet& b) noexcept {
        return a.bits_ == b.bits_ && a.frame_ == b.frame_;
    }
    friend bool operator!=(const FocalSet& a, const FocalSet& b) noexcept { return !(a == b); }

private:
    Frame frame_;
    std::uint64_t bits_;
};

/// Members in frame order inside braces, e.g. "{b,c}"; "{}" for the empty set.
std::string to_string(const FocalSet& set);

std::ostream& operator<<(std::ostream& out, const FocalSet& set);

}  // namespace dsneg
