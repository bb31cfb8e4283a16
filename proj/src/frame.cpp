#include "dsneg/frame.hpp"

#include <ostream>
#include <unordered_set>

#include "dsneg/errors.hpp"

namespace dsneg {

Frame::Frame(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw ValidationError("frame needs at least one label");
    }
    if (labels.size() > max_size) {
        throw ValidationError("frame exceeds " + std::to_string(max_size) + " labels");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (label.empty()) {
            throw ValidationError("frame labels must be non-empty");
        }
        if (!seen.insert(label).second) {
            throw ValidationError("duplicate frame label \"" + label + "\"");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const noexcept {
    for (std::size_t i = 0; i < labels_->size(); ++i) {
        if ((*labels_)[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::uint64_t Frame::full_mask() const noexcept {
    const std::size_t n = labels_->size();
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

FocalSet Frame::empty_set() const { return FocalSet(*this, 0); }

FocalSet Frame::full_set() const { return FocalSet(*this, full_mask()); }

FocalSet Frame::singleton(std::size_t index) const {
    if (index >= size()) {
        throw ValidationError("singleton index out of range");
    }
    return FocalSet(*this, std::uint64_t{1} << index);
}

FocalSet Frame::subset(std::uint64_t bits) const { return FocalSet(*this, bits); }

FocalSet Frame::subset(std::span<const std::string> members) const {
    std::uint64_t bits = 0;
    for (const auto& member : members) {
        auto index = index_of(member);
        if (!index) {
            throw ValidationError("unknown label \"" + member + "\"");
        }
        bits |= std::uint64_t{1} << *index;
    }
    return FocalSet(*this, bits);
}

FocalSet::FocalSet(Frame frame, std::uint64_t bits) : frame_(std::move(frame)), bits_(bits) {
    if (bits & ~frame_.full_mask()) {
        throw ValidationError("subset bits outside the frame");
    }
}

namespace {

void require_same_frame(const FocalSet& a, const FocalSet& b) {
    if (a.frame() != b.frame()) {
        throw FrameMismatchError("sets belong to different frames");
    }
}

}  // namespace

bool FocalSet::subset_of(const FocalSet& other) const {
    require_same_frame(*this, other);
    return (bits_ & other.bits_) == bits_;
}

bool FocalSet::intersects(const FocalSet& other) const {
    require_same_frame(*this, other);
    return (bits_ & other.bits_) != 0;
}

FocalSet FocalSet::set_union(const FocalSet& other) const {
    require_same_frame(*this, other);
    return FocalSet(frame_, bits_ | other.bits_);
}

std::vector<std::string> FocalSet::member_labels() const {
    std::vector<std::string> members;
    members.reserve(cardinality());
    for (std::size_t i = 0; i < frame_.size(); ++i) {
        if (contains(i)) {
            members.push_back(frame_.label(i));
        }
    }
    return members;
}

std::string to_string(const FocalSet& set) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < set.frame().size(); ++i) {
        if (set.contains(i)) {
            if (!first) {
                out += ',';
            }
            out += set.frame().label(i);
            first = false;
        }
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& out, const FocalSet& set) {
    return out << to_string(set);
}

}  // namespace dsneg
