#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tlab/error.hpp"

namespace tlab {

// A subset of the ground set, one bit per element in label order.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Finite ground set X. Immutable; shared between masks and families.
// Operations that enumerate 2^X reject ground sets above the cap.
class GroundSet {
public:
    static constexpr int kDefaultCap = 24;
    static constexpr int kHardCap = 31; // masks are machine words

    explicit GroundSet(std::vector<std::string> labels, int cap = kDefaultCap);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(std::string_view label) const;
    Mask full_mask() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }
    std::uint64_t subset_count() const { return std::uint64_t{1} << size(); }

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using Ground = std::shared_ptr<const GroundSet>;

Ground make_ground(std::vector<std::string> labels, int cap = GroundSet::kDefaultCap);
// Anonymous ground {x0, x1, ...}; handy for generators and tests.
Ground make_ground(int n, int cap = GroundSet::kDefaultCap);

void check_same_ground(const Ground& a, const Ground& b);

// One element of 2^X.
struct SubsetMask {
    Ground ground;
    Mask bits = 0;

    SubsetMask(Ground g, Mask b);

    int cardinality() const { return popcount(bits); }
    bool contains(int i) const { return (bits >> i) & 1u; }
    bool subset_of(const SubsetMask& other) const;
    std::vector<std::string> member_labels() const;
};

// A finite family of subsets over one ground set. Stored deduplicated and
// sorted by (cardinality, mask value); this is the canonical order used by
// serialization.
class SetFamily {
public:
    SetFamily(Ground ground, std::vector<Mask> sets);
    static SetFamily from_labels(const Ground& ground,
                                 const std::vector<std::vector<std::string>>& sets);

    const Ground& ground() const { return ground_; }
    int ground_size() const { return ground_->size(); }
    const std::vector<Mask>& masks() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }

    bool contains(Mask m) const;
    // True iff every member of `other` is a member of this family.
    bool includes(const SetFamily& other) const;

    bool operator==(const SetFamily& other) const;

private:
    Ground ground_;
    std::vector<Mask> sets_;
};

// An up-closed family, stored implicitly by its minimal elements F0.
// Membership is decided by subset tests against F0; materialize() expands
// the family over 2^X. Both views agree on membership.
class UpperSetFamily {
public:
    const Ground& ground() const { return ground_; }
    int ground_size() const { return ground_->size(); }
    const SetFamily& minimal() const { return minimal_; }
    int ell0() const { return ell0_; }
    int ell() const { return ell_; }

    bool contains(Mask m) const;
    // Trivial means the family is all of 2^X (the empty set generates it).
    bool is_trivial() const;
    SetFamily materialize() const;
    std::uint64_t member_count() const;

    bool operator==(const UpperSetFamily& other) const { return minimal_ == other.minimal_; }

    friend UpperSetFamily up_closure(const SetFamily& family);

private:
    UpperSetFamily(Ground ground, SetFamily minimal, int ell0, int ell);

    Ground ground_;
    SetFamily minimal_;
    int ell0_;
    int ell_;
};

// <family>: the smallest up-closed family containing every generator.
UpperSetFamily up_closure(const SetFamily& family);

// F0 of an upper set.
SetFamily minimal_elements(const UpperSetFamily& upper);

// (ell0, ell) = (max cardinality over F0, max(ell0, 2)).
std::pair<int, int> ell_stats(const UpperSetFamily& upper);

// True iff `sub` is upward closed inside `ambient` under containment
// restricted to ambient's members.
bool is_upper_in(const SetFamily& sub, const SetFamily& ambient);

// The antichain of minimal members of an arbitrary family.
SetFamily antichain_reduce(const SetFamily& family);

} // namespace tlab
