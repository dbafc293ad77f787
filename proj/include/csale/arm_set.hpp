// arm_set.hpp - canonical sorted sets of arm indices
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

namespace csale {

/// Arms are dense 0-based indices into the problem's reward vector.
using ArmIndex = std::size_t;

/// An immutable set of arms kept in canonical form (strictly ascending,
/// duplicate free), so equality and ordering are structural.
class ArmSet {
public:
    using const_iterator = std::vector<ArmIndex>::const_iterator;

    ArmSet() = default;
    ArmSet(std::initializer_list<ArmIndex> arms) : members_(arms) { canonicalize(); }
    explicit ArmSet(std::vector<ArmIndex> arms) : members_(std::move(arms)) { canonicalize(); }

    /// {0, 1, ..., n-1}
    static ArmSet range(std::size_t n) {
        std::vector<ArmIndex> v(n);
        std::iota(v.begin(), v.end(), ArmIndex{0});
        return from_sorted(std::move(v));
    }

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const_iterator begin() const noexcept { return members_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return members_.end(); }
    [[nodiscard]] std::span<const ArmIndex> members() const noexcept { return members_; }
    [[nodiscard]] ArmIndex max_arm() const { return members_.back(); }

    [[nodiscard]] bool contains(ArmIndex a) const noexcept {
        return std::binary_search(members_.begin(), members_.end(), a);
    }

    [[nodiscard]] bool is_subset_of(const ArmSet& other) const noexcept {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }

    [[nodiscard]] bool intersects(const ArmSet& other) const noexcept {
        auto a = members_.begin();
        auto b = other.members_.begin();
        while (a != members_.end() && b != other.members_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    [[nodiscard]] ArmSet with(ArmIndex a) const {
        if (contains(a)) return *this;
        std::vector<ArmIndex> v = members_;
        v.insert(std::upper_bound(v.begin(), v.end(), a), a);
        return from_sorted(std::move(v));
    }

    [[nodiscard]] ArmSet without(ArmIndex a) const {
        std::vector<ArmIndex> v;
        v.reserve(members_.size());
        std::copy_if(members_.begin(), members_.end(), std::back_inserter(v),
                     [a](ArmIndex x) { return x != a; });
        return from_sorted(std::move(v));
    }

    [[nodiscard]] ArmSet union_with(const ArmSet& other) const {
        std::vector<ArmIndex> v;
        v.reserve(members_.size() + other.size());
        std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end(), std::back_inserter(v));
        return from_sorted(std::move(v));
    }

    [[nodiscard]] ArmSet intersection(const ArmSet& other) const {
        std::vector<ArmIndex> v;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                              other.members_.end(), std::back_inserter(v));
        return from_sorted(std::move(v));
    }

    [[nodiscard]] ArmSet minus(const ArmSet& other) const {
        std::vector<ArmIndex> v;
        std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                            other.members_.end(), std::back_inserter(v));
        return from_sorted(std::move(v));
    }

    [[nodiscard]] ArmSet symmetric_difference(const ArmSet& other) const {
        std::vector<ArmIndex> v;
        std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(),
                                      other.members_.end(), std::back_inserter(v));
        return from_sorted(std::move(v));
    }

    friend bool operator==(const ArmSet&, const ArmSet&) = default;
    /// Lexicographic on the sorted member list.
    friend auto operator<=>(const ArmSet& a, const ArmSet& b) {
        return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                      b.members_.begin(), b.members_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const ArmSet& s) {
        os << '{';
        for (std::size_t i = 0; i < s.members_.size(); ++i) os << (i ? "," : "") << s.members_[i];
        return os << '}';
    }

private:
    static ArmSet from_sorted(std::vector<ArmIndex> v) {
        ArmSet s;
        s.members_ = std::move(v);
        return s;
    }

    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<ArmIndex> members_;
};

/// Sum of `values` over the arms of `s`; the empty set scores 0.
inline double set_reward(std::span<const double> values, const ArmSet& s) {
    double total = 0.0;
    for (ArmIndex a : s) total += values[a];
    return total;
}

}  // namespace csale
