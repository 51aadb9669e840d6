#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "netinfer/error.hpp"

namespace netinfer {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Dense subset of {0, ..., universe-1}. Iteration is always in ascending id order.
template <class Tag>
class IdSet {
public:
    using value_type = std::uint32_t;

    IdSet() = default;
    explicit IdSet(std::size_t universe) : bits_(universe, 0) {}
    IdSet(std::size_t universe, std::initializer_list<value_type> ids) : IdSet(universe) {
        for (auto id : ids)
            insert(id);
    }

    static IdSet from_ids(std::size_t universe, std::span<const value_type> ids) {
        IdSet s(universe);
        for (auto id : ids)
            s.insert(id);
        return s;
    }

    static IdSet full(std::size_t universe) {
        IdSet s(universe);
        std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
        s.count_ = universe;
        return s;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(value_type id) const noexcept { return id < bits_.size() && bits_[id] != 0; }

    /// Returns true when the id was not already present.
    bool insert(value_type id) {
        check(id);
        if (bits_[id])
            return false;
        bits_[id] = 1;
        ++count_;
        return true;
    }

    bool erase(value_type id) {
        check(id);
        if (!bits_[id])
            return false;
        bits_[id] = 0;
        --count_;
        return true;
    }

    void clear() noexcept {
        std::fill(bits_.begin(), bits_.end(), std::uint8_t{0});
        count_ = 0;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i])
                fn(static_cast<value_type>(i));
    }

    std::vector<value_type> ids() const {
        std::vector<value_type> out;
        out.reserve(count_);
        for_each([&](value_type id) { out.push_back(id); });
        return out;
    }

    bool is_subset_of(const IdSet& other) const noexcept {
        if (count_ > other.count_)
            return false;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.contains(static_cast<value_type>(i)))
                return false;
        return true;
    }

    friend bool operator==(const IdSet& a, const IdSet& b) noexcept {
        return a.count_ == b.count_ && a.bits_ == b.bits_;
    }

    friend std::size_t intersection_size(const IdSet& a, const IdSet& b) noexcept {
        std::size_t n = 0;
        a.for_each([&](value_type id) { n += b.contains(id) ? 1 : 0; });
        return n;
    }

private:
    void check(value_type id) const {
        if (id >= bits_.size())
            throw Error(Errc::BadIndex, "id " + std::to_string(id) + " outside universe of size "
                                            + std::to_string(bits_.size()));
    }

    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

struct EdgeTag;
struct NodeTag;
using EdgeSet = IdSet<EdgeTag>;
using NodeSet = IdSet<NodeTag>;

} // namespace netinfer
