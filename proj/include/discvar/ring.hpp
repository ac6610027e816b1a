#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "discvar/errors.hpp"

namespace discvar {

enum class var_kind { parameter, unknown };

// Immutable ring context: the ordered variable list and the U/X partition.
// Declaration order is preserved end-to-end; it fixes the within-block
// variable sequence of every term order built on top.
class ring_context {
public:
    ring_context(std::vector<std::string> names, std::vector<var_kind> kinds)
        : names_(std::move(names)), kinds_(std::move(kinds)) {
        if (names_.size() != kinds_.size())
            throw error("ring_context: name/kind length mismatch");
        std::set<std::string> seen;
        for (const auto& n : names_)
            if (!seen.insert(n).second)
                throw error("ring_context: duplicate variable name '" + n + "'");
        for (std::size_t i = 0; i < names_.size(); ++i)
            (kinds_[i] == var_kind::parameter ? params_ : unknowns_).push_back(static_cast<int>(i));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    var_kind kind(int i) const { return kinds_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    // Indices of U (parameters) and X (unknowns), in declaration order.
    const std::vector<int>& parameter_indices() const { return params_; }
    const std::vector<int>& unknown_indices() const { return unknowns_; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const ring_context& o) const {
        return names_ == o.names_ && kinds_ == o.kinds_;
    }
    bool operator!=(const ring_context& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::vector<var_kind> kinds_;
    std::vector<int> params_;
    std::vector<int> unknowns_;
};

using ring_ptr = std::shared_ptr<const ring_context>;

inline ring_ptr make_ring(std::vector<std::string> names, std::vector<var_kind> kinds) {
    return std::make_shared<const ring_context>(std::move(names), std::move(kinds));
}

// Parameters first, then unknowns, each list in the given order.
inline ring_ptr make_ring(const std::vector<std::string>& parameters,
                          const std::vector<std::string>& unknowns) {
    std::vector<std::string> names;
    std::vector<var_kind> kinds;
    for (const auto& p : parameters) {
        names.push_back(p);
        kinds.push_back(var_kind::parameter);
    }
    for (const auto& x : unknowns) {
        names.push_back(x);
        kinds.push_back(var_kind::unknown);
    }
    return make_ring(std::move(names), std::move(kinds));
}

inline bool same_ring(const ring_ptr& a, const ring_ptr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const ring_ptr& a, const ring_ptr& b) {
    if (!same_ring(a, b)) throw ring_mismatch("operands belong to different rings");
}

}  // namespace discvar
