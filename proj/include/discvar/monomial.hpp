#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "discvar/errors.hpp"

namespace discvar {

// Exponent vector, one entry per ring variable.  Exponents are machine
// integers; additions are overflow-checked and abort with degree_overflow.
class monomial {
public:
    monomial() = default;
    explicit monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::int32_t exponent(int v) const { return exps_[static_cast<std::size_t>(v)]; }
    const std::vector<std::int32_t>& exponents() const { return exps_; }

    void set_exponent(int v, std::int32_t e) {
        if (e < 0) throw error("monomial: negative exponent");
        exps_[static_cast<std::size_t>(v)] = e;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_constant() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
    }

    monomial operator*(const monomial& o) const {
        monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(r.exps_[i]) + o.exps_[i];
            if (s > std::numeric_limits<std::int32_t>::max())
                throw degree_overflow("monomial exponent overflow");
            r.exps_[i] = static_cast<std::int32_t>(s);
        }
        return r;
    }

    bool divides(const monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // Requires *this | o.
    monomial divide_into(const monomial& o) const {
        monomial r(o);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
        return r;
    }

    // True when the support is contained in the given variable subset.
    bool supported_on(const std::vector<int>& vars) const {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (std::find(vars.begin(), vars.end(), static_cast<int>(i)) == vars.end())
                return false;
        }
        return true;
    }

    // Projection onto a variable subset: exponents elsewhere zeroed.
    monomial restrict_to(const std::vector<int>& vars) const {
        monomial r(exps_.size());
        for (int v : vars) r.exps_[static_cast<std::size_t>(v)] = exps_[static_cast<std::size_t>(v)];
        return r;
    }

    // x_i^k with k >= 1 and no other variable of `vars`.
    bool is_pure_power_of(int v, const std::vector<int>& vars) const {
        if (exps_[static_cast<std::size_t>(v)] == 0) return false;
        for (int w : vars)
            if (w != v && exps_[static_cast<std::size_t>(w)] != 0) return false;
        return true;
    }

    bool operator==(const monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const monomial& o) const { return exps_ != o.exps_; }
    // Storage order for term maps; not a term order.
    bool operator<(const monomial& o) const { return exps_ < o.exps_; }

private:
    std::vector<std::int32_t> exps_;
};

inline monomial lcm(const monomial& a, const monomial& b) {
    std::vector<std::int32_t> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
    return monomial(std::move(e));
}

}  // namespace discvar
