#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "discvar/groebner.hpp"

namespace discvar {

// Finitely generated ideal with a per-order cache of reduced Groebner bases.
// Generators are immutable; cache population is the only mutation and is
// mutex-guarded, so shared ideals are safe to query concurrently.
class ideal {
public:
    ideal() : cache_(std::make_shared<cache_t>()) {}
    ideal(ring_ptr ring, std::vector<polynomial> generators)
        : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<cache_t>()) {
        for (const auto& g : gens_) require_same_ring(ring_, g.ring());
    }

    const ring_ptr& ring() const { return ring_; }
    const std::vector<polynomial>& generators() const { return gens_; }

    groebner_basis basis(const block_order& o) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        for (const auto& [order, gb] : cache_->entries)
            if (order == o) return gb;
        groebner_basis gb = buchberger(gens_, o);
        cache_->entries.emplace_back(o, gb);
        return gb;
    }

    // Install a basis known to be reduced for the given order.
    void seed_basis(groebner_basis gb) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        for (const auto& [order, existing] : cache_->entries)
            if (order == gb.order) return;
        cache_->entries.emplace_back(gb.order, std::move(gb));
    }

private:
    struct cache_t {
        std::mutex mu;
        std::vector<std::pair<block_order, groebner_basis>> entries;
    };

    ring_ptr ring_;
    std::vector<polynomial> gens_;
    std::shared_ptr<cache_t> cache_;
};

namespace detail {

// Append a fresh variable (tagged unknown) to the ring.
inline ring_ptr extend_ring(const ring_ptr& ring, const std::string& fresh_name) {
    std::vector<std::string> names = ring->names();
    std::vector<var_kind> kinds;
    for (std::size_t i = 0; i < ring->size(); ++i) kinds.push_back(ring->kind(static_cast<int>(i)));
    names.push_back(fresh_name);
    kinds.push_back(var_kind::unknown);
    return make_ring(std::move(names), std::move(kinds));
}

// Same variables plus trailing fresh ones: exponents carry over by index.
inline polynomial lift_to(const ring_ptr& target, const polynomial& p) {
    polynomial::term_map terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::int32_t> e = m.exponents();
        e.resize(target->size(), 0);
        terms.emplace(monomial(std::move(e)), c);
    }
    return polynomial::from_terms(target, std::move(terms));
}

// Drop trailing fresh variables; every dropped exponent must be zero.
inline polynomial project_from(const ring_ptr& target, const polynomial& p) {
    polynomial::term_map terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::int32_t> e = m.exponents();
        for (std::size_t i = target->size(); i < e.size(); ++i)
            if (e[i] != 0) throw error("project_from: polynomial involves a fresh variable");
        e.resize(target->size());
        terms.emplace(monomial(std::move(e)), c);
    }
    return polynomial::from_terms(target, std::move(terms));
}

}  // namespace detail

// The subset of a reduced basis free of the dropped variables.  Requires an
// elimination order whose first block is exactly the dropped set; the result
// is then a reduced Groebner basis of the elimination ideal.
inline std::vector<polynomial> eliminate(const groebner_basis& basis, const std::vector<int>& drop) {
    if (!basis.reduced) throw error("eliminate: basis must be reduced");
    std::vector<int> first = basis.order.blocks().empty() ? std::vector<int>{} : basis.order.blocks().front();
    std::vector<int> a = first, b = drop;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw error("eliminate: dropped variables must form the order's first block");
    std::vector<polynomial> kept;
    for (const auto& g : basis.elements)
        if (!g.involves_any(drop)) kept.push_back(g);
    return kept;
}

// <E> : f^inf via the Rabinowitsch trick: adjoin t in a dominant block,
// run Buchberger on E u {1 - t*f}, and eliminate t.  The returned ideal's
// generators are the reduced (X > U) basis of the saturation.
inline ideal saturate(const std::vector<polynomial>& equalities, const polynomial& f) {
    if (f.is_zero()) throw error("saturate: zero polynomial");
    if (equalities.empty()) throw error("saturate: empty generator list");
    ring_ptr ring = equalities.front().ring();
    require_same_ring(ring, f.ring());

    ring_ptr ext = detail::extend_ring(ring, "_t");
    int t = static_cast<int>(ext->size()) - 1;
    block_order base = elimination_order_x(ring);
    block_order ext_order = prepend_block(ext, {t}, base);

    std::vector<polynomial> gens;
    for (const auto& e : equalities) gens.push_back(detail::lift_to(ext, e));
    polynomial tf = polynomial::variable(ext, t) * detail::lift_to(ext, f);
    gens.push_back(polynomial::constant(ext, rational(1)) - tf);

    groebner_basis gb = buchberger(gens, ext_order);
    std::vector<polynomial> kept = eliminate(gb, {t});
    std::vector<polynomial> result;
    for (const auto& g : kept) result.push_back(detail::project_from(ring, g));

    ideal out(ring, result);
    out.seed_basis(groebner_basis{result, base, true});
    return out;
}

// Krull dimension of the quotient, via the combinatorial rule: the largest
// variable subset S (within ring_vars) such that no leading monomial of the
// basis is supported entirely on S.  Unit ideal reports -1 ("empty"); the
// zero ideal reports the full variable count.
inline int dimension(const groebner_basis& basis, const std::vector<int>& ring_vars) {
    if (!basis.reduced) throw error("dimension: basis must be reduced");
    if (basis.is_unit_ideal()) return -1;
    std::vector<monomial> lms;
    for (const auto& g : basis.elements) {
        monomial lm = leading_monomial(g, basis.order);
        if (!lm.supported_on(ring_vars))
            throw error("dimension: basis element outside the stated subring");
        lms.push_back(std::move(lm));
    }
    int n = static_cast<int>(ring_vars.size());
    if (n > 24) throw guard_exceeded("dimension: variable count exceeds the subset-enumeration guard");
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(ring_vars[static_cast<std::size_t>(i)]);
        bool independent = true;
        for (const auto& lm : lms)
            if (lm.supported_on(subset)) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, static_cast<int>(subset.size()));
    }
    return best;
}

// Rows follow the generator list, columns the chosen variable subset.
struct jacobian_matrix {
    std::vector<polynomial> generators;
    std::vector<int> columns;
    std::vector<std::vector<polynomial>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return columns.size(); }
};

inline jacobian_matrix jacobian(const std::vector<polynomial>& generators,
                                const std::vector<int>& variables) {
    if (variables.empty()) throw error("jacobian: empty variable subset");
    jacobian_matrix m;
    m.generators = generators;
    m.columns = variables;
    for (const auto& g : generators) {
        std::vector<polynomial> row;
        for (int v : variables) row.push_back(g.derivative(v));
        m.entries.push_back(std::move(row));
    }
    return m;
}

namespace detail {

inline polynomial determinant(const std::vector<std::vector<polynomial>>& m, const ring_ptr& ring) {
    std::size_t n = m.size();
    if (n == 0) return polynomial::constant(ring, rational(1));
    if (n == 1) return m[0][0];
    polynomial det(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (!m[0][c].is_zero()) {
            std::vector<std::vector<polynomial>> sub;
            for (std::size_t r = 1; r < n; ++r) {
                std::vector<polynomial> row;
                for (std::size_t cc = 0; cc < n; ++cc)
                    if (cc != c) row.push_back(m[r][cc]);
                sub.push_back(std::move(row));
            }
            polynomial cof = m[0][c] * determinant(sub, ring);
            det = sign > 0 ? det + cof : det - cof;
        }
        sign = -sign;
    }
    return det;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& scratch,
                         std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (scratch.size() == k) {
        emit(scratch);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        scratch.push_back(i);
        combinations(n, k, scratch, i + 1, emit);
        scratch.pop_back();
    }
}

}  // namespace detail

// Ideal of all k x k minors (determinants by cofactor expansion).
// Convention: k <= 0 or k beyond the matrix size yields the unit ideal,
// i.e. an empty critical locus.
inline ideal minors_ideal(const jacobian_matrix& m, int k, const ring_ptr& ring) {
    if (k <= 0 || static_cast<std::size_t>(k) > std::min(m.rows(), m.cols()))
        return ideal(ring, {polynomial::constant(ring, rational(1))});
    std::vector<polynomial> minors;
    std::vector<std::size_t> rows_scratch, cols_scratch;
    detail::combinations(m.rows(), static_cast<std::size_t>(k), rows_scratch, 0,
                         [&](const std::vector<std::size_t>& rows) {
                             detail::combinations(m.cols(), static_cast<std::size_t>(k), cols_scratch, 0,
                                                  [&](const std::vector<std::size_t>& cols) {
                                                      std::vector<std::vector<polynomial>> sub;
                                                      for (std::size_t r : rows) {
                                                          std::vector<polynomial> row;
                                                          for (std::size_t c : cols)
                                                              row.push_back(m.entries[r][c]);
                                                          sub.push_back(std::move(row));
                                                      }
                                                      minors.push_back(detail::determinant(sub, ring));
                                                  });
                         });
    return ideal(ring, std::move(minors));
}

// True iff every generator of b lies in a (zero normal form against a's basis).
inline bool ideal_contains(const ideal& a, const ideal& b, const block_order& o) {
    require_same_ring(a.ring(), b.ring());
    groebner_basis gb = a.basis(o);
    for (const auto& g : b.generators())
        if (!normal_form(g, gb).is_zero()) return false;
    return true;
}

// a n b via a fresh tag variable: <t*a, (1-t)*b> n Q[original ring].
inline ideal ideal_intersect(const ideal& a, const ideal& b, const block_order& base) {
    require_same_ring(a.ring(), b.ring());
    ring_ptr ring = a.ring();
    // The zero ideal intersects to itself (its variety is everything).
    if (a.generators().empty()) return a;
    if (b.generators().empty()) return b;

    ring_ptr ext = detail::extend_ring(ring, "_s");
    int t = static_cast<int>(ext->size()) - 1;
    block_order ext_order = prepend_block(ext, {t}, base);
    polynomial tv = polynomial::variable(ext, t);
    polynomial one_minus_t = polynomial::constant(ext, rational(1)) - tv;

    std::vector<polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(tv * detail::lift_to(ext, g));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * detail::lift_to(ext, g));

    groebner_basis gb = buchberger(gens, ext_order);
    std::vector<polynomial> kept = eliminate(gb, {t});
    std::vector<polynomial> result;
    for (const auto& g : kept) result.push_back(detail::project_from(ring, g));

    ideal out(ring, result);
    out.seed_basis(groebner_basis{result, base, true});
    return out;
}

}  // namespace discvar
