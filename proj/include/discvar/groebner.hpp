#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "discvar/polynomial.hpp"

namespace discvar {

struct groebner_basis {
    std::vector<polynomial> elements;
    block_order order;
    bool reduced = false;

    bool is_zero_ideal() const { return elements.empty(); }
    bool is_unit_ideal() const {
        return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
    }
};

// Number of Buchberger runs so far; lets tests observe short-circuits.
inline std::atomic<std::uint64_t> buchberger_call_count{0};

// Quotients aligned with the divisor list: f = sum q_i g_i + remainder.
struct division_trace {
    std::vector<polynomial> quotients;
};

inline polynomial normal_form(const polynomial& f, const std::vector<polynomial>& divisors,
                              const block_order& o, division_trace* trace = nullptr) {
    if (trace) trace->quotients.assign(divisors.size(), polynomial(f.ring()));
    struct divisor_info {
        const polynomial* g;
        monomial lm;
        rational lc;
        std::size_t index;
    };
    std::vector<divisor_info> ds;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const polynomial& g = divisors[i];
        if (g.is_zero()) continue;
        require_same_ring(f.ring(), g.ring());
        auto [lm, lc] = leading_term(g, o);
        ds.push_back({&g, std::move(lm), std::move(lc), i});
    }
    polynomial h = f;
    polynomial r(f.ring());
    while (!h.is_zero()) {
        auto [hm, hc] = leading_term(h, o);
        bool reduced_step = false;
        for (const auto& d : ds) {
            if (!d.lm.divides(hm)) continue;
            monomial q = d.lm.divide_into(hm);
            rational c = hc / d.lc;
            h = h - d.g->times_term(q, c);
            if (trace) trace->quotients[d.index].add_term(q, c);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            r.add_term(hm, hc);
            h = h - polynomial::term(f.ring(), hm, hc);
        }
    }
    return r;
}

inline polynomial normal_form(const polynomial& f, const groebner_basis& basis,
                              division_trace* trace = nullptr) {
    return normal_form(f, basis.elements, basis.order, trace);
}

inline polynomial s_polynomial(const polynomial& f, const polynomial& g, const block_order& o) {
    if (f.is_zero() || g.is_zero()) throw error("s_polynomial: zero input");
    auto [mf, cf] = leading_term(f, o);
    auto [mg, cg] = leading_term(g, o);
    monomial l = lcm(mf, mg);
    return f.times_term(mf.divide_into(l), rational(1) / cf) -
           g.times_term(mg.divide_into(l), rational(1) / cg);
}

namespace detail {

// Primitive with positive leading coefficient; the canonical scalar multiple.
inline polynomial normalize_generator(const polynomial& p, const block_order& o) {
    if (p.is_zero()) return p;
    rational c = p.content();
    polynomial q = p * (rational(1) / c);
    if (leading_term(q, o).second < 0) q = -q;
    return q;
}

inline bool poly_less(const polynomial& a, const polynomial& b, const block_order& o) {
    auto cmp = o.compare(leading_monomial(a, o), leading_monomial(b, o));
    if (cmp != ordering::equal) return cmp == ordering::less;
    return a.terms() < b.terms();
}

}  // namespace detail

// Buchberger's algorithm with the normal (smallest-lcm-first) selection
// strategy and the coprime-leading-monomial criterion; the chain criterion
// is optional.  Output is the reduced Groebner basis: monic, auto-reduced,
// sorted ascending by leading monomial.  The zero ideal yields an empty
// basis, the unit ideal the single element 1.
inline groebner_basis buchberger(const std::vector<polynomial>& generators, const block_order& o,
                                 bool chain_criterion = false) {
    buchberger_call_count.fetch_add(1, std::memory_order_relaxed);

    std::vector<polynomial> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        require_same_ring(g.ring(), o.ring());
        polynomial n = detail::normalize_generator(g, o);
        bool dup = false;
        for (const auto& h : basis)
            if (h == n) {
                dup = true;
                break;
            }
        if (!dup) basis.push_back(std::move(n));
    }
    if (basis.empty()) return {{}, o, true};
    std::sort(basis.begin(), basis.end(),
              [&](const polynomial& a, const polynomial& b) { return detail::poly_less(a, b, o); });

    std::vector<monomial> lms;
    for (const auto& g : basis) lms.push_back(leading_monomial(g, o));

    using pair_t = std::pair<std::size_t, std::size_t>;
    std::vector<pair_t> queue;
    std::set<pair_t> treated;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);

    auto pop_smallest = [&]() {
        std::size_t best = 0;
        monomial best_lcm = lcm(lms[queue[0].first], lms[queue[0].second]);
        for (std::size_t k = 1; k < queue.size(); ++k) {
            monomial l = lcm(lms[queue[k].first], lms[queue[k].second]);
            if (o.less(l, best_lcm) ||
                (o.compare(l, best_lcm) == ordering::equal && queue[k] < queue[best])) {
                best = k;
                best_lcm = std::move(l);
            }
        }
        pair_t p = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    };

    while (!queue.empty()) {
        auto [i, j] = pop_smallest();
        treated.insert({i, j});
        monomial l = lcm(lms[i], lms[j]);
        // Coprime leading monomials: the S-polynomial always reduces to zero.
        if (l == lms[i] * lms[j]) continue;
        if (chain_criterion) {
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == i || k == j || !lms[k].divides(l)) continue;
                pair_t ik{std::min(i, k), std::max(i, k)};
                pair_t jk{std::min(j, k), std::max(j, k)};
                if (treated.count(ik) && treated.count(jk)) skip = true;
            }
            if (skip) continue;
        }
        polynomial s = s_polynomial(basis[i], basis[j], o);
        polynomial r = normal_form(s, basis, o);
        if (r.is_zero()) continue;
        r = detail::normalize_generator(r, o);
        std::size_t n = basis.size();
        basis.push_back(std::move(r));
        lms.push_back(leading_monomial(basis.back(), o));
        for (std::size_t k = 0; k < n; ++k) queue.emplace_back(k, n);
    }

    // Minimalize: drop elements whose leading monomial another element divides.
    std::vector<polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) drop = true;
        }
        if (!drop) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            polynomial r = normal_form(minimal[i], others, o);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (!(r == minimal[i])) {
                minimal[i] = detail::normalize_generator(r, o);
                changed = true;
            }
        }
    }

    for (auto& g : minimal) {
        rational lc = leading_term(g, o).second;
        if (lc != 1) g = g * (rational(1) / lc);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const polynomial& a, const polynomial& b) { return detail::poly_less(a, b, o); });

    for (const auto& g : minimal)
        if (g.is_constant())
            return {{polynomial::constant(o.ring(), rational(1))}, o, true};

    return {std::move(minimal), o, true};
}

inline bool is_member(const polynomial& f, const groebner_basis& basis) {
    return normal_form(f, basis).is_zero();
}

}  // namespace discvar
