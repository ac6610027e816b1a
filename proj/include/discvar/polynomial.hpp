#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "discvar/errors.hpp"
#include "discvar/monomial.hpp"
#include "discvar/order.hpp"
#include "discvar/rational.hpp"
#include "discvar/ring.hpp"

namespace discvar {

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical representation: no zero coefficients, no duplicate monomials.
// Term storage is order-agnostic; term orders are applied per operation.
class polynomial {
public:
    using term_map = std::map<monomial, rational>;

    polynomial() = default;
    explicit polynomial(ring_ptr ring) : ring_(std::move(ring)) {}

    static polynomial constant(ring_ptr ring, const rational& c) {
        polynomial p(std::move(ring));
        if (c != 0) p.terms_.emplace(monomial(p.ring_->size()), c);
        return p;
    }

    static polynomial variable(ring_ptr ring, int v) {
        polynomial p(std::move(ring));
        monomial m(p.ring_->size());
        m.set_exponent(v, 1);
        p.terms_.emplace(std::move(m), rational(1));
        return p;
    }

    static polynomial term(ring_ptr ring, const monomial& m, const rational& c) {
        polynomial p(std::move(ring));
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    static polynomial from_terms(ring_ptr ring, term_map terms) {
        polynomial p(std::move(ring));
        for (auto& [m, c] : terms)
            if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const ring_ptr& ring() const { return ring_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    rational coefficient(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? rational(0) : it->second;
    }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;  // -1 for the zero polynomial
    }

    bool involves(int v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) != 0) return true;
        return false;
    }

    bool involves_any(const std::vector<int>& vars) const {
        for (int v : vars)
            if (involves(v)) return true;
        return false;
    }

    polynomial operator+(const polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    polynomial operator-(const polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    polynomial operator-() const {
        polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    polynomial operator*(const polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        polynomial r(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    polynomial operator*(const rational& s) const {
        polynomial r(ring_);
        if (s == 0) return r;
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }

    // c * m * (*this)
    polynomial times_term(const monomial& m, const rational& c) const {
        polynomial r(ring_);
        if (c == 0) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    bool operator==(const polynomial& o) const {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }
    bool operator!=(const polynomial& o) const { return !(*this == o); }

    polynomial derivative(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= ring_->size())
            throw error("derivative: unknown variable index");
        polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            std::int32_t e = m.exponent(v);
            if (e == 0) continue;
            monomial dm(m);
            dm.set_exponent(v, e - 1);
            r.add_term(dm, c * rational(e));
        }
        return r;
    }

    // Exact value at a full rational assignment (one value per ring variable).
    rational evaluate(const std::vector<rational>& point) const {
        if (point.size() != ring_->size())
            throw error("evaluate: assignment must cover every ring variable");
        rational acc(0);
        for (const auto& [m, c] : terms_) {
            rational t = c;
            for (std::size_t v = 0; v < point.size(); ++v) {
                std::int32_t e = m.exponent(static_cast<int>(v));
                if (e != 0) t *= pow_rational(point[v], static_cast<unsigned long>(e));
            }
            acc += t;
        }
        return acc;
    }

    // GCD of the coefficient numerators over LCM of denominators; positive.
    rational content() const {
        if (terms_.empty()) return rational(0);
        mpz_class num_gcd(0), den_lcm(1);
        for (const auto& [m, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
        rational r(num_gcd, den_lcm);
        r.canonicalize();
        return r;
    }

    void add_term(const monomial& m, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    ring_ptr ring_;
    term_map terms_;
};

inline polynomial operator*(const rational& s, const polynomial& p) { return p * s; }

// The o-maximal term of a nonzero polynomial.
inline std::pair<monomial, rational> leading_term(const polynomial& p, const block_order& o) {
    if (p.is_zero()) throw error("leading_term: zero polynomial");
    require_same_ring(p.ring(), o.ring());
    auto it = p.terms().begin();
    const monomial* best = &it->first;
    const rational* coeff = &it->second;
    for (++it; it != p.terms().end(); ++it)
        if (o.greater(it->first, *best)) {
            best = &it->first;
            coeff = &it->second;
        }
    return {*best, *coeff};
}

inline monomial leading_monomial(const polynomial& p, const block_order& o) {
    return leading_term(p, o).first;
}

// Under the (X > U) elimination order: the X-projection of the leading
// monomial, and the polynomial in U collecting every term sharing that
// X-part (with the X-part divided out).
inline std::pair<monomial, polynomial> split_leading_x(const polynomial& p, const block_order& o) {
    if (p.is_zero()) throw error("split_leading_x: zero polynomial");
    const auto& ring = p.ring();
    const auto& x_vars = ring->unknown_indices();
    monomial x_part = leading_monomial(p, o).restrict_to(x_vars);
    polynomial lc_x(ring);
    for (const auto& [m, c] : p.terms())
        if (m.restrict_to(x_vars) == x_part) lc_x.add_term(x_part.divide_into(m), c);
    return {x_part, lc_x};
}

namespace detail {

// Variables inside a monomial print in ascending name order.
inline void append_monomial(std::string& out, const monomial& m, const ring_context& ring) {
    std::vector<int> vars;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m.exponent(static_cast<int>(v)) != 0) vars.push_back(static_cast<int>(v));
    std::sort(vars.begin(), vars.end(),
              [&](int a, int b) { return ring.name(a) < ring.name(b); });
    bool first = true;
    for (int v : vars) {
        if (!first) out += "*";
        first = false;
        out += ring.name(v);
        if (m.exponent(v) > 1) out += "^" + std::to_string(m.exponent(v));
    }
}

}  // namespace detail

// Deterministic text form: terms strictly descending under the given order,
// integer coefficients bare, others "num/den".
inline std::string canonical_string(const polynomial& p, const block_order& o) {
    require_same_ring(p.ring(), o.ring());
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const monomial, rational>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](const auto* a, const auto* b) { return o.greater(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const auto* t : terms) {
        rational c = t->second;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        if (t->first.is_constant()) {
            out += rational_to_string(c);
        } else {
            if (c != 1) out += rational_to_string(c) + "*";
            detail::append_monomial(out, t->first, *p.ring());
        }
    }
    return out;
}

}  // namespace discvar
