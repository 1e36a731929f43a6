#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "posyring/errors.hpp"
#include "posyring/rational.hpp"

namespace posyring {

/// Lexicographic comparison of exponent vectors. The variable sequence is
/// ascending (entry 0 is the smallest variable), so the comparison starts
/// from the back: the greatest variable decides first. This is the one
/// monomial order used everywhere; placing elimination variables last makes
/// it an elimination order.
template <class E>
int lex_compare(const std::vector<E>& a, const std::vector<E>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

struct LeadingFirst {
    template <class E>
    bool operator()(const std::vector<E>& a, const std::vector<E>& b) const {
        return lex_compare(a, b) > 0;
    }
};

/// Sparse multivariate polynomial over Q in canonical form: no zero
/// coefficients, one entry per exponent vector, terms stored leading-first.
/// The exponent entry type distinguishes the rings: int64_t for ordinary and
/// Laurent polynomials, Rational for posynomials with rational exponents.
template <class E>
class SparsePoly {
public:
    using Exponents = std::vector<E>;
    using TermMap = std::map<Exponents, Rational, LeadingFirst>;

    explicit SparsePoly(std::size_t arity = 0) : arity_(arity) {}

    static SparsePoly constant(std::size_t arity, const Rational& c) {
        SparsePoly p(arity);
        p.add_term(Exponents(arity, E{}), c);
        return p;
    }

    static SparsePoly monomial(std::size_t arity, Exponents e, const Rational& c) {
        SparsePoly p(arity);
        if (e.size() != arity) throw arity_mismatch("monomial exponent vector has wrong length");
        p.add_term(std::move(e), c);
        return p;
    }

    /// Variable with index `i` (0-based in the declared ascending sequence).
    static SparsePoly variable(std::size_t arity, std::size_t i) {
        Exponents e(arity, E{});
        e.at(i) = E{} + 1;
        return monomial(arity, std::move(e), Rational(1));
    }

    static SparsePoly from_terms(std::size_t arity,
                                 std::vector<std::pair<Exponents, Rational>> terms) {
        SparsePoly p(arity);
        for (auto& [e, c] : terms) {
            if (e.size() != arity) throw arity_mismatch("term exponent vector has wrong length");
            p.add_term(std::move(e), c);
        }
        return p;
    }

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const std::pair<const Exponents, Rational>& leading() const {
        if (is_zero()) throw domain_error("leading term of the zero polynomial");
        return *terms_.begin();
    }
    const Exponents& leading_exponents() const { return leading().first; }
    const Rational& leading_coefficient() const { return leading().second; }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulate c * x^e, dropping the entry if the sum cancels.
    SparsePoly& add_term(Exponents e, const Rational& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    SparsePoly operator-() const {
        SparsePoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        check_same_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check_same_arity(b);
        SparsePoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    /// Multiply by the single term c * x^e.
    SparsePoly times_term(const Exponents& e, const Rational& c) const {
        SparsePoly r(arity_);
        if (c.is_zero()) return r;
        if (e.size() != arity_) throw arity_mismatch("term exponent vector has wrong length");
        for (const auto& [ea, ca] : terms_) {
            Exponents shifted = ea;
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += e[i];
            r.terms_.emplace(std::move(shifted), ca * c);
        }
        return r;
    }

    SparsePoly& scale(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coeff] : terms_) coeff *= c;
        return *this;
    }

    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a.scale(c); }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a.scale(c); }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

private:
    void check_same_arity(const SparsePoly& o) const {
        if (arity_ != o.arity_) throw arity_mismatch("operands live in rings of different arity");
    }

    TermMap terms_;
    std::size_t arity_;
};

/// Integer exponents: ordinary polynomials (entries >= 0) and Laurent
/// polynomials (any sign) share this representation.
using Polynomial = SparsePoly<std::int64_t>;
using IntExponents = Polynomial::Exponents;

/// Rational exponents.
using Posynomial = SparsePoly<Rational>;
using RatExponents = Posynomial::Exponents;

inline bool has_integer_exponents(const Posynomial& f) {
    for (const auto& [e, c] : f.terms())
        for (const auto& x : e)
            if (!x.is_integer()) return false;
    return true;
}

inline bool has_nonnegative_exponents(const Polynomial& f) {
    for (const auto& [e, c] : f.terms())
        for (auto x : e)
            if (x < 0) return false;
    return true;
}

inline Posynomial to_posynomial(const Polynomial& f) {
    Posynomial r(f.arity());
    for (const auto& [e, c] : f.terms()) {
        RatExponents re;
        re.reserve(e.size());
        for (auto x : e) re.emplace_back(static_cast<long>(x));
        r.add_term(std::move(re), c);
    }
    return r;
}

/// Narrow a posynomial with integer exponents to the int64 representation.
/// Throws domain_error if an exponent is fractional or out of range.
inline Polynomial to_integer_exponents(const Posynomial& f) {
    Polynomial r(f.arity());
    for (const auto& [e, c] : f.terms()) {
        IntExponents ie;
        ie.reserve(e.size());
        for (const auto& x : e) ie.push_back(x.to_int64());
        r.add_term(std::move(ie), c);
    }
    return r;
}

}  // namespace posyring
