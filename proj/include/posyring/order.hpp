#pragma once

#include <string>
#include <vector>

#include "posyring/errors.hpp"
#include "posyring/poly.hpp"

namespace posyring {

/// Lexicographic monomial order over a declared variable sequence.
/// `variables` is ascending: variables.front() is the smallest variable and
/// variables.back() the greatest, which is compared first (see lex_compare).
/// An elimination order is obtained by appending the variables to drop.
struct MonomialOrder {
    std::vector<std::string> variables;

    std::size_t arity() const { return variables.size(); }

    static MonomialOrder standard(std::size_t n) {
        MonomialOrder o;
        o.variables.reserve(n);
        for (std::size_t i = 0; i < n; ++i) o.variables.push_back("x" + std::to_string(i + 1));
        return o;
    }

    /// Same order with one fresh greatest variable appended. The default
    /// name cannot collide with user variables (those match [A-Za-z][A-Za-z0-9]*).
    MonomialOrder with_elimination_variable(const std::string& name = "_y") const {
        MonomialOrder o = *this;
        for (const auto& v : o.variables)
            if (v == name) throw domain_error("elimination variable name already in use");
        o.variables.push_back(name);
        return o;
    }

    static int compare(const IntExponents& a, const IntExponents& b) { return lex_compare(a, b); }
    bool less(const IntExponents& a, const IntExponents& b) const { return lex_compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.variables == b.variables;
    }
};

}  // namespace posyring
