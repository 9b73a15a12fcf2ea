#pragma once

#include <string>

#include "cardinal/errors.hpp"

namespace cardinal {

// Indeterminate tags. Constants carry `none`, which unifies with anything;
// mixing two distinct named symbols in one arithmetic expression is a bug
// (omega-polynomials must never leak into rho-land) and throws.
enum class Sym { none, omega, rho, phi, w, t };

inline const char* sym_name(Sym s) {
    switch (s) {
        case Sym::none: return "_";
        case Sym::omega: return "omega";
        case Sym::rho: return "rho";
        case Sym::phi: return "phi";
        case Sym::w: return "w";
        case Sym::t: return "t";
    }
    return "?";
}

inline Sym unify(Sym a, Sym b) {
    if (a == Sym::none) return b;
    if (b == Sym::none || a == b) return a;
    throw DomainError(std::string("mixed indeterminates: ") + sym_name(a) + " vs " + sym_name(b));
}

} // namespace cardinal
