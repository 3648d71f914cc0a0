#pragma once

#include <string>
#include <vector>

#include "glvar/polynomial.hpp"

namespace glvar {

/// Finitely generated ideal; all generators share the ambient ring.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

Ideal make_ideal(RingPtr ring, std::vector<Polynomial> gens);

/// Step counter shared across a computation. Throws BudgetExhausted when
/// spent. One step = one reduction step or one critical pair.
class Budget {
public:
    explicit Budget(long long steps) : remaining_(steps) {}
    static long long default_steps(); // GLVAR_BUDGET env override
    static Budget with_default() { return Budget(default_steps()); }

    void spend(long long n = 1) {
        remaining_ -= n;
        if (remaining_ < 0)
            throw BudgetExhausted();
    }
    long long remaining() const { return remaining_; }

private:
    long long remaining_;
};

/// Reduced Groebner basis under `ord`: monic, no monomial of any element
/// divisible by another element's leading monomial, sorted ascending by
/// leading monomial. The result lives in with_order(I.ring, ord). Unique,
/// hence usable as a canonical form of the ideal.
std::vector<Polynomial> groebner(const Ideal& I, MonomialOrder ord, Budget* budget = nullptr);
std::vector<Polynomial> groebner(const Ideal& I, Budget* budget = nullptr); // ring's own order

/// Remainder of multivariate division by G (full reduction; no monomial of
/// the result is divisible by any leading monomial of G). G's ring order
/// is used; p is migrated into it.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       Budget* budget = nullptr);

/// p lies in I.
bool ideal_member(const Polynomial& p, const Ideal& I, Budget* budget = nullptr);

/// Same ideal (mutual reduced-basis equality; rings must agree by name).
bool ideal_equal(const Ideal& a, const Ideal& b, Budget* budget = nullptr);

/// Elimination ideal I ∩ K[vars \ drop], via a block order. The result
/// ring omits the dropped variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget* budget = nullptr);

/// Saturation (I : h^inf) by the extra-variable trick. h must be nonzero.
Ideal saturate(const Ideal& I, const Polynomial& h, Budget* budget = nullptr);

/// Krull dimension of V(I), computed as the maximal number of variables
/// independent modulo the leading-term ideal. -1 for the unit ideal.
long ideal_dimension(const Ideal& I, Budget* budget = nullptr);

/// Reduced basis is {1}; over an algebraically closed field this decides
/// unsolvability of the system.
bool is_inconsistent(const Ideal& I, Budget* budget = nullptr);

} // namespace glvar
