#pragma once

#include <map>
#include <vector>

#include "glvar/partition.hpp"

namespace glvar {

/// Littlewood-Richardson coefficient c^lam_{mu,nu}: the multiplicity of
/// S_lam in S_mu (x) S_nu. Computed by enumerating LR skew tableaux of
/// shape lam/mu and content nu (lattice-word condition). Zero whenever
/// |mu| + |nu| != |lam|. Symmetric in mu, nu. Memoized; the memo table
/// is safe for concurrent use.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// dim S_lam(K^n) by the hook content formula. Zero if lam has more
/// than n rows.
long long schur_dim(const Partition& lam, int n);

/// Finitely supported non-negative combination of partitions, complete
/// for sizes <= degree_bound.
struct SchurExpansion {
    std::map<Partition, long long> terms; // multiplicity > 0 only
    int degree_bound = 0;

    long long multiplicity(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? 0 : it->second;
    }
    /// Sum of mult * dim S_lam(K^n) over recorded terms.
    long long dimension(int n) const;
};

/// Degree-<=D part of Sym(V_t) as a Schur expansion, computed by
/// symmetric-function plethysm in the power-sum basis with exact
/// rational coefficients. Throws std::invalid_argument for non-pure t:
/// degree-0 generators make every graded piece infinite-dimensional.
SchurExpansion sym_decompose(const PartitionTuple& t, int degree_bound);

/// Irreducible symmetric-group character chi^lam_mu (|lam| == |mu|),
/// Murnaghan-Nakayama. Exposed for test oracles.
long long sym_group_character(const Partition& lam, const Partition& mu);

} // namespace glvar
