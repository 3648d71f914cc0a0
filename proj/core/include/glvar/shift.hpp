#pragma once

#include "glvar/partition.hpp"

namespace glvar {

/// The tuple sh_n(t) with S_lam(K^n + V) decomposed entrywise: each entry
/// lam contributes every nu with multiplicity sum_mu c^lam_{mu,nu} * dim S_mu(K^n).
/// Always contains t (the mu = empty contribution).
PartitionTuple shift_tuple(int n, const PartitionTuple& t);

/// sh_{n,0}(t) = sh_n(t) minus one copy of t (multiset difference). Every
/// entry has size strictly smaller than the entry it came from.
PartitionTuple shift_complement(int n, const PartitionTuple& t);

} // namespace glvar
