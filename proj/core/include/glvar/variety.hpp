#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glvar/equimap.hpp"
#include "glvar/groebner.hpp"
#include "glvar/partition.hpp"

namespace glvar {

/// A level n together with an ideal in the coordinate ring of the
/// evaluation on K^n. The zero ideal is the ambient space itself.
struct FiniteLevelVariety {
    PartitionTuple tuple;
    int level = 0;
    Ideal ideal;
};

/// A rule producing the ideal of X{K^n} for every level n. Built-ins:
/// ambient spaces, the origin, orbit-instantiated bilinear generators,
/// minors of a symmetric matrix, and images of weighted maps; every
/// family can additionally carry a shift offset (Sh_n(X){K^d} = X{K^{n+d}}
/// with the first n slots of each form relabeled).
class LevelFamily {
public:
    static LevelFamily ambient(std::vector<FormSymbol> symbols);
    /// The origin: ideal of all coordinates.
    static LevelFamily point(std::vector<FormSymbol> symbols);
    /// Generator templates over degree-1 forms, instantiated for every
    /// assignment of the index letters to 1..n (e.g. "x_i*y_j - x_j*y_i"
    /// with letters {i, j}).
    static LevelFamily orbit(std::vector<FormSymbol> symbols,
                             std::vector<std::string> generator_templates,
                             std::vector<std::string> index_letters);
    /// Rank-<=r stratum of A^{(2)}: (r+1)-minors of the polarization
    /// matrix of the quadratic form.
    static LevelFamily minors(int r, std::string symbol = "u");
    static LevelFamily map_image(WeightedMap f);

    /// The rank-<=1 locus in A^{[(1),(1)]} of the extended example.
    static LevelFamily rank_one_pair();

    FiniteLevelVariety at_level(int level, Budget* budget = nullptr) const;
    /// Tuple of the ambient space (shift applied).
    PartitionTuple tuple() const;
    /// Form symbols of the unshifted core.
    const std::vector<FormSymbol>& symbols() const;
    int shift_offset() const { return shift_n_; }
    std::string describe() const;

    /// Names assigned, in order, to the distinguished (shifted-slot)
    /// coordinates; defaults are derived from the form name.
    LevelFamily shifted(int n, std::vector<std::string> shift_names = {}) const;

private:
    LevelFamily() = default;

    enum class Kind { ambient, point, orbit, minors, map_image };
    Kind kind_ = Kind::ambient;
    std::vector<FormSymbol> symbols_;
    std::vector<std::string> templates_;
    std::vector<std::string> letters_;
    int minors_rank_ = 0;
    std::shared_ptr<WeightedMap> map_;
    int shift_n_ = 0;
    std::vector<std::string> shift_names_;

    Ideal core_ideal(int level, Budget* budget) const;
};

/// Sh_n at the family level.
LevelFamily shift_level(const LevelFamily& X, int n, std::vector<std::string> shift_names = {});

/// Dimension function delta_X(d) = dim X{K^d}.
long long delta(const LevelFamily& X, int d, Budget* budget = nullptr);

struct DeltaFit {
    std::vector<Rational> coefficients; // low to high degree in d
    int degree = 0;
    bool degree_ok = false; // degree <= deg(tuple)
    bool agrees = false;    // every test level matches the fit
    std::vector<std::tuple<int, Rational, long long>> checks; // (d, predicted, actual)

    Rational eval(int d) const;
    std::string poly_str() const; // in the variable d
};

/// Lagrange-interpolate delta on fit_range and verify on test_range.
DeltaFit fit_delta(const LevelFamily& X, const std::vector<int>& fit_range,
                   const std::vector<int>& test_range, Budget* budget = nullptr);

/// Closed image of the evaluation of f on K^n: graph ideal with the
/// input coordinates (and any abstract coefficients) eliminated.
FiniteLevelVariety image_closure_level(const WeightedMap& f, int n, Budget* budget = nullptr);

enum class Membership { member, closure_only, non_member };

struct MembershipResult {
    Membership status = Membership::non_member;
    /// Rational preimage when the heuristic solver finds one.
    std::optional<std::vector<std::pair<std::string, Rational>>> witness;
};

/// Member iff the fiber system is consistent over the closure;
/// closure_only iff not a member but the point satisfies the closed-image
/// generators. Throws on wrong coordinate count.
MembershipResult image_membership(const WeightedMap& f, const std::vector<Rational>& point,
                                  int n, Budget* budget = nullptr);

struct MappingSpaceResult {
    Ideal ideal; // in the coefficient symbols, level-N conditions
    std::vector<std::string> symbols;
    int level = 0;
    bool stabilized = false; // levels N and N+1 give equal ideals
};

/// Equations on a generic map A^lam -> ambient(X) forcing it to land in
/// X at the given level; recomputed at level+1 for the stabilization flag.
MappingSpaceResult mapping_space(const PartitionTuple& lam, const LevelFamily& X, int level,
                                 Budget* budget = nullptr);

/// Rank-<=r stratum of A^{(2)} at level n.
FiniteLevelVariety minors_stratum(int r, int n);

} // namespace glvar
