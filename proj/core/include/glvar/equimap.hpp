#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glvar/groebner.hpp"
#include "glvar/partition.hpp"
#include "glvar/polynomial.hpp"

namespace glvar {

/// One symmetric-power factor of an affine space: a named form-symbol of
/// weight d, standing for the single-row partition (d). Weight 0 stands
/// for the empty partition (a scalar coordinate).
struct FormSymbol {
    std::string name;
    int weight = 0;

    bool operator==(const FormSymbol&) const = default;
};

/// Equivariant morphism between products of symmetric-power spaces,
/// stored as one weighted-homogeneous polynomial per target factor in the
/// source form-symbols. Coefficients are rational constants or abstract
/// coefficient symbols (extra weight-0 variables of the body ring).
class WeightedMap {
public:
    /// Bodies live in a ring whose variables are the source symbol names
    /// followed by the coefficient symbol names; body j must be
    /// weighted-homogeneous of weight target[j].weight, enforced here.
    WeightedMap(std::vector<FormSymbol> source, std::vector<FormSymbol> target,
                std::vector<std::string> coeff_symbols, std::vector<Polynomial> bodies);

    /// Parse body texts in the ring determined by source + coefficient
    /// symbol names.
    static WeightedMap from_text(std::vector<FormSymbol> source, std::vector<FormSymbol> target,
                                 const std::vector<std::string>& bodies,
                                 std::vector<std::string> coeff_symbols = {});

    static WeightedMap identity(std::vector<FormSymbol> symbols);
    static WeightedMap zero(std::vector<FormSymbol> source, std::vector<FormSymbol> target);

    /// Default naming: weight-1 entries from x,y,z,u,v,w; weight-2 from
    /// f,g,h,p,q,r; anything else s1,s2,... in declaration order.
    static std::vector<FormSymbol> default_symbols(const PartitionTuple& t);
    static std::vector<FormSymbol> symbols_for(const PartitionTuple& t,
                                               const std::vector<std::string>& names);

    const std::vector<FormSymbol>& source_symbols() const { return source_; }
    const std::vector<FormSymbol>& target_symbols() const { return target_; }
    const std::vector<std::string>& coeff_symbols() const { return coeffs_; }
    const std::vector<Polynomial>& bodies() const { return bodies_; }
    const RingPtr& body_ring() const { return ring_; }

    PartitionTuple source_tuple() const;
    PartitionTuple target_tuple() const;
    bool has_abstract_coeffs() const { return !coeffs_.empty(); }
    bool is_zero_map() const;
    bool source_is_pure() const;

    /// Substitute rational values for all coefficient symbols.
    WeightedMap with_coeff_values(const std::vector<std::pair<std::string, Rational>>& values) const;

    std::string str() const;

private:
    std::vector<FormSymbol> source_, target_;
    std::vector<std::string> coeffs_;
    RingPtr ring_;
    std::vector<Polynomial> bodies_;
};

/// All monomials of the given weighted degree in the source symbols,
/// descending under grevlex. Requires all weights positive.
std::vector<Monomial> weighted_monomials(const std::vector<FormSymbol>& symbols, int weight);

/// The generic map src -> tgt: body j is the sum over weight-e_j source
/// monomials m of a fresh coefficient symbol times m. Returns the map and
/// the fresh symbols (named <prefix><j><k>, 1-based). Both tuples must be
/// pure and single-row.
std::pair<WeightedMap, std::vector<std::string>> generic_map(const PartitionTuple& src,
                                                             const PartitionTuple& tgt,
                                                             const std::string& prefix = "c");
std::pair<WeightedMap, std::vector<std::string>> generic_map(std::vector<FormSymbol> src,
                                                             std::vector<FormSymbol> tgt,
                                                             const std::string& prefix = "c");

/// Substitution of inner bodies into outer bodies. Requires the inner
/// target weights to match the outer source weights positionally; the
/// coefficient symbol sets must not collide.
WeightedMap compose(const WeightedMap& outer, const WeightedMap& inner);

/// Coefficient-matching ideal: one generator per (target index, source
/// monomial) where the bodies differ, in the ring of all coefficient
/// symbols of a and b. Its solutions over the closure are exactly the
/// assignments making a == b.
Ideal equate_maps(const WeightedMap& a, const WeightedMap& b);

enum class FactorVerdict { yes, no, unknown };

struct FactorResult {
    FactorVerdict verdict = FactorVerdict::unknown;
    /// Rational witness assignment for the two generic maps when found.
    std::optional<std::vector<std::pair<std::string, Rational>>> witness;
    std::optional<WeightedMap> through; // gamma: source -> mid
    std::optional<WeightedMap> onward;  // delta: mid -> target
};

/// Does f factor as delta . gamma through A^mid? Decided over the
/// algebraic closure by is_inconsistent on the coefficient-matching
/// ideal; witnesses are best-effort rational solutions. `unknown` only
/// on budget exhaustion.
FactorResult factors_through(const WeightedMap& f, const PartitionTuple& mid,
                             Budget* budget = nullptr);

enum class TypicalVerdict { typical, not_typical, unknown };

struct TypicalResult {
    TypicalVerdict verdict = TypicalVerdict::unknown;
    std::optional<PartitionTuple> witness_mid; // a proper subtuple f factors through
};

/// Typical iff f factors through no proper subtuple of its source.
/// Subtuples are enumerated ascending (deduplicated as multisets), so a
/// not_typical witness is minimal in that order.
TypicalResult is_typical(const WeightedMap& f, Budget* budget = nullptr);

/// Evaluation of f on K^n: one coordinate ring for the source (a generic
/// degree-d form in n variables per symbol), and the coefficient
/// functions of each target form.
struct LevelMap {
    int level = 0;
    RingPtr input_ring;                  // form coordinates, one block per source symbol
    std::vector<std::string> output_names;
    std::vector<Polynomial> outputs;     // polynomials in input_ring (plus coefficient symbols if abstract)
};

/// Requires rational coefficients; throws otherwise.
LevelMap instantiate(const WeightedMap& f, int level);
/// Same, but abstract coefficient symbols ride along as extra weight-0
/// variables of the input ring (used by mapping spaces).
LevelMap instantiate_generic(const WeightedMap& f, int level);

/// Coordinate name of the monomial-coefficient coordinate alpha of form
/// `sym`: sym_i for degree-1 coordinates, sym followed by the digit
/// string of alpha otherwise, bare sym for weight 0.
std::string coord_name(const std::string& sym, const std::vector<int>& alpha);

/// Coordinates of a degree-d form at level n: exponent vectors of the
/// degree-d monomials in n variables, descending under grevlex.
std::vector<std::vector<int>> form_coordinates(int degree, int level);

/// The one-parameter family (x,y,f,g,h) -> x^2*g + y^2*f - 2*x*y*h + t*(f*g - h^2),
/// i.e. t^{-1}((x^2+tf)(y^2+tg) - (xy+th)^2) with the t = 0 limit taken
/// symbolically.
WeightedMap phi_family(const Rational& t);

/// Best-effort rational point of V(I): forced linear assignments are read
/// off the reduced basis, remaining variables tried over a small
/// candidate list with consistency checks. nullopt if inconsistent or
/// the heuristic gives up.
std::optional<std::vector<std::pair<std::string, Rational>>>
solve_rational_point(const Ideal& I, Budget* budget = nullptr);

} // namespace glvar
