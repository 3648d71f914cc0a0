#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace glvar {

enum class OrderKind { grevlex, lex, block };

/// A term order: grevlex (default), lex, or an elimination block order
/// (first `elim` variables compared grevlex first, then the rest).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int elim = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder block(int elim_vars) { return {OrderKind::block, elim_vars}; }

    bool operator==(const MonomialOrder&) const = default;
};

/// Exponent vector with cached total degree. Arity is fixed by the ring.
struct Monomial {
    std::vector<int> e;
    long deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int arity) { return Monomial(std::vector<int>(static_cast<size_t>(arity), 0)); }

    int arity() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

bool divides(const Monomial& a, const Monomial& b);           // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);      // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Variable list with optional per-variable weights and an active term
/// order. Immutable; shared via RingPtr.
class Ring {
public:
    Ring(std::vector<std::string> vars, std::vector<long> weights = {},
         MonomialOrder order = MonomialOrder::grevlex());

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::string& var(int i) const { return vars_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& vars() const { return vars_; }
    /// -1 if the name is not a variable of this ring.
    int index_of(std::string_view name) const;
    long weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    const std::vector<long>& weights() const { return weights_; }
    const MonomialOrder& order() const { return order_; }

    long weighted_degree(const Monomial& m) const;
    /// Comparison under the ring's term order; greater = later in descending
    /// polynomial storage.
    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const;

    bool same_vars(const Ring& o) const { return vars_ == o.vars_ && weights_ == o.weights_; }

private:
    std::vector<std::string> vars_;
    std::vector<long> weights_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<long> weights = {},
                  MonomialOrder order = MonomialOrder::grevlex());
/// Same variables and weights, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

} // namespace glvar
