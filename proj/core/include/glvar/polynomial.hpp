#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glvar/error.hpp"
#include "glvar/ring.hpp"

namespace glvar {

using Rational = mpq_class;

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted strictly descending under the ring's term order
/// with no zero coefficients, so equality is structural and the leading
/// term is terms().front().
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial monomial(RingPtr ring, Monomial m, Rational c);
    /// Sorts and merges arbitrary term lists.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const Term& leading() const;
    /// Max total degree; -1 for the zero polynomial.
    long degree() const;
    Rational coefficient(const Monomial& m) const;
    /// All terms have the same weighted degree (vacuously true for 0).
    bool is_weighted_homogeneous(long* weight = nullptr) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    /// this + c * m * g, the reduction workhorse.
    void add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);
    Polynomial pow(int k) const;

    /// Divide by integer content and make the leading coefficient positive.
    void normalize_content();
    /// Scale so the leading coefficient is 1.
    void make_monic();

    bool operator==(const Polynomial& o) const;

    /// Re-express in another ring, matching variables by name. Throws if a
    /// variable in use is absent from the target.
    Polynomial map_ring(const RingPtr& target) const;

    /// Exact text form; round-trips through parse_poly.
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Grammar: identifiers, +, -, *, ^, integer and rational (p/q) literals,
/// parentheses. Whitespace-insensitive. Throws ParseError with position;
/// unknown variables are an error.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Substitute images[i] for variable i; variables without an image map to
/// their namesake in the target ring.
Polynomial substitute(const Polynomial& p,
                      const std::vector<std::optional<Polynomial>>& images,
                      const RingPtr& target);

std::string rational_str(const Rational& q);

} // namespace glvar
