#include "glvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace glvar {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({Monomial::one(p.ring_->arity()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
    if (var < 0 || var >= ring->arity())
        throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<size_t>(ring->arity()), 0);
    e[static_cast<size_t>(var)] = 1;
    return monomial(std::move(ring), Monomial(std::move(e)), 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    int i = ring->index_of(name);
    if (i < 0)
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
    if (m.arity() != ring->arity())
        throw std::invalid_argument("monomial arity mismatch");
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(ring);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->cmp(a.mono, b.mono) == std::strong_ordering::greater;
    });
    for (Term& t : terms) {
        if (t.mono.arity() != ring->arity())
            throw std::invalid_argument("term arity mismatch");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
}

const Term& Polynomial::leading() const {
    if (terms_.empty())
        throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

long Polynomial::degree() const {
    long d = -1;
    for (const Term& t : terms_)
        d = std::max(d, t.mono.deg);
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m)
            return t.coeff;
    return 0;
}

bool Polynomial::is_weighted_homogeneous(long* weight) const {
    if (terms_.empty()) {
        if (weight)
            *weight = 0;
        return true;
    }
    long w = ring_->weighted_degree(terms_.front().mono);
    for (const Term& t : terms_)
        if (ring_->weighted_degree(t.mono) != w)
            return false;
    if (weight)
        *weight = w;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (Term& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

namespace {

// merge two descending term lists
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = ring.cmp(a[i].mono, b[j].mono);
        if (c == std::strong_ordering::greater)
            out.push_back(a[i++]);
        else if (c == std::strong_ordering::less)
            out.push_back(b[j++]);
        else {
            Rational s = a[i].coeff + b[j].coeff;
            if (s != 0)
                out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back(b[j]);
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!ring_->same_vars(*o.ring_))
        throw std::invalid_argument("polynomial ring mismatch");
    terms_ = merge_terms(*ring_, terms_, o.terms_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!a.ring()->same_vars(*b.ring()))
        throw std::invalid_argument("polynomial ring mismatch");
    std::vector<Term> prods;
    prods.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            prods.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    return Polynomial::from_terms(a.ring(), std::move(prods));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0)
        return Polynomial(ring_);
    Polynomial out(*this);
    for (Term& t : out.terms_)
        t.coeff *= c;
    return out;
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
    if (c == 0 || g.is_zero())
        return;
    std::vector<Term> shifted;
    shifted.reserve(g.terms_.size());
    for (const Term& t : g.terms_)
        shifted.push_back({mono_mul(t.mono, m), t.coeff * c});
    terms_ = merge_terms(*ring_, terms_, shifted);
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0)
        throw std::invalid_argument("negative power");
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

void Polynomial::normalize_content() {
    if (terms_.empty())
        return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coeff < 0)
        scale = -scale;
    for (Term& t : terms_)
        t.coeff *= scale;
}

void Polynomial::make_monic() {
    if (terms_.empty())
        return;
    Rational inv = 1 / terms_.front().coeff;
    for (Term& t : terms_)
        t.coeff *= inv;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_vars(*o.ring_))
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::map_ring(const RingPtr& target) const {
    std::vector<int> where(static_cast<size_t>(ring_->arity()), -1);
    for (int i = 0; i < ring_->arity(); ++i)
        where[static_cast<size_t>(i)] = target->index_of(ring_->var(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<int> e(static_cast<size_t>(target->arity()), 0);
        for (size_t i = 0; i < t.mono.e.size(); ++i) {
            if (t.mono.e[i] == 0)
                continue;
            if (where[i] < 0)
                throw std::invalid_argument("map_ring: variable '" + ring_->var(static_cast<int>(i)) +
                                            "' missing from target ring");
            e[static_cast<size_t>(where[i])] = t.mono.e[i];
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string mono;
        for (size_t v = 0; v < t.mono.e.size(); ++v) {
            if (t.mono.e[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring_->var(static_cast<int>(v));
            if (t.mono.e[v] > 1)
                mono += "^" + std::to_string(t.mono.e[v]);
        }
        if (mono.empty())
            s += rational_str(c);
        else if (c == 1)
            s += mono;
        else
            s += rational_str(c) + "*" + mono;
    }
    return s;
}

// ---- parser ----

namespace {

struct PolyParser {
    std::string_view s;
    size_t pos = 0;
    const RingPtr& ring;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected an integer", start);
        return mpz_class(std::string(s.substr(start, pos - start)), 10);
    }

    Polynomial number() {
        mpz_class num = integer();
        if (eat('/')) {
            size_t dpos = pos;
            mpz_class den = integer();
            if (den == 0)
                throw ParseError("zero denominator", dpos);
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(ring, q);
        }
        return Polynomial::constant(ring, Rational(num));
    }

    Polynomial ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name(s.substr(start, pos - start));
        int idx = ring->index_of(name);
        if (idx < 0)
            throw ParseError("unknown variable '" + name + "'", start);
        return Polynomial::variable(ring, idx);
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial e = expr();
            skip_ws();
            if (!eat(')'))
                throw ParseError("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return ident();
        throw ParseError("expected a number, variable or '('", pos);
    }

    Polynomial factor() {
        if (eat('-'))
            return -factor();
        Polynomial base = atom();
        skip_ws();
        if (eat('^')) {
            size_t epos = pos;
            mpz_class k = integer();
            if (k < 0 || k > 512)
                throw ParseError("exponent out of range", epos);
            return base.pow(static_cast<int>(k.get_si()));
        }
        return base;
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                p = p * factor();
            else if (peek() == '/')
                throw ParseError("'/' is only allowed inside rational literals", pos);
            else
                break;
        }
        return p;
    }

    Polynomial expr() {
        Polynomial p(ring);
        bool neg = eat('-');
        Polynomial first = term();
        p = neg ? -first : first;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p += term();
            } else if (c == '-') {
                ++pos;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }
};

} // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
    PolyParser parser{text, 0, ring};
    Polynomial p = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ParseError("unexpected trailing input", parser.pos);
    return p;
}

Polynomial substitute(const Polynomial& p,
                      const std::vector<std::optional<Polynomial>>& images,
                      const RingPtr& target) {
    if (static_cast<int>(images.size()) != p.ring()->arity())
        throw std::invalid_argument("substitute: one image slot per variable required");
    // cache powers of each image
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](size_t v, int k) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            Polynomial base = images[v] ? images[v]->map_ring(target)
                                        : Polynomial::variable(target, p.ring()->var(static_cast<int>(v)));
            cache.push_back(Polynomial::constant(target, 1));
            cache.push_back(std::move(base));
        }
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<size_t>(k)];
    };
    Polynomial out(target);
    for (const Term& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (size_t v = 0; v < t.mono.e.size(); ++v)
            if (t.mono.e[v] > 0)
                prod = prod * power_of(v, t.mono.e[v]);
        out += prod;
    }
    return out;
}

} // namespace glvar
