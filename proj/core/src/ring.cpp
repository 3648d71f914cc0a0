#include "glvar/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace glvar {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e) {
        if (x < 0)
            throw std::invalid_argument("negative exponent");
        deg += x;
    }
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg)
        return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i)
        out.e[i] = a.e[i] + b.e[i];
    out.deg = a.deg + b.deg;
    return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
        out.e[i] = a.e[i] - b.e[i];
        if (out.e[i] < 0)
            throw std::invalid_argument("monomial division not exact");
    }
    out.deg = a.deg - b.deg;
    return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
        out.e[i] = std::max(a.e[i], b.e[i]);
        out.deg += out.e[i];
    }
    return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0)
            return false;
    return true;
}

Ring::Ring(std::vector<std::string> vars, std::vector<long> weights, MonomialOrder order)
    : vars_(std::move(vars)), weights_(std::move(weights)), order_(order) {
    if (weights_.empty())
        weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        throw std::invalid_argument("ring: weights/vars length mismatch");
    if (order_.kind == OrderKind::block && (order_.elim < 0 || order_.elim > arity()))
        throw std::invalid_argument("ring: block order elim size out of range");
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty())
            throw std::invalid_argument("ring: empty variable name");
        if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("ring: duplicate variable '" + vars_[i] + "'");
    }
}

int Ring::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

long Ring::weighted_degree(const Monomial& m) const {
    long d = 0;
    for (size_t i = 0; i < m.e.size(); ++i)
        d += m.e[i] * weights_[i];
    return d;
}

namespace {

// grevlex on a coordinate window [lo, hi)
std::strong_ordering grevlex_window(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    long da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (auto c = da <=> db; c != 0)
        return c;
    // rightmost difference, smaller exponent wins
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering Ring::cmp(const Monomial& a, const Monomial& b) const {
    const size_t n = vars_.size();
    switch (order_.kind) {
    case OrderKind::lex:
        for (size_t i = 0; i < n; ++i)
            if (a.e[i] != b.e[i])
                return a.e[i] <=> b.e[i];
        return std::strong_ordering::equal;
    case OrderKind::grevlex:
        return grevlex_window(a, b, 0, n);
    case OrderKind::block: {
        size_t k = static_cast<size_t>(order_.elim);
        if (auto c = grevlex_window(a, b, 0, k); c != 0)
            return c;
        return grevlex_window(a, b, k, n);
    }
    }
    return std::strong_ordering::equal;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<long> weights, MonomialOrder order) {
    return std::make_shared<Ring>(std::move(vars), std::move(weights), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order() == order)
        return ring;
    return make_ring(ring->vars(), ring->weights(), order);
}

} // namespace glvar
