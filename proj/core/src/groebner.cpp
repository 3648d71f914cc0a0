#include "glvar/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace glvar {

Ideal make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
    for (const Polynomial& g : gens)
        if (!g.ring()->same_vars(*ring))
            throw std::invalid_argument("ideal generator from a different ring");
    return Ideal{std::move(ring), std::move(gens)};
}

long long Budget::default_steps() {
    if (const char* env = std::getenv("GLVAR_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 200'000'000;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    if (G.empty())
        return p;
    const RingPtr& ring = G.front().ring();
    Polynomial work = p.ring()->same_vars(*ring) && p.ring()->order() == ring->order()
                          ? p
                          : p.map_ring(ring);
    std::vector<Term> remainder;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool reduced = false;
        for (const Polynomial& g : G) {
            if (g.is_zero())
                continue;
            if (divides(g.leading().mono, lt.mono)) {
                bud.spend();
                work.add_scaled(-lt.coeff / g.leading().coeff,
                                mono_div(lt.mono, g.leading().mono), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            work.add_scaled(-lt.coeff, Monomial::one(ring->arity()),
                            Polynomial::monomial(ring, lt.mono, 1));
        }
    }
    return Polynomial::from_terms(ring, std::move(remainder));
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
};

// deterministic normal selection: smallest (lcm degree, lcm, i, j)
bool pair_less(const Ring& ring, const Pair& a, const Pair& b) {
    if (a.lcm.deg != b.lcm.deg)
        return a.lcm.deg < b.lcm.deg;
    if (auto c = ring.cmp(a.lcm, b.lcm); c != 0)
        return c == std::strong_ordering::less;
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

// Gebauer-Moeller update: add h (index t) to the pair set.
void update_pairs(const Ring& ring, std::vector<Pair>& pairs,
                  const std::vector<Polynomial>& basis, int t) {
    const Monomial& lmh = basis[static_cast<size_t>(t)].leading().mono;

    std::vector<Pair> fresh;
    fresh.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        if (basis[static_cast<size_t>(i)].is_zero())
            continue;
        fresh.push_back({i, t, mono_lcm(basis[static_cast<size_t>(i)].leading().mono, lmh)});
    }

    // keep (i,t) if lm_i, lm_h coprime (dropped later by the product
    // criterion) or no other new pair's lcm divides its lcm
    std::vector<Pair> kept;
    for (size_t a = 0; a < fresh.size(); ++a) {
        const Monomial& lmi = basis[static_cast<size_t>(fresh[a].i)].leading().mono;
        bool redundant = false;
        if (!mono_coprime(lmi, lmh)) {
            for (size_t b = 0; b < fresh.size() && !redundant; ++b) {
                if (a == b)
                    continue;
                if (!(fresh[b].lcm == fresh[a].lcm) && divides(fresh[b].lcm, fresh[a].lcm))
                    redundant = true;
                // among equal lcms keep the first
                if (b < a && fresh[b].lcm == fresh[a].lcm)
                    redundant = true;
            }
        }
        if (!redundant)
            kept.push_back(fresh[a]);
    }

    // old pairs killed by h: lm_h | lcm(i,j) and both mixed lcms differ
    std::erase_if(pairs, [&](const Pair& p) {
        if (!divides(lmh, p.lcm))
            return false;
        const Monomial& lmi = basis[static_cast<size_t>(p.i)].leading().mono;
        const Monomial& lmj = basis[static_cast<size_t>(p.j)].leading().mono;
        return !(mono_lcm(lmi, lmh) == p.lcm) && !(mono_lcm(lmj, lmh) == p.lcm);
    });

    // product criterion
    for (Pair& p : kept) {
        const Monomial& lmi = basis[static_cast<size_t>(p.i)].leading().mono;
        if (!mono_coprime(lmi, lmh))
            pairs.push_back(std::move(p));
    }
}

std::vector<Polynomial> interreduce(const RingPtr& ring, std::vector<Polynomial> basis,
                                    Budget& bud) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    // minimal basis: drop elements whose lead is divisible by another lead
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->cmp(a.leading().mono, b.leading().mono) == std::strong_ordering::less;
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& p : basis) {
        bool covered = false;
        for (const Polynomial& q : minimal)
            if (divides(q.leading().mono, p.leading().mono)) {
                covered = true;
                break;
            }
        if (!covered)
            minimal.push_back(p);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, &bud);
        if (!r.is_zero()) {
            r.make_monic();
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->cmp(a.leading().mono, b.leading().mono) == std::strong_ordering::less;
    });
    return reduced;
}

} // namespace

std::vector<Polynomial> groebner(const Ideal& I, MonomialOrder ord, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    RingPtr ring = with_order(I.ring, ord);

    std::vector<Polynomial> basis;
    for (const Polynomial& g : I.gens) {
        Polynomial p = g.map_ring(ring);
        if (p.is_zero())
            continue;
        p.normalize_content();
        basis.push_back(std::move(p));
    }
    // deterministic start: ascending leading monomials
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (auto c = ring->cmp(a.leading().mono, b.leading().mono); c != 0)
            return c == std::strong_ordering::less;
        return a.term_count() < b.term_count();
    });

    auto unit_basis = [&] {
        return std::vector<Polynomial>{Polynomial::constant(ring, 1)};
    };
    for (const Polynomial& p : basis)
        if (p.is_constant() && !p.is_zero())
            return unit_basis();

    std::vector<Pair> pairs;
    for (int t = 0; t < static_cast<int>(basis.size()); ++t)
        update_pairs(*ring, pairs, basis, t);

    while (!pairs.empty()) {
        bud.spend();
        auto best = std::min_element(pairs.begin(), pairs.end(),
                                     [&](const Pair& a, const Pair& b) { return pair_less(*ring, a, b); });
        Pair pr = *best;
        pairs.erase(best);

        const Polynomial& f = basis[static_cast<size_t>(pr.i)];
        const Polynomial& g = basis[static_cast<size_t>(pr.j)];
        // S-polynomial
        Polynomial s(ring);
        s.add_scaled(1 / f.leading().coeff, mono_div(pr.lcm, f.leading().mono), f);
        s.add_scaled(-1 / g.leading().coeff, mono_div(pr.lcm, g.leading().mono), g);
        Polynomial r = normal_form(s, basis, &bud);
        if (r.is_zero())
            continue;
        if (r.is_constant())
            return unit_basis();
        r.normalize_content();
        basis.push_back(std::move(r));
        update_pairs(*ring, pairs, basis, static_cast<int>(basis.size()) - 1);
    }

    return interreduce(ring, std::move(basis), bud);
}

std::vector<Polynomial> groebner(const Ideal& I, Budget* budget) {
    return groebner(I, I.ring->order(), budget);
}

bool ideal_member(const Polynomial& p, const Ideal& I, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    auto G = groebner(I, &bud);
    if (G.empty())
        return p.is_zero();
    return normal_form(p, G, &bud).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    if (!a.ring->same_vars(*b.ring))
        return false;
    auto ga = groebner(a, MonomialOrder::grevlex(), &bud);
    auto gb = groebner(b, MonomialOrder::grevlex(), &bud);
    if (ga.size() != gb.size())
        return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i].map_ring(ga[i].ring())))
            return false;
    return true;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    std::vector<bool> dropped(static_cast<size_t>(I.ring->arity()), false);
    for (const std::string& name : drop) {
        int idx = I.ring->index_of(name);
        if (idx < 0)
            throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
        dropped[static_cast<size_t>(idx)] = true;
    }
    std::vector<std::string> elim_vars, kept_vars;
    std::vector<long> elim_w, kept_w;
    for (int i = 0; i < I.ring->arity(); ++i) {
        if (dropped[static_cast<size_t>(i)]) {
            elim_vars.push_back(I.ring->var(i));
            elim_w.push_back(I.ring->weight(i));
        } else {
            kept_vars.push_back(I.ring->var(i));
            kept_w.push_back(I.ring->weight(i));
        }
    }
    int nelim = static_cast<int>(elim_vars.size());
    std::vector<std::string> all_vars = elim_vars;
    all_vars.insert(all_vars.end(), kept_vars.begin(), kept_vars.end());
    std::vector<long> all_w = elim_w;
    all_w.insert(all_w.end(), kept_w.begin(), kept_w.end());
    RingPtr block_ring = make_ring(all_vars, all_w, MonomialOrder::block(nelim));

    std::vector<Polynomial> moved;
    moved.reserve(I.gens.size());
    for (const Polynomial& g : I.gens)
        moved.push_back(g.map_ring(block_ring));
    auto G = groebner(Ideal{block_ring, std::move(moved)}, MonomialOrder::block(nelim), &bud);

    RingPtr out_ring = make_ring(kept_vars, kept_w, MonomialOrder::grevlex());
    std::vector<Polynomial> out;
    for (const Polynomial& g : G) {
        bool uses_elim = false;
        for (const Term& t : g.terms()) {
            for (int i = 0; i < nelim && !uses_elim; ++i)
                if (t.mono.e[static_cast<size_t>(i)] > 0)
                    uses_elim = true;
            if (uses_elim)
                break;
        }
        if (!uses_elim)
            out.push_back(g.map_ring(out_ring));
    }
    return Ideal{out_ring, std::move(out)};
}

Ideal saturate(const Ideal& I, const Polynomial& h, Budget* budget) {
    if (h.is_zero())
        throw std::invalid_argument("saturate: h must be nonzero");
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    // fresh variable name
    std::string t = "t@sat";
    while (I.ring->index_of(t) >= 0)
        t += "@";
    std::vector<std::string> vars = I.ring->vars();
    vars.push_back(t);
    std::vector<long> w = I.ring->weights();
    w.push_back(1);
    RingPtr ext = make_ring(vars, w, MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    gens.reserve(I.gens.size() + 1);
    for (const Polynomial& g : I.gens)
        gens.push_back(g.map_ring(ext));
    Polynomial one_minus_th =
        Polynomial::constant(ext, 1) - Polynomial::variable(ext, t) * h.map_ring(ext);
    gens.push_back(std::move(one_minus_th));
    Ideal res = eliminate(Ideal{ext, std::move(gens)}, {t}, &bud);
    // back into the original ring
    std::vector<Polynomial> out;
    out.reserve(res.gens.size());
    for (const Polynomial& g : res.gens)
        out.push_back(g.map_ring(I.ring));
    return Ideal{I.ring, std::move(out)};
}

namespace {

// max independent set of variables avoiding all leading supports
long max_independent(const std::vector<uint64_t>& supports, uint64_t allowed,
                     std::map<uint64_t, long>& memo) {
    auto it = memo.find(allowed);
    if (it != memo.end())
        return it->second;
    const uint64_t* blocker = nullptr;
    for (const uint64_t& s : supports)
        if ((s & ~allowed) == 0) {
            blocker = &s;
            break;
        }
    long best;
    if (!blocker) {
        best = static_cast<long>(__builtin_popcountll(allowed));
    } else {
        best = 0;
        for (int v = 0; v < 64; ++v)
            if (*blocker & (1ULL << v))
                best = std::max(best, max_independent(supports, allowed & ~(1ULL << v), memo));
    }
    memo.emplace(allowed, best);
    return best;
}

} // namespace

long ideal_dimension(const Ideal& I, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    const int n = I.ring->arity();
    if (n > 64)
        throw std::invalid_argument("ideal_dimension: more than 64 variables unsupported");
    auto G = groebner(I, MonomialOrder::grevlex(), &bud);
    if (!G.empty() && G.front().is_constant())
        return -1; // unit ideal, empty variety
    std::vector<uint64_t> supports;
    supports.reserve(G.size());
    for (const Polynomial& g : G) {
        uint64_t s = 0;
        for (size_t i = 0; i < g.leading().mono.e.size(); ++i)
            if (g.leading().mono.e[i] > 0)
                s |= 1ULL << i;
        supports.push_back(s);
    }
    uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    std::map<uint64_t, long> memo;
    return max_independent(supports, all, memo);
}

bool is_inconsistent(const Ideal& I, Budget* budget) {
    auto G = groebner(I, MonomialOrder::grevlex(), budget);
    return !G.empty() && G.front().is_constant();
}

} // namespace glvar
