#include "glvar/equimap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glvar {

namespace {

RingPtr body_ring_for(const std::vector<FormSymbol>& source,
                      const std::vector<std::string>& coeffs) {
    std::vector<std::string> vars;
    std::vector<long> weights;
    vars.reserve(source.size() + coeffs.size());
    for (const FormSymbol& s : source) {
        vars.push_back(s.name);
        weights.push_back(s.weight);
    }
    for (const std::string& c : coeffs) {
        vars.push_back(c);
        weights.push_back(0);
    }
    return make_ring(std::move(vars), std::move(weights), MonomialOrder::grevlex());
}

Partition single_row(int weight) {
    return weight == 0 ? Partition() : Partition(std::vector<int>{weight});
}

PartitionTuple tuple_of(const std::vector<FormSymbol>& symbols) {
    std::vector<Partition> entries;
    entries.reserve(symbols.size());
    for (const FormSymbol& s : symbols)
        entries.push_back(single_row(s.weight));
    return PartitionTuple(std::move(entries));
}

} // namespace

WeightedMap::WeightedMap(std::vector<FormSymbol> source, std::vector<FormSymbol> target,
                         std::vector<std::string> coeff_symbols, std::vector<Polynomial> bodies)
    : source_(std::move(source)), target_(std::move(target)), coeffs_(std::move(coeff_symbols)),
      ring_(body_ring_for(source_, coeffs_)) {
    if (bodies.size() != target_.size())
        throw std::invalid_argument("weighted map: one body per target factor required");
    for (const FormSymbol& s : source_)
        if (s.weight < 0)
            throw std::invalid_argument("weighted map: negative weight");
    bodies_.reserve(bodies.size());
    for (size_t j = 0; j < bodies.size(); ++j) {
        Polynomial b = bodies[j].ring()->same_vars(*ring_) ? bodies[j] : bodies[j].map_ring(ring_);
        long w = 0;
        if (!b.is_weighted_homogeneous(&w))
            throw std::invalid_argument("weighted map: body " + std::to_string(j + 1) +
                                        " is not weighted-homogeneous");
        if (!b.is_zero() && w != target_[j].weight)
            throw std::invalid_argument("weighted map: body " + std::to_string(j + 1) +
                                        " has weight " + std::to_string(w) + ", expected " +
                                        std::to_string(target_[j].weight));
        bodies_.push_back(std::move(b));
    }
}

WeightedMap WeightedMap::from_text(std::vector<FormSymbol> source, std::vector<FormSymbol> target,
                                   const std::vector<std::string>& bodies,
                                   std::vector<std::string> coeff_symbols) {
    RingPtr ring = body_ring_for(source, coeff_symbols);
    std::vector<Polynomial> parsed;
    parsed.reserve(bodies.size());
    for (const std::string& b : bodies)
        parsed.push_back(parse_poly(b, ring));
    return WeightedMap(std::move(source), std::move(target), std::move(coeff_symbols),
                       std::move(parsed));
}

WeightedMap WeightedMap::identity(std::vector<FormSymbol> symbols) {
    RingPtr ring = body_ring_for(symbols, {});
    std::vector<Polynomial> bodies;
    bodies.reserve(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i)
        bodies.push_back(Polynomial::variable(ring, static_cast<int>(i)));
    auto target = symbols;
    return WeightedMap(std::move(symbols), std::move(target), {}, std::move(bodies));
}

WeightedMap WeightedMap::zero(std::vector<FormSymbol> source, std::vector<FormSymbol> target) {
    RingPtr ring = body_ring_for(source, {});
    std::vector<Polynomial> bodies(target.size(), Polynomial(ring));
    return WeightedMap(std::move(source), std::move(target), {}, std::move(bodies));
}

std::vector<FormSymbol> WeightedMap::default_symbols(const PartitionTuple& t) {
    static const std::vector<std::string> pool1 = {"x", "y", "z", "u", "v", "w"};
    static const std::vector<std::string> pool2 = {"f", "g", "h", "p", "q", "r"};
    std::vector<FormSymbol> out;
    size_t used1 = 0, used2 = 0;
    int pos = 0;
    for (const Partition& p : t.entries()) {
        if (p.rows() > 1)
            throw std::invalid_argument("weighted map: multi-row entry " + p.str());
        ++pos;
        int w = p.size();
        if (w == 1 && used1 < pool1.size())
            out.push_back({pool1[used1++], 1});
        else if (w == 2 && used2 < pool2.size())
            out.push_back({pool2[used2++], 2});
        else
            out.push_back({"s" + std::to_string(pos), w});
    }
    return out;
}

std::vector<FormSymbol> WeightedMap::symbols_for(const PartitionTuple& t,
                                                 const std::vector<std::string>& names) {
    if (names.size() != static_cast<size_t>(t.count()))
        throw std::invalid_argument("weighted map: one name per tuple entry required");
    std::vector<FormSymbol> out;
    for (int i = 0; i < t.count(); ++i) {
        const Partition& p = t.entry(i);
        if (p.rows() > 1)
            throw std::invalid_argument("weighted map: multi-row entry " + p.str());
        out.push_back({names[static_cast<size_t>(i)], p.size()});
    }
    return out;
}

PartitionTuple WeightedMap::source_tuple() const {
    return tuple_of(source_);
}

PartitionTuple WeightedMap::target_tuple() const {
    return tuple_of(target_);
}

bool WeightedMap::is_zero_map() const {
    return std::all_of(bodies_.begin(), bodies_.end(),
                       [](const Polynomial& b) { return b.is_zero(); });
}

bool WeightedMap::source_is_pure() const {
    return std::all_of(source_.begin(), source_.end(),
                       [](const FormSymbol& s) { return s.weight > 0; });
}

WeightedMap WeightedMap::with_coeff_values(
    const std::vector<std::pair<std::string, Rational>>& values) const {
    RingPtr plain = body_ring_for(source_, {});
    std::vector<std::optional<Polynomial>> images(static_cast<size_t>(ring_->arity()));
    for (const std::string& c : coeffs_) {
        Rational val;
        bool found = false;
        for (const auto& [name, v] : values)
            if (name == c) {
                val = v;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("with_coeff_values: no value for '" + c + "'");
        images[static_cast<size_t>(ring_->index_of(c))] = Polynomial::constant(plain, val);
    }
    std::vector<Polynomial> bodies;
    bodies.reserve(bodies_.size());
    for (const Polynomial& b : bodies_)
        bodies.push_back(substitute(b, images, plain));
    return WeightedMap(source_, target_, {}, std::move(bodies));
}

std::string WeightedMap::str() const {
    std::string s = "(";
    for (size_t i = 0; i < source_.size(); ++i) {
        if (i)
            s += ",";
        s += source_[i].name;
    }
    s += ") -> (";
    for (size_t j = 0; j < bodies_.size(); ++j) {
        if (j)
            s += "; ";
        s += bodies_[j].str();
    }
    return s + ")";
}

std::vector<Monomial> weighted_monomials(const std::vector<FormSymbol>& symbols, int weight) {
    for (const FormSymbol& s : symbols)
        if (s.weight <= 0)
            throw std::invalid_argument("weighted_monomials: weights must be positive");
    std::vector<Monomial> out;
    std::vector<int> e(symbols.size(), 0);
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i == symbols.size()) {
            if (rem == 0)
                out.push_back(Monomial(e));
            return;
        }
        int w = symbols[i].weight;
        for (int k = rem / w; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, rem - k * w);
        }
        e[i] = 0;
    };
    rec(rec, 0, weight);
    RingPtr ring = body_ring_for(symbols, {});
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->cmp(a, b) == std::strong_ordering::greater;
    });
    return out;
}

std::pair<WeightedMap, std::vector<std::string>> generic_map(std::vector<FormSymbol> src,
                                                             std::vector<FormSymbol> tgt,
                                                             const std::string& prefix) {
    for (const FormSymbol& s : src)
        if (s.weight <= 0)
            throw std::invalid_argument("generic_map: source must be pure");
    for (const FormSymbol& s : tgt)
        if (s.weight <= 0)
            throw std::invalid_argument("generic_map: target must be pure");

    std::vector<std::vector<Monomial>> monos;
    monos.reserve(tgt.size());
    bool wide = tgt.size() > 9;
    for (const FormSymbol& t : tgt) {
        monos.push_back(weighted_monomials(src, t.weight));
        if (monos.back().size() > 9)
            wide = true;
    }
    std::vector<std::string> coeffs;
    for (size_t j = 0; j < tgt.size(); ++j)
        for (size_t k = 0; k < monos[j].size(); ++k)
            coeffs.push_back(wide ? prefix + std::to_string(j + 1) + "_" + std::to_string(k + 1)
                                  : prefix + std::to_string(j + 1) + std::to_string(k + 1));

    RingPtr ring = body_ring_for(src, coeffs);
    const int ns = static_cast<int>(src.size());
    std::vector<Polynomial> bodies;
    size_t next = 0;
    for (size_t j = 0; j < tgt.size(); ++j) {
        std::vector<Term> terms;
        for (const Monomial& m : monos[j]) {
            std::vector<int> e(static_cast<size_t>(ring->arity()), 0);
            for (int v = 0; v < ns; ++v)
                e[static_cast<size_t>(v)] = m.e[static_cast<size_t>(v)];
            e[static_cast<size_t>(ns) + next] = 1;
            ++next;
            terms.push_back({Monomial(std::move(e)), 1});
        }
        bodies.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    WeightedMap map(std::move(src), std::move(tgt), coeffs, std::move(bodies));
    return {std::move(map), std::move(coeffs)};
}

std::pair<WeightedMap, std::vector<std::string>> generic_map(const PartitionTuple& src,
                                                             const PartitionTuple& tgt,
                                                             const std::string& prefix) {
    return generic_map(WeightedMap::default_symbols(src), WeightedMap::default_symbols(tgt),
                       prefix);
}

WeightedMap compose(const WeightedMap& outer, const WeightedMap& inner) {
    const auto& mid_out = outer.source_symbols();
    const auto& mid_in = inner.target_symbols();
    if (mid_out.size() != mid_in.size())
        throw std::invalid_argument("compose: tuple mismatch");
    for (size_t i = 0; i < mid_out.size(); ++i)
        if (mid_out[i].weight != mid_in[i].weight)
            throw std::invalid_argument("compose: tuple mismatch at factor " +
                                        std::to_string(i + 1));

    std::vector<std::string> coeffs = inner.coeff_symbols();
    for (const std::string& c : outer.coeff_symbols()) {
        if (std::find(coeffs.begin(), coeffs.end(), c) != coeffs.end())
            throw std::invalid_argument("compose: coefficient symbol collision '" + c + "'");
        coeffs.push_back(c);
    }
    RingPtr ring = body_ring_for(inner.source_symbols(), coeffs);

    const RingPtr& oring = outer.body_ring();
    std::vector<std::optional<Polynomial>> images(static_cast<size_t>(oring->arity()));
    for (size_t j = 0; j < mid_out.size(); ++j)
        images[j] = inner.bodies()[j];
    std::vector<Polynomial> bodies;
    bodies.reserve(outer.bodies().size());
    for (const Polynomial& b : outer.bodies())
        bodies.push_back(substitute(b, images, ring));
    return WeightedMap(inner.source_symbols(), outer.target_symbols(), std::move(coeffs),
                       std::move(bodies));
}

Ideal equate_maps(const WeightedMap& a, const WeightedMap& b) {
    // source factors must agree as (name, weight) sets
    auto sa = a.source_symbols();
    auto sb = b.source_symbols();
    auto key = [](const FormSymbol& s) { return std::make_pair(s.name, s.weight); };
    std::vector<std::pair<std::string, int>> ka, kb;
    for (const auto& s : sa)
        ka.push_back(key(s));
    for (const auto& s : sb)
        kb.push_back(key(s));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb)
        throw std::invalid_argument("equate_maps: source tuples differ");
    if (a.target_symbols().size() != b.target_symbols().size())
        throw std::invalid_argument("equate_maps: target tuples differ");
    for (size_t j = 0; j < a.target_symbols().size(); ++j)
        if (a.target_symbols()[j].weight != b.target_symbols()[j].weight)
            throw std::invalid_argument("equate_maps: target tuples differ");

    std::vector<std::string> coeffs = a.coeff_symbols();
    for (const std::string& c : b.coeff_symbols()) {
        if (std::find(coeffs.begin(), coeffs.end(), c) != coeffs.end())
            throw std::invalid_argument("equate_maps: coefficient symbol collision '" + c + "'");
        coeffs.push_back(c);
    }
    RingPtr full = body_ring_for(sa, coeffs);
    RingPtr source_ring = body_ring_for(sa, {});
    RingPtr coeff_ring = make_ring(coeffs, {}, MonomialOrder::grevlex());
    const size_t ns = sa.size();

    std::vector<Polynomial> gens;
    for (size_t j = 0; j < a.bodies().size(); ++j) {
        Polynomial diff = a.bodies()[j].map_ring(full) - b.bodies()[j].map_ring(full);
        // group terms by the source part of the monomial
        std::vector<std::pair<Monomial, std::vector<Term>>> groups;
        for (const Term& t : diff.terms()) {
            std::vector<int> se(ns, 0), ce(coeffs.size(), 0);
            for (size_t v = 0; v < ns; ++v)
                se[v] = t.mono.e[v];
            for (size_t v = 0; v < coeffs.size(); ++v)
                ce[v] = t.mono.e[ns + v];
            Monomial skey{std::vector<int>(se)};
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.first == skey; });
            if (it == groups.end()) {
                groups.push_back({skey, {}});
                it = std::prev(groups.end());
            }
            it->second.push_back({Monomial(std::move(ce)), t.coeff});
        }
        std::sort(groups.begin(), groups.end(), [&](const auto& u, const auto& v) {
            return source_ring->cmp(u.first, v.first) == std::strong_ordering::greater;
        });
        for (auto& [skey, terms] : groups) {
            Polynomial gen = Polynomial::from_terms(coeff_ring, std::move(terms));
            if (!gen.is_zero())
                gens.push_back(std::move(gen));
        }
    }
    return Ideal{coeff_ring, std::move(gens)};
}

namespace {

std::string fresh_prefix(const WeightedMap& f, std::string base) {
    auto clashes = [&](const std::string& pfx) {
        for (const FormSymbol& s : f.source_symbols())
            if (s.name.compare(0, pfx.size(), pfx) == 0 &&
                s.name.find_first_not_of("0123456789_", pfx.size()) == std::string::npos)
                return true;
        return false;
    };
    while (clashes(base))
        base += base.back();
    return base;
}

std::vector<std::pair<std::string, Rational>>
filter_assignment(const std::vector<std::pair<std::string, Rational>>& all,
                  const std::vector<std::string>& wanted) {
    std::vector<std::pair<std::string, Rational>> out;
    for (const std::string& w : wanted)
        for (const auto& [name, val] : all)
            if (name == w) {
                out.emplace_back(name, val);
                break;
            }
    return out;
}

} // namespace

FactorResult factors_through(const WeightedMap& f, const PartitionTuple& mid, Budget* budget) {
    if (f.has_abstract_coeffs())
        throw std::invalid_argument("factors_through: map must have rational coefficients");
    if (!f.source_is_pure())
        throw std::invalid_argument("factors_through: source must be pure");
    if (!mid.is_pure())
        throw std::invalid_argument("factors_through: middle tuple must be pure");

    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;

    std::vector<FormSymbol> mid_syms;
    for (int i = 0; i < mid.count(); ++i) {
        if (mid.entry(i).rows() > 1)
            throw std::invalid_argument("factors_through: multi-row entry " + mid.entry(i).str());
        mid_syms.push_back({"m" + std::to_string(i + 1), mid.entry(i).size()});
    }

    auto [gamma, gsyms] = generic_map(f.source_symbols(), mid_syms, fresh_prefix(f, "a"));
    auto [delta, dsyms] = generic_map(mid_syms, f.target_symbols(), fresh_prefix(f, "b"));
    Ideal equations = equate_maps(f, compose(delta, gamma));

    FactorResult res;
    try {
        if (is_inconsistent(equations, &bud)) {
            res.verdict = FactorVerdict::no;
            return res;
        }
    } catch (const BudgetExhausted&) {
        res.verdict = FactorVerdict::unknown;
        return res;
    }
    res.verdict = FactorVerdict::yes;
    // best-effort rational witness on a bounded side budget
    try {
        Budget side(std::min<long long>(bud.remaining(), 20'000'000));
        auto point = solve_rational_point(equations, &side);
        if (point) {
            res.witness = point;
            res.through = gamma.with_coeff_values(filter_assignment(*point, gsyms));
            res.onward = delta.with_coeff_values(filter_assignment(*point, dsyms));
        }
    } catch (const BudgetExhausted&) {
        // consistency already established; yes stands without a witness
    }
    return res;
}

TypicalResult is_typical(const WeightedMap& f, Budget* budget) {
    if (!f.source_is_pure())
        throw std::invalid_argument("is_typical: source must be pure");
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;

    PartitionTuple source = f.source_tuple();
    std::vector<PartitionTuple> mids = subtuples(source);
    std::sort(mids.begin(), mids.end(), [](const PartitionTuple& a, const PartitionTuple& b) {
        if (a.count() != b.count())
            return a.count() < b.count();
        return a < b;
    });

    TypicalResult res;
    bool saw_unknown = false;
    for (const PartitionTuple& mid : mids) {
        if (mid == source)
            continue; // proper subtuples only
        FactorResult fr = factors_through(f, mid, &bud);
        if (fr.verdict == FactorVerdict::yes) {
            res.verdict = TypicalVerdict::not_typical;
            res.witness_mid = mid;
            return res;
        }
        if (fr.verdict == FactorVerdict::unknown)
            saw_unknown = true;
    }
    res.verdict = saw_unknown ? TypicalVerdict::unknown : TypicalVerdict::typical;
    return res;
}

std::string coord_name(const std::string& sym, const std::vector<int>& alpha) {
    int deg = 0;
    for (int a : alpha)
        deg += a;
    if (deg == 0)
        return sym;
    if (deg == 1) {
        for (size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] == 1)
                return sym + "_" + std::to_string(i + 1);
    }
    std::string s = sym + "_";
    for (int a : alpha) {
        if (a > 9)
            throw std::invalid_argument("coord_name: exponent >= 10 unsupported");
        s += std::to_string(a);
    }
    return s;
}

std::vector<std::vector<int>> form_coordinates(int degree, int level) {
    if (degree < 0 || level <= 0)
        throw std::invalid_argument("form_coordinates: bad degree or level");
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<size_t>(level), 0);
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i + 1 == e.size()) {
            e[i] = rem;
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, rem - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    // descending grevlex over the level variables
    std::vector<std::string> xs;
    for (int i = 0; i < level; ++i)
        xs.push_back("x" + std::to_string(i + 1));
    RingPtr ring = make_ring(xs);
    std::sort(out.begin(), out.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        return ring->cmp(Monomial(std::vector<int>(a)), Monomial(std::vector<int>(b))) ==
               std::strong_ordering::greater;
    });
    return out;
}

namespace {

LevelMap instantiate_impl(const WeightedMap& f, int level, bool allow_abstract) {
    if (!allow_abstract && f.has_abstract_coeffs())
        throw std::invalid_argument("instantiate: map has abstract coefficients");
    if (level <= 0)
        throw std::invalid_argument("instantiate: level must be positive");

    // input ring: one coordinate block per source symbol, then any
    // abstract coefficient symbols
    std::vector<std::string> in_vars;
    std::vector<std::vector<std::vector<int>>> blocks;
    for (const FormSymbol& s : f.source_symbols()) {
        blocks.push_back(form_coordinates(s.weight, level));
        for (const auto& alpha : blocks.back())
            in_vars.push_back(coord_name(s.name, alpha));
    }
    for (const std::string& c : f.coeff_symbols())
        in_vars.push_back(c);
    RingPtr in_ring = make_ring(in_vars);

    // working ring adds the level variables
    std::vector<std::string> work_vars = in_vars;
    for (int i = 0; i < level; ++i)
        work_vars.push_back("x@" + std::to_string(i + 1));
    RingPtr work = make_ring(work_vars);
    const size_t nin = in_vars.size();

    const RingPtr& bring = f.body_ring();
    std::vector<std::optional<Polynomial>> images(static_cast<size_t>(bring->arity()));
    size_t var_base = 0;
    for (size_t s = 0; s < f.source_symbols().size(); ++s) {
        std::vector<Term> terms;
        for (size_t k = 0; k < blocks[s].size(); ++k) {
            std::vector<int> e(work_vars.size(), 0);
            e[var_base + k] = 1;
            for (int i = 0; i < level; ++i)
                e[nin + static_cast<size_t>(i)] = blocks[s][k][static_cast<size_t>(i)];
            terms.push_back({Monomial(std::move(e)), 1});
        }
        images[s] = Polynomial::from_terms(work, std::move(terms));
        var_base += blocks[s].size();
    }

    LevelMap lm;
    lm.level = level;
    lm.input_ring = in_ring;
    for (size_t j = 0; j < f.bodies().size(); ++j) {
        Polynomial expanded = substitute(f.bodies()[j], images, work);
        auto coords = form_coordinates(f.target_symbols()[j].weight, level);
        for (const auto& beta : coords) {
            std::vector<Term> terms;
            for (const Term& t : expanded.terms()) {
                bool match = true;
                for (int i = 0; i < level && match; ++i)
                    if (t.mono.e[nin + static_cast<size_t>(i)] != beta[static_cast<size_t>(i)])
                        match = false;
                if (!match)
                    continue;
                std::vector<int> e(t.mono.e.begin(), t.mono.e.begin() + static_cast<long>(nin));
                terms.push_back({Monomial(std::move(e)), t.coeff});
            }
            lm.output_names.push_back(coord_name(f.target_symbols()[j].name, beta));
            lm.outputs.push_back(Polynomial::from_terms(in_ring, std::move(terms)));
        }
    }
    return lm;
}

} // namespace

LevelMap instantiate(const WeightedMap& f, int level) {
    return instantiate_impl(f, level, false);
}

LevelMap instantiate_generic(const WeightedMap& f, int level) {
    return instantiate_impl(f, level, true);
}

WeightedMap phi_family(const Rational& t) {
    std::vector<FormSymbol> src = {{"x", 1}, {"y", 1}, {"f", 2}, {"g", 2}, {"h", 2}};
    std::vector<FormSymbol> tgt = {{"q", 4}};
    RingPtr ring = body_ring_for(src, {});
    Polynomial head = parse_poly("x^2*g + y^2*f - 2*x*y*h", ring);
    Polynomial tail = parse_poly("f*g - h^2", ring);
    return WeightedMap(std::move(src), std::move(tgt), {}, {head + tail.scaled(t)});
}

std::optional<std::vector<std::pair<std::string, Rational>>>
solve_rational_point(const Ideal& I, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    const RingPtr& ring = I.ring;
    const int n = ring->arity();

    std::vector<std::optional<Rational>> vals(static_cast<size_t>(n));
    std::vector<Polynomial> work = I.gens;
    static const Rational candidates[] = {Rational(0),     Rational(1),     Rational(-1),
                                          Rational(2),     Rational(-2),    Rational(3),
                                          Rational(-3),    Rational(1, 2),  Rational(-1, 2)};

    auto assigned_count = [&] {
        return std::count_if(vals.begin(), vals.end(), [](const auto& v) { return v.has_value(); });
    };

    while (assigned_count() < n) {
        auto G = groebner(Ideal{ring, work}, MonomialOrder::grevlex(), &bud);
        if (!G.empty() && G.front().is_constant())
            return std::nullopt; // inconsistent
        // forced assignments: univariate linear (or power) generators
        bool forced = false;
        for (const Polynomial& g : G) {
            int var = -1;
            bool simple = true;
            for (size_t v = 0; v < g.leading().mono.e.size() && simple; ++v)
                if (g.leading().mono.e[v] > 0) {
                    if (var >= 0)
                        simple = false;
                    else
                        var = static_cast<int>(v);
                }
            if (!simple || var < 0 || vals[static_cast<size_t>(var)])
                continue;
            Rational value;
            if (g.term_count() == 1) {
                value = 0; // x^k = 0
            } else if (g.term_count() == 2 && g.leading().mono.deg == 1 &&
                       g.terms()[1].mono.is_one()) {
                value = -g.terms()[1].coeff / g.leading().coeff;
            } else {
                continue;
            }
            vals[static_cast<size_t>(var)] = value;
            work.push_back(Polynomial::variable(ring, var) - Polynomial::constant(ring, value));
            forced = true;
        }
        if (forced)
            continue;
        // try small candidates on the first unassigned variable
        int var = -1;
        for (int v = 0; v < n; ++v)
            if (!vals[static_cast<size_t>(v)]) {
                var = v;
                break;
            }
        if (var < 0)
            break;
        bool placed = false;
        for (const Rational& cand : candidates) {
            std::vector<Polynomial> trial = work;
            trial.push_back(Polynomial::variable(ring, var) - Polynomial::constant(ring, cand));
            if (!is_inconsistent(Ideal{ring, trial}, &bud)) {
                vals[static_cast<size_t>(var)] = cand;
                work = std::move(trial);
                placed = true;
                break;
            }
        }
        if (!placed)
            return std::nullopt; // heuristic gives up
    }

    // verify the assignment against the original generators
    std::vector<std::optional<Polynomial>> images(static_cast<size_t>(n));
    RingPtr empty = make_ring({});
    for (int v = 0; v < n; ++v) {
        if (!vals[static_cast<size_t>(v)])
            return std::nullopt;
        images[static_cast<size_t>(v)] = Polynomial::constant(empty, *vals[static_cast<size_t>(v)]);
    }
    for (const Polynomial& g : I.gens)
        if (!substitute(g, images, empty).is_zero())
            return std::nullopt;

    std::vector<std::pair<std::string, Rational>> out;
    for (int v = 0; v < n; ++v)
        out.emplace_back(ring->var(v), *vals[static_cast<size_t>(v)]);
    return out;
}

} // namespace glvar
