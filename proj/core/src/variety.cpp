#include "glvar/variety.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "glvar/shift.hpp"

namespace glvar {

namespace {

// coordinate ring of the ambient space at a level: one block of
// monomial-coefficient coordinates per form symbol
RingPtr level_ring(const std::vector<FormSymbol>& symbols, int level) {
    std::vector<std::string> vars;
    for (const FormSymbol& s : symbols)
        for (const auto& alpha : form_coordinates(s.weight, level))
            vars.push_back(coord_name(s.name, alpha));
    return make_ring(std::move(vars));
}

// substitute index letters into a generator template, e.g.
// "x_i*y_j - x_j*y_i" with i->1, j->2 becomes "x_1*y_2 - x_2*y_1"
std::string instantiate_template(const std::string& tmpl,
                                 const std::vector<std::string>& letters,
                                 const std::vector<int>& assignment) {
    std::string out;
    size_t i = 0;
    while (i < tmpl.size()) {
        char c = tmpl[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < tmpl.size() &&
                   (std::isalnum(static_cast<unsigned char>(tmpl[i])) || tmpl[i] == '_'))
                ++i;
            std::string ident = tmpl.substr(start, i - start);
            size_t us = ident.rfind('_');
            if (us != std::string::npos && us + 1 < ident.size()) {
                std::string suffix = ident.substr(us + 1);
                for (size_t k = 0; k < letters.size(); ++k) {
                    if (suffix == letters[k]) {
                        ident = ident.substr(0, us + 1) +
                                std::to_string(assignment[k]);
                        break;
                    }
                }
            }
            out += ident;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

Polynomial minor_det(const std::vector<std::vector<Polynomial>>& m, std::vector<int> rows,
                     std::vector<int> cols, const RingPtr& ring) {
    if (rows.size() == 1)
        return m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    Polynomial det(ring);
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != k)
                sub_cols.push_back(cols[l]);
        Polynomial cof = m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[k])] *
                         minor_det(m, sub_rows, sub_cols, ring);
        if (k % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

void subsets_rec(int n, int k, int start, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int v = start; v < n; ++v) {
        acc.push_back(v);
        subsets_rec(n, k, v + 1, acc, out);
        acc.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    subsets_rec(n, k, 0, acc, out);
    return out;
}

} // namespace

LevelFamily LevelFamily::ambient(std::vector<FormSymbol> symbols) {
    LevelFamily f;
    f.kind_ = Kind::ambient;
    f.symbols_ = std::move(symbols);
    return f;
}

LevelFamily LevelFamily::point(std::vector<FormSymbol> symbols) {
    LevelFamily f;
    f.kind_ = Kind::point;
    f.symbols_ = std::move(symbols);
    return f;
}

LevelFamily LevelFamily::orbit(std::vector<FormSymbol> symbols,
                               std::vector<std::string> generator_templates,
                               std::vector<std::string> index_letters) {
    for (const FormSymbol& s : symbols)
        if (s.weight != 1)
            throw std::invalid_argument(
                "orbit families support degree-1 forms only; got weight " +
                std::to_string(s.weight));
    LevelFamily f;
    f.kind_ = Kind::orbit;
    f.symbols_ = std::move(symbols);
    f.templates_ = std::move(generator_templates);
    f.letters_ = std::move(index_letters);
    return f;
}

LevelFamily LevelFamily::minors(int r, std::string symbol) {
    if (r < 0)
        throw std::invalid_argument("minors: negative rank");
    LevelFamily f;
    f.kind_ = Kind::minors;
    f.symbols_ = {{std::move(symbol), 2}};
    f.minors_rank_ = r;
    return f;
}

LevelFamily LevelFamily::map_image(WeightedMap f) {
    LevelFamily fam;
    fam.kind_ = Kind::map_image;
    fam.symbols_ = f.target_symbols();
    fam.map_ = std::make_shared<WeightedMap>(std::move(f));
    return fam;
}

LevelFamily LevelFamily::rank_one_pair() {
    return orbit({{"x", 1}, {"y", 1}}, {"x_i*y_j - x_j*y_i"}, {"i", "j"});
}

Ideal LevelFamily::core_ideal(int level, Budget* budget) const {
    RingPtr ring = level_ring(symbols_, level);
    switch (kind_) {
    case Kind::ambient:
        return Ideal{ring, {}};
    case Kind::point: {
        std::vector<Polynomial> gens;
        for (int v = 0; v < ring->arity(); ++v)
            gens.push_back(Polynomial::variable(ring, v));
        return Ideal{ring, std::move(gens)};
    }
    case Kind::orbit: {
        std::vector<Polynomial> gens;
        std::set<std::string> seen;
        std::vector<int> assignment(letters_.size(), 1);
        for (;;) {
            for (const std::string& tmpl : templates_) {
                Polynomial g =
                    parse_poly(instantiate_template(tmpl, letters_, assignment), ring);
                if (g.is_zero())
                    continue;
                g.normalize_content();
                if (seen.insert(g.str()).second)
                    gens.push_back(std::move(g));
            }
            size_t k = 0;
            while (k < assignment.size() && assignment[k] == level)
                assignment[k++] = 1;
            if (k == assignment.size())
                break;
            ++assignment[k];
        }
        return Ideal{ring, std::move(gens)};
    }
    case Kind::minors: {
        // polarization matrix M of the quadratic form in monomial
        // coordinates: M_ii = z(2e_i), M_ij = z(e_i+e_j)/2
        const std::string& sym = symbols_.front().name;
        std::vector<std::vector<Polynomial>> m(
            static_cast<size_t>(level),
            std::vector<Polynomial>(static_cast<size_t>(level), Polynomial(ring)));
        for (int i = 0; i < level; ++i) {
            for (int j = i; j < level; ++j) {
                std::vector<int> alpha(static_cast<size_t>(level), 0);
                alpha[static_cast<size_t>(i)] += 1;
                alpha[static_cast<size_t>(j)] += 1;
                Polynomial z = Polynomial::variable(ring, coord_name(sym, alpha));
                if (i != j)
                    z = z.scaled(Rational(1, 2));
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = z;
                m[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(z);
            }
        }
        int t = minors_rank_ + 1;
        std::vector<Polynomial> gens;
        if (t <= level) {
            auto row_sets = subsets(level, t);
            for (size_t a = 0; a < row_sets.size(); ++a) {
                for (size_t b = a; b < row_sets.size(); ++b) { // symmetric matrix
                    Polynomial d = minor_det(m, row_sets[a], row_sets[b], ring);
                    if (d.is_zero())
                        continue;
                    d.normalize_content();
                    gens.push_back(std::move(d));
                }
            }
        }
        return Ideal{ring, std::move(gens)};
    }
    case Kind::map_image:
        return image_closure_level(*map_, level, budget).ideal;
    }
    throw std::logic_error("unreachable");
}

FiniteLevelVariety LevelFamily::at_level(int level, Budget* budget) const {
    if (level < 1)
        throw std::invalid_argument("at_level: level must be >= 1");
    if (shift_n_ == 0)
        return FiniteLevelVariety{tuple(), level, core_ideal(level, budget)};

    // Sh_n(X){K^d} = X{K^{n+d}} with coordinates touching the first n
    // slots relabeled as distinguished shift coordinates
    Ideal base = core_ideal(shift_n_ + level, budget);
    std::vector<std::string> vars;
    size_t next_name = 0;
    for (const FormSymbol& s : symbols_) {
        for (const auto& alpha : form_coordinates(s.weight, shift_n_ + level)) {
            std::vector<int> beta(alpha.begin(), alpha.begin() + shift_n_);
            std::vector<int> gamma(alpha.begin() + shift_n_, alpha.end());
            int beta_deg = 0;
            for (int b : beta)
                beta_deg += b;
            if (beta_deg == 0) {
                vars.push_back(coord_name(s.name, gamma));
                continue;
            }
            if (next_name < shift_names_.size()) {
                vars.push_back(shift_names_[next_name++]);
                continue;
            }
            ++next_name;
            std::string nm = s.name + "s";
            for (int b : beta)
                nm += std::to_string(b);
            int gamma_deg = 0;
            for (int g : gamma)
                gamma_deg += g;
            if (gamma_deg > 0) {
                nm += "_";
                for (int g : gamma)
                    nm += std::to_string(g);
            }
            vars.push_back(nm);
        }
    }
    RingPtr ring = make_ring(std::move(vars));
    std::vector<Polynomial> gens;
    gens.reserve(base.gens.size());
    for (const Polynomial& g : base.gens) {
        std::vector<Term> terms(g.terms().begin(), g.terms().end());
        gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return FiniteLevelVariety{tuple(), level, Ideal{ring, std::move(gens)}};
}

PartitionTuple LevelFamily::tuple() const {
    std::vector<Partition> entries;
    for (const FormSymbol& s : symbols_)
        entries.push_back(s.weight == 0 ? Partition()
                                        : Partition(std::vector<int>{s.weight}));
    PartitionTuple core(std::move(entries));
    return shift_n_ == 0 ? core : shift_tuple(shift_n_, core);
}

const std::vector<FormSymbol>& LevelFamily::symbols() const {
    return symbols_;
}

std::string LevelFamily::describe() const {
    std::string s;
    switch (kind_) {
    case Kind::ambient:
        s = "ambient " + tuple().str();
        break;
    case Kind::point:
        s = "origin in " + tuple().str();
        break;
    case Kind::orbit:
        s = "orbit family in " + tuple().str();
        break;
    case Kind::minors:
        s = "rank-<=" + std::to_string(minors_rank_) + " stratum in [[2]]";
        break;
    case Kind::map_image:
        s = "closed image of " + map_->str();
        break;
    }
    if (shift_n_ > 0)
        s = "Sh_" + std::to_string(shift_n_) + "(" + s + ")";
    return s;
}

LevelFamily LevelFamily::shifted(int n, std::vector<std::string> shift_names) const {
    if (n < 0)
        throw std::invalid_argument("shifted: negative n");
    LevelFamily f = *this;
    f.shift_n_ += n;
    f.shift_names_ = std::move(shift_names);
    return f;
}

LevelFamily shift_level(const LevelFamily& X, int n, std::vector<std::string> shift_names) {
    return X.shifted(n, std::move(shift_names));
}

long long delta(const LevelFamily& X, int d, Budget* budget) {
    return ideal_dimension(X.at_level(d, budget).ideal, budget);
}

Rational DeltaFit::eval(int d) const {
    Rational v = 0, p = 1;
    for (const Rational& c : coefficients) {
        v += c * p;
        p *= d;
    }
    return v;
}

std::string DeltaFit::poly_str() const {
    RingPtr ring = make_ring({"d"});
    std::vector<Term> terms;
    for (size_t k = 0; k < coefficients.size(); ++k) {
        if (coefficients[k] == 0)
            continue;
        terms.push_back({Monomial(std::vector<int>{static_cast<int>(k)}), coefficients[k]});
    }
    return Polynomial::from_terms(ring, std::move(terms)).str();
}

DeltaFit fit_delta(const LevelFamily& X, const std::vector<int>& fit_range,
                   const std::vector<int>& test_range, Budget* budget) {
    if (fit_range.empty())
        throw std::invalid_argument("fit_delta: empty fit range");
    for (int d : fit_range)
        for (int t : test_range)
            if (t == d)
                throw std::invalid_argument("fit_delta: fit and test ranges must be disjoint");

    // exact Lagrange interpolation
    size_t m = fit_range.size();
    std::vector<Rational> coeffs(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        long long yi = delta(X, fit_range[i], budget);
        // numerator polynomial prod_{j != i} (d - x_j), coefficient form
        std::vector<Rational> num = {Rational(1)};
        Rational denom = 1;
        for (size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            std::vector<Rational> next(num.size() + 1, Rational(0));
            for (size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= num[k] * fit_range[j];
            }
            num = std::move(next);
            denom *= Rational(fit_range[i] - fit_range[j]);
        }
        for (size_t k = 0; k < num.size(); ++k)
            coeffs[k] += Rational(static_cast<long>(yi)) * num[k] / denom;
    }
    DeltaFit fit;
    fit.coefficients = std::move(coeffs);
    fit.degree = 0;
    for (size_t k = 0; k < fit.coefficients.size(); ++k)
        if (fit.coefficients[k] != 0)
            fit.degree = static_cast<int>(k);
    fit.degree_ok = fit.degree <= X.tuple().degree();
    fit.agrees = true;
    for (int t : test_range) {
        long long actual = delta(X, t, budget);
        Rational predicted = fit.eval(t);
        fit.checks.emplace_back(t, predicted, actual);
        if (predicted != Rational(static_cast<long>(actual)))
            fit.agrees = false;
    }
    return fit;
}

FiniteLevelVariety image_closure_level(const WeightedMap& f, int n, Budget* budget) {
    LevelMap lm = instantiate_generic(f, n);
    // graph ring: inputs (and abstract coefficients) first, outputs last;
    // output names pick up an "o" when a target symbol shadows a source one
    std::vector<std::string> out_names = lm.output_names;
    for (bool collision = true; collision;) {
        collision = false;
        for (const std::string& name : out_names)
            if (lm.input_ring->index_of(name) >= 0)
                collision = true;
        if (collision)
            for (std::string& name : out_names)
                name.insert(name.begin(), 'o');
    }
    std::vector<std::string> vars = lm.input_ring->vars();
    size_t nin = vars.size();
    vars.insert(vars.end(), out_names.begin(), out_names.end());
    RingPtr graph = make_ring(vars);
    std::vector<Polynomial> gens;
    for (size_t k = 0; k < lm.outputs.size(); ++k)
        gens.push_back(Polynomial::variable(graph, out_names[k]) -
                       lm.outputs[k].map_ring(graph));
    std::vector<std::string> drop(vars.begin(), vars.begin() + static_cast<long>(nin));
    Ideal image = eliminate(Ideal{graph, std::move(gens)}, drop, budget);
    return FiniteLevelVariety{f.target_tuple(), n, std::move(image)};
}

MembershipResult image_membership(const WeightedMap& f, const std::vector<Rational>& point,
                                  int n, Budget* budget) {
    Budget local = Budget::with_default();
    Budget& bud = budget ? *budget : local;
    LevelMap lm = instantiate(f, n);
    if (point.size() != lm.outputs.size())
        throw std::invalid_argument("image_membership: expected " +
                                    std::to_string(lm.outputs.size()) + " coordinates, got " +
                                    std::to_string(point.size()));
    std::vector<Polynomial> fiber;
    for (size_t k = 0; k < lm.outputs.size(); ++k)
        fiber.push_back(lm.outputs[k] - Polynomial::constant(lm.input_ring, point[k]));
    Ideal fiber_ideal{lm.input_ring, std::move(fiber)};

    MembershipResult res;
    if (!is_inconsistent(fiber_ideal, &bud)) {
        res.status = Membership::member;
        try {
            Budget side(std::min<long long>(bud.remaining(), 20'000'000));
            res.witness = solve_rational_point(fiber_ideal, &side);
        } catch (const BudgetExhausted&) {
        }
        return res;
    }
    // not in the image; compare against the closed image (whose ring lists
    // the output coordinates positionally)
    FiniteLevelVariety closure = image_closure_level(f, n, &bud);
    RingPtr empty = make_ring({});
    std::vector<std::optional<Polynomial>> images(
        static_cast<size_t>(closure.ideal.ring->arity()));
    for (size_t k = 0; k < point.size(); ++k)
        images[k] = Polynomial::constant(empty, point[k]);
    bool on_closure = true;
    for (const Polynomial& g : closure.ideal.gens)
        if (!substitute(g, images, empty).is_zero()) {
            on_closure = false;
            break;
        }
    res.status = on_closure ? Membership::closure_only : Membership::non_member;
    return res;
}

MappingSpaceResult mapping_space(const PartitionTuple& lam, const LevelFamily& X, int level,
                                 Budget* budget) {
    if (!lam.is_pure())
        throw std::invalid_argument("mapping_space: lam must be pure");
    for (const Partition& p : lam.entries())
        if (p.rows() > 1)
            throw std::invalid_argument("mapping_space: multi-row entry " + p.str());
    if (X.shift_offset() != 0)
        throw std::invalid_argument("mapping_space: shifted families unsupported");

    // source symbols named v1, v2, ...; keep clear of X's form names
    std::string prefix = "v";
    auto clash = [&](const std::string& p) {
        for (const FormSymbol& s : X.symbols())
            if (s.name.compare(0, p.size(), p) == 0 &&
                s.name.find_first_not_of("0123456789", p.size()) == std::string::npos)
                return true;
        return false;
    };
    while (clash(prefix))
        prefix += "v";
    std::vector<FormSymbol> src;
    for (int i = 0; i < lam.count(); ++i)
        src.push_back({prefix + std::to_string(i + 1), lam.entry(i).size()});

    auto [gen, csyms] = generic_map(src, X.symbols(), "c");
    RingPtr coeff_ring = make_ring(csyms);

    auto conditions = [&](int N) -> Ideal {
        LevelMap lm = instantiate_generic(gen, N);
        Ideal xn = X.at_level(N, budget).ideal;
        // substitute the map's coordinate functions into X's generators
        std::vector<std::optional<Polynomial>> images(
            static_cast<size_t>(xn.ring->arity()));
        for (size_t k = 0; k < lm.output_names.size(); ++k) {
            int idx = xn.ring->index_of(lm.output_names[k]);
            if (idx < 0)
                throw std::logic_error("mapping_space: coordinate mismatch");
            images[static_cast<size_t>(idx)] = lm.outputs[k];
        }
        const size_t nc = csyms.size();
        const size_t nv = lm.input_ring->vars().size() - nc; // source coords first
        std::vector<Polynomial> gens;
        std::set<std::string> seen;
        for (const Polynomial& g : xn.gens) {
            Polynomial pulled = substitute(g, images, lm.input_ring);
            // identical vanishing: every source-coordinate monomial's
            // coefficient must be zero
            std::vector<std::pair<Monomial, std::vector<Term>>> groups;
            for (const Term& t : pulled.terms()) {
                std::vector<int> ve(t.mono.e.begin(), t.mono.e.begin() + static_cast<long>(nv));
                std::vector<int> ce(t.mono.e.begin() + static_cast<long>(nv), t.mono.e.end());
                Monomial vkey{std::vector<int>(ve)};
                auto it = std::find_if(groups.begin(), groups.end(),
                                       [&](const auto& gr) { return gr.first == vkey; });
                if (it == groups.end()) {
                    groups.push_back({vkey, {}});
                    it = std::prev(groups.end());
                }
                it->second.push_back({Monomial(std::move(ce)), t.coeff});
            }
            for (auto& [vkey, terms] : groups) {
                Polynomial cond = Polynomial::from_terms(coeff_ring, std::move(terms));
                if (cond.is_zero())
                    continue;
                cond.normalize_content();
                if (seen.insert(cond.str()).second)
                    gens.push_back(std::move(cond));
            }
        }
        return Ideal{coeff_ring, std::move(gens)};
    };

    MappingSpaceResult res;
    res.level = level;
    res.symbols = csyms;
    res.ideal = conditions(level);
    Ideal next = conditions(level + 1);
    res.stabilized = ideal_equal(res.ideal, next, budget);
    return res;
}

FiniteLevelVariety minors_stratum(int r, int n) {
    return LevelFamily::minors(r).at_level(n);
}

} // namespace glvar
