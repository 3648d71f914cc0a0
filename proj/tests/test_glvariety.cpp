#include <doctest.h>

#include <random>

#include "glvar/json_io.hpp"
#include "glvar/schur.hpp"
#include "glvar/variety.hpp"

using namespace glvar;

namespace {

std::vector<FormSymbol> syms(std::initializer_list<std::pair<const char*, int>> list) {
    std::vector<FormSymbol> out;
    for (const auto& [name, w] : list)
        out.push_back({name, w});
    return out;
}

} // namespace

TEST_CASE("delta of ambient spaces is the representation dimension") {
    LevelFamily amb2 = LevelFamily::ambient(syms({{"u", 2}}));
    CHECK(delta(amb2, 3) == 6); // C(4,2)
    for (int d = 1; d <= 5; ++d)
        CHECK(delta(amb2, d) == d * (d + 1) / 2);
    LevelFamily amb11 = LevelFamily::ambient(syms({{"x", 1}, {"y", 1}}));
    for (int d = 1; d <= 5; ++d)
        CHECK(delta(amb11, d) == 2 * d);
}

TEST_CASE("delta of the rank-one pair family") {
    LevelFamily X = LevelFamily::rank_one_pair();
    CHECK(delta(X, 3) == 4); // cone over Segre P^1 x P^2
    for (int d = 1; d <= 4; ++d)
        CHECK(delta(X, d) == d + 1);
}

TEST_CASE("rank-one ideal agrees with the parameterization oracle") {
    // closed image of (alpha, beta, v) -> (alpha v, beta v)
    WeightedMap par = WeightedMap::from_text(
        syms({{"alpha", 0}, {"beta", 0}, {"v", 1}}), syms({{"x", 1}, {"y", 1}}),
        {"alpha*v", "beta*v"});
    for (int d = 2; d <= 3; ++d) {
        FiniteLevelVariety img = image_closure_level(par, d);
        FiniteLevelVariety fam = LevelFamily::rank_one_pair().at_level(d);
        CHECK(ideal_equal(img.ideal, fam.ideal));
    }
    // at level 2 the ideal is the single minor
    FiniteLevelVariety img2 = image_closure_level(par, 2);
    RingPtr r = img2.ideal.ring;
    CHECK(ideal_equal(img2.ideal,
                      make_ideal(r, {parse_poly("x_1*y_2 - x_2*y_1", r)})));
}

TEST_CASE("delta of the origin is zero") {
    LevelFamily pt = LevelFamily::point(syms({{"x", 1}}));
    for (int d = 1; d <= 4; ++d)
        CHECK(delta(pt, d) == 0);
}

TEST_CASE("fit_delta: rank-one family and ambient spaces") {
    DeltaFit fit = fit_delta(LevelFamily::rank_one_pair(), {2, 3}, {4});
    CHECK(fit.agrees);
    CHECK(fit.degree == 1);
    CHECK(fit.degree_ok);
    CHECK(fit.eval(7) == 8); // p(d) = d + 1
    CHECK(fit.poly_str() == "d + 1");

    DeltaFit lin = fit_delta(LevelFamily::ambient(syms({{"x", 1}})), {1, 2}, {3});
    CHECK(lin.agrees);
    CHECK(lin.poly_str() == "d");

    DeltaFit quad = fit_delta(LevelFamily::ambient(syms({{"u", 2}})), {2, 3, 4}, {5});
    CHECK(quad.agrees);
    CHECK(quad.degree == 2);
    CHECK(quad.degree_ok);
    CHECK(quad.eval(10) == 55); // d(d+1)/2
    CHECK(quad.poly_str() == "1/2*d^2 + 1/2*d");

    CHECK_THROWS_AS(fit_delta(LevelFamily::rank_one_pair(), {2, 3}, {3}),
                    std::invalid_argument);
}

TEST_CASE("image closure: identity and diagonal") {
    WeightedMap id = WeightedMap::identity(syms({{"f", 2}}));
    CHECK(image_closure_level(id, 2).ideal.gens.empty());

    WeightedMap diag = WeightedMap::from_text(syms({{"v", 1}}), syms({{"x", 1}, {"y", 1}}),
                                              {"v", "v"});
    FiniteLevelVariety img = image_closure_level(diag, 2);
    RingPtr r = img.ideal.ring;
    CHECK(ideal_equal(img.ideal, make_ideal(r, {parse_poly("x_1 - y_1", r),
                                                parse_poly("x_2 - y_2", r)})));
}

TEST_CASE("image closure contains sampled image points") {
    WeightedMap phi = WeightedMap::from_text(syms({{"f", 2}, {"g", 2}, {"h", 2}}),
                                             syms({{"q", 4}}), {"f*g - h^2"});
    int n = 2;
    LevelMap lm = instantiate(phi, n);
    FiniteLevelVariety closure = image_closure_level(phi, n);
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> val(-4, 4);
    RingPtr empty = make_ring({});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::optional<Polynomial>> in(
            static_cast<size_t>(lm.input_ring->arity()));
        for (size_t v = 0; v < in.size(); ++v)
            in[v] = Polynomial::constant(empty, Rational(val(rng)));
        // push the sample through the map, then check every closure generator
        std::vector<std::optional<Polynomial>> out(
            static_cast<size_t>(closure.ideal.ring->arity()));
        for (size_t k = 0; k < lm.outputs.size(); ++k) {
            Rational value = substitute(lm.outputs[k], in, empty).is_zero()
                                 ? Rational(0)
                                 : substitute(lm.outputs[k], in, empty).terms()[0].coeff;
            int idx = closure.ideal.ring->index_of(lm.output_names[k]);
            out[static_cast<size_t>(idx)] = Polynomial::constant(empty, value);
        }
        for (const Polynomial& g : closure.ideal.gens)
            CHECK(substitute(g, out, empty).is_zero());
    }
}

TEST_CASE("image membership three-valued answers") {
    WeightedMap phi = WeightedMap::from_text(syms({{"f", 2}, {"g", 2}, {"h", 2}}),
                                             syms({{"q", 4}}), {"f*g - h^2"});
    // x^4 = phi(x^2, x^2, 0): binary quartic coords ordered
    // x1^4 > x1^3 x2 > x1^2 x2^2 > x1 x2^3 > x2^4
    std::vector<Rational> x4 = {1, 0, 0, 0, 0};
    MembershipResult m = image_membership(phi, x4, 2);
    CHECK(m.status == Membership::member);
    std::vector<Rational> zero(5, Rational(0));
    CHECK(image_membership(phi, zero, 2).status == Membership::member);
    CHECK_THROWS_AS(image_membership(phi, {1, 0}, 2), std::invalid_argument);

    // (alpha, v) -> (alpha v, v): x = (1,0), y = (0,0) lies on the closure
    // (the minor vanishes) but has no preimage since y = v = 0 forces x = 0
    WeightedMap cone = WeightedMap::from_text(syms({{"alpha", 0}, {"v", 1}}),
                                              syms({{"x", 1}, {"y", 1}}), {"alpha*v", "v"});
    MembershipResult c =
        image_membership(cone, {Rational(1), Rational(0), Rational(0), Rational(0)}, 2);
    CHECK(c.status == Membership::closure_only);
    // a point off the closure: minor = 1
    MembershipResult nm =
        image_membership(cone, {Rational(1), Rational(0), Rational(0), Rational(1)}, 2);
    CHECK(nm.status == Membership::non_member);
    // a genuine member with a rational witness
    MembershipResult ok =
        image_membership(cone, {Rational(2), Rational(4), Rational(1), Rational(2)}, 2);
    CHECK(ok.status == Membership::member);
    REQUIRE(ok.witness.has_value());
}

TEST_CASE("membership consistency on pseudo-random quartics") {
    WeightedMap phi = WeightedMap::from_text(syms({{"f", 2}, {"g", 2}, {"h", 2}}),
                                             syms({{"q", 4}}), {"f*g - h^2"});
    FiniteLevelVariety closure = image_closure_level(phi, 2);
    std::mt19937 rng(79);
    std::uniform_int_distribution<int> val(-3, 3);
    RingPtr empty = make_ring({});
    int members = 0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> pt;
        for (int k = 0; k < 5; ++k)
            pt.push_back(Rational(val(rng)));
        MembershipResult r = image_membership(phi, pt, 2);
        if (r.status == Membership::member)
            ++members;
        // member implies the point satisfies every closure generator
        if (r.status == Membership::member) {
            std::vector<std::optional<Polynomial>> out(
                static_cast<size_t>(closure.ideal.ring->arity()));
            for (size_t k = 0; k < pt.size(); ++k)
                out[k] = Polynomial::constant(empty, pt[k]);
            for (const Polynomial& g : closure.ideal.gens)
                CHECK(substitute(g, out, empty).is_zero());
        }
    }
    CHECK(members >= 3); // the source dimension exceeds the target dimension
}

TEST_CASE("mapping space of the extended example") {
    MappingSpaceResult ms = mapping_space(parse_tuple("[[1]]"), LevelFamily::rank_one_pair(), 3);
    CHECK(ms.symbols.size() == 2);
    CHECK(ms.ideal.gens.empty()); // the space A^2
    CHECK(ms.stabilized);
    CHECK(ms.level == 3);
}

TEST_CASE("mapping space into ambient spaces") {
    // maps v -> c v^2 into A^{[(2)]}: one free coefficient
    MappingSpaceResult ms =
        mapping_space(parse_tuple("[[1]]"), LevelFamily::ambient(syms({{"u", 2}})), 3);
    CHECK(ms.symbols.size() == 1);
    CHECK(ms.ideal.gens.empty());
    CHECK(ms.stabilized);

    // only the zero map A^{[(2)]} -> A^{[(1)]}
    MappingSpaceResult none =
        mapping_space(parse_tuple("[[2]]"), LevelFamily::ambient(syms({{"x", 1}})), 3);
    CHECK(none.symbols.empty());
    CHECK(none.ideal.gens.empty());
    CHECK(none.stabilized);
}

TEST_CASE("mapping space with nontrivial conditions") {
    // maps from A^{[(1)]} into the origin: all coefficients must vanish
    MappingSpaceResult ms =
        mapping_space(parse_tuple("[[1]]"), LevelFamily::point(syms({{"x", 1}})), 2);
    CHECK(ms.symbols.size() == 1);
    REQUIRE(ms.ideal.gens.size() == 1);
    CHECK(ms.ideal.gens[0].str() == "c11");
    CHECK(ms.stabilized);
}

TEST_CASE("shift_level relabels the extended example") {
    LevelFamily sh = shift_level(LevelFamily::rank_one_pair(), 1, {"xi", "eta"});
    CHECK(sh.tuple() == parse_tuple("[[1],[1],[],[]]"));
    FiniteLevelVariety v2 = sh.at_level(2);
    RingPtr r = v2.ideal.ring;
    CHECK(r->index_of("xi") >= 0);
    CHECK(r->index_of("eta") >= 0);
    CHECK(ideal_member(parse_poly("xi*y_1 - eta*x_1", r), v2.ideal));
    CHECK(ideal_member(parse_poly("xi*y_2 - eta*x_2", r), v2.ideal));
    CHECK(ideal_member(parse_poly("x_1*y_2 - x_2*y_1", r), v2.ideal));

    // saturating by eta agrees with the saturation of the two-generator ideal
    Ideal sat = saturate(v2.ideal, parse_poly("eta", r));
    Ideal two = make_ideal(r, {parse_poly("eta*x_1 - xi*y_1", r),
                               parse_poly("eta*x_2 - xi*y_2", r)});
    CHECK(ideal_equal(sat, saturate(two, parse_poly("eta", r))));

    // delta matches the unshifted family one level up
    for (int d = 1; d <= 3; ++d)
        CHECK(delta(sh, d) == delta(LevelFamily::rank_one_pair(), d + 1));
}

TEST_CASE("shift_level of a single standard form") {
    LevelFamily sh = shift_level(LevelFamily::ambient(syms({{"x", 1}})), 1);
    for (int d = 1; d <= 3; ++d) {
        FiniteLevelVariety v = sh.at_level(d);
        CHECK(v.ideal.ring->arity() == d + 1); // one distinguished coordinate
        CHECK(v.ideal.ring->index_of("xs1") >= 0);
        CHECK(v.ideal.gens.empty());
    }
    // composing shifts accumulates the offset
    LevelFamily sh2 = shift_level(sh, 2);
    CHECK(sh2.shift_offset() == 3);
    CHECK(sh2.at_level(1).ideal.ring->arity() == 4);
}

TEST_CASE("minors strata") {
    // r = 0: the origin
    FiniteLevelVariety origin = minors_stratum(0, 2);
    RingPtr r = origin.ideal.ring;
    std::vector<Polynomial> coords;
    for (int v = 0; v < r->arity(); ++v)
        coords.push_back(Polynomial::variable(r, v));
    CHECK(ideal_equal(origin.ideal, make_ideal(r, coords)));
    // r >= n: the whole space
    CHECK(minors_stratum(2, 2).ideal.gens.empty());
    CHECK(minors_stratum(5, 3).ideal.gens.empty());
    // r = 1, n = 3: dimension 3
    CHECK(ideal_dimension(minors_stratum(1, 3).ideal) == 3);

    // chain: the rank-<=r stratum contains the rank-<=(r-1) stratum;
    // generator membership in the reverse direction of ideals
    for (int n = 2; n <= 3; ++n) {
        for (int rk = 0; rk + 1 <= n; ++rk) {
            FiniteLevelVariety small = minors_stratum(rk, n);
            FiniteLevelVariety big = minors_stratum(rk + 1, n);
            for (const Polynomial& g : big.ideal.gens)
                CHECK(ideal_member(g.map_ring(small.ideal.ring), small.ideal));
        }
    }
}

TEST_CASE("minors stratum equals the closed image of the squaring map") {
    WeightedMap square = WeightedMap::from_text(syms({{"v", 1}}), syms({{"u", 2}}), {"v^2"});
    for (int n = 2; n <= 3; ++n) {
        FiniteLevelVariety img = image_closure_level(square, n);
        FiniteLevelVariety str = minors_stratum(1, n);
        CHECK(ideal_equal(img.ideal, str.ideal));
    }
}

TEST_CASE("level family JSON round trip") {
    Json j = Json::parse(R"({
        "tuple": [[1],[1]],
        "recipe": {"kind": "orbit",
                   "generators": ["x_i*y_j - x_j*y_i"],
                   "indices": ["i", "j"]}
    })");
    LevelFamily fam = family_from_json(j);
    CHECK(ideal_equal(fam.at_level(3).ideal, LevelFamily::rank_one_pair().at_level(3).ideal));

    Json jm = Json::parse(R"({"recipe": {"kind": "minors", "r": 1}})");
    LevelFamily m = family_from_json(jm);
    CHECK(ideal_equal(m.at_level(3).ideal, minors_stratum(1, 3).ideal));
}

TEST_CASE("map JSON uses declaration order for default symbols") {
    Json j = Json::parse(R"({
        "source": [[1],[1],[2],[2],[2]],
        "target": [[4]],
        "bodies": ["x^2*g + y^2*f - 2*x*y*h"]
    })");
    WeightedMap f = map_from_json(j);
    CHECK(f.source_symbols()[0].name == "x");
    CHECK(f.source_symbols()[4].name == "h");
    CHECK(f.bodies()[0] == phi_family(0).bodies()[0].map_ring(f.body_ring()));
    WeightedMap round = map_from_json(map_to_json(f));
    CHECK(round.bodies()[0] == f.bodies()[0].map_ring(round.body_ring()));
}

TEST_CASE("delta of ambient spaces matches Schur dimensions for mixed tuples") {
    LevelFamily amb = LevelFamily::ambient(syms({{"a", 3}, {"b", 2}, {"c", 1}}));
    for (int d = 1; d <= 5; ++d) {
        long long expected = schur_dim(Partition(std::vector<int>{3}), d) +
                             schur_dim(Partition(std::vector<int>{2}), d) +
                             schur_dim(Partition(std::vector<int>{1}), d);
        CHECK(delta(amb, d) == expected);
    }
}

TEST_CASE("level ideals embed one level up under the coordinate inclusion") {
    // a level-n generator, with its coordinates reread at level n+1 (extra
    // variable exponent zero), lies in the level-(n+1) ideal
    auto embed_check = [](const LevelFamily& X, int n) {
        FiniteLevelVariety lo = X.at_level(n);
        FiniteLevelVariety hi = X.at_level(n + 1);
        // map coordinate names: block structure per symbol, exponent
        // vector extended by a trailing zero
        std::vector<std::optional<Polynomial>> images(
            static_cast<size_t>(lo.ideal.ring->arity()));
        size_t lo_pos = 0;
        for (const FormSymbol& s : X.symbols()) {
            for (const auto& alpha : form_coordinates(s.weight, n)) {
                std::vector<int> up(alpha);
                up.push_back(0);
                images[lo_pos++] =
                    Polynomial::variable(hi.ideal.ring, coord_name(s.name, up));
            }
        }
        for (const Polynomial& g : lo.ideal.gens)
            CHECK(ideal_member(substitute(g, images, hi.ideal.ring), hi.ideal));
    };
    embed_check(LevelFamily::rank_one_pair(), 2);
    embed_check(LevelFamily::minors(1), 2);
    embed_check(LevelFamily::minors(2), 3);
}
