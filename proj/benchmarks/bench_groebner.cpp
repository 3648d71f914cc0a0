#include <benchmark/benchmark.h>

#include "glvar/equimap.hpp"
#include "glvar/groebner.hpp"
#include "glvar/variety.hpp"

using namespace glvar;

namespace {

Ideal katsura3() {
    RingPtr r = make_ring({"a", "b", "c", "d"});
    return make_ideal(r, {parse_poly("a + 2*b + 2*c + 2*d - 1", r),
                          parse_poly("a^2 + 2*b^2 + 2*c^2 + 2*d^2 - a", r),
                          parse_poly("2*a*b + 2*b*c + 2*c*d - b", r),
                          parse_poly("b^2 + 2*a*c + 2*b*d - c", r)});
}

Ideal cyclic4() {
    RingPtr r = make_ring({"a", "b", "c", "d"});
    return make_ideal(r, {parse_poly("a + b + c + d", r),
                          parse_poly("a*b + b*c + c*d + d*a", r),
                          parse_poly("a*b*c + b*c*d + c*d*a + d*a*b", r),
                          parse_poly("a*b*c*d - 1", r)});
}

} // namespace

static void bm_groebner_katsura3(benchmark::State& state) {
    Ideal I = katsura3();
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner(I, MonomialOrder::grevlex()));
}
BENCHMARK(bm_groebner_katsura3);

static void bm_groebner_cyclic4(benchmark::State& state) {
    Ideal I = cyclic4();
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner(I, MonomialOrder::grevlex()));
}
BENCHMARK(bm_groebner_cyclic4);

static void bm_saturate_shifted_rank1(benchmark::State& state) {
    LevelFamily sh = shift_level(LevelFamily::rank_one_pair(), 1, {"xi", "eta"});
    FiniteLevelVariety v = sh.at_level(static_cast<int>(state.range(0)));
    Polynomial eta = Polynomial::variable(v.ideal.ring, "eta");
    for (auto _ : state)
        benchmark::DoNotOptimize(saturate(v.ideal, eta));
}
BENCHMARK(bm_saturate_shifted_rank1)->Arg(2)->Arg(3);

static void bm_not_closed_certificate(benchmark::State& state) {
    WeightedMap psi =
        WeightedMap::from_text({{"x", 1}, {"y", 1}, {"f", 2}, {"g", 2}, {"h", 2}},
                               {{"q", 4}}, {"x^2*f + y^2*g + x*y*h"});
    WeightedMap phi =
        WeightedMap::from_text({{"f", 2}, {"g", 2}, {"h", 2}}, {{"q", 4}}, {"f*g - h^2"});
    for (auto _ : state) {
        auto [gamma, cs] = generic_map(psi.source_symbols(), phi.source_symbols(), "c");
        Ideal eqs = equate_maps(psi, compose(phi, gamma));
        benchmark::DoNotOptimize(is_inconsistent(eqs));
    }
}
BENCHMARK(bm_not_closed_certificate);

static void bm_image_closure_squaring(benchmark::State& state) {
    WeightedMap square = WeightedMap::from_text({{"v", 1}}, {{"u", 2}}, {"v^2"});
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(image_closure_level(square, n));
}
BENCHMARK(bm_image_closure_squaring)->Arg(2)->Arg(3)->Arg(4);
