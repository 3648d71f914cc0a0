#include <doctest.h>

#include <algorithm>
#include <random>

#include "glvar/partition.hpp"

using namespace glvar;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

PartitionTuple T(std::vector<Partition> entries) {
    return PartitionTuple(std::move(entries));
}

Partition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(0, max_size);
    int remaining = size_dist(rng);
    std::vector<int> parts;
    int cap = remaining;
    while (remaining > 0) {
        std::uniform_int_distribution<int> part(1, cap);
        int p = part(rng);
        parts.push_back(p);
        remaining -= p;
        cap = std::min(cap, p);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

PartitionTuple random_tuple(std::mt19937& rng, int max_entries, int max_size) {
    std::uniform_int_distribution<int> count(0, max_entries);
    std::vector<Partition> entries;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        entries.push_back(random_partition(rng, max_size));
    return PartitionTuple(std::move(entries));
}

} // namespace

TEST_CASE("partition validation and basics") {
    CHECK(P({}).empty());
    CHECK(P({}).size() == 0);
    CHECK(P({2, 1}).size() == 3);
    CHECK(P({3, 3, 1}).rows() == 3);
    CHECK(P({2, 0, 0}) == P({2})); // trailing zeros stripped
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
    CHECK(P({2, 1}).conjugate() == P({2, 1}));
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({1, 1}).fits_inside(P({2, 1})));
    CHECK_FALSE(P({2, 2}).fits_inside(P({3, 1})));
}

TEST_CASE("magnitude counts entries by size") {
    CHECK(magnitude(T({P({2}), P({2}), P({2})})) == Magnitude({0, 0, 3}));
    CHECK(magnitude(T({})) == Magnitude(std::vector<long>{}));
    CHECK(magnitude(T({P({1}), P({1}), P({2}), P({2}), P({2})})) == Magnitude({0, 2, 3}));
    // empty partitions count at index 0
    CHECK(magnitude(T({P({}), P({1})})) == Magnitude({1, 1}));
}

TEST_CASE("magnitude comparison is lexicographic from the top") {
    CHECK(compare_magnitude(Magnitude({0, 0, 3}), Magnitude({0, 2, 3})) ==
          std::strong_ordering::less);
    CHECK(compare_magnitude(Magnitude({0, 1}), Magnitude({0, 1})) ==
          std::strong_ordering::equal);
    // (5) vs (0,1): they disagree at index 1 where 0 < 1
    CHECK(compare_magnitude(Magnitude({5}), Magnitude({0, 1})) == std::strong_ordering::less);
    CHECK(compare_magnitude(Magnitude({1}), Magnitude(std::vector<long>{})) == std::strong_ordering::greater);
}

TEST_CASE("magnitude comparison is a total order consistent with sorting") {
    std::mt19937 rng(7);
    std::vector<Magnitude> ms;
    for (int i = 0; i < 40; ++i)
        ms.push_back(magnitude(random_tuple(rng, 5, 4)));
    std::sort(ms.begin(), ms.end(), [](const Magnitude& a, const Magnitude& b) {
        return compare_magnitude(a, b) == std::strong_ordering::less;
    });
    for (size_t i = 0; i + 1 < ms.size(); ++i)
        CHECK(compare_magnitude(ms[i], ms[i + 1]) != std::strong_ordering::greater);
    // antisymmetry
    for (size_t i = 0; i < ms.size(); i += 3)
        for (size_t j = 0; j < ms.size(); j += 5) {
            auto ab = compare_magnitude(ms[i], ms[j]);
            auto ba = compare_magnitude(ms[j], ms[i]);
            if (ab == std::strong_ordering::less)
                CHECK(ba == std::strong_ordering::greater);
            if (ab == std::strong_ordering::equal)
                CHECK(ms[i] == ms[j]);
        }
}

TEST_CASE("tuple containment respects multiplicity") {
    CHECK(contains(T({P({2}), P({2}), P({1})}), T({P({2}), P({1})})));
    CHECK_FALSE(contains(T({P({2})}), T({P({2}), P({2})})));
    CHECK(contains(T({P({3, 1})}), T({})));
    CHECK(contains(T({}), T({})));
}

TEST_CASE("tuple union is a multiset union") {
    CHECK(tuple_union(T({P({2})}), T({P({1}), P({1})})) == T({P({2}), P({1}), P({1})}));
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        PartitionTuple a = random_tuple(rng, 4, 4);
        PartitionTuple b = random_tuple(rng, 4, 4);
        PartitionTuple u = tuple_union(a, b);
        CHECK(u.count() == a.count() + b.count());
        CHECK(magnitude(u) == magnitude_sum(magnitude(a), magnitude(b)));
        CHECK(tuple_union(a, T({})) == a);
        CHECK(contains(u, a));
        CHECK(contains(u, b));
        CHECK(tuple_minus(u, b) == a);
    }
}

TEST_CASE("mutual containment is multiset equality") {
    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        PartitionTuple a = random_tuple(rng, 4, 3);
        PartitionTuple b = random_tuple(rng, 4, 3);
        CHECK((contains(a, b) && contains(b, a)) == (a == b));
    }
}

TEST_CASE("tuple purity and degree") {
    CHECK(T({}).is_pure());
    CHECK(T({P({2}), P({1})}).is_pure());
    CHECK_FALSE(T({P({2}), P({})}).is_pure());
    CHECK(T({}).degree() == 0);
    CHECK(T({P({2, 1}), P({4})}).degree() == 4);
}

TEST_CASE("text grammar round-trips") {
    CHECK(parse_partition("[2,1]") == P({2, 1}));
    CHECK(parse_partition("[]") == P({}));
    CHECK(parse_partition(" [ 3 , 1 ] ") == P({3, 1}));
    CHECK(parse_tuple("[[2],[1,1]]") == T({P({2}), P({1, 1})}));
    CHECK(parse_tuple("[]") == T({}));
    CHECK(parse_tuple("[[]]") == T({P({})}));
    CHECK(parse_tuple("[[2],[1,1]]").str() == "[[2],[1,1]]");

    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        PartitionTuple t = random_tuple(rng, 5, 5);
        CHECK(parse_tuple(t.str()) == t);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_partition("[2,"), ParseError);
    CHECK_THROWS_AS(parse_partition("[1,2]"), ParseError); // increasing
    CHECK_THROWS_AS(parse_tuple("[[2],"), ParseError);
    CHECK_THROWS_AS(parse_tuple("[[2]] extra"), ParseError);
    try {
        parse_tuple("[[2],[1,x]]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("canonical storage sorts descending by size then parts") {
    PartitionTuple t = parse_tuple("[[1],[2,1],[3],[]]");
    CHECK(t.str() == "[[3],[2,1],[1],[]]");
    CHECK(t == parse_tuple("[[],[3],[1],[2,1]]")); // order-insensitive equality
}

TEST_CASE("subtuple enumeration") {
    PartitionTuple t = parse_tuple("[[1],[1],[2]]");
    auto subs = subtuples(t);
    CHECK(subs.size() == 6); // (0..2 copies of [1]) x (0..1 copies of [2])
    for (const auto& s : subs)
        CHECK(contains(t, s));
}
