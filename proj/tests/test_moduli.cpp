#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hek/moduli.hpp"

using namespace hek;

namespace {

P1Point fin(long n, long d = 1) { return P1Point::finite(Rat(n, d)); }
const P1Point inf = P1Point::infinity();

BranchSet set_of(std::vector<P1Point> pts) { return BranchSet(std::move(pts)); }

MobiusMap random_mobius(std::mt19937_64& rng) {
    for (;;) {
        const Rat a(static_cast<long>(rng() % 11) - 5), b(static_cast<long>(rng() % 11) - 5);
        const Rat c(static_cast<long>(rng() % 11) - 5), d(static_cast<long>(rng() % 11) - 5);
        if (a * d - b * c != 0) return MobiusMap(a, b, c, d);
    }
}

BranchSet random_set(std::mt19937_64& rng) {
    std::vector<P1Point> pts;
    while (pts.size() < 6) {
        const P1Point p = rng() % 8 == 0
                              ? P1Point::infinity()
                              : fin(static_cast<long>(rng() % 41) - 20,
                                    static_cast<long>(rng() % 4) + 1);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return BranchSet(std::move(pts));
}

}  // namespace

TEST_CASE("P1 points order with infinity first") {
    CHECK(inf < fin(-100));
    CHECK(fin(-1) < fin(1, 2));
    CHECK_FALSE(fin(1, 2) < fin(1, 2));
    CHECK(fin(2, 4) == fin(1, 2));
    CHECK_THROWS_AS(inf.value(), std::domain_error);
    CHECK_THROWS_AS(P1Point::from_pair(Rat(0), Rat(0)), std::invalid_argument);
    CHECK(P1Point::from_pair(Rat(3), Rat(0)) == inf);
    CHECK(P1Point::from_pair(Rat(3), Rat(6)) == fin(1, 2));
}

TEST_CASE("Mobius maps normalize to a canonical integral form") {
    CHECK(MobiusMap(Rat(1, 2), 0, 0, 1) == MobiusMap(1, 0, 0, 2));
    CHECK(MobiusMap(-1, 0, 0, -2) == MobiusMap(1, 0, 0, 2));
    CHECK(MobiusMap().is_identity());
    CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), std::invalid_argument);

    const MobiusMap m(3, 1, 1, 0);
    CHECK(m.inverse().after(m).is_identity());
    CHECK(m.after(m.inverse()).is_identity());
}

TEST_CASE("Mobius action on P^1") {
    const MobiusMap half(1, 0, 0, 2);  // t -> t/2
    CHECK(half(fin(3)) == fin(3, 2));
    CHECK(half(inf) == inf);

    const MobiusMap invert(0, 1, 1, 0);  // t -> 1/t
    CHECK(invert(fin(0)) == inf);
    CHECK(invert(inf) == fin(0));
    CHECK(invert(fin(2, 7)) == fin(7, 2));
}

TEST_CASE("mobius_through hits the prescribed frame") {
    SECTION("identity frame") {
        const MobiusMap m = mobius_through(fin(0), fin(1), inf);
        CHECK(m.is_identity());
    }
    SECTION("reflection") {
        const MobiusMap m = mobius_through(fin(1), fin(0), inf);
        CHECK(m(fin(0)) == fin(1));
        CHECK(m(fin(1)) == fin(0));
        CHECK(m(inf) == inf);
        CHECK(m == MobiusMap(-1, 1, 0, 1));  // 1 - t
    }
    SECTION("scaling") {
        const MobiusMap m = mobius_through(fin(0), fin(1, 2), inf);
        CHECK(m == MobiusMap(1, 0, 0, 2));
    }
    SECTION("generic frames on random triples") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 50; ++k) {
            const BranchSet s = random_set(rng);
            const auto& p = s.points();
            const MobiusMap m = mobius_through(p[0], p[1], p[2]);
            CHECK(m(fin(0)) == p[0]);
            CHECK(m(fin(1)) == p[1]);
            CHECK(m(inf) == p[2]);
        }
    }
    SECTION("degenerate frame throws") {
        CHECK_THROWS_AS(mobius_through(fin(0), fin(0), inf), std::invalid_argument);
    }
}

TEST_CASE("branch sets validate") {
    CHECK_THROWS_AS(set_of({fin(0), fin(1)}), std::invalid_argument);
    CHECK_THROWS_AS(set_of({fin(0), fin(1), fin(1), fin(2)}), std::invalid_argument);
    const BranchSet s = set_of({fin(3), inf, fin(0)});
    CHECK(s.points().front() == inf);  // sorted, infinity first
    CHECK(s.contains(fin(3)));
    CHECK_FALSE(s.contains(fin(4)));
}

TEST_CASE("isomorphism witness on the worked example") {
    const BranchSet lhs = set_of({fin(0), fin(1), inf, fin(2), fin(3), fin(4)});
    const BranchSet rhs = set_of({fin(0), fin(1), inf, fin(1, 2), fin(3, 2), fin(2)});

    const auto w = is_isomorphic(lhs, rhs);
    REQUIRE(w.has_value());
    CHECK(*w == MobiusMap(1, 0, 0, 2));  // t -> t/2
    CHECK(apply(*w, lhs) == rhs);
}

TEST_CASE("self isomorphism returns the identity first") {
    const BranchSet s = set_of({fin(0), fin(1), inf, fin(2), fin(3), fin(4)});
    const auto w = is_isomorphic(s, s);
    REQUIRE(w.has_value());
    CHECK(w->is_identity());
}

TEST_CASE("inequivalent sets have no witness and different keys") {
    const BranchSet lhs = set_of({fin(0), fin(1), inf, fin(2), fin(3), fin(4)});
    const BranchSet rhs = set_of({fin(0), fin(1), inf, fin(2), fin(3), fin(9, 2)});
    CHECK_FALSE(is_isomorphic(lhs, rhs).has_value());
    CHECK(canonical_key(lhs) != canonical_key(rhs));
}

TEST_CASE("canonical key is a complete Mobius invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const BranchSet s = random_set(rng);
        const MobiusMap m = random_mobius(rng);
        const BranchSet moved = apply(m, s);

        CHECK(canonical_key(s) == canonical_key(moved));

        const auto w = is_isomorphic(s, moved);
        REQUIRE(w.has_value());
        CHECK(apply(*w, s) == moved);

        const BranchSet other = random_set(rng);
        const bool same_key = canonical_key(s) == canonical_key(other);
        CHECK(same_key == is_isomorphic(s, other).has_value());
    }
}

TEST_CASE("key size and membership") {
    const BranchSet s = set_of({fin(0), fin(1), inf, fin(2), fin(3), fin(4)});
    const CanonicalKey key = canonical_key(s);
    CHECK(key.size() == 3);  // 6 points minus the normalized frame
    CHECK(std::is_sorted(key.begin(), key.end(),
                         [](const P1Point& a, const P1Point& b) { return a < b; }));
}

TEST_CASE("moduli pairing shares one key between the two genera") {
    const ModuliRecord rec = moduli_map_f({Rat(2), Rat(3), Rat(4)});
    CHECK(rec.n == 5);
    CHECK(rec.hyper_genus == 2);
    CHECK(rec.curve_genus == 17);
    CHECK(rec.branch.size() == 6);
    CHECK(rec.branch.contains(inf));
    CHECK(rec.key == canonical_key(rec.branch));

    const ModuliRecord big = moduli_map_f({Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
    CHECK(big.n == 7);
    CHECK(big.hyper_genus == 3);
    CHECK(big.curve_genus == 129);
}

TEST_CASE("moduli pairing validates its input") {
    CHECK_THROWS_AS(moduli_map_f({Rat(2), Rat(3)}), std::invalid_argument);          // even n
    CHECK_THROWS_AS(moduli_map_f({Rat(0), Rat(3), Rat(4)}), std::invalid_argument);  // 0 forbidden
    CHECK_THROWS_AS(moduli_map_f({Rat(1), Rat(3), Rat(4)}), std::invalid_argument);  // 1 forbidden
    CHECK_THROWS_AS(moduli_map_f({Rat(3), Rat(3), Rat(4)}), std::invalid_argument);  // duplicate
}

TEST_CASE("equivalence is symmetric and transitive through witnesses") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const BranchSet a = random_set(rng);
        const BranchSet b = apply(random_mobius(rng), a);
        const BranchSet c = apply(random_mobius(rng), b);

        const auto ab = is_isomorphic(a, b);
        const auto bc = is_isomorphic(b, c);
        const auto ac = is_isomorphic(a, c);
        REQUIRE(ab.has_value());
        REQUIRE(bc.has_value());
        REQUIRE(ac.has_value());

        CHECK(apply(ab->inverse(), b) == a);
        CHECK(apply(bc->after(*ab), a) == c);
    }
}
