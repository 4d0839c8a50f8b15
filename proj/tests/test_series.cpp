#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kmp/series.hpp"

using namespace kmp;

namespace {
std::vector<Rat> rats(std::initializer_list<long> vals) {
    std::vector<Rat> r;
    for (long v : vals) r.emplace_back(v);
    return r;
}
}  // namespace

TEST_CASE("geometric series") {
    RatFunc f(IntPoly{1, 1}, IntPoly{1, -1});
    TruncSeries s = rf_series(f, 4);
    CHECK(s.coeffs() == rats({1, 2, 2, 2, 2}));
}

TEST_CASE("dihedral length counts of order six") {
    // (1+t)(1+t+t^2) expanded
    RatFunc f(IntPoly{1, 1} * IntPoly{1, 1, 1});
    CHECK(rf_series(f, 5).coeffs() == rats({1, 2, 2, 1, 0, 0}));
}

TEST_CASE("pole at origin is rejected") {
    RatFunc f(IntPoly::one(), IntPoly{0, 1});
    CHECK_THROWS_WITH(rf_series(f, 3), Catch::Matchers::ContainsSubstring("pole at origin"));
}

TEST_CASE("series of an unnormalized representative agrees", "[property]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> a, b, c;
        for (int i = 0; i < 4; ++i) a.emplace_back(coeff(rng));
        for (int i = 0; i < 4; ++i) b.emplace_back(coeff(rng));
        for (int i = 0; i < 3; ++i) c.emplace_back(coeff(rng));
        IntPoly pb(b), pc(c);
        if (pb.is_zero() || pb.coeff(0) == 0 || pc.is_zero() || pc.coeff(0) == 0) continue;
        RatFunc f(IntPoly(a), pb);
        // expand num*c / den*c without normalizing through RatFunc
        TruncSeries lhs = rf_series(f, 12);
        TruncSeries num = TruncSeries::from_poly(IntPoly(a) * pc, 12);
        TruncSeries den = TruncSeries::from_poly(pb * pc, 12);
        CHECK(lhs == num * den.inverse());
    }
}

TEST_CASE("arithmetic truncates to the smaller order") {
    TruncSeries a = TruncSeries::from_poly(IntPoly{1, 1, 1, 1}, 6);
    TruncSeries b = TruncSeries::from_poly(IntPoly{1, 2}, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("inverse and pow") {
    TruncSeries s = TruncSeries::from_poly(IntPoly{1, -1}, 8);
    TruncSeries inv = s.inverse();
    for (int k = 0; k <= 8; ++k) CHECK(inv.coeff(k) == 1);
    CHECK((s * inv).coeff(0) == 1);
    for (int k = 1; k <= 8; ++k) CHECK((s * inv).coeff(k) == 0);
    CHECK(s.pow(-1) == inv);
    CHECK(s.pow(2) == TruncSeries::from_poly(IntPoly{1, -2, 1}, 8));
    TruncSeries z(5);
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
}
