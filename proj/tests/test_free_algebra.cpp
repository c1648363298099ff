#include "confsphere/free_algebra.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace confsphere;
using confsphere::testutil::Rng;

namespace {

std::set<std::string> basis_names(const FreeAlgebra& alg, const BlockKey& key) {
    std::set<std::string> out;
    for (const Monomial& m : alg.block_basis(key))
        out.insert(alg.name(m));
    return out;
}

Monomial random_monomial(Rng& rng, const FreeAlgebra& alg, int max_factors) {
    Monomial m = alg.unit();
    int nf = (int)rng.pick(0, max_factors);
    AlgebraVector acc = alg.vec(m);
    for (int i = 0; i < nf && !acc.empty(); ++i) {
        int g = (int)rng.pick(0, (long)alg.generators().size() - 1);
        acc = alg.multiply(acc, alg.vec(alg.from_generator(g)));
    }
    if (acc.empty())
        return alg.unit();
    return acc.begin()->first;
}

}  // namespace

TEST_CASE("degree-9 block of the free algebra on S2vS4vS6 at F3 has dimension 5") {
    CoalgebraSpec w = parse_label("wedge:s2,s4,s6");
    FreeAlgebra alg(w, 2, FieldSpec(3), 9, 1 << 20, false);
    BlockKey agg{9, {}, std::nullopt};
    CHECK(alg.block_basis(agg).size() == 5);
    CHECK(basis_names(alg, agg) ==
          std::set<std::string>{"[i1,i3]", "[i2,i2]", "[i1,i1]\xc2\xb7i2", "[i1,i2]\xc2\xb7i1",
                                "[i1,i1]\xc2\xb7i1^2"});
    // per-weight refinement: 2 + 2 + 1
    CHECK(alg.block_basis({9, {}, 2}).size() == 2);
    CHECK(alg.block_basis({9, {}, 3}).size() == 2);
    CHECK(alg.block_basis({9, {}, 4}).size() == 1);
}

TEST_CASE("degree-1 blocks of Omega^2(S2 v S2) labels over Q have dimension 3") {
    CoalgebraSpec s00 = parse_label("wedge:s0,s0");
    FreeAlgebra alg(s00, 2, FieldSpec(0), 4, 1 << 20, true);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {-2, 3}, {0, 1}}) {
        BlockKey key{1, {m, n}, 0};
        CAPTURE(m);
        CAPTURE(n);
        CHECK(alg.block_basis(key).size() == 3);
    }
    // the unlocalized algebra drops monomials needing negative exponents:
    // at (0,0) every bracket needs an inverse power
    FreeAlgebra plain(s00, 2, FieldSpec(0), 4, 16, false);
    CHECK(plain.block_basis({1, {0, 0}, 0}).empty());
    CHECK(plain.block_basis({1, {2, 0}, 0}).size() == 1);  // [x1,x1]
}

TEST_CASE("C(R^2, S^2) degree 4 weight 2 is the square of the fundamental class") {
    CoalgebraSpec s2 = builtin_sphere(2);
    FreeAlgebra alg(s2, 2, FieldSpec(0), 8, 1 << 20, false);
    CHECK(basis_names(alg, {4, {}, 2}) == std::set<std::string>{"i^2"});
}

TEST_CASE("multiplication: odd squares vanish, localization inverts, Koszul sign") {
    CoalgebraSpec w = parse_label("wedge:s2,s4,s6");
    FreeAlgebra alg(w, 2, FieldSpec(3), 12, 1 << 20, false);
    // [a1,a1] has odd degree 5: its square dies away from char 2
    int g = -1;
    for (std::size_t i = 0; i < alg.generators().size(); ++i)
        if (alg.generators()[i].name == "[i1,i1]")
            g = (int)i;
    REQUIRE(g >= 0);
    AlgebraVector v = alg.vec(alg.from_generator(g));
    CHECK(alg.multiply(v, v).empty());

    // x * x^-1 = 1 in the localized algebra
    CoalgebraSpec s0 = builtin_sphere(0);
    FreeAlgebra loc(s0, 2, FieldSpec(0), 4, 8, true);
    Monomial x = loc.from_class(0);
    Monomial xinv = loc.unit();
    xinv.grouplike[0] = -1;
    AlgebraVector prod = loc.multiply(loc.vec(x), loc.vec(xinv));
    REQUIRE(prod.size() == 1);
    CHECK(prod.begin()->first.is_unit());

    // odd * odd anticommutes
    FreeAlgebra algq(w, 2, FieldSpec(0), 14, 1 << 20, false);
    int g1 = -1, g2 = -1;
    for (std::size_t i = 0; i < algq.generators().size(); ++i) {
        if (algq.generators()[i].name == "[i1,i1]")
            g1 = (int)i;
        if (algq.generators()[i].name == "[i1,i2]")
            g2 = (int)i;
    }
    REQUIRE(g1 >= 0);
    REQUIRE(g2 >= 0);
    AlgebraVector u1 = algq.vec(algq.from_generator(g1));
    AlgebraVector u2 = algq.vec(algq.from_generator(g2));
    AlgebraVector ab = algq.multiply(u1, u2);
    AlgebraVector ba = algq.multiply(u2, u1);
    REQUIRE(ab.size() == 1);
    REQUIRE(ba.size() == 1);
    CHECK(ab.begin()->first == ba.begin()->first);
    CHECK(ab.begin()->second == -ba.begin()->second);
}

TEST_CASE("group completion: inverted sphere(0) components; identity for connected") {
    CoalgebraSpec s0 = builtin_sphere(0);
    FreeAlgebra omega = group_complete(s0, 2, FieldSpec(0), 4, 8);
    for (int m : {-3, -1, 0, 2}) {
        auto b = omega.block_basis({0, {m}, 0});
        REQUIRE(b.size() == 1);
        CHECK(omega.weight_of(b[0]).v[1] == m);
    }
    // connected labels: the same bases with or without completion
    CoalgebraSpec cp2 = builtin_cp(2);
    FreeAlgebra a1(cp2, 2, FieldSpec(3), 8, 1 << 20, false);
    FreeAlgebra a2 = group_complete(cp2, 2, FieldSpec(3), 8, 1 << 20);
    for (int d = 0; d <= 8; ++d)
        CHECK(a1.block_basis({d, {}, std::nullopt}).size() ==
              a2.block_basis({d, {}, std::nullopt}).size());
    // S0 v S0 at component (0,1), degree 0: exactly x2
    CoalgebraSpec s00 = parse_label("wedge:s0,s0");
    FreeAlgebra loc(s00, 2, FieldSpec(0), 2, 8, true);
    auto b = loc.block_basis({0, {0, 1}, 0});
    REQUIRE(b.size() == 1);
    CHECK(loc.name(b[0]) == "x2");
}

TEST_CASE("block dimensions saturate once bounds cover the block") {
    CoalgebraSpec w = parse_label("wedge:s2,s4,s6");
    FreeAlgebra small(w, 2, FieldSpec(3), 9, 1 << 20, false);
    FreeAlgebra big(w, 2, FieldSpec(3), 12, 1 << 20, false);
    for (int d = 0; d <= 9; ++d)
        CHECK(small.block_basis({d, {}, std::nullopt}).size() ==
              big.block_basis({d, {}, std::nullopt}).size());
}

TEST_CASE("multiply is associative and graded-commutative on random elements") {
    Rng rng(23);
    for (unsigned long p : {0ul, 2ul, 3ul}) {
        CoalgebraSpec w = parse_label("wedge:s1,s2");
        FreeAlgebra alg(w, 2, FieldSpec(p), 10, 1 << 20, false);
        for (int trial = 0; trial < 30; ++trial) {
            Monomial a = random_monomial(rng, alg, 2);
            Monomial b = random_monomial(rng, alg, 2);
            Monomial c = random_monomial(rng, alg, 2);
            AlgebraVector va = alg.vec(a), vb = alg.vec(b), vc = alg.vec(c);
            AlgebraVector left = alg.multiply(alg.multiply(va, vb), vc);
            AlgebraVector right = alg.multiply(va, alg.multiply(vb, vc));
            CHECK(left == right);
            AlgebraVector ab = alg.multiply(va, vb);
            AlgebraVector ba = alg.multiply(vb, va);
            if ((alg.degree(a) & 1) && (alg.degree(b) & 1)) {
                AlgebraVector neg;
                add_scaled(neg, ba, -Scalar::one(FieldSpec(p)));
                CHECK(ab == neg);
            } else {
                CHECK(ab == ba);
            }
        }
    }
}

TEST_CASE("n = 1: words concatenate; non-connected labels are rejected") {
    CoalgebraSpec cp2 = builtin_cp(2);
    FreeAlgebra alg(cp2, 1, FieldSpec(0), 8, 8, false);
    Monomial e1 = alg.from_class(cp2.find_class("e1"));
    Monomial e2 = alg.from_class(cp2.find_class("e2"));
    AlgebraVector w1 = alg.multiply(alg.vec(e1), alg.vec(e2));
    AlgebraVector w2 = alg.multiply(alg.vec(e2), alg.vec(e1));
    REQUIRE(w1.size() == 1);
    REQUIRE(w2.size() == 1);
    CHECK(w1.begin()->first != w2.begin()->first);  // no commutativity for words
    CHECK(alg.degree(w1.begin()->first) == 6);
    // words of degree 4 with two letters: e1e1; plus the single letter e2
    CHECK(alg.block_basis({4, {}, 2}).size() == 1);
    CHECK(alg.block_basis({4, {}, 1}).size() == 1);
    CHECK_THROWS_AS(FreeAlgebra(builtin_sphere(0), 1, FieldSpec(0), 4, 4, false),
                    UnsupportedError);
}
