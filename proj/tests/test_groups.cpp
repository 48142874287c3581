#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "apic/groups.hpp"

using namespace apic;
using namespace apic::groups;
using linalg::IntMatrix;
using linalg::RatMatrix;

TEST_CASE("direct sums") {
    CHECK(direct_sum(sg(1), sg(1)) == sg(2));
    // three copies of Z^2 (+) k*
    StructuredGroup node = sg(2, {}, 1);
    StructuredGroup triple = direct_sum(direct_sum(node, node), node);
    CHECK(triple == sg(6, {}, 3));
    // Z/2 (+) Z/3 renormalizes to Z/6
    CHECK(direct_sum(sg(0, {BigInt(2)}), sg(0, {BigInt(3)})) == sg(0, {BigInt(6)}));
}

TEST_CASE("canonical form and isomorphism") {
    CHECK(is_isomorphic(sg(0, {BigInt(2), BigInt(2)}), sg(0, {BigInt(2), BigInt(2)})));
    CHECK(is_isomorphic(sg(0, {BigInt(6)}), sg(0, {BigInt(2), BigInt(3)})));
    CHECK_FALSE(is_isomorphic(sg(3, {}, 1), sg(3, {}, 0, 1)));
    CHECK(canonical_form(sg(0, {BigInt(4), BigInt(6)})) == sg(0, {BigInt(2), BigInt(12)}));
}

TEST_CASE("cokernels of sector homomorphisms") {
    SECTION("diagonal of Z in Z^2") {
        SectorHom f = zero_hom(sg(1), sg(2));
        f.free_matrix = IntMatrix::from_rows({{1}, {1}});
        CHECK(cokernel(f) == sg(1));
    }
    SECTION("multiplication by 2 on Z") {
        SectorHom f = zero_hom(sg(1), sg(1));
        f.free_matrix = IntMatrix::from_rows({{2}});
        CHECK(cokernel(f) == sg(0, {BigInt(2)}));
    }
    SECTION("triple point pullback matrices") {
        SectorHom f = zero_hom(sg(3, {}, 2), sg(6, {}, 3));
        f.free_matrix = IntMatrix::from_rows(
            {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
        f.unit_exponents = IntMatrix::from_rows({{-1, 1}, {0, 1}, {1, 0}});
        CHECK(cokernel(f) == sg(3, {}, 1));
    }
    SECTION("W sector bookkeeping") {
        SectorHom f = zero_hom(sg(1, {}, 0, 0, 2), sg(3, {}, 0, 0, 3));
        f.free_matrix = IntMatrix::from_rows({{1}, {1}, {1}});
        f.w_image_rank = 2;
        CHECK(cokernel(f) == sg(2, {}, 0, 0, 1));
    }
    SECTION("torsion in the target stacks with the image") {
        SectorHom f = zero_hom(sg(1), sg(0, {BigInt(4)}));
        f.free_matrix = IntMatrix::from_rows({{1}});
        CHECK(cokernel(f).is_trivial());
        f.free_matrix = IntMatrix::from_rows({{2}});
        CHECK(cokernel(f) == sg(0, {BigInt(2)}));
    }
    SECTION("identity and zero homomorphisms") {
        StructuredGroup g = sg(2, {BigInt(2), BigInt(4)}, 3, 1, 2, 0);
        CHECK(cokernel(identity_hom(g)).is_trivial());
        CHECK(cokernel(zero_hom(g, g)) == g);
    }
    SECTION("dimension mismatches are rejected") {
        SectorHom f = zero_hom(sg(1), sg(2));
        f.free_matrix = IntMatrix::from_rows({{1}});
        CHECK_THROWS_AS(cokernel(f), dimension_error);
        SectorHom h = zero_hom(sg(0, {}, 0, 0, 1), sg(0));
        h.w_image_rank = 1;
        CHECK_THROWS_AS(cokernel(h), dimension_error);
    }
    SECTION("abelian sources are refused") {
        SectorHom f = zero_hom(sg(0, {}, 0, 0, 0, 1), sg(0, {}, 0, 0, 0, 1));
        CHECK_THROWS_AS(cokernel(f), abelian_hom_error);
        // abelian target passes through
        SectorHom g = zero_hom(sg(1), sg(1, {}, 0, 0, 0, 2));
        CHECK(cokernel(g) == sg(1, {}, 0, 0, 0, 2));
    }
}

TEST_CASE("rank laws of cokernels") {
    std::mt19937 gen(77u);
    for (int iter = 0; iter < 100; ++iter) {
        const long long p = gen() % 4, q = gen() % 4;
        SectorHom f = zero_hom(sg(p, {}, p), sg(q, {}, q));
        for (std::size_t i = 0; i < f.free_matrix.rows(); ++i)
            for (std::size_t j = 0; j < f.free_matrix.cols(); ++j)
                f.free_matrix(i, j) = static_cast<long long>(gen() % 7) - 3;
        for (std::size_t i = 0; i < f.unit_exponents.rows(); ++i)
            for (std::size_t j = 0; j < f.unit_exponents.cols(); ++j)
                f.unit_exponents(i, j) = static_cast<long long>(gen() % 7) - 3;
        StructuredGroup c = cokernel(f);
        // torsion-free target: free rank drops by the matrix rank
        CHECK(c.free_rank == q - static_cast<long long>(linalg::integer_rank(f.free_matrix)));
        // k* is divisible: no unit torsion, rank drops by the exponent rank
        CHECK(c.unit_rank == q - static_cast<long long>(linalg::integer_rank(f.unit_exponents)));
    }
}

TEST_CASE("direct sum is commutative and associative up to canonical form") {
    std::mt19937 gen(99u);
    auto random_group = [&]() {
        std::vector<BigInt> tor;
        for (unsigned i = gen() % 3; i > 0; --i) tor.push_back(BigInt(2 + gen() % 5));
        return sg(gen() % 3, tor, gen() % 3, gen() % 2, gen() % 2, gen() % 2);
    };
    for (int iter = 0; iter < 50; ++iter) {
        StructuredGroup a = random_group(), b = random_group(), c = random_group();
        CHECK(is_isomorphic(direct_sum(a, b), direct_sum(b, a)));
        CHECK(is_isomorphic(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
    }
}

TEST_CASE("element torsion and order") {
    SECTION("unit -1 in Z (+) k*") {
        GroupElement e = identity_element(sg(1, {}, 1));
        e.units[0] = UnitValue::rational(Rational(-1));
        CHECK(element_is_torsion(e) == Tri::yes);
        auto ord = element_order(e);
        CHECK(ord.finite == Tri::yes);
        CHECK(ord.value == 2);
    }
    SECTION("unit -4 is not torsion") {
        GroupElement e = identity_element(sg(1, {}, 1));
        e.units[0] = UnitValue::rational(Rational(-4));
        CHECK(element_is_torsion(e) == Tri::no);
        CHECK(element_order(e).finite == Tri::no);
    }
    SECTION("identity element") {
        GroupElement e = identity_element(sg(2, {BigInt(4)}, 1, 1, 1, 0));
        CHECK(element_is_torsion(e) == Tri::yes);
        CHECK(element_order(e).value == 1);
    }
    SECTION("torsion coordinates") {
        GroupElement e = identity_element(sg(0, {BigInt(4), BigInt(12)}));
        e.torsion_coords = {BigInt(2), BigInt(3)};
        auto ord = element_order(e);
        CHECK(ord.value == 4);  // lcm(2, 4)
    }
    SECTION("roots of unity") {
        GroupElement e = identity_element(sg(0, {}, 1));
        e.units[0] = UnitValue::root_of_unity(BigInt(5));
        CHECK(element_order(e).value == 5);
    }
    SECTION("nonzero abelian coordinates give unknown") {
        GroupElement e = identity_element(sg(0, {}, 0, 0, 0, 1));
        e.abelian[0] = "p";
        CHECK(element_is_torsion(e) == Tri::unknown);
        CHECK(element_order(e).finite == Tri::unknown);
    }
    SECTION("nonzero W coordinate is torsion free") {
        GroupElement e = identity_element(sg(0, {}, 0, 0, 1));
        e.w[0] = WCoordinate{false, Rational(-2)};
        CHECK(element_is_torsion(e) == Tri::no);
    }
    SECTION("scaling by the order gives the identity in computed sectors") {
        GroupElement e = identity_element(sg(0, {BigInt(6)}, 1));
        e.torsion_coords = {BigInt(4)};
        e.units[0] = UnitValue::root_of_unity(BigInt(4));
        auto ord = element_order(e);
        REQUIRE(ord.finite == Tri::yes);
        CHECK(ord.value == 12);  // lcm(3, 4)
        GroupElement id = scaled(e, ord.value);
        CHECK(element_order(id).value == 1);
        for (const auto& c : id.torsion_coords) CHECK(c == 0);
        for (const auto& u : id.units) CHECK(u.is_one());
    }
}

TEST_CASE("render") {
    CHECK(render(sg(0)) == "0");
    CHECK(render(sg(3, {}, 1)) == "Z^3 (+) k*");
    CHECK(render(sg(1, {}, 1, 0, 2)) == "Z (+) k* (+) W^2");
    CHECK(render(sg(0, {BigInt(2)})) == "Z/2");
    CHECK(render(sg(3, {}, 2, 1)) == "Z^3 (+) (k*)^2 (+) k+");
    CHECK(render(sg(1, {BigInt(2), BigInt(4)}, 0, 1, 0, 2)) ==
          "Z (+) Z/2 (+) Z/4 (+) k+ (+) A^2");
}

TEST_CASE("group JSON round trip keeps the field order") {
    StructuredGroup g = sg(2, {BigInt(3)}, 1, 4, 5, 6);
    Json j = to_json(g);
    CHECK(j.dump() == R"({"free":2,"torsion":[3],"units":1,"additive":4,"w":5,"abelian":6})");
    CHECK(group_from_json(j) == g);
}

TEST_CASE("unit value arithmetic") {
    UnitValue i = UnitValue::root_of_unity(BigInt(4));
    CHECK(i.pow(BigInt(4)).is_one());
    CHECK_FALSE(i.pow(BigInt(2)).is_one());
    CHECK(*i.pow(BigInt(2)).order() == 2);
    UnitValue r = UnitValue::rational(Rational(2, 3));
    CHECK(r.pow(BigInt(-2)).rational_value() == Rational(9, 4));
    CHECK_FALSE(r.is_root_of_unity());
    CHECK((i * i).str() == "-1");
    CHECK(UnitValue::turn(Rational(5, 4)).str() == "e(1/4)");
    CHECK_THROWS_AS(UnitValue::rational(Rational(0)), invalid_argument_error);
}
