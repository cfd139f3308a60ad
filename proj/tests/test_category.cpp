#include "twistcx/category.hpp"

#include <doctest.h>

using namespace twistcx;

namespace {

CategoryParams params(int n, std::optional<std::vector<int>> betti0 = std::nullopt, std::uint32_t ch = 32003) {
    CategoryParams p;
    p.n = n;
    p.betti0 = std::move(betti0);
    p.field = Field(ch);
    return p;
}

std::optional<std::pair<int, BasisId>> compose_ids(const Category& cat, BasisId g, BasisId f) {
    return cat.compose_basis(g, f);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK(validate_params(params(3)).empty());
    auto low = validate_params(params(2));
    REQUIRE(low.size() == 1);
    CHECK(low[0].find("higher products not guaranteed to vanish") != std::string::npos);
    CHECK_FALSE(validate_params(params(4, std::vector<int>{1, 0, 2, 0})).empty());
    CHECK_FALSE(validate_params(params(4, std::vector<int>{2, 0, 2, 0, 1})).empty());
    CHECK_FALSE(validate_params(params(4, std::vector<int>{1, 0, 2, 0, 0})).empty());
    CHECK_FALSE(validate_params(params(4, std::vector<int>{1, -1, 2, -1, 1})).empty());
    CHECK_FALSE(validate_params(params(4, std::vector<int>{1, 1, 0, 0, 1})).empty());
    CHECK(validate_params(params(4, std::vector<int>{1, 0, 2, 0, 1})).empty());
    CHECK_THROWS_AS(Category(params(2)), ParameterError);
    CHECK_THROWS_AS(vertex_from_int(2), ParameterError);
}

TEST_CASE("spherical basis and degrees") {
    for (int n = 3; n <= 6; ++n) {
        Category cat(params(n));
        REQUIRE(cat.basis().size() == 6);
        CHECK(cat.element(Category::kP).degree == 1);
        CHECK(cat.element(Category::kQ).degree == n - 1);
        CHECK(cat.element(Category::kF0).degree == n);
        CHECK(cat.element(Category::kF1).degree == n);
        CHECK(cat.morphism_space(Vertex::zero, Vertex::one) == std::vector<BasisId>{Category::kP});
        CHECK(cat.morphism_space(Vertex::one, Vertex::zero) == std::vector<BasisId>{Category::kQ});
        CHECK(cat.morphism_space(Vertex::zero, Vertex::zero) == std::vector<BasisId>{Category::kE0, Category::kF0});
        CHECK(cat.basis_in_degree(Vertex::one, Vertex::zero, n - 1).size() == 1);
        CHECK(cat.basis_in_degree(Vertex::one, Vertex::zero, 1).empty());
        CHECK(cat.basis_in_degree(Vertex::one, Vertex::zero, -1).empty());
        CHECK(cat.find("q") == Category::kQ);
        CHECK_FALSE(cat.find("x1").has_value());
    }
}

TEST_CASE("composition table") {
    Category cat(params(3));
    CHECK(compose_ids(cat, Category::kQ, Category::kP) == std::pair{1, Category::kF0});
    CHECK(compose_ids(cat, Category::kP, Category::kQ) == std::pair{1, Category::kF1});
    CHECK(compose_ids(cat, Category::kE1, Category::kP) == std::pair{1, Category::kP});
    CHECK(compose_ids(cat, Category::kP, Category::kE0) == std::pair{1, Category::kP});
    CHECK_FALSE(compose_ids(cat, Category::kF1, Category::kP).has_value());
    CHECK_FALSE(compose_ids(cat, Category::kF0, Category::kF0).has_value());
    CHECK_THROWS_AS(cat.compose_basis(Category::kP, Category::kP), CompositionError);
}

TEST_CASE("composition is associative and unital on every basis triple") {
    for (auto betti : {std::optional<std::vector<int>>{}, std::optional<std::vector<int>>{{1, 0, 2, 0, 1}},
                       std::optional<std::vector<int>>{{1, 1, 0, 1, 1}}}) {
        Category cat(params(4, betti));
        const auto size = static_cast<BasisId>(cat.basis().size());
        const Field& f = cat.field();
        for (BasisId a = 0; a < size; ++a)
            for (BasisId b = 0; b < size; ++b)
                for (BasisId c = 0; c < size; ++c) {
                    if (cat.element(a).target != cat.element(b).source) continue;
                    if (cat.element(b).target != cat.element(c).source) continue;
                    const Morphism ma = Morphism::basis(cat, a, Scalar::one(f));
                    const Morphism mb = Morphism::basis(cat, b, Scalar::one(f));
                    const Morphism mc = Morphism::basis(cat, c, Scalar::one(f));
                    CHECK(compose(cat, mc, compose(cat, mb, ma)) == compose(cat, compose(cat, mc, mb), ma));
                }
        for (BasisId a = 0; a < size; ++a) {
            const auto& el = cat.element(a);
            CHECK(compose_ids(cat, cat.unit(el.target), a) == std::pair{1, a});
            CHECK(compose_ids(cat, a, cat.unit(el.source)) == std::pair{1, a});
        }
    }
}

TEST_CASE("intermediate classes pair into the fundamental class") {
    Category cat(params(4, std::vector<int>{1, 0, 2, 0, 1}));
    CHECK_FALSE(cat.spherical());
    auto x1 = cat.find("x2_1"), x2 = cat.find("x2_2");
    REQUIRE(x1);
    REQUIRE(x2);
    CHECK(cat.element(*x1).degree == 2);
    CHECK(compose_ids(cat, *x1, *x1) == std::pair{1, Category::kF0});
    CHECK_FALSE(compose_ids(cat, *x2, *x1).has_value());
    CHECK(cat.morphism_space(Vertex::zero, Vertex::zero).size() == 4);

    Category odd(params(5, std::vector<int>{1, 0, 1, 1, 0, 1}));
    auto x2d = odd.find("x2"), x3d = odd.find("x3");
    REQUIRE(x2d);
    REQUIRE(x3d);
    CHECK(compose_ids(odd, *x3d, *x2d) == std::pair{1, Category::kF0});
    CHECK(compose_ids(odd, *x2d, *x3d) == std::pair{1, Category::kF0});
}

TEST_CASE("morphism arithmetic") {
    Category cat(params(3, std::nullopt, 7));
    const Field& f = cat.field();
    Morphism m = Morphism::basis(cat, Category::kE0, Scalar(f, 3));
    m += Morphism::basis(cat, Category::kF0, Scalar(f, 2));
    CHECK(m.coefficient(Category::kE0, f) == Scalar(f, 3));
    m.add(Category::kE0, Scalar(f, 4));
    CHECK(m.coefficient(Category::kE0, f).is_zero());
    CHECK(m.terms().size() == 1);
    m *= Scalar(f, 0);
    CHECK(m.is_zero());
    CHECK_THROWS_AS(m += Morphism::basis(cat, Category::kP, Scalar::one(f)), CompositionError);

    const Morphism p = Morphism::basis(cat, Category::kP, Scalar(f, 2));
    const Morphism q = Morphism::basis(cat, Category::kQ, Scalar(f, 5));
    CHECK(compose(cat, q, p) == Morphism::basis(cat, Category::kF0, Scalar(f, 10)));
    CHECK_THROWS_AS(compose(cat, p, p), CompositionError);
}

TEST_CASE("categories compare by parameters") {
    CHECK(Category(params(3)) == Category(params(3)));
    CHECK_FALSE(Category(params(3)) == Category(params(4)));
    CHECK_FALSE(Category(params(3)) == Category(params(3, std::nullopt, 5)));
}
