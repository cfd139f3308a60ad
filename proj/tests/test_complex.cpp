#include "corpus.hpp"
#include "twistcx/hom.hpp"

#include <doctest.h>

using namespace twistcx;
using namespace twistcx::testing;

namespace {

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("single cores and a p-arrow validate") {
    auto cat = sphere_category(3);
    CHECK(validate(TwistedComplex::core(cat, Vertex::zero)).empty());
    TwistedComplex c(cat, {{Vertex::zero, 0}, {Vertex::one, 0}});
    c.add_to_entry(0, 1, Category::kP, Scalar::one(cat->field()));
    CHECK(validate(c).empty());
    CHECK(c.arrow_count() == 1);
    CHECK(TwistedComplex(cat).empty());
}

TEST_CASE("degree, triangularity and vertex violations are reported") {
    auto cat = sphere_category(4);
    const Scalar one = Scalar::one(cat->field());

    TwistedComplex wrong_degree(cat, {{Vertex::zero, 0}, {Vertex::one, 1}});
    wrong_degree.add_to_entry(0, 1, Category::kP, one);
    auto v = validate(wrong_degree);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::degree);
    CHECK(v[0].degree == 1);

    TwistedComplex backwards(cat, {{Vertex::one, 0}, {Vertex::zero, 0}});
    backwards.add_to_entry(1, 0, Category::kP, one);
    CHECK(has_kind(validate(backwards), Violation::Kind::triangularity));

    TwistedComplex wrong_vertex(cat, {{Vertex::zero, 0}, {Vertex::zero, 0}});
    CHECK_THROWS_AS(wrong_vertex.add_to_entry(0, 1, Category::kP, one), CompositionError);
    CHECK_THROWS_AS(wrong_vertex.set_entry(0, 1, Morphism::basis(*cat, Category::kP, one)), CompositionError);
    CHECK_THROWS_AS(wrong_vertex.add_to_entry(0, 2, Category::kE0, one), std::out_of_range);
}

TEST_CASE("the p/q obstruction is rejected at the V_{n-2} -> V_0 slot") {
    for (int n = 3; n <= 5; ++n) {
        auto cat = sphere_category(n);
        const Scalar one = Scalar::one(cat->field());
        TwistedComplex c(cat, {{Vertex::one, n - 2}, {Vertex::zero, 0}, {Vertex::one, 0}});
        c.add_to_entry(0, 1, Category::kQ, one);
        c.add_to_entry(1, 2, Category::kP, one);
        auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == Violation::Kind::maurer_cartan);
        CHECK(v[0].from == 0);
        CHECK(v[0].to == 2);
        CHECK(v[0].detail == "delta.delta = 1*f1");
    }
}

TEST_CASE("curved arrows need the full drop") {
    auto cat = sphere_category(3);
    TwistedComplex c(cat, {{Vertex::zero, 2}, {Vertex::zero, 0}});
    c.add_to_entry(0, 1, Category::kF0, Scalar::one(cat->field()));
    CHECK(validate(c).empty());
}

TEST_CASE("validate agrees with squaring the regular representation") {
    auto cat = sphere_category(3, 3);
    std::mt19937_64 rng(77);
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const TwistedComplex c = random_skeleton(cat, rng);
        const bool ok = validate(c).empty();
        const Matrix d = regular_matrix(c);
        CHECK(ok == (d * d).is_zero());
        (ok ? accepted : rejected)++;
    }
    CHECK(accepted > 20);
    CHECK(rejected > 20);
}

TEST_CASE("shift moves positions and signs entries") {
    auto cat = sphere_category(3);
    TwistedComplex c(cat, {{Vertex::zero, 0}, {Vertex::one, 0}});
    c.add_to_entry(0, 1, Category::kP, Scalar::one(cat->field()));
    auto s = shift(c, 1);
    CHECK(s.summand(0).position == -1);
    CHECK(s.entry(0, 1).coefficient(Category::kP, cat->field()) == Scalar(cat->field(), -1));
    CHECK(shift(c, 2) == shift(shift(c, 1), 1));
    CHECK(shift(c, 0) == c);
    CHECK(validate(s).empty());
}

TEST_CASE("direct sums and permutations") {
    auto cat = sphere_category(3);
    auto a = TwistedComplex::core(cat, Vertex::zero, 1), b = TwistedComplex::core(cat, Vertex::one, 0);
    auto s = direct_sum(a, b);
    CHECK(s.size() == 2);
    CHECK(s.arrow_count() == 0);
    CHECK(s.permuted({1, 0}).summand(0) == Summand{Vertex::one, 0});
    CHECK(summand_multiset(s) == summand_multiset(s.permuted({1, 0})));
    CHECK_THROWS(direct_sum(a, TwistedComplex::core(sphere_category(4), Vertex::zero)));
}

TEST_CASE("a unit arrow cancels completely") {
    auto cat = sphere_category(3);
    TwistedComplex c(cat, {{Vertex::zero, 0}, {Vertex::zero, 1}});
    c.add_to_entry(0, 1, Category::kE0, Scalar(cat->field(), 5));
    REQUIRE(validate(c).empty());
    CHECK(minimize(c).empty());
}

TEST_CASE("minimize removes contractible cones and keeps the rest") {
    for (int n : {3, 4}) {
        auto cat = sphere_category(n);
        auto q0 = TwistedComplex::core(cat, Vertex::zero), q1 = TwistedComplex::core(cat, Vertex::one);
        for (const auto& sample : orbit_corpus(cat, 20, 5, 100 + static_cast<std::uint64_t>(n))) {
            const auto& c = sample.complex;
            const TwistedComplex id_cone = cone(c, c, identity_map(c));
            REQUIRE(validate(id_cone).empty());
            CHECK(minimize(id_cone).empty());

            const TwistedComplex padded = direct_sum(id_cone, c);
            const TwistedComplex m = minimize(padded);
            CHECK(validate(m).empty());
            CHECK(summand_multiset(m) == summand_multiset(minimize(c)));
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b) {
                    CHECK(m.entry(a, b).coefficient(Category::kE0, cat->field()).is_zero());
                    CHECK(m.entry(a, b).coefficient(Category::kE1, cat->field()).is_zero());
                }
            for (std::size_t a = 0; a + 1 < m.size(); ++a)
                CHECK(m.summand(a).position >= m.summand(a + 1).position);
            CHECK(hf_ranks(padded, q0) == hf_ranks(m, q0));
            CHECK(hf_ranks(q1, padded) == hf_ranks(q1, m));
        }
    }
}

TEST_CASE("describe lists summands and arrows") {
    auto cat = sphere_category(3);
    TwistedComplex c(cat, {{Vertex::zero, 0}, {Vertex::one, 0}});
    c.add_to_entry(0, 1, Category::kP, Scalar::one(cat->field()));
    CHECK(describe(c) == "[0] Q0 @ 0\n[1] Q1 @ 0\n  0 -> 1 : 1*p\n");
}
