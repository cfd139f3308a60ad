#include "twistcx/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace twistcx;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int lo = -2,
                     int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, d(rng));
    return m;
}

// Cofactor expansion, independent of the elimination code.
Scalar det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Scalar out = Scalar::zero(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        Matrix minor(m.field(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != col) minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, col) * det(minor);
        out = col % 2 ? out - term : out + term;
    }
    return out;
}

}  // namespace

TEST_CASE("field parameters") {
    CHECK_THROWS_AS(Field(4), FieldError);
    CHECK_THROWS_AS(Field(1), FieldError);
    CHECK(Field(0).is_rational());
    CHECK(Field().characteristic() == 32003);
    CHECK(Field(2).characteristic() == 2);
}

TEST_CASE("rational arithmetic is exact") {
    const Field q = Field::rationals();
    const Scalar half = Scalar::parse(q, "1/2"), third = Scalar::parse(q, "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK(Scalar::parse(q, "-4/6").to_string() == "-2/3");
    CHECK((Scalar::parse(q, "123456789012345678901234567890") * Scalar(q, 0)).is_zero());
    CHECK(Scalar::parse(q, "7").inverse().to_string() == "1/7");
    CHECK_THROWS_AS(Scalar(q, 0).inverse(), FieldError);
}

TEST_CASE("prime field arithmetic") {
    const Field f7(7);
    CHECK((Scalar(f7, 3) * Scalar(f7, 5)).is_one());
    CHECK(Scalar(f7, -1).to_string() == "6");
    CHECK(Scalar::parse(f7, "1/2").to_string() == "4");
    CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), FieldError);
    for (int a = 1; a < 7; ++a) CHECK((Scalar(f7, a) * Scalar(f7, a).inverse()).is_one());
    CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field(5), 1), FieldError);
    CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::rationals(), 1), FieldError);
}

TEST_CASE("malformed coefficients are rejected") {
    const Field q = Field::rationals();
    for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "--1", "+"}) CHECK_THROWS_AS(Scalar::parse(q, bad), FieldError);
    CHECK(Scalar::parse(q, "+3").to_string() == "3");
}

TEST_CASE("rank of hand-computed matrices") {
    const Field q = Field::rationals();
    CHECK(rank(Matrix::from_rows(q, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix::from_rows(q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank(Matrix::identity(q, 4)) == 4);
    CHECK(rank(Matrix(q, 3, 0)) == 0);
    // singular over F_3 only: det = 3
    CHECK(rank(Matrix::from_rows(q, {{1, 1}, {1, -2}})) == 2);
    CHECK(rank(Matrix::from_rows(Field(3), {{1, 1}, {1, -2}})) == 1);
}

TEST_CASE("rank, kernel and solve agree with their definitions on random matrices") {
    std::mt19937_64 rng(11);
    for (const Field f : {Field::rationals(), Field(2), Field(5), Field()}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            const std::size_t r = dim(rng), c = dim(rng);
            Matrix a = random_matrix(f, r, c, rng);
            const std::size_t rk = rank(a);
            CHECK(rk == rank(a.transpose()));
            auto ker = kernel_basis(a);
            CHECK(ker.size() == c - rk);
            for (const auto& v : ker) {
                bool all_zero = true;
                for (const auto& s : a.apply(v)) all_zero = all_zero && s.is_zero();
                CHECK(all_zero);
            }
            // b in the column space is solvable and the solution checks out
            Vector y = zero_vector(f, c);
            for (auto& s : y) s = Scalar(f, std::uniform_int_distribution<int>(-3, 3)(rng));
            const Vector b = a.apply(y);
            auto x = solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a.apply(*x) == b);
        }
    }
}

TEST_CASE("solve reports inconsistent systems") {
    const Field q = Field::rationals();
    Matrix a = Matrix::from_rows(q, {{1, 1}, {2, 2}});
    CHECK_FALSE(solve(a, {Scalar(q, 1), Scalar(q, 3)}).has_value());
    CHECK(solve(a, {Scalar(q, 1), Scalar(q, 2)}).has_value());
}

TEST_CASE("is_invertible matches the cofactor determinant") {
    std::mt19937_64 rng(3);
    for (const Field f : {Field::rationals(), Field(3), Field(5)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + trial % 4;
            Matrix a = random_matrix(f, n, n, rng, -1, 1);
            CHECK(is_invertible(a) == !det(a).is_zero());
        }
    }
}

TEST_CASE("generic_invertible over F5 agrees with exhaustive enumeration") {
    const Field f5(5);
    std::mt19937_64 rng(2024);
    int with_member = 0, without_member = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 2;
        AffineFamily fam{Matrix(f5, n, n), {}};
        // sparse data so that singular families are common
        std::bernoulli_distribution keep(0.3);
        for (int k = 0; k < 2; ++k) {
            Matrix d(f5, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (keep(rng)) d(r, c) = Scalar(f5, std::uniform_int_distribution<int>(1, 4)(rng));
            fam.directions.push_back(d);
        }
        bool exists = false;
        for (int t0 = 0; t0 < 5 && !exists; ++t0)
            for (int t1 = 0; t1 < 5 && !exists; ++t1) {
                Matrix m = fam.base;
                m += Scalar(f5, t0) * fam.directions[0];
                m += Scalar(f5, t1) * fam.directions[1];
                exists = !det(m).is_zero();
            }
        auto found = generic_invertible(fam, static_cast<std::uint64_t>(trial));
        CHECK(found.has_value() == exists);
        if (found) {
            Matrix m = fam.base;
            for (std::size_t k = 0; k < 2; ++k) m += found->coefficients[k] * fam.directions[k];
            CHECK(m == found->matrix);
            CHECK_FALSE(det(m).is_zero());
        }
        (exists ? with_member : without_member)++;
    }
    CHECK(with_member > 10);
    CHECK(without_member > 10);
}

TEST_CASE("generic_invertible is deterministic and uses the basepoint first") {
    const Field q = Field::rationals();
    AffineFamily fam{Matrix(q, 2, 2), {Matrix::from_rows(q, {{1, 0}, {0, 0}}), Matrix::from_rows(q, {{0, 0}, {0, 1}})}};
    auto a = generic_invertible(fam, 9), b = generic_invertible(fam, 9);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->coefficients == b->coefficients);
    CHECK(is_invertible(a->matrix));

    AffineFamily trivial{Matrix::identity(q, 3), {Matrix(q, 3, 3)}};
    auto c = generic_invertible(trivial, 0);
    REQUIRE(c);
    CHECK(c->coefficients[0].is_zero());

    AffineFamily hopeless{Matrix(q, 2, 2), {Matrix::from_rows(q, {{1, 1}, {1, 1}})}};
    CHECK_FALSE(generic_invertible(hopeless, 0).has_value());
}

TEST_CASE("generic_invertible sweeps F2 exhaustively") {
    // only t = (1, 1) gives an invertible matrix over F2
    const Field f2(2);
    AffineFamily fam{Matrix(f2, 2, 2),
                     {Matrix::from_rows(f2, {{1, 0}, {0, 0}}), Matrix::from_rows(f2, {{0, 0}, {0, 1}})}};
    auto m = generic_invertible(fam, 5);
    REQUIRE(m);
    CHECK(m->coefficients[0].is_one());
    CHECK(m->coefficients[1].is_one());
}
