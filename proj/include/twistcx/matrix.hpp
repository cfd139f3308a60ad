#pragma once

#include "twistcx/field.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace twistcx {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t size);

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Matrix transpose() const;
    bool is_zero() const;

    Vector apply(const Vector& x) const;
    Matrix& operator+=(const Matrix& other);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is not in the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool is_invertible(const Matrix& m);

/// base + sum_k t_k directions[k], all square of the same size.
struct AffineFamily {
    Matrix base;
    std::vector<Matrix> directions;
};

struct FamilyMember {
    Matrix matrix;
    std::vector<Scalar> coefficients;
};

/// Searches the family for an invertible member: 32 seeded samples, then an
/// exhaustive sweep when the field is small. Deterministic for a fixed seed.
std::optional<FamilyMember> generic_invertible(const AffineFamily& family,
                                               std::uint64_t seed = 0);

}  // namespace twistcx
