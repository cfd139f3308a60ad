#include "twistcx/matrix.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

namespace twistcx {

Vector zero_vector(const Field& field, std::size_t size) {
    return Vector(size, Scalar::zero(field));
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const Field& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (auto v : row) m(i, j++) = Scalar(field, v);
        ++i;
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vector y = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero() && !x[j].is_zero()) y[i] += a * x[j];
        }
    return y;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch in +=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    // Eliminate along the shorter side.
    if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
    return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    auto [red, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.field(), m.cols());
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [red, pivots] = row_reduce(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
    return x;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

namespace {

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
        return Scalar(field, dist(rng));
    }
    std::uniform_int_distribution<std::int64_t> dist(0, field.characteristic() - 1);
    return Scalar(field, dist(rng));
}

Matrix combine(const AffineFamily& family, const std::vector<Scalar>& coeffs) {
    Matrix m = family.base;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) m += coeffs[k] * family.directions[k];
    return m;
}

}  // namespace

std::optional<FamilyMember> generic_invertible(const AffineFamily& family, std::uint64_t seed) {
    const Field& field = family.base.field();
    const std::size_t k = family.directions.size();
    auto attempt = [&](std::vector<Scalar> coeffs) -> std::optional<FamilyMember> {
        Matrix m = combine(family, coeffs);
        if (is_invertible(m)) return FamilyMember{std::move(m), std::move(coeffs)};
        return std::nullopt;
    };

    if (auto hit = attempt(zero_vector(field, k))) return hit;
    if (k == 0) return std::nullopt;

    std::mt19937_64 rng(seed);
    constexpr int kSamples = 32;
    for (int s = 0; s < kSamples; ++s) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(k);
        for (std::size_t i = 0; i < k; ++i) coeffs.push_back(random_scalar(field, rng));
        if (auto hit = attempt(std::move(coeffs))) return hit;
    }

    const std::uint64_t q = field.size();
    if (q == 0 || q > kSamples) return std::nullopt;

    // Small field: sweep every coefficient vector if that is cheap, else a
    // two-parameter slice through two random directions.
    constexpr std::uint64_t kSweepLimit = 4096;
    std::uint64_t total = 1;
    bool full = true;
    for (std::size_t i = 0; i < k && full; ++i) {
        total *= q;
        if (total > kSweepLimit) full = false;
    }
    if (full) {
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Scalar> coeffs;
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i, c /= q)
                coeffs.push_back(Scalar(field, static_cast<std::int64_t>(c % q)));
            if (auto hit = attempt(std::move(coeffs))) return hit;
        }
        return std::nullopt;
    }
    std::vector<Scalar> u, v;
    for (std::size_t i = 0; i < k; ++i) {
        u.push_back(random_scalar(field, rng));
        v.push_back(random_scalar(field, rng));
    }
    for (std::uint64_t s = 0; s < q; ++s)
        for (std::uint64_t t = 0; t < q; ++t) {
            std::vector<Scalar> coeffs;
            for (std::size_t i = 0; i < k; ++i)
                coeffs.push_back(Scalar(field, static_cast<std::int64_t>(s)) * u[i] +
                                 Scalar(field, static_cast<std::int64_t>(t)) * v[i]);
            if (auto hit = attempt(std::move(coeffs))) return hit;
        }
    return std::nullopt;
}

}  // namespace twistcx
