#pragma once

#include "twistcx/field.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistcx {

/// The two cores Q0, Q1 of the plumbing.
enum class Vertex : std::uint8_t { zero = 0, one = 1 };

constexpr int index(Vertex v) { return static_cast<int>(v); }
constexpr Vertex other(Vertex v) { return v == Vertex::zero ? Vertex::one : Vertex::zero; }
Vertex vertex_from_int(int i);

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CompositionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct CategoryParams {
    int n = 3;
    /// Betti numbers (b^0..b^n) of Q0; empty means a homology sphere.
    std::optional<std::vector<int>> betti0;
    Field field;
};

/// Reasons the parameters are unusable; empty when they are fine.
std::vector<std::string> validate_params(const CategoryParams& params);

struct BasisElement {
    std::string name;
    Vertex source;
    Vertex target;
    int degree;
};

using BasisId = int;

/// The graded category on Q0, Q1: strict units e_i, fundamental classes f_i,
/// the intersection point p: Q0 -> Q1 in degree 1 and its dual q: Q1 -> Q0
/// in degree n-1, with q.p = f0, p.q = f1. When Q0 has intermediate
/// cohomology, classes x_d pair into f0 and every other product of them
/// vanishes. Higher products are zero.
class Category {
public:
    static constexpr BasisId kE0 = 0, kE1 = 1, kP = 2, kQ = 3, kF0 = 4, kF1 = 5;

    explicit Category(CategoryParams params);
    static std::shared_ptr<const Category> make(CategoryParams params);

    const CategoryParams& params() const { return params_; }
    int n() const { return params_.n; }
    const Field& field() const { return params_.field; }
    bool spherical() const { return !params_.betti0.has_value(); }

    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(BasisId id) const { return basis_.at(static_cast<std::size_t>(id)); }

    BasisId unit(Vertex v) const { return v == Vertex::zero ? kE0 : kE1; }
    BasisId fundamental(Vertex v) const { return v == Vertex::zero ? kF0 : kF1; }

    /// Basis of Hom(Q_i, Q_j), ordered by degree.
    std::vector<BasisId> morphism_space(Vertex i, Vertex j) const;
    const std::vector<BasisId>& basis_in_degree(Vertex i, Vertex j, int degree) const;

    std::optional<BasisId> find(std::string_view name) const;

    /// g o f on basis elements: (coefficient, basis) or nullopt when zero.
    /// Throws CompositionError unless target(f) == source(g).
    std::optional<std::pair<int, BasisId>> compose_basis(BasisId g, BasisId f) const;

    bool operator==(const Category& other) const;

private:
    CategoryParams params_;
    std::vector<BasisElement> basis_;
    std::vector<std::optional<std::pair<int, BasisId>>> table_;
    // [source][target][degree]
    std::vector<std::vector<BasisId>> by_degree_[2][2];
    std::vector<BasisId> empty_;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Finite linear combination of basis morphisms from one core to another.
class Morphism {
public:
    Morphism(Vertex source, Vertex target) : source_(source), target_(target) {}

    static Morphism basis(const Category& cat, BasisId id, const Scalar& coeff);

    Vertex source() const { return source_; }
    Vertex target() const { return target_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<BasisId, Scalar>>& terms() const { return terms_; }

    /// Coefficient of a basis element (zero if absent).
    Scalar coefficient(BasisId id, const Field& field) const;

    void add(BasisId id, const Scalar& coeff);
    Morphism& operator+=(const Morphism& other);
    Morphism& operator*=(const Scalar& s);

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Vertex source_;
    Vertex target_;
    std::vector<std::pair<BasisId, Scalar>> terms_;  // sorted by id, nonzero
};

Morphism compose(const Category& cat, const Morphism& g, const Morphism& f);

}  // namespace twistcx
