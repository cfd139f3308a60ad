#pragma once

#include "twistcx/complex.hpp"
#include "twistcx/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistcx {

/// Degree-homogeneous map of twisted complexes; entry(a, b) runs from summand
/// a of the source to summand b of the target.
class ComplexMap {
public:
    ComplexMap(const TwistedComplex& source, const TwistedComplex& target, int degree);

    int degree() const { return degree_; }
    std::size_t source_size() const { return source_size_; }
    std::size_t target_size() const { return target_size_; }
    const Morphism& entry(std::size_t a, std::size_t b) const { return entries_[a * target_size_ + b]; }
    void add_to_entry(std::size_t a, std::size_t b, const Morphism& m) { entries_[a * target_size_ + b] += m; }
    bool is_zero() const;

    ComplexMap& operator+=(const ComplexMap& other);
    ComplexMap& operator*=(const Scalar& s);

private:
    int degree_;
    std::size_t source_size_;
    std::size_t target_size_;
    std::vector<Morphism> entries_;
};

/// Identity of c (degree 0).
ComplexMap identity_map(const TwistedComplex& c);

struct HomGenerator {
    std::size_t from;
    std::size_t to;
    BasisId basis;
};

using Ranks = std::map<int, std::size_t>;

std::size_t total_rank(const Ranks& ranks);

/// Chain-level morphism complex hom(C, D). Generator (a, b, g) has total
/// degree deg g + position(b) - position(a); the differential is
/// D(f) = delta_D o f - (-1)^deg(f) f o delta_C.
class HomComplex {
public:
    HomComplex(TwistedComplex source, TwistedComplex target);

    const TwistedComplex& source() const { return source_; }
    const TwistedComplex& target() const { return target_; }

    /// Degrees with at least one generator, ascending.
    std::vector<int> degrees() const;
    const std::vector<HomGenerator>& generators(int degree) const;
    std::size_t dimension(int degree) const { return generators(degree).size(); }

    /// Matrix of D from `degree` to `degree + 1` (columns index the source).
    Matrix differential(int degree) const;

    ComplexMap to_map(int degree, const Vector& coords) const;
    Vector to_vector(const ComplexMap& f) const;
    ComplexMap apply(const ComplexMap& f) const;

    /// Basis of closed elements in the given degree.
    std::vector<Vector> cocycles(int degree) const;
    /// Cocycles completing a basis of the coboundaries to one of the cocycles;
    /// they represent a basis of cohomology. Deterministic.
    std::vector<Vector> cohomology_basis(int degree) const;

    Ranks cohomology_ranks() const;

    /// D o D == 0 in every degree.
    bool square_zero() const;

private:
    std::size_t lookup(std::size_t a, std::size_t b, BasisId g) const;

    TwistedComplex source_;
    TwistedComplex target_;
    std::map<int, std::vector<HomGenerator>> generators_;
    std::vector<std::size_t> index_;  // (a, b, g) -> position within its degree
    std::size_t basis_count_;
    std::vector<HomGenerator> none_;
};

/// Degreewise ranks of the cohomology of hom(c, d).
Ranks hf_ranks(const TwistedComplex& c, const TwistedComplex& d);

class ConeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cone of a closed degree-0 map f: c -> d, i.e. c[1] followed by d with f as
/// the connecting block.
TwistedComplex cone(const TwistedComplex& c, const TwistedComplex& d, const ComplexMap& f);

enum class Verdict { yes, no, inconclusive };
std::string to_string(Verdict v);

struct Equivalence {
    Verdict verdict;
    std::string reason;
};

/// Sound but incomplete quasi-isomorphism test: compares minimal models, then
/// searches the closed degree-0 maps for one whose cone is contractible.
Equivalence equivalent(const TwistedComplex& c, const TwistedComplex& d, std::uint64_t seed = 0);

}  // namespace twistcx
