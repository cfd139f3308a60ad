#pragma once

#include "twistcx/complex.hpp"
#include "twistcx/hom.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcx {

class CoverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A covering of one core, seen only through its effect on differentials:
/// the pulled-back fundamental class vanishes.
struct CoverSpec {
    Vertex covered_vertex = Vertex::one;
    /// Number of sheets; nullopt means infinite.
    std::optional<std::uint64_t> index;
};

/// Throws CoverError unless the index is infinite or a positive multiple
/// of the field characteristic.
void check_cover(const CoverSpec& cover, const Field& field);

/// Deletes every f_{covered vertex} entry.
TwistedComplex specialize(const TwistedComplex& c, const CoverSpec& cover);

/// Minimizes, then splits into the connected components of the graph whose
/// edges are the nonzero entries. Pieces keep their relative order and are
/// listed by first summand.
std::vector<TwistedComplex> decompose(const TwistedComplex& c);

/// Cohomology of the pairing with a cotangent fibre of Q_vertex: one
/// generator per Q_vertex summand at its position, differential from the
/// e_vertex entries only.
Ranks fibre_rank(const TwistedComplex& c, Vertex vertex);

/// The complex Sigma[n-1] <-f- Sigma <-p- S with S = Q0 in position 0 and
/// Sigma = Q1; `f_arrows` > 1 lengthens the chain of fundamental classes.
TwistedComplex impossible_complex(CategoryPtr cat, int f_arrows = 1);

struct BettiVector {
    std::vector<int> b;

    int n() const { return static_cast<int>(b.size()) - 1; }
    /// Sum of b^i over 0 < i < n.
    int beta() const;
};

/// Reasons the vector is unusable (b^0 = b^n = 1, entries >= 0, n >= 1).
std::vector<std::string> validate_betti(const BettiVector& betti);
BettiVector parse_betti(const std::string& text);

struct FeasibilityReport {
    int beta = 0;
    bool feasible = false;
    /// Least dim V >= 2 with dim V * (beta - 2) <= -2.
    std::optional<int> min_dimV;
    /// Rank of the U^0 and U^N slots, dim V - 1 - beta, at min_dimV.
    std::optional<int> boundary_ranks;
    std::string note;
};

FeasibilityReport truncation_feasibility(const BettiVector& betti);

struct ClaimCheck {
    std::string claim;
    bool pass;
    std::string detail;
};

struct BoundaryReport {
    /// Total rank of HF(C, Q0) for the Q0-only part C.
    std::size_t hf_rank = 0;
    std::size_t first_multiplicity = 0;
    std::size_t last_multiplicity = 0;
    std::vector<ClaimCheck> claims;
    bool pass() const;
};

class BoundaryPrecondition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// For an admissible complex with exactly one Q1 summand, checks the rank-2
/// and rank-one-at-the-ends claims on its Q0-only part.
BoundaryReport boundary_rank_check(const TwistedComplex& c);

}  // namespace twistcx
