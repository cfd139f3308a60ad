#pragma once

#include "twistcx/category.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace twistcx {

/// Q_vertex[-position]: the core placed in cohomological degree `position`.
struct Summand {
    Vertex vertex;
    int position;

    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// A twisted complex over the plumbing category: an ordered list of shifted
/// cores and a differential whose (a, b) entry is a morphism from summand a
/// to summand b of internal degree 1 + position(a) - position(b).
///
/// Entries are nonzero only for a < b (strict triangularity in list order).
/// The empty complex is the zero object.
class TwistedComplex {
public:
    explicit TwistedComplex(CategoryPtr cat);
    TwistedComplex(CategoryPtr cat, std::vector<Summand> summands);

    /// Single core Q_v[-position].
    static TwistedComplex core(CategoryPtr cat, Vertex v, int position = 0);

    const Category& category() const { return *cat_; }
    const CategoryPtr& category_ptr() const { return cat_; }

    std::size_t size() const { return summands_.size(); }
    bool empty() const { return summands_.empty(); }
    const std::vector<Summand>& summands() const { return summands_; }
    const Summand& summand(std::size_t a) const { return summands_.at(a); }

    const Morphism& entry(std::size_t from, std::size_t to) const {
        return entries_[from * size() + to];
    }
    void set_entry(std::size_t from, std::size_t to, Morphism m);
    void add_to_entry(std::size_t from, std::size_t to, BasisId basis, const Scalar& coeff);
    void add_to_entry(std::size_t from, std::size_t to, const Morphism& m);

    /// Internal degree an entry from `from` to `to` must have.
    int required_degree(std::size_t from, std::size_t to) const {
        return 1 + summands_[from].position - summands_[to].position;
    }

    std::optional<int> min_position() const;
    std::optional<int> max_position() const;

    /// Number of (nonzero) differential entries.
    std::size_t arrow_count() const;

    /// The complex with summands reordered: new summand i is old order[i].
    TwistedComplex permuted(const std::vector<std::size_t>& order) const;

    /// Subcomplex on the given summands (kept in the given order). Only
    /// meaningful when the selection is closed under the differential.
    TwistedComplex restricted(const std::vector<std::size_t>& keep) const { return permuted(keep); }

    friend bool operator==(const TwistedComplex& a, const TwistedComplex& b);

private:
    CategoryPtr cat_;
    std::vector<Summand> summands_;
    std::vector<Morphism> entries_;
};

struct Violation {
    enum class Kind { vertex_mismatch, degree, triangularity, maurer_cartan, curved_reach };
    Kind kind;
    std::size_t from;
    std::size_t to;
    /// Internal degree of the offending entry (for MC: of the delta.delta slot).
    int degree;
    std::string detail;
};

std::string to_string(Violation::Kind kind);

/// Checks vertex typing, the total-degree rule, strict triangularity, the
/// Maurer-Cartan equation delta.delta = 0 and the reach of curved arrows.
/// Returns every violated slot; empty means valid.
std::vector<Violation> validate(const TwistedComplex& c);

/// c[k]: every position decreases by k; entries pick up the sign (-1)^k.
TwistedComplex shift(const TwistedComplex& c, int k);

TwistedComplex direct_sum(const TwistedComplex& c, const TwistedComplex& d);

/// Gaussian elimination of every identity-labelled arrow. The result has no
/// e_v entries, is homotopy equivalent to the input, and is sorted stably by
/// (position descending, vertex ascending).
TwistedComplex minimize(const TwistedComplex& c);

/// One line per summand and per arrow, for diagnostics.
std::string describe(const TwistedComplex& c);

/// Count of summands per (vertex, position), as a sorted list.
std::vector<Summand> summand_multiset(const TwistedComplex& c);

}  // namespace twistcx
