#include "twistcx/cover.hpp"

#include "twistcx/matrix.hpp"
#include "twistcx/normalizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace twistcx {

void check_cover(const CoverSpec& cover, const Field& field) {
    if (!cover.index) return;
    if (*cover.index == 0) throw CoverError("cover index must be positive");
    const std::uint32_t p = field.characteristic();
    if (p == 0 || *cover.index % p != 0)
        throw CoverError("characteristic " + std::to_string(p) + " does not divide the cover index " +
                         std::to_string(*cover.index));
}

TwistedComplex specialize(const TwistedComplex& c, const CoverSpec& cover) {
    const auto& cat = c.category();
    check_cover(cover, cat.field());
    const BasisId killed = cat.fundamental(cover.covered_vertex);
    TwistedComplex out(c.category_ptr(), c.summands());
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            for (const auto& [id, coeff] : c.entry(a, b).terms())
                if (id != killed) out.add_to_entry(a, b, id, coeff);
    return out;
}

std::vector<TwistedComplex> decompose(const TwistedComplex& c) {
    const TwistedComplex m = minimize(c);
    std::vector<std::size_t> parent(m.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (!m.entry(a, b).is_zero()) parent[find(a)] = find(b);

    std::vector<std::size_t> roots;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t a = 0; a < m.size(); ++a) {
        const std::size_t r = find(a);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            members.push_back({a});
        } else {
            members[static_cast<std::size_t>(it - roots.begin())].push_back(a);
        }
    }
    std::vector<TwistedComplex> pieces;
    for (const auto& keep : members) pieces.push_back(m.restricted(keep));
    return pieces;
}

Ranks fibre_rank(const TwistedComplex& c, Vertex vertex) {
    const auto& cat = c.category();
    const BasisId unit = cat.unit(vertex);
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t a = 0; a < c.size(); ++a)
        if (c.summand(a).vertex == vertex) by_degree[c.summand(a).position].push_back(a);

    auto local = [](const std::vector<std::size_t>& list, std::size_t a) {
        return static_cast<std::size_t>(std::find(list.begin(), list.end(), a) - list.begin());
    };
    std::map<int, std::size_t> d_rank;
    for (const auto& [deg, cols] : by_degree) {
        auto next = by_degree.find(deg + 1);
        if (next == by_degree.end()) continue;
        const auto& rows = next->second;
        Matrix d(cat.field(), rows.size(), cols.size());
        for (std::size_t a : cols)
            for (std::size_t b : rows) d(local(rows, b), local(cols, a)) = c.entry(a, b).coefficient(unit, cat.field());
        d_rank[deg] = rank(d);
    }
    Ranks out;
    for (const auto& [deg, gens] : by_degree) {
        std::size_t r = gens.size();
        if (auto it = d_rank.find(deg); it != d_rank.end()) r -= it->second;
        if (auto it = d_rank.find(deg - 1); it != d_rank.end()) r -= it->second;
        if (r > 0) out[deg] = r;
    }
    return out;
}

TwistedComplex impossible_complex(CategoryPtr cat, int f_arrows) {
    if (f_arrows < 1) throw std::invalid_argument("the chain needs at least one fundamental-class arrow");
    const int n = cat->n();
    std::vector<Summand> summands{{Vertex::zero, 0}};
    for (int k = 0; k <= f_arrows; ++k) summands.push_back({Vertex::one, -k * (n - 1)});
    const Scalar one = Scalar::one(cat->field());
    TwistedComplex c(cat, std::move(summands));
    c.add_to_entry(0, 1, Category::kP, one);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(f_arrows); ++k) c.add_to_entry(k, k + 1, Category::kF1, one);
    return c;
}

int BettiVector::beta() const {
    int s = 0;
    for (std::size_t i = 1; i + 1 < b.size(); ++i) s += b[i];
    return s;
}

std::vector<std::string> validate_betti(const BettiVector& betti) {
    std::vector<std::string> out;
    if (betti.b.size() < 2) {
        out.push_back("need at least b^0 and b^n");
        return out;
    }
    if (betti.b.front() != 1) out.push_back("b^0 must be 1");
    if (betti.b.back() != 1) out.push_back("b^n must be 1");
    for (std::size_t i = 0; i < betti.b.size(); ++i)
        if (betti.b[i] < 0) out.push_back("b^" + std::to_string(i) + " is negative");
    return out;
}

BettiVector parse_betti(const std::string& text) {
    BettiVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("Betti entry \"" + item + "\" is not an integer");
        out.b.push_back(value);
    }
    return out;
}

FeasibilityReport truncation_feasibility(const BettiVector& betti) {
    auto problems = validate_betti(betti);
    if (!problems.empty()) throw std::invalid_argument("bad Betti vector: " + problems.front());
    FeasibilityReport r;
    r.beta = betti.beta();
    // dim V * (beta - 2) <= -2 with dim V >= 2: the left side is >= 0 once
    // beta >= 2, and at dim V = 2 it is -2 * (2 - beta) otherwise.
    if (r.beta < 2) {
        r.feasible = true;
        r.min_dimV = 2;
        r.boundary_ranks = 2 - 1 - r.beta;
    }
    if (r.beta == 0)
        r.note = "sphere: known twist";
    else if (r.feasible)
        r.note = "inequality saturated at dim V = 2";
    else
        r.note = "dim V * (beta - 2) >= 0 > -2";
    return r;
}

bool BoundaryReport::pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.pass; });
}

BoundaryReport boundary_rank_check(const TwistedComplex& c) {
    std::vector<std::size_t> q0;
    std::size_t q1 = 0;
    for (std::size_t a = 0; a < c.size(); ++a) (c.summand(a).vertex == Vertex::zero ? q0.push_back(a) : void(++q1));
    if (q1 != 1) throw BoundaryPrecondition("need exactly one Q1 summand, found " + std::to_string(q1));
    if (q0.empty()) throw BoundaryPrecondition("no Q0 summands");
    auto adm = admissible(c);
    if (!adm.admissible) throw BoundaryPrecondition("inadmissible complex: " + adm.diagnostic);
    const TwistedComplex part = c.restricted(q0);
    if (!validate(part).empty()) throw BoundaryPrecondition("the Q0 summands do not form a subcomplex");

    BoundaryReport r;
    const TwistedComplex q = TwistedComplex::core(c.category_ptr(), Vertex::zero);
    r.hf_rank = total_rank(hf_ranks(part, q));
    const int lo = *part.min_position(), hi = *part.max_position();
    for (const auto& s : part.summands()) {
        if (s.position == lo) ++r.first_multiplicity;
        if (s.position == hi) ++r.last_multiplicity;
    }
    r.claims.push_back({"HF(C, Q) has rank 2", r.hf_rank == 2, "rank " + std::to_string(r.hf_rank)});
    r.claims.push_back({"dim(V_0) = 1 = dim(V_N)", r.first_multiplicity == 1 && r.last_multiplicity == 1,
                        "dim(V_0) = " + std::to_string(r.first_multiplicity) +
                            ", dim(V_N) = " + std::to_string(r.last_multiplicity)});
    return r;
}

}  // namespace twistcx
