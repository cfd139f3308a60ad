#include "twistcx/hom.hpp"

#include <algorithm>
#include <functional>

namespace twistcx {

ComplexMap::ComplexMap(const TwistedComplex& source, const TwistedComplex& target, int degree)
    : degree_(degree), source_size_(source.size()), target_size_(target.size()) {
    entries_.reserve(source_size_ * target_size_);
    for (const auto& s : source.summands())
        for (const auto& t : target.summands()) entries_.emplace_back(s.vertex, t.vertex);
}

bool ComplexMap::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Morphism& m) { return m.is_zero(); });
}

ComplexMap& ComplexMap::operator+=(const ComplexMap& other) {
    if (other.degree_ != degree_ || other.source_size_ != source_size_ || other.target_size_ != target_size_)
        throw std::invalid_argument("adding incompatible complex maps");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMap& ComplexMap::operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

ComplexMap identity_map(const TwistedComplex& c) {
    ComplexMap id(c, c, 0);
    const auto& cat = c.category();
    for (std::size_t a = 0; a < c.size(); ++a)
        id.add_to_entry(a, a, Morphism::basis(cat, cat.unit(c.summand(a).vertex), Scalar::one(cat.field())));
    return id;
}

std::size_t total_rank(const Ranks& ranks) {
    std::size_t t = 0;
    for (const auto& [d, r] : ranks) t += r;
    return t;
}

HomComplex::HomComplex(TwistedComplex source, TwistedComplex target)
    : source_(std::move(source)), target_(std::move(target)) {
    const auto& cat = source_.category();
    if (!(cat == target_.category())) throw std::invalid_argument("hom between different categories");
    basis_count_ = cat.basis().size();
    index_.assign(source_.size() * target_.size() * basis_count_, static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < source_.size(); ++a)
        for (std::size_t b = 0; b < target_.size(); ++b)
            for (BasisId g : cat.morphism_space(source_.summand(a).vertex, target_.summand(b).vertex)) {
                const int deg = cat.element(g).degree + target_.summand(b).position - source_.summand(a).position;
                auto& list = generators_[deg];
                index_[(a * target_.size() + b) * basis_count_ + static_cast<std::size_t>(g)] = list.size();
                list.push_back({a, b, g});
            }
}

std::vector<int> HomComplex::degrees() const {
    std::vector<int> out;
    for (const auto& [d, gens] : generators_) out.push_back(d);
    return out;
}

const std::vector<HomGenerator>& HomComplex::generators(int degree) const {
    auto it = generators_.find(degree);
    return it == generators_.end() ? none_ : it->second;
}

std::size_t HomComplex::lookup(std::size_t a, std::size_t b, BasisId g) const {
    return index_[(a * target_.size() + b) * basis_count_ + static_cast<std::size_t>(g)];
}

Matrix HomComplex::differential(int degree) const {
    const auto& cat = source_.category();
    const auto& cols = generators(degree);
    const auto& rows = generators(degree + 1);
    Matrix d(cat.field(), rows.size(), cols.size());
    if (rows.empty() || cols.empty()) return d;
    const Scalar one = Scalar::one(cat.field());
    const Scalar koszul(cat.field(), degree % 2 == 0 ? -1 : 1);  // -(-1)^deg
    for (std::size_t col = 0; col < cols.size(); ++col) {
        const auto& gen = cols[col];
        const Morphism phi = Morphism::basis(cat, gen.basis, one);
        for (std::size_t b2 = 0; b2 < target_.size(); ++b2) {
            const auto& dt = target_.entry(gen.to, b2);
            if (dt.is_zero()) continue;
            const Morphism image = compose(cat, dt, phi);
            for (const auto& [id, c] : image.terms()) d(lookup(gen.from, b2, id), col) += c;
        }
        for (std::size_t a2 = 0; a2 < source_.size(); ++a2) {
            const auto& ds = source_.entry(a2, gen.from);
            if (ds.is_zero()) continue;
            const Morphism image = compose(cat, phi, ds);
            for (const auto& [id, c] : image.terms()) d(lookup(a2, gen.to, id), col) += koszul * c;
        }
    }
    return d;
}

ComplexMap HomComplex::to_map(int degree, const Vector& coords) const {
    const auto& cat = source_.category();
    const auto& gens = generators(degree);
    if (coords.size() != gens.size()) throw std::invalid_argument("coordinate vector has wrong length");
    ComplexMap f(source_, target_, degree);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!coords[i].is_zero()) f.add_to_entry(gens[i].from, gens[i].to, Morphism::basis(cat, gens[i].basis, coords[i]));
    return f;
}

Vector HomComplex::to_vector(const ComplexMap& f) const {
    const auto& cat = source_.category();
    Vector v = zero_vector(cat.field(), dimension(f.degree()));
    for (std::size_t a = 0; a < source_.size(); ++a)
        for (std::size_t b = 0; b < target_.size(); ++b)
            for (const auto& [id, c] : f.entry(a, b).terms()) {
                const int deg = cat.element(id).degree + target_.summand(b).position - source_.summand(a).position;
                if (deg != f.degree()) throw std::invalid_argument("map is not homogeneous");
                v[lookup(a, b, id)] = c;
            }
    return v;
}

ComplexMap HomComplex::apply(const ComplexMap& f) const {
    return to_map(f.degree() + 1, differential(f.degree()).apply(to_vector(f)));
}

std::vector<Vector> HomComplex::cocycles(int degree) const {
    if (dimension(degree) == 0) return {};
    return kernel_basis(differential(degree));
}

namespace {

// Rows in semi-echelon form: row j vanishes at the pivots of rows before it.
class IncrementalSpan {
public:
    bool insert(Vector v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            Scalar factor = v[pivot];
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!row[i].is_zero()) v[i] -= factor * row[i];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (it == v.end()) return false;
        const auto pivot = static_cast<std::size_t>(it - v.begin());
        Scalar inv = v[pivot].inverse();
        for (auto& s : v) s *= inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, Vector>> rows_;
};

}  // namespace

std::vector<Vector> HomComplex::cohomology_basis(int degree) const {
    auto z = cocycles(degree);
    if (z.empty()) return {};
    IncrementalSpan span;
    if (dimension(degree - 1) > 0) {
        Matrix incoming = differential(degree - 1);
        for (std::size_t col = 0; col < incoming.cols(); ++col) {
            Vector v = zero_vector(incoming.field(), incoming.rows());
            for (std::size_t r = 0; r < incoming.rows(); ++r) v[r] = incoming(r, col);
            span.insert(std::move(v));
        }
    }
    std::vector<Vector> out;
    for (auto& v : z)
        if (span.insert(v)) out.push_back(std::move(v));
    return out;
}

Ranks HomComplex::cohomology_ranks() const {
    Ranks out;
    std::map<int, std::size_t> d_rank;
    for (int deg : degrees())
        if (dimension(deg + 1) > 0) d_rank[deg] = rank(differential(deg));
    for (int deg : degrees()) {
        std::size_t r = dimension(deg);
        if (auto it = d_rank.find(deg); it != d_rank.end()) r -= it->second;
        if (auto it = d_rank.find(deg - 1); it != d_rank.end()) r -= it->second;
        if (r > 0) out[deg] = r;
    }
    return out;
}

bool HomComplex::square_zero() const {
    for (int deg : degrees()) {
        if (dimension(deg + 1) == 0 || dimension(deg + 2) == 0) continue;
        if (!(differential(deg + 1) * differential(deg)).is_zero()) return false;
    }
    return true;
}

Ranks hf_ranks(const TwistedComplex& c, const TwistedComplex& d) {
    return HomComplex(c, d).cohomology_ranks();
}

TwistedComplex cone(const TwistedComplex& c, const TwistedComplex& d, const ComplexMap& f) {
    if (f.degree() != 0) throw ConeError("cone needs a degree-0 map, got degree " + std::to_string(f.degree()));
    if (f.source_size() != c.size() || f.target_size() != d.size())
        throw ConeError("map does not match the given complexes");
    HomComplex hom(c, d);
    if (!hom.apply(f).is_zero()) throw ConeError("map is not closed");
    TwistedComplex out = direct_sum(shift(c, 1), d);
    const std::size_t off = c.size();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < d.size(); ++b)
            if (!f.entry(a, b).is_zero()) out.add_to_entry(a, off + b, f.entry(a, b));
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// Size of a maximum matching in the bipartite graph of entries that are
// nonzero in some direction. Below m, every member of the family is singular.
std::size_t structural_rank(const AffineFamily& family) {
    const std::size_t m = family.base.rows();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t col = 0; col < m; ++col) {
            bool used = !family.base(r, col).is_zero();
            for (const auto& d : family.directions) used = used || !d(r, col).is_zero();
            if (used) adj[r].push_back(col);
        }
    std::vector<std::size_t> match(m, m);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t r) {
        for (std::size_t col : adj[r]) {
            if (seen[col]) continue;
            seen[col] = 1;
            if (match[col] == m || augment(match[col])) {
                match[col] = r;
                return true;
            }
        }
        return false;
    };
    std::size_t size = 0;
    for (std::size_t r = 0; r < m; ++r) {
        seen.assign(m, 0);
        if (augment(r)) ++size;
    }
    return size;
}

}  // namespace

Equivalence equivalent(const TwistedComplex& c, const TwistedComplex& d, std::uint64_t seed) {
    const TwistedComplex mc = minimize(c);
    const TwistedComplex md = minimize(d);
    if (summand_multiset(mc) != summand_multiset(md))
        return {Verdict::no, "minimal models have different summands"};
    if (mc.empty()) return {Verdict::yes, "both contractible"};

    // Closed degree-0 maps between minimal complexes are isomorphisms exactly
    // when their identity-labelled block is invertible.
    const auto& cat = mc.category();
    HomComplex hom(mc, md);
    const auto closed = hom.cocycles(0);
    const auto& gens = hom.generators(0);
    const std::size_t m = mc.size();
    AffineFamily family{Matrix(cat.field(), m, m), {}};
    bool any_unit = false;
    for (const auto& z : closed) {
        Matrix block(cat.field(), m, m);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& g = gens[i];
            if (z[i].is_zero() || g.basis != cat.unit(mc.summand(g.from).vertex)) continue;
            block(g.to, g.from) = z[i];
            any_unit = true;
        }
        family.directions.push_back(std::move(block));
    }
    if (!any_unit || structural_rank(family) < m)
        return {Verdict::no, "no closed degree-0 map has an invertible identity block"};

    auto member = generic_invertible(family, seed);
    if (!member) return {Verdict::inconclusive, "no invertible closed map found by the seeded search"};

    Vector coords = zero_vector(cat.field(), gens.size());
    for (std::size_t k = 0; k < closed.size(); ++k)
        for (std::size_t i = 0; i < gens.size(); ++i) coords[i] += member->coefficients[k] * closed[k][i];
    ComplexMap phi = hom.to_map(0, coords);
    if (!minimize(cone(mc, md, phi)).empty())
        return {Verdict::inconclusive, "candidate map has a non-contractible cone"};
    return {Verdict::yes, "closed degree-0 map with contractible cone"};
}

}  // namespace twistcx
