#include "twistcx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twistcx {

namespace {

std::vector<Morphism> zero_entries(const std::vector<Summand>& summands) {
    std::vector<Morphism> entries;
    entries.reserve(summands.size() * summands.size());
    for (const auto& from : summands)
        for (const auto& to : summands) entries.emplace_back(from.vertex, to.vertex);
    return entries;
}

}  // namespace

TwistedComplex::TwistedComplex(CategoryPtr cat) : cat_(std::move(cat)) {
    if (!cat_) throw std::invalid_argument("null category");
}

TwistedComplex::TwistedComplex(CategoryPtr cat, std::vector<Summand> summands)
    : cat_(std::move(cat)), summands_(std::move(summands)), entries_(zero_entries(summands_)) {
    if (!cat_) throw std::invalid_argument("null category");
}

TwistedComplex TwistedComplex::core(CategoryPtr cat, Vertex v, int position) {
    return TwistedComplex(std::move(cat), {{v, position}});
}

void TwistedComplex::set_entry(std::size_t from, std::size_t to, Morphism m) {
    if (from >= size() || to >= size()) throw std::out_of_range("summand index out of range");
    if (m.source() != summands_[from].vertex || m.target() != summands_[to].vertex)
        throw CompositionError("entry does not match summand vertices");
    entries_[from * size() + to] = std::move(m);
}

void TwistedComplex::add_to_entry(std::size_t from, std::size_t to, BasisId basis, const Scalar& coeff) {
    add_to_entry(from, to, Morphism::basis(*cat_, basis, coeff));
}

void TwistedComplex::add_to_entry(std::size_t from, std::size_t to, const Morphism& m) {
    if (from >= size() || to >= size()) throw std::out_of_range("summand index out of range");
    entries_[from * size() + to] += m;
}

std::optional<int> TwistedComplex::min_position() const {
    if (empty()) return std::nullopt;
    int m = summands_.front().position;
    for (const auto& s : summands_) m = std::min(m, s.position);
    return m;
}

std::optional<int> TwistedComplex::max_position() const {
    if (empty()) return std::nullopt;
    int m = summands_.front().position;
    for (const auto& s : summands_) m = std::max(m, s.position);
    return m;
}

std::size_t TwistedComplex::arrow_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const Morphism& m) { return !m.is_zero(); }));
}

TwistedComplex TwistedComplex::permuted(const std::vector<std::size_t>& order) const {
    std::vector<Summand> summands;
    summands.reserve(order.size());
    for (auto i : order) summands.push_back(summands_.at(i));
    TwistedComplex out(cat_, std::move(summands));
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) {
            const auto& m = entry(order[a], order[b]);
            if (!m.is_zero()) out.entries_[a * out.size() + b] = m;
        }
    return out;
}

bool operator==(const TwistedComplex& a, const TwistedComplex& b) {
    return *a.cat_ == *b.cat_ && a.summands_ == b.summands_ && a.entries_ == b.entries_;
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::vertex_mismatch: return "vertex_mismatch";
    case Violation::Kind::degree: return "degree";
    case Violation::Kind::triangularity: return "triangularity";
    case Violation::Kind::maurer_cartan: return "maurer_cartan";
    case Violation::Kind::curved_reach: return "curved_reach";
    }
    return "unknown";
}

std::vector<Violation> validate(const TwistedComplex& c) {
    std::vector<Violation> out;
    const auto& cat = c.category();
    const std::size_t m = c.size();
    const int n = cat.n();
    const int lowest = c.min_position().value_or(0);

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto& e = c.entry(a, b);
            if (e.is_zero()) continue;
            const int want = c.required_degree(a, b);
            if (e.source() != c.summand(a).vertex || e.target() != c.summand(b).vertex)
                out.push_back({Violation::Kind::vertex_mismatch, a, b, want, "entry between wrong cores"});
            if (a >= b)
                out.push_back({Violation::Kind::triangularity, a, b, want,
                               "entry from summand " + std::to_string(a) + " to " + std::to_string(b) +
                                   " is not strictly forward"});
            for (const auto& [id, coeff] : e.terms()) {
                const auto& el = cat.element(id);
                if (el.degree != want)
                    out.push_back({Violation::Kind::degree, a, b, el.degree,
                                   el.name + " has degree " + std::to_string(el.degree) + ", slot needs " +
                                       std::to_string(want)});
                if (id == cat.fundamental(el.source)) {
                    const int drop = c.summand(a).position - c.summand(b).position;
                    if (drop != n - 1 || c.summand(a).position - lowest < n - 1)
                        out.push_back({Violation::Kind::curved_reach, a, b, el.degree,
                                       "curved arrow must drop n-1 positions from at least n-1 above the bottom"});
                }
            }
        }

    // delta.delta, slot (a, c) = sum_b entry(b, c) o entry(a, b)
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t z = 0; z < m; ++z) {
            Morphism sq(c.summand(a).vertex, c.summand(z).vertex);
            for (std::size_t b = 0; b < m; ++b) {
                const auto& first = c.entry(a, b);
                const auto& second = c.entry(b, z);
                if (first.is_zero() || second.is_zero()) continue;
                if (first.target() != second.source()) continue;  // reported as vertex_mismatch
                sq += compose(cat, second, first);
            }
            if (sq.is_zero()) continue;
            std::string detail = "delta.delta = ";
            bool first_term = true;
            for (const auto& [id, coeff] : sq.terms()) {
                if (!first_term) detail += " + ";
                detail += coeff.to_string() + "*" + cat.element(id).name;
                first_term = false;
            }
            out.push_back({Violation::Kind::maurer_cartan, a, z,
                           2 + c.summand(a).position - c.summand(z).position, detail});
        }
    return out;
}

TwistedComplex shift(const TwistedComplex& c, int k) {
    std::vector<Summand> summands = c.summands();
    for (auto& s : summands) s.position -= k;
    TwistedComplex out(c.category_ptr(), std::move(summands));
    const Scalar sign(c.category().field(), (k % 2 == 0) ? 1 : -1);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b) {
            if (c.entry(a, b).is_zero()) continue;
            Morphism e = c.entry(a, b);
            e *= sign;
            out.set_entry(a, b, std::move(e));
        }
    return out;
}

TwistedComplex direct_sum(const TwistedComplex& c, const TwistedComplex& d) {
    if (!(c.category() == d.category()))
        throw std::invalid_argument("direct sum of complexes over different categories");
    std::vector<Summand> summands = c.summands();
    summands.insert(summands.end(), d.summands().begin(), d.summands().end());
    TwistedComplex out(c.category_ptr(), std::move(summands));
    const std::size_t off = c.size();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            if (!c.entry(a, b).is_zero()) out.set_entry(a, b, c.entry(a, b));
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = 0; b < d.size(); ++b)
            if (!d.entry(a, b).is_zero()) out.set_entry(off + a, off + b, d.entry(a, b));
    return out;
}

namespace {

struct UnitArrow {
    std::size_t from;
    std::size_t to;
};

std::optional<UnitArrow> narrowest_unit_arrow(const TwistedComplex& c) {
    std::optional<UnitArrow> best;
    const auto& cat = c.category();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const auto& e = c.entry(a, b);
            if (e.is_zero() || c.summand(a).vertex != c.summand(b).vertex) continue;
            if (c.required_degree(a, b) != 0) continue;
            if (e.coefficient(cat.unit(c.summand(a).vertex), cat.field()).is_zero()) continue;
            if (!best || b - a < best->to - best->from) best = UnitArrow{a, b};
        }
    return best;
}

// Reorder so the arrow's endpoints become adjacent: summands strictly between
// them that are reachable from `from` move after `to`, the rest before
// `from`. Valid because no path of length >= 2 joins the endpoints (any such
// path would contain a narrower unit arrow).
std::vector<std::size_t> adjacent_order(const TwistedComplex& c, UnitArrow arrow) {
    std::vector<bool> reachable(c.size(), false);
    reachable[arrow.from] = true;
    for (std::size_t z = arrow.from + 1; z < arrow.to; ++z)
        for (std::size_t y = arrow.from; y < z && !reachable[z]; ++y)
            if (reachable[y] && !c.entry(y, z).is_zero()) reachable[z] = true;

    std::vector<std::size_t> order;
    order.reserve(c.size());
    for (std::size_t i = 0; i < arrow.from; ++i) order.push_back(i);
    for (std::size_t i = arrow.from + 1; i < arrow.to; ++i)
        if (!reachable[i]) order.push_back(i);
    order.push_back(arrow.from);
    order.push_back(arrow.to);
    for (std::size_t i = arrow.from + 1; i < arrow.to; ++i)
        if (reachable[i]) order.push_back(i);
    for (std::size_t i = arrow.to + 1; i < c.size(); ++i) order.push_back(i);
    return order;
}

// Cancels the unit arrow a -> a+1:  delta'(x, y) = delta(x, y) - delta(a, y) o phi^-1 o delta(x, a+1).
TwistedComplex eliminate_adjacent(const TwistedComplex& c, std::size_t a) {
    const auto& cat = c.category();
    const std::size_t b = a + 1;
    const Scalar inv = c.entry(a, b).coefficient(cat.unit(c.summand(a).vertex), cat.field()).inverse();

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != a && i != b) keep.push_back(i);
    TwistedComplex out = c.permuted(keep);

    // x < a and y > b by triangularity; map to indices in `out`.
    for (std::size_t x = 0; x < a; ++x) {
        const auto& into = c.entry(x, b);
        if (into.is_zero()) continue;
        for (std::size_t y = b + 1; y < c.size(); ++y) {
            const auto& outof = c.entry(a, y);
            if (outof.is_zero()) continue;
            Morphism corr = compose(cat, outof, into);
            if (corr.is_zero()) continue;
            corr *= -inv;
            out.add_to_entry(x, y - 2, corr);
        }
    }
    return out;
}

}  // namespace

TwistedComplex minimize(const TwistedComplex& input) {
    TwistedComplex c = input;
    while (auto arrow = narrowest_unit_arrow(c)) {
        const auto order = adjacent_order(c, *arrow);
        const auto a = static_cast<std::size_t>(std::find(order.begin(), order.end(), arrow->from) - order.begin());
        c = eliminate_adjacent(c.permuted(order), a);
    }
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& sx = c.summand(x);
        const auto& sy = c.summand(y);
        if (sx.position != sy.position) return sx.position > sy.position;
        return sx.vertex < sy.vertex;
    });
    return c.permuted(order);
}

std::string describe(const TwistedComplex& c) {
    std::string out;
    for (std::size_t a = 0; a < c.size(); ++a)
        out += "[" + std::to_string(a) + "] Q" + std::to_string(index(c.summand(a).vertex)) + " @ " +
               std::to_string(c.summand(a).position) + "\n";
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            for (const auto& [id, coeff] : c.entry(a, b).terms())
                out += "  " + std::to_string(a) + " -> " + std::to_string(b) + " : " + coeff.to_string() + "*" +
                       c.category().element(id).name + "\n";
    return out;
}

std::vector<Summand> summand_multiset(const TwistedComplex& c) {
    std::vector<Summand> s = c.summands();
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace twistcx
