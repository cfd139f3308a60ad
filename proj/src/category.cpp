#include "twistcx/category.hpp"

#include <algorithm>

namespace twistcx {

Vertex vertex_from_int(int i) {
    if (i == 0) return Vertex::zero;
    if (i == 1) return Vertex::one;
    throw ParameterError("vertex must be 0 or 1, got " + std::to_string(i));
}

std::vector<std::string> validate_params(const CategoryParams& params) {
    std::vector<std::string> reasons;
    if (params.n < 3)
        reasons.push_back("n = " + std::to_string(params.n) +
                          " < 3: higher products not guaranteed to vanish");
    std::uint32_t ch = params.field.characteristic();
    if (ch != 0 && !is_prime(ch))
        reasons.push_back("characteristic " + std::to_string(ch) + " is not prime");
    if (params.betti0) {
        const auto& b = *params.betti0;
        if (params.n >= 0 && b.size() != static_cast<std::size_t>(params.n) + 1) {
            reasons.push_back("betti0 has " + std::to_string(b.size()) + " entries, expected n+1 = " +
                              std::to_string(params.n + 1));
        } else if (!b.empty()) {
            if (b.front() != 1) reasons.push_back("betti0: b^0 must be 1");
            if (b.back() != 1) reasons.push_back("betti0: b^n must be 1");
            for (std::size_t d = 0; d < b.size(); ++d) {
                if (b[d] < 0) reasons.push_back("betti0: negative entry at degree " + std::to_string(d));
                if (b[d] != b[b.size() - 1 - d]) {
                    reasons.push_back("betti0: b^" + std::to_string(d) + " != b^" +
                                      std::to_string(b.size() - 1 - d) + " (no Poincare duality pairing)");
                    break;
                }
            }
        }
    }
    return reasons;
}

Category::Category(CategoryParams params) : params_(std::move(params)) {
    if (auto reasons = validate_params(params_); !reasons.empty()) {
        std::string msg = "invalid category parameters:";
        for (const auto& r : reasons) msg += " " + r + ";";
        throw ParameterError(msg);
    }
    const int n = params_.n;
    basis_ = {{"e0", Vertex::zero, Vertex::zero, 0}, {"e1", Vertex::one, Vertex::one, 0},
              {"p", Vertex::zero, Vertex::one, 1},   {"q", Vertex::one, Vertex::zero, n - 1},
              {"f0", Vertex::zero, Vertex::zero, n}, {"f1", Vertex::one, Vertex::one, n}};
    // x_{d,k} sits at index first_x[d] + k.
    std::vector<int> first_x(static_cast<std::size_t>(n) + 1, -1);
    if (params_.betti0) {
        const auto& b = *params_.betti0;
        for (int d = 1; d < n; ++d) {
            first_x[static_cast<std::size_t>(d)] = static_cast<int>(basis_.size());
            int count = b[static_cast<std::size_t>(d)];
            for (int k = 0; k < count; ++k) {
                std::string name = "x" + std::to_string(d);
                if (count > 1) name += "_" + std::to_string(k + 1);
                basis_.push_back({name, Vertex::zero, Vertex::zero, d});
            }
        }
    }

    const auto size = basis_.size();
    table_.assign(size * size, std::nullopt);
    auto set = [&](BasisId g, BasisId f, BasisId result) {
        table_[static_cast<std::size_t>(g) * size + static_cast<std::size_t>(f)] = std::pair{1, result};
    };
    for (std::size_t i = 0; i < size; ++i) {
        const auto id = static_cast<BasisId>(i);
        // units
        set(unit(basis_[i].target), id, id);
        set(id, unit(basis_[i].source), id);
    }
    set(kQ, kP, kF0);
    set(kP, kQ, kF1);
    if (params_.betti0) {
        const auto& b = *params_.betti0;
        for (int d = 1; d < n; ++d)
            for (int k = 0; k < b[static_cast<std::size_t>(d)]; ++k)
                set(first_x[static_cast<std::size_t>(n - d)] + k, first_x[static_cast<std::size_t>(d)] + k, kF0);
    }

    for (auto& s : by_degree_)
        for (auto& t : s) t.assign(static_cast<std::size_t>(n) + 1, {});
    for (std::size_t i = 0; i < size; ++i) {
        const auto& el = basis_[i];
        by_degree_[index(el.source)][index(el.target)][static_cast<std::size_t>(el.degree)].push_back(
            static_cast<BasisId>(i));
    }
}

std::shared_ptr<const Category> Category::make(CategoryParams params) {
    return std::make_shared<const Category>(std::move(params));
}

std::vector<BasisId> Category::morphism_space(Vertex i, Vertex j) const {
    std::vector<BasisId> out;
    for (const auto& level : by_degree_[index(i)][index(j)]) out.insert(out.end(), level.begin(), level.end());
    return out;
}

const std::vector<BasisId>& Category::basis_in_degree(Vertex i, Vertex j, int degree) const {
    if (degree < 0 || degree > params_.n) return empty_;
    return by_degree_[index(i)][index(j)][static_cast<std::size_t>(degree)];
}

std::optional<BasisId> Category::find(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<BasisId>(i);
    return std::nullopt;
}

std::optional<std::pair<int, BasisId>> Category::compose_basis(BasisId g, BasisId f) const {
    const auto& gb = element(g);
    const auto& fb = element(f);
    if (fb.target != gb.source)
        throw CompositionError("cannot compose " + gb.name + " after " + fb.name);
    return table_[static_cast<std::size_t>(g) * basis_.size() + static_cast<std::size_t>(f)];
}

bool Category::operator==(const Category& other) const {
    return params_.n == other.params_.n && params_.betti0 == other.params_.betti0 &&
           params_.field == other.params_.field;
}

Morphism Morphism::basis(const Category& cat, BasisId id, const Scalar& coeff) {
    const auto& el = cat.element(id);
    Morphism m(el.source, el.target);
    m.add(id, coeff);
    return m;
}

Scalar Morphism::coefficient(BasisId id, const Field& field) const {
    for (const auto& [b, c] : terms_)
        if (b == id) return c;
    return Scalar::zero(field);
}

void Morphism::add(BasisId id, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                               [](const auto& term, BasisId key) { return term.first < key; });
    if (it != terms_.end() && it->first == id) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {id, coeff});
    }
}

Morphism& Morphism::operator+=(const Morphism& other) {
    if (other.source_ != source_ || other.target_ != target_)
        throw CompositionError("adding morphisms between different cores");
    for (const auto& [id, c] : other.terms_) add(id, c);
    return *this;
}

Morphism& Morphism::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.second *= s;
    return *this;
}

Morphism compose(const Category& cat, const Morphism& g, const Morphism& f) {
    if (f.target() != g.source()) throw CompositionError("composability mismatch");
    Morphism out(f.source(), g.target());
    for (const auto& [gi, gc] : g.terms())
        for (const auto& [fi, fc] : f.terms())
            if (auto prod = cat.compose_basis(gi, fi))
                out.add(prod->second, Scalar(cat.field(), prod->first) * gc * fc);
    return out;
}

}  // namespace twistcx
