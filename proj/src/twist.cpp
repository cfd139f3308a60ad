#include "twistcx/twist.hpp"

#include <deque>
#include <sstream>

namespace twistcx {

std::string to_string(BraidLetter letter) {
    return std::string(letter.power > 0 ? "s" : "S") + std::to_string(index(letter.vertex));
}

std::string to_string(const BraidWord& word) {
    std::string out;
    for (const auto& l : word) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

BraidWord parse_braid_word(std::string_view text) {
    BraidWord word;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token.size() != 2 || (token[0] != 's' && token[0] != 'S') || (token[1] != '0' && token[1] != '1'))
            throw BraidSyntaxError("bad braid letter \"" + token + "\" (expected s0, S0, s1 or S1)");
        word.push_back({token[1] == '0' ? Vertex::zero : Vertex::one, token[0] == 's' ? 1 : -1});
    }
    return word;
}

BraidLetter inverse(BraidLetter letter) { return {letter.vertex, -letter.power}; }

BraidWord inverse(const BraidWord& word) {
    BraidWord out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

TwistedComplex twist(const TwistedComplex& c, Vertex vertex, int power) {
    if (power != 1 && power != -1) throw std::invalid_argument("twist power must be +1 or -1");
    const auto& cat = c.category();
    const TwistedComplex q = TwistedComplex::core(c.category_ptr(), vertex, 0);

    if (power == 1) {
        // HF(Q, c) (x) Q -> c, one copy of Q[-m] per class of degree m; the
        // cone places those copies at m - 1 in front of c.
        HomComplex hom(q, c);
        std::vector<Summand> front;
        std::vector<Vector> reps;
        std::vector<int> rep_degree;
        for (int m : hom.degrees())
            for (auto& v : hom.cohomology_basis(m)) {
                front.push_back({vertex, m - 1});
                reps.push_back(std::move(v));
                rep_degree.push_back(m);
            }
        TwistedComplex out = direct_sum(TwistedComplex(c.category_ptr(), front), c);
        for (std::size_t k = 0; k < reps.size(); ++k) {
            ComplexMap phi = hom.to_map(rep_degree[k], reps[k]);
            for (std::size_t b = 0; b < c.size(); ++b)
                if (!phi.entry(0, b).is_zero()) out.add_to_entry(k, front.size() + b, phi.entry(0, b));
        }
        return minimize(out);
    }

    // c -> HF(c, Q)^v (x) Q: a class of degree m gives Q[m], placed at -m + 1
    // after the desuspension.
    HomComplex hom(c, q);
    std::vector<Summand> back;
    std::vector<Vector> reps;
    std::vector<int> rep_degree;
    for (int m : hom.degrees())
        for (auto& v : hom.cohomology_basis(m)) {
            back.push_back({vertex, 1 - m});
            reps.push_back(std::move(v));
            rep_degree.push_back(m);
        }
    TwistedComplex out = direct_sum(c, TwistedComplex(c.category_ptr(), back));
    const Scalar minus_one(cat.field(), -1);
    for (std::size_t k = 0; k < reps.size(); ++k) {
        ComplexMap psi = hom.to_map(rep_degree[k], reps[k]);
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (psi.entry(a, 0).is_zero()) continue;
            Morphism e = psi.entry(a, 0);
            e *= minus_one;
            out.add_to_entry(a, c.size() + k, e);
        }
    }
    return minimize(out);
}

TwistedComplex apply_braid(const BraidWord& word, const TwistedComplex& c) {
    TwistedComplex out = minimize(c);
    for (const auto& letter : word) out = twist(out, letter);
    return out;
}

Verdict check_braid_relation(const TwistedComplex& c, std::uint64_t seed) {
    const BraidWord lhs{{Vertex::zero, 1}, {Vertex::one, 1}, {Vertex::zero, 1}};
    const BraidWord rhs{{Vertex::one, 1}, {Vertex::zero, 1}, {Vertex::one, 1}};
    return equivalent(apply_braid(lhs, c), apply_braid(rhs, c), seed).verdict;
}

OrbitWitness core_orbit_witness(int n, const Field& field, std::size_t max_length) {
    CategoryParams params;
    params.n = n;
    params.field = field;
    auto cat = Category::make(params);
    const TwistedComplex q0 = TwistedComplex::core(cat, Vertex::zero);
    const BraidLetter letters[] = {{Vertex::zero, 1}, {Vertex::zero, -1}, {Vertex::one, 1}, {Vertex::one, -1}};

    struct Node {
        BraidWord word;
        TwistedComplex complex;
    };
    std::deque<Node> frontier;
    frontier.push_back({{}, q0});
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        const auto& c = node.complex;
        if (c.size() == 1 && c.summand(0).vertex == Vertex::one) {
            const int s = -c.summand(0).position;
            if (equivalent(c, shift(TwistedComplex::core(cat, Vertex::one), s)).verdict == Verdict::yes)
                return {node.word, s};
        }
        if (node.word.size() == max_length) continue;
        for (const auto& l : letters) {
            if (!node.word.empty() && node.word.back() == inverse(l)) continue;
            BraidWord w = node.word;
            w.push_back(l);
            frontier.push_back({std::move(w), twist(c, l)});
        }
    }
    throw SearchExhausted("no braid word of length <= " + std::to_string(max_length) +
                          " carries Q0 to a shift of Q1 at n = " + std::to_string(n));
}

BraidWord power_word(int k) {
    BraidWord w;
    for (int i = 0; i < k; ++i) {
        w.push_back({Vertex::zero, 1});
        w.push_back({Vertex::one, 1});
    }
    return w;
}

}  // namespace twistcx
