#include "twistcx/normalizer.hpp"

#include "twistcx/matrix.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace twistcx {

ComplexityReport complexity(const TwistedComplex& c) {
    if (c.empty()) throw std::invalid_argument("complexity of the zero complex");
    ComplexityReport r;
    r.lowest = *c.min_position();
    r.N = *c.max_position() - r.lowest;
    r.U.assign(static_cast<std::size_t>(r.N) + 1, 0);
    r.V.assign(static_cast<std::size_t>(r.N) + 1, 0);
    int hi = 0, lo = 0;
    bool first = true;
    for (const auto& s : c.summands()) {
        const int i = s.position - r.lowest;
        const int weight = s.vertex == Vertex::zero ? 2 * i + 1 : 2 * i;
        (s.vertex == Vertex::zero ? r.U : r.V)[static_cast<std::size_t>(i)]++;
        hi = first ? weight : std::max(hi, weight);
        lo = first ? weight : std::min(lo, weight);
        first = false;
    }
    r.cx = hi - lo;
    return r;
}

Admissibility admissible(const TwistedComplex& c) {
    Admissibility out;
    for (const auto& [deg, r] : hf_ranks(c, c))
        if (deg < 0) out.negative_degrees.push_back(deg);
    out.admissible = out.negative_degrees.empty();
    if (!out.admissible) {
        out.diagnostic = "endomorphisms in negative degree";
        for (std::size_t i = 0; i < out.negative_degrees.size(); ++i)
            out.diagnostic += (i ? ", " : " ") + std::to_string(out.negative_degrees[i]);
    }
    return out;
}

TwistedComplex relabel(const TwistedComplex& c) {
    const auto& cat = c.category();
    if (!cat.spherical()) throw PreconditionViolated("relabelling needs both cores to be spheres");
    const int lift = cat.n() - 2;
    std::vector<Summand> summands;
    for (const auto& s : c.summands())
        summands.push_back(s.vertex == Vertex::zero ? Summand{Vertex::one, s.position}
                                                    : Summand{Vertex::zero, s.position - lift});
    auto swap_label = [](BasisId id) {
        switch (id) {
        case Category::kE0: return Category::kE1;
        case Category::kE1: return Category::kE0;
        case Category::kP: return Category::kQ;
        case Category::kQ: return Category::kP;
        case Category::kF0: return Category::kF1;
        default: return Category::kF0;
        }
    };
    TwistedComplex out(c.category_ptr(), std::move(summands));
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            for (const auto& [id, coeff] : c.entry(a, b).terms()) out.add_to_entry(a, b, swap_label(id), coeff);
    return out;
}

namespace {

// V_{N-i} = 0 for i = 0..n-2 (as far as the complex reaches).
bool top_clear(const ComplexityReport& r, int n) {
    for (int i = 0; i <= n - 2 && i <= r.N; ++i)
        if (r.V[static_cast<std::size_t>(r.N - i)] != 0) return false;
    return true;
}

// Rank of the p-labelled block from the Q0 summands to the Q1 summands at
// one position of a minimal complex.
std::size_t p_block_rank(const TwistedComplex& c, int position) {
    std::vector<std::size_t> us, vs;
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (c.summand(a).position != position) continue;
        (c.summand(a).vertex == Vertex::zero ? us : vs).push_back(a);
    }
    const Field& field = c.category().field();
    Matrix block(field, vs.size(), us.size());
    for (std::size_t col = 0; col < us.size(); ++col)
        for (std::size_t row = 0; row < vs.size(); ++row)
            block(row, col) = c.entry(us[col], vs[row]).coefficient(Category::kP, field);
    return rank(block);
}

// Case-A structure forced by admissibility: U_i -> V_i injective and
// U_{N-i} -> V_{N-i} surjective for i <= n-2.
void check_case_a_structure(const TwistedComplex& c, const ComplexityReport& r, int n) {
    for (int i = 0; i <= n - 2 && i <= r.N; ++i) {
        const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(r.N - i);
        if (p_block_rank(c, r.lowest + i) != r.U[lo])
            throw PreconditionViolated("U_" + std::to_string(i) + " -> V_" + std::to_string(i) +
                                       " is not injective; the complex is not admissible\n" + describe(c));
        if (p_block_rank(c, r.lowest + r.N - i) != r.V[hi])
            throw PreconditionViolated("U_" + std::to_string(r.N - i) + " -> V_" + std::to_string(r.N - i) +
                                       " is not surjective; the complex is not admissible\n" + describe(c));
    }
}

std::optional<StepResult> search_base_case(const TwistedComplex& c, int cx) {
    const BraidLetter letters[] = {{Vertex::zero, 1}, {Vertex::zero, -1}, {Vertex::one, 1}, {Vertex::one, -1}};
    struct Node {
        BraidWord word;
        TwistedComplex complex;
    };
    std::deque<Node> frontier{{{}, c}};
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (node.word.size() == 3) continue;
        for (const auto& l : letters) {
            if (!node.word.empty() && node.word.back() == inverse(l)) continue;
            BraidWord w = node.word;
            w.push_back(l);
            TwistedComplex next = twist(node.complex, l);
            const int after = complexity(next).cx;
            if (after < cx) return StepResult{std::move(w), std::move(next), "base", cx, after};
            frontier.push_back({std::move(w), std::move(next)});
        }
    }
    return std::nullopt;
}

}  // namespace

StepResult reduction_step(const TwistedComplex& c, bool check_admissible) {
    const auto& cat = c.category();
    if (!cat.spherical()) throw PreconditionViolated("twists need both cores to be spheres");
    const TwistedComplex m = minimize(c);
    if (m.empty()) throw PreconditionViolated("the zero complex has no reduction");
    if (check_admissible) {
        auto adm = admissible(m);
        if (!adm.admissible) throw PreconditionViolated("inadmissible complex: " + adm.diagnostic);
    }
    const ComplexityReport r = complexity(m);
    if (r.cx == 0) throw PreconditionViolated("complexity is already 0");
    const int n = cat.n();

    const bool case_a = r.V[0] != 0;
    if (case_a != (r.U[static_cast<std::size_t>(r.N)] != 0))
        throw PreconditionViolated("V_0 != 0 <=> U_N != 0 fails; the complex is not admissible\n" + describe(m));

    // Case B is case A for the relabelled pair (Q1[2-n], Q0): the inverse
    // twist in the new Q0 is T1^-1, the twist in the new Q1 is T0.
    const TwistedComplex analysed = case_a ? m : relabel(m);
    const ComplexityReport ra = case_a ? r : complexity(analysed);
    if (ra.N >= n - 1) check_case_a_structure(analysed, ra, n);
    const bool first = top_clear(ra, n);
    struct Move {
        BraidLetter letter;
        const char* tag;
    };
    const Move a1{{Vertex::zero, -1}, "A1"}, a2{{Vertex::one, 1}, "A2"};
    const Move b1{{Vertex::one, -1}, "B1"}, b2{{Vertex::zero, 1}, "B2"};
    const Move chosen = case_a ? (first ? a1 : a2) : (first ? b1 : b2);
    const Move alternative = case_a ? (first ? a2 : a1) : (first ? b2 : b1);

    TwistedComplex next = twist(m, chosen.letter);
    int after = complexity(next).cx;
    if (after < r.cx) return {{chosen.letter}, std::move(next), chosen.tag, r.cx, after};
    if (r.N >= n - 1)
        throw ComplexityNotReduced(std::string("case ") + chosen.tag + " move " + to_string(chosen.letter) +
                                   " left cx at " + std::to_string(after) + " (was " + std::to_string(r.cx) +
                                   ")\n" + describe(m));

    // Base case N <= n-2: no curved arrows; try the other move of the case,
    // then a short search.
    next = twist(m, alternative.letter);
    after = complexity(next).cx;
    if (after < r.cx) return {{alternative.letter}, std::move(next), alternative.tag, r.cx, after};
    if (auto found = search_base_case(m, r.cx)) return std::move(*found);
    throw ComplexityNotReduced("no braid word of length <= 3 lowers cx " + std::to_string(r.cx) + "\n" +
                               describe(m));
}

Certificate normalize(const TwistedComplex& c, std::uint64_t seed) {
    const TwistedComplex m = minimize(c);
    if (m.empty()) throw PreconditionViolated("the zero complex has no normal form");
    if (!c.category().spherical()) throw PreconditionViolated("twists need both cores to be spheres");
    auto adm = admissible(m);
    if (!adm.admissible) throw PreconditionViolated("inadmissible complex: " + adm.diagnostic);

    Certificate cert;
    TwistedComplex current = m;
    const int limit = complexity(m).cx;
    for (int steps = 0;; ++steps) {
        if (complexity(current).cx == 0) break;
        if (steps >= limit) throw IterationLimit("cx failed to reach 0 within " + std::to_string(limit) + " steps");
        StepResult step = reduction_step(current, false);
        cert.word.insert(cert.word.end(), step.word.begin(), step.word.end());
        if (step.case_tag == "base") ++cert.fallbacks;
        cert.trace.push_back({step.word, step.case_tag, step.cx_before, step.cx_after});
        current = std::move(step.result);
    }
    cert.target_vertex = current.summand(0).vertex;
    cert.shift = -current.summand(0).position;
    cert.multiplicity = current.size();

    TwistedComplex target(c.category_ptr());
    for (std::size_t k = 0; k < cert.multiplicity; ++k)
        target = direct_sum(target, TwistedComplex::core(c.category_ptr(), cert.target_vertex, -cert.shift));
    const auto check = equivalent(apply_braid(cert.word, m), target, seed);
    if (check.verdict != Verdict::yes)
        throw CertificateRejected("certificate did not verify (" + to_string(check.verdict) + "): " + check.reason);
    return cert;
}

}  // namespace twistcx
