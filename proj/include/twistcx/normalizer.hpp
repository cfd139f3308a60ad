#pragma once

#include "twistcx/twist.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcx {

/// Shape of a complex measured from its lowest occupied position: U[i] and
/// V[i] count the Q0 and Q1 summands at position lowest + i.
struct ComplexityReport {
    int lowest = 0;
    int N = 0;
    std::vector<std::size_t> U;
    std::vector<std::size_t> V;
    /// max - min of |U_i| = 2i+1, |V_j| = 2j over occupied slots.
    int cx = 0;
};

/// The complex must be nonempty.
ComplexityReport complexity(const TwistedComplex& c);

struct Admissibility {
    bool admissible = true;
    /// Degrees < 0 in which HF(c, c) is nonzero.
    std::vector<int> negative_degrees;
    std::string diagnostic;
};

Admissibility admissible(const TwistedComplex& c);

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ComplexityNotReduced : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IterationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CertificateRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Re-reads the complex over the pair (Q1[2-n], Q0): a Q1 summand at
/// position t becomes a Q0 summand at t - (n-2), a Q0 summand at t becomes a
/// Q1 summand at t, and the labels swap p <-> q, e0 <-> e1, f0 <-> f1.
/// Applying it twice gives the shift by n-2 up to entry signs. Needs a
/// spherical category.
TwistedComplex relabel(const TwistedComplex& c);

struct StepResult {
    /// Usually one letter; longer only for the base-case search.
    BraidWord word;
    TwistedComplex result;
    /// "A1", "A2", "B1", "B2", or "base" for the search fallback.
    std::string case_tag;
    int cx_before = 0;
    int cx_after = 0;
};

/// One move of the classification: picks the letter the case analysis
/// prescribes and applies it. Throws PreconditionViolated for inadmissible
/// input or cx = 0, ComplexityNotReduced when the prescribed move does not
/// lower cx above the base case.
StepResult reduction_step(const TwistedComplex& c, bool check_admissible = true);

struct TraceEntry {
    BraidWord word;
    std::string case_tag;
    int cx_before;
    int cx_after;
};

struct Certificate {
    BraidWord word;
    Vertex target_vertex = Vertex::zero;
    /// apply_braid(word, input) ~ multiplicity copies of core(target)[shift].
    int shift = 0;
    std::size_t multiplicity = 0;
    std::vector<TraceEntry> trace;
    /// Steps that needed the base-case search.
    std::size_t fallbacks = 0;
};

/// Reduces an admissible complex to copies of one shifted core and
/// re-verifies the result with equivalent().
Certificate normalize(const TwistedComplex& c, std::uint64_t seed = 0);

}  // namespace twistcx
