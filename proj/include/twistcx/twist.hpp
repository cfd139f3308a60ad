#pragma once

#include "twistcx/complex.hpp"
#include "twistcx/hom.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistcx {

/// T_vertex (power +1) or its inverse (power -1).
struct BraidLetter {
    Vertex vertex;
    int power;

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

class BraidSyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "s0", "S0", "s1", "S1" (lowercase = positive twist).
std::string to_string(BraidLetter letter);
/// Space-separated letters; the empty word is "".
std::string to_string(const BraidWord& word);
BraidWord parse_braid_word(std::string_view text);

BraidLetter inverse(BraidLetter letter);
BraidWord inverse(const BraidWord& word);

/// Spherical twist in the core Q_vertex: the minimal model of
/// Cone(HF(Q, c) (x) Q -> c) for power +1, and of
/// Cone(c -> HF(c, Q)^v (x) Q)[-1] for power -1.
TwistedComplex twist(const TwistedComplex& c, Vertex vertex, int power);
inline TwistedComplex twist(const TwistedComplex& c, BraidLetter letter) {
    return twist(c, letter.vertex, letter.power);
}

/// Applies the letters left to right (the first letter acts first).
TwistedComplex apply_braid(const BraidWord& word, const TwistedComplex& c);

/// equivalent(T0 T1 T0 c, T1 T0 T1 c).
Verdict check_braid_relation(const TwistedComplex& c, std::uint64_t seed = 0);

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OrbitWitness {
    BraidWord word;
    /// apply_braid(word, Q0) is equivalent to shift(Q1, shift).
    int shift;
};

/// Breadth-first search over words of length <= max_length for a braid
/// carrying Q0 to a shift of Q1.
OrbitWitness core_orbit_witness(int n, const Field& field = Field{}, std::size_t max_length = 4);

/// The word applying T0 then T1, k times: the functor (T1 T0)^k.
BraidWord power_word(int k);

}  // namespace twistcx
