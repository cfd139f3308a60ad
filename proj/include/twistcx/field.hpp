#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace twistcx {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    static constexpr std::uint32_t kDefaultCharacteristic = 32003;

    Field() : Field(kDefaultCharacteristic) {}
    explicit Field(std::uint32_t characteristic);

    static Field rationals() { return Field(0); }

    std::uint32_t characteristic() const { return characteristic_; }
    bool is_rational() const { return characteristic_ == 0; }

    /// Number of elements, or 0 for an infinite field.
    std::uint64_t size() const { return characteristic_; }

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t characteristic_;
};

/// Field element. Elements of F_p carry their modulus so arithmetic never
/// needs a field argument; mixing fields is a logic error and throws.
class Scalar {
public:
    /// Zero of the default field.
    Scalar() : Scalar(Field{}, 0) {}
    Scalar(const Field& field, std::int64_t value);
    Scalar(const Field& field, const Rational& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0); }
    static Scalar one(const Field& field) { return Scalar(field, 1); }

    /// Accepts "17", "-3", and for the rationals "num/den".
    static Scalar parse(const Field& field, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical decimal form: residue in [0,p) or reduced "num/den".
    std::string to_string() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };

    explicit Scalar(Residue r) : rep_(r) {}
    explicit Scalar(Rational q) : rep_(std::move(q)) {}
    void check_same_field(const Scalar& other) const;

    std::variant<Residue, Rational> rep_;
};

}  // namespace twistcx
