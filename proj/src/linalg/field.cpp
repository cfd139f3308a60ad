#include "twistcx/field.hpp"

namespace twistcx {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t characteristic) : characteristic_(characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw FieldError("characteristic " + std::to_string(characteristic) +
                         " is neither 0 nor prime");
    if (characteristic > 2147483647u)
        throw FieldError("characteristic too large");
}

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Rational& q, std::uint32_t p) {
    BigInt num = boost::multiprecision::numerator(q) % p;
    BigInt den = boost::multiprecision::denominator(q) % p;
    if (num < 0) num += p;
    if (den == 0) throw FieldError("denominator divisible by the characteristic");
    auto n = static_cast<std::uint64_t>(num);
    auto d = static_cast<std::uint64_t>(den);
    // d^(p-2) mod p
    std::uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(n * inv % p);
}

}  // namespace

Scalar::Scalar(const Field& field, std::int64_t value) {
    if (field.is_rational())
        rep_ = Rational(value);
    else
        rep_ = Residue{reduce(value, field.characteristic()), field.characteristic()};
}

Scalar::Scalar(const Field& field, const Rational& value) {
    if (field.is_rational())
        rep_ = value;
    else
        rep_ = Residue{reduce(value, field.characteristic()), field.characteristic()};
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    auto bad = [&] { return FieldError("malformed coefficient \"" + std::string(text) + "\""); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw bad();
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw bad();
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_int(text.substr(slash + 1));
        if (den == 0) throw FieldError("zero denominator in \"" + std::string(text) + "\"");
    }
    return Scalar(field, Rational(num, den));
}

Field Scalar::field() const {
    if (auto r = std::get_if<Residue>(&rep_)) return Field(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&rep_)) return r->value == 0;
    return std::get<Rational>(rep_) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&rep_)) return r->value == 1;
    return std::get<Rational>(rep_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
    bool ok = rep_.index() == other.rep_.index();
    if (ok && rep_.index() == 0)
        ok = std::get<Residue>(rep_).modulus == std::get<Residue>(other.rep_).modulus;
    if (!ok) throw FieldError("arithmetic between different fields");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    if (auto r = std::get_if<Residue>(&rep_)) {
        std::uint64_t p = r->modulus, inv = 1, base = r->value, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return Scalar(Residue{static_cast<std::uint32_t>(inv), r->modulus});
    }
    return Scalar(Rational(1) / std::get<Rational>(rep_));
}

Scalar Scalar::operator-() const {
    if (auto r = std::get_if<Residue>(&rep_))
        return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(Rational(-std::get<Rational>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& other) {
    check_same_field(other);
    if (auto r = std::get_if<Residue>(&rep_)) {
        std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(other.rep_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<Rational>(rep_) += std::get<Rational>(other.rep_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
    check_same_field(other);
    if (auto r = std::get_if<Residue>(&rep_)) {
        std::uint64_t s = std::uint64_t(r->value) * std::get<Residue>(other.rep_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<Rational>(rep_) *= std::get<Rational>(other.rep_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.rep_.index() != b.rep_.index()) return false;
    if (auto r = std::get_if<Scalar::Residue>(&a.rep_)) {
        const auto& s = std::get<Scalar::Residue>(b.rep_);
        return r->modulus == s.modulus && r->value == s.value;
    }
    return std::get<Rational>(a.rep_) == std::get<Rational>(b.rep_);
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
    return std::get<Rational>(rep_).str();
}

}  // namespace twistcx
