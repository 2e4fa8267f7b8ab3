#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hqdeform {

// Raised for malformed input, inconsistent data or undefined operations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Either the rationals (characteristic 0) or a prime field F_p with p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;
    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::uint32_t p);
    // Accepts "Q" or "fp:<p>".
    static FieldSpec parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint32_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(std::int64_t v, FieldSpec field);
    Scalar(const mpq_class& v, FieldSpec field);

    static Scalar zero(FieldSpec f) { return Scalar(0, f); }
    static Scalar one(FieldSpec f) { return Scalar(1, f); }
    // "a", "-a", "a/b"; over F_p also "a mod p".
    static Scalar parse(const std::string& text, FieldSpec field);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    // "a/b" (or "a") over Q, "a mod p" over F_p.
    std::string to_string() const;
    // Plain numeral used inside polynomial text: "a/b" or the residue.
    std::string to_plain_string() const;

    const mpq_class& rational() const { return q_; }
    std::uint32_t residue() const { return r_; }

private:
    void check_same(const Scalar& o) const;

    FieldSpec field_;
    std::uint32_t r_ = 0;
    mpq_class q_;
};

// q together with its multiplicative order (nullopt when infinite).
struct QParam {
    Scalar q;
    std::optional<std::uint64_t> order;

    static QParam from(const Scalar& q);
    // Order l >= 2: D exponents are truncated at l.
    bool truncates() const { return order.has_value() && *order >= 2; }
};

std::optional<std::uint64_t> mult_order(const Scalar& x);
Scalar qint(std::int64_t i, const Scalar& q);
Scalar qfactorial(std::int64_t i, const Scalar& q);
Scalar qbinomial(std::int64_t m, std::int64_t i, const Scalar& q);

}  // namespace hqdeform
