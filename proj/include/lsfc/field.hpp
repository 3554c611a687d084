#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lsfc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Scalar domain: a prime field F_q or the rationals (exact, arbitrary precision).
class Field {
public:
    enum class Kind { prime, rational };

    static Field prime(std::int64_t q);
    static Field rational();

    Kind kind() const { return kind_; }
    std::int64_t modulus() const { return q_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }

    bool operator==(const Field&) const = default;

    std::string to_string() const;

private:
    Field(Kind k, std::int64_t q) : kind_(k), q_(q) {}
    Kind kind_;
    std::int64_t q_; // 0 for rationals
};

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact field element in canonical form: residue in [0, q) for prime
/// fields, reduced fraction with positive denominator for rationals.
class Scalar {
public:
    Scalar() : field_(Field::rational()), res_(0) {}
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, std::int64_t v);
    static Scalar from_rational(Rational r); // rationals only
    static Scalar from_string(const Field& f, const std::string& s);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical residue for prime fields.
    std::int64_t residue() const { return res_; }
    /// Reduced fraction for rationals.
    const Rational& fraction() const { return rat_; }

    std::string to_string() const;

private:
    explicit Scalar(const Field& f) : field_(f), res_(0) {}
    void require_same_field(const Scalar& o) const;

    Field field_;
    std::int64_t res_;
    Rational rat_;
};

} // namespace lsfc
