#include "lsfc/field.hpp"

namespace lsfc {

namespace {

bool is_prime_trial(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t q) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q);
}

// Extended Euclid; a in [1, q), q prime.
std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
    std::int64_t t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t; new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r; new_r = tmp;
    }
    return mod_reduce(t, q);
}

} // namespace

Field Field::prime(std::int64_t q) {
    if (!is_prime_trial(q))
        throw std::invalid_argument("field modulus must be a prime >= 2, got " + std::to_string(q));
    return Field(Kind::prime, q);
}

Field Field::rational() { return Field(Kind::rational, 0); }

std::string Field::to_string() const {
    return kind_ == Kind::prime ? "prime:" + std::to_string(q_) : "rational";
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
    Scalar s(f);
    if (f.is_prime_field())
        s.res_ = mod_reduce(v, f.modulus());
    else
        s.rat_ = v;
    return s;
}

Scalar Scalar::from_rational(Rational r) {
    Scalar s(Field::rational());
    s.rat_ = std::move(r); // cpp_rational keeps canonical form
    return s;
}

Scalar Scalar::from_string(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        BigInt v(s);
        if (f.is_prime_field()) {
            BigInt r = v % f.modulus();
            if (r < 0) r += f.modulus();
            return from_int(f, static_cast<std::int64_t>(r));
        }
        return from_rational(Rational(v));
    }
    if (f.is_prime_field())
        throw std::invalid_argument("fractional literal '" + s + "' in a prime field");
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return from_rational(Rational(num, den));
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("scalar arithmetic across different fields (" +
                                 field_.to_string() + " vs " + o.field_.to_string() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.res_ = mod_reduce(res_ + o.res_, field_.modulus());
    else
        r.rat_ = rat_ + o.rat_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.res_ = mod_reduce(res_ - o.res_, field_.modulus());
    else
        r.rat_ = rat_ - o.rat_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_prime_field())
        r.res_ = mul_mod(res_, o.res_, field_.modulus());
    else
        r.rat_ = rat_ * o.rat_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_prime_field())
        r.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    else
        r.rat_ = -rat_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r(field_);
    if (field_.is_prime_field())
        r.res_ = inv_mod(res_, field_.modulus());
    else
        r.rat_ = 1 / rat_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    return rat_.str();
}

} // namespace lsfc
