#include "koszul/field.hpp"

namespace koszul {

Field Field::prime(uint32_t p) {
    if (!is_prime_number(p)) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw UsageError("prime moduli must be < 2^31");
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    return f;
}

Field Field::rationals() {
    Field f;
    f.kind_ = FieldKind::rationals;
    f.p_ = 0;
    return f;
}

Scalar Field::zero() const { return Scalar{}; }

Scalar Field::one() const {
    Scalar s;
    if (is_prime_field())
        s.r = 1 % p_;
    else
        s.q = 1;
    return s;
}

uint32_t Field::reduce_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<uint32_t>(m);
}

Scalar Field::from_int(long long v) const {
    Scalar s;
    if (is_prime_field())
        s.r = reduce_int(v);
    else
        s.q = v;
    return s;
}

Scalar Field::from_rational(const Rational& q) const {
    Scalar s;
    if (!is_prime_field()) {
        s.q = q;
        return s;
    }
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(q) % p_;
    cpp_int den = denominator(q) % p_;
    if (num < 0) num += p_;
    if (den < 0) den += p_;
    auto d = static_cast<uint32_t>(den);
    if (d == 0) throw UsageError("rational with denominator divisible by p cannot be reduced mod p");
    s.r = static_cast<uint32_t>(static_cast<uint64_t>(static_cast<uint32_t>(num)) * inv_mod(d) % p_);
    return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_prime_field()) {
        uint64_t t = static_cast<uint64_t>(a.r) + b.r;
        s.r = static_cast<uint32_t>(t >= p_ ? t - p_ : t);
    } else {
        s.q = a.q + b.q;
    }
    return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_prime_field()) {
        s.r = a.r >= b.r ? a.r - b.r : a.r + p_ - b.r;
    } else {
        s.q = a.q - b.q;
    }
    return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_prime_field())
        s.r = static_cast<uint32_t>(static_cast<uint64_t>(a.r) * b.r % p_);
    else
        s.q = a.q * b.q;
    return s;
}

Scalar Field::neg(const Scalar& a) const {
    Scalar s;
    if (is_prime_field())
        s.r = a.r == 0 ? 0 : p_ - a.r;
    else
        s.q = -a.q;
    return s;
}

uint32_t Field::inv_mod(uint32_t a) const {
    if (a == 0) throw ComputeError("division by zero in F_p");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar s;
    if (is_prime_field()) {
        s.r = inv_mod(a.r);
    } else {
        if (a.q == 0) throw ComputeError("division by zero in Q");
        s.q = 1 / a.q;
    }
    return s;
}

bool Field::is_zero(const Scalar& a) const { return is_prime_field() ? a.r == 0 : a.q == 0; }

bool Field::is_one(const Scalar& a) const { return is_prime_field() ? a.r == 1 % p_ : a.q == 1; }

bool Field::equal(const Scalar& a, const Scalar& b) const {
    return is_prime_field() ? a.r == b.r : a.q == b.q;
}

std::string Field::to_string(const Scalar& a) const {
    return is_prime_field() ? std::to_string(a.r) : a.q.str();
}

Scalar Field::parse(const std::string& text) const {
    try {
        Rational q(text);
        return from_rational(q);
    } catch (const std::exception&) {
        throw UsageError("cannot parse scalar '" + text + "'");
    }
}

}  // namespace koszul
