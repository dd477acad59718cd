// Exact coefficient fields: F_p (p a small prime) and Q.
//
// A Field value tags which arithmetic applies; Scalar carries one element in a
// representation the owning Field knows how to interpret (canonical residue for
// F_p, reduced fraction for Q).  Everything downstream is generic over Field.

#ifndef KOSZUL_FIELD_HPP
#define KOSZUL_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace koszul {

// Caller misuse (bad dimensions, malformed input, ...).  CLI exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation that was attempted faithfully but cannot be completed
// (nilpotence bound exceeded, degree bound too small, ...).  CLI exit code 1.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, rationals };

struct Scalar {
    uint32_t r = 0;  // residue, used when the field is F_p
    Rational q;      // used when the field is Q

    Scalar() = default;
};

class Field {
public:
    static Field prime(uint32_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    uint32_t p() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const Rational& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws ComputeError on zero
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;
    // Accepts "17", "-3", "3/4" (the latter only over Q or reduced mod p).
    Scalar parse(const std::string& text) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // residue helpers, valid only for prime fields
    uint32_t reduce_int(long long v) const;
    uint32_t inv_mod(uint32_t a) const;

private:
    FieldKind kind_ = FieldKind::prime;
    uint32_t p_ = 32003;
};

inline bool is_prime_number(uint32_t m) {
    if (m < 2) return false;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

}  // namespace koszul

#endif
