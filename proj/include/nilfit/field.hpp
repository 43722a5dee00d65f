#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "nilfit/errors.hpp"

namespace nilfit {

// Ground field descriptor: the exact rationals, or GF(p) for a prime
// p < 2^31. Fixed per computation context; elements of different fields
// never mix.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime_field(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    // 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return p_; }

    std::string name() const;
    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

// Exact scalar: an arbitrary-precision rational in canonical form
// (gcd(|num|, den) = 1, den > 0), or a residue in [0, p).
class FieldElement {
public:
    // Zero over the rationals.
    FieldElement() : rep_(mpq_class(0)) {}

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_int(const Field& f, long v);
    // Accepts "a" or "a/b" with optional leading '-'.
    static FieldElement from_string(const Field& f, const std::string& s);
    static FieldElement rational(const mpq_class& q);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Total order used only for canonical sorting: numeric over Q,
    // by residue over GF(p).
    std::strong_ordering operator<=>(const FieldElement& o) const;

    // "a", "a/b", or the canonical residue.
    std::string str() const;

    // Rational access (throws on GF(p) elements).
    const mpq_class& rat() const;

private:
    struct ModP {
        std::uint32_t v;
        std::uint32_t p;
        bool operator==(const ModP&) const = default;
    };
    explicit FieldElement(mpq_class q) : rep_(std::move(q)) {}
    FieldElement(std::uint32_t v, std::uint32_t p) : rep_(ModP{v, p}) {}

    static std::uint32_t check_same_modulus(const FieldElement& a,
                                            const FieldElement& b);

    std::variant<mpq_class, ModP> rep_;
};

}  // namespace nilfit
