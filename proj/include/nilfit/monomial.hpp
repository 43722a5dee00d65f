#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilfit/errors.hpp"

namespace nilfit {

// Upper bound on ring variables (largest supported point count plus one
// elimination variable fits comfortably).
inline constexpr std::size_t kMaxVars = 16;

// Exponent vector with cached total degree. Length is fixed by the ambient
// ring; entries are non-negative.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : n_(check_nvars(nvars)) {}
    Monomial(std::size_t nvars, std::span<const unsigned> exponents);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return n_; }
    unsigned exponent(std::size_t i) const { return e_[i]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    // Total degree of the leading block [0, b).
    unsigned block_degree(std::size_t b) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Exact quotient; requires divides(o) == false ... this / o.
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const;

    std::string str(std::span<const std::string> names) const;

private:
    static std::size_t check_nvars(std::size_t n);
    void require_same_size(const Monomial& o) const;

    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
    std::uint8_t n_;
};

// Total, multiplicative monomial order with 1 as minimum. Variable
// precedence is positional: x_1 > x_2 > ... > x_k. The elimination kind
// makes the first `block` variables dominate (any monomial involving them
// beats any monomial that does not).
struct MonomialOrder {
    enum class Kind : std::uint8_t { lex, grevlex, elimination };

    Kind kind = Kind::grevlex;
    std::uint8_t block = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder elimination(std::uint8_t b) { return {Kind::elimination, b}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    std::string name() const;
    static MonomialOrder from_name(const std::string& s);

    bool operator==(const MonomialOrder&) const = default;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord);

}  // namespace nilfit
