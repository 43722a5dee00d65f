#pragma once

#include <span>
#include <vector>

#include "nilfit/ring.hpp"

namespace nilfit {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Multivariate polynomial: term list sorted strictly descending under the
// ring's order, no zero coefficients, no duplicate monomials. The zero
// polynomial is the empty list.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    // Canonicalizes: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, FieldElement c);
    static Polynomial constant(RingPtr ring, long c);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, Monomial m, FieldElement c);
    // Sum of coeffs[i] * x_i.
    static Polynomial linear_form(RingPtr ring,
                                  std::span<const FieldElement> coeffs);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Degree of the zero polynomial is -1.
    int degree() const;
    bool is_homogeneous() const;

    const Monomial& leading_monomial() const;
    const FieldElement& leading_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    // this * c * m
    Polynomial times_term(const FieldElement& c, const Monomial& m) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    FieldElement coeff_of(const Monomial& m) const;
    // Coefficient vector of a linear form (degree <= 1, no constant term).
    std::vector<FieldElement> linear_coeffs() const;

    // Re-canonicalize into a ring with the same field/variables but a
    // possibly different order.
    Polynomial to_ring(const RingPtr& other) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace nilfit
