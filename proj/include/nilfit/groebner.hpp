#pragma once

#include <cstdint>
#include <span>

#include "nilfit/polynomial.hpp"

namespace nilfit {

struct GroebnerConfig {
    // Processing more S-pairs than this aborts with ResourceLimitError.
    std::uint64_t max_pairs = 1'000'000;
    // Largest working polynomial support allowed during a reduction.
    std::size_t max_terms = 100'000;
    // Buchberger's chain criterion (strict-divisor form). Purely an
    // optimization; the reduced basis is identical either way.
    bool use_chain_criterion = true;
};

struct BuchbergerStats {
    std::uint64_t pairs_generated = 0;
    std::uint64_t pairs_processed = 0;
    std::uint64_t pairs_skipped_coprime = 0;
    std::uint64_t pairs_skipped_chain = 0;
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t basis_additions = 0;
    std::uint64_t reduction_steps = 0;
};

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // aligned with the divisor list
    std::size_t steps = 0;
};

// Multivariate division: f = sum quotients[i] * G[i] + remainder, no term
// of the remainder divisible by any leading term of G. Divisor choice is
// the first match in list order, so the result is deterministic.
DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> G,
                           const MonomialOrder& ord,
                           const GroebnerConfig& cfg = {});

// S(f,g) = (lcm/lt f) f - (lcm/lt g) g. Throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;  // monic, inter-reduced, sorted by
                                       // ascending leading monomial
    BuchbergerStats stats;
};

// Reduced Groebner basis of <gens> under ord. Every input generator is
// checked to reduce to zero against the result. Empty input (or all-zero
// input) yields the zero ideal's empty basis.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                         const GroebnerConfig& cfg = {});

// When enabled, every normal_form call re-multiplies its quotients and
// asserts the division identity; the counter records how many divisions
// were checked. Used by the test suites.
void set_division_check(bool on);
bool division_check_enabled();
std::uint64_t division_checks_performed();

}  // namespace nilfit
