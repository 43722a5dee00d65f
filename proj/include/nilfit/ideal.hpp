#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "nilfit/groebner.hpp"

namespace nilfit {

// Finitely generated ideal with a lazily computed reduced Groebner basis
// for the ring's order. Immutable; copies share the basis cache, and the
// cache is write-once (concurrent readers either recompute identical
// results or see the completed value).
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens, GroebnerConfig cfg = {});

    static Ideal zero(RingPtr ring, GroebnerConfig cfg = {});
    static Ideal unit(RingPtr ring, GroebnerConfig cfg = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const GroebnerConfig& config() const { return cfg_; }

    const GroebnerBasis& groebner() const;
    bool is_zero_ideal() const { return gens_.empty(); }
    // True iff every generator is homogeneous.
    bool is_homogeneous() const;

private:
    struct Cache {
        std::once_flag once;
        std::optional<GroebnerBasis> gb;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    GroebnerConfig cfg_;
    std::shared_ptr<Cache> cache_;
};

// f in I, decided by normal form against the reduced basis.
bool ideal_member(const Polynomial& f, const Ideal& I);

// Identical reduced Groebner bases under the common ring order.
bool ideal_equal(const Ideal& I, const Ideal& J);

// Reduced basis equals {1}.
bool is_unit_ideal(const Ideal& I);

// I ∩ J by the auxiliary-variable elimination method: a fresh dominating
// variable t, generators t·I + (1−t)·J, elimination-order basis, keep the
// t-free elements.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// Left fold of ideal_intersect over the list (which must be nonempty).
Ideal intersect_all(std::span<const Ideal> ideals);

// I : J = {g : gJ ⊆ I}, as the intersection over basis elements f of J of
// (1/f)(I ∩ <f>). Throws on J = 0.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// Generated by all t-fold products of generators. t >= 1.
Ideal ideal_power(const Ideal& I, unsigned t);

// I : J^∞, by iterating the quotient until two consecutive iterates are
// equal ideals.
Ideal saturation(const Ideal& I, const Ideal& J, unsigned max_iter = 64);

// Ascending colon chain I:J ⊆ I:J² ⊆ ... ending at the unit ideal.
struct NilResult {
    unsigned index;            // smallest s with J^s ⊆ I
    std::vector<Ideal> chain;  // I:J, I:J², ..., I:J^s (last one is <1>)
};

// Index of nilpotency of I, given its radical J. The ascent of the chain
// is re-checked at every step; exceeding `cap` signals that J is not the
// radical (or the cap was too small).
NilResult nil_index(const Ideal& I, const Ideal& radical, unsigned cap = 64);

}  // namespace nilfit
