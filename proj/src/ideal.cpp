#include "nilfit/ideal.hpp"

#include <algorithm>

namespace nilfit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, GroebnerConfig cfg)
    : ring_(std::move(ring)), cfg_(cfg), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(*ring_, *g.ring());
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::zero(RingPtr ring, GroebnerConfig cfg) {
    return Ideal(std::move(ring), {}, cfg);
}

Ideal Ideal::unit(RingPtr ring, GroebnerConfig cfg) {
    std::vector<Polynomial> gens{Polynomial::constant(ring, 1)};
    return Ideal(std::move(ring), std::move(gens), cfg);
}

const GroebnerBasis& Ideal::groebner() const {
    std::call_once(cache_->once, [this] {
        cache_->gb = buchberger(gens_, ring_->order(), cfg_);
    });
    return *cache_->gb;
}

bool Ideal::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    require_same_ring(*f.ring(), *I.ring());
    if (f.is_zero()) return true;
    const auto& gb = I.groebner();
    return normal_form(f, gb.elements, gb.order, I.config()).remainder.is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring());
    const auto& a = I.groebner().elements;
    const auto& b = J.groebner().elements;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool is_unit_ideal(const Ideal& I) {
    const auto& e = I.groebner().elements;
    return e.size() == 1 && e[0].degree() == 0;
}

namespace {

// Cheap unit detection that avoids forcing a basis computation.
bool has_constant_generator(const Ideal& I) {
    return std::any_of(
        I.generators().begin(), I.generators().end(),
        [](const Polynomial& g) { return !g.is_zero() && g.degree() == 0; });
}

std::string fresh_var_name(const Ring& ring) {
    if (ring.var_index("t") < 0) return "t";
    for (int i = 0;; ++i) {
        std::string name = "t" + std::to_string(i);
        if (ring.var_index(name) < 0) return name;
    }
}

Monomial prepend_exponent(const Monomial& m, unsigned e0) {
    std::vector<unsigned> es;
    es.reserve(m.nvars() + 1);
    es.push_back(e0);
    for (std::size_t i = 0; i < m.nvars(); ++i) es.push_back(m.exponent(i));
    return Monomial(m.nvars() + 1, es);
}

Polynomial lift(const Polynomial& p, const RingPtr& ext, unsigned e0) {
    std::vector<Term> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms())
        ts.push_back({prepend_exponent(t.mono, e0), t.coeff});
    return Polynomial::from_terms(ext, std::move(ts));
}

Polynomial drop_aux(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(0) != 0)
            throw InternalCheckError("auxiliary variable survived elimination");
        std::vector<unsigned> es;
        es.reserve(t.mono.nvars() - 1);
        for (std::size_t i = 1; i < t.mono.nvars(); ++i)
            es.push_back(t.mono.exponent(i));
        ts.push_back({Monomial(t.mono.nvars() - 1, es), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(ts));
}

// g exactly divisible by f; returns g / f.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
    std::vector<Polynomial> divisor{f};
    DivisionResult d = normal_form(g, divisor, g.ring()->order());
    if (!d.remainder.is_zero())
        throw InternalCheckError("expected an exact polynomial quotient");
    return d.quotients[0];
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring());
    if (I.is_zero_ideal() || J.is_zero_ideal())
        return Ideal::zero(I.ring(), I.config());
    if (has_constant_generator(I)) return J;
    if (has_constant_generator(J)) return I;

    const RingPtr& base = I.ring();
    std::vector<std::string> vars;
    vars.reserve(base->nvars() + 1);
    vars.push_back(fresh_var_name(*base));
    for (const auto& v : base->var_names()) vars.push_back(v);
    RingPtr ext =
        Ring::make(base->field(), std::move(vars), MonomialOrder::elimination(1));

    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + J.generators().size());
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    for (const auto& g : I.generators()) gens.push_back(t * lift(g, ext, 0));
    for (const auto& g : J.generators())
        gens.push_back(one_minus_t * lift(g, ext, 0));

    GroebnerBasis gb = buchberger(std::move(gens), ext->order(), I.config());
    std::vector<Polynomial> result;
    for (const auto& e : gb.elements)
        // under the elimination order a t-free leading monomial forces the
        // whole element to be t-free
        if (e.leading_monomial().exponent(0) == 0)
            result.push_back(drop_aux(e, base));
    return Ideal(base, std::move(result), I.config());
}

Ideal intersect_all(std::span<const Ideal> ideals) {
    if (ideals.empty()) throw InputError("intersect_all needs at least one ideal");
    Ideal acc = ideals[0];
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = ideal_intersect(acc, ideals[i]);
    return acc;
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(*I.ring(), *J.ring());
    if (J.is_zero_ideal())
        throw InputError("quotient by the zero ideal");
    if (I.is_zero_ideal()) return Ideal::zero(I.ring(), I.config());

    std::optional<Ideal> acc;
    for (const auto& f : J.groebner().elements) {
        if (ideal_member(f, I)) continue;  // I : f is the whole ring
        Ideal with_f = ideal_intersect(
            I, Ideal(I.ring(), {f}, I.config()));
        std::vector<Polynomial> quots;
        quots.reserve(with_f.generators().size());
        for (const auto& g : with_f.generators())
            quots.push_back(exact_divide(g, f));
        Ideal part(I.ring(), std::move(quots), I.config());
        acc = acc ? ideal_intersect(*acc, part) : std::move(part);
    }
    return acc ? *acc : Ideal::unit(I.ring(), I.config());
}

Ideal ideal_power(const Ideal& I, unsigned t) {
    if (t == 0) throw InputError("ideal_power requires a positive exponent");
    if (I.is_zero_ideal() || t == 1) return I;
    const auto& gens = I.generators();
    std::vector<Polynomial> products;
    // all t-fold products with repetition, indices non-decreasing
    auto rec = [&](auto&& self, std::size_t from, unsigned left,
                   const Polynomial& prefix) -> void {
        if (left == 0) {
            products.push_back(prefix);
            return;
        }
        for (std::size_t i = from; i < gens.size(); ++i)
            self(self, i, left - 1, prefix * gens[i]);
    };
    rec(rec, 0, t, Polynomial::constant(I.ring(), 1));
    return Ideal(I.ring(), std::move(products), I.config());
}

Ideal saturation(const Ideal& I, const Ideal& J, unsigned max_iter) {
    if (J.is_zero_ideal()) throw InputError("saturation by the zero ideal");
    Ideal prev = I;
    for (unsigned i = 0; i < max_iter; ++i) {
        Ideal next = ideal_quotient(prev, J);
        if (ideal_equal(next, prev)) return prev;
        prev = std::move(next);
    }
    throw ResourceLimitError("saturation did not stabilize within max_iter");
}

NilResult nil_index(const Ideal& I, const Ideal& radical, unsigned cap) {
    require_same_ring(*I.ring(), *radical.ring());
    if (radical.is_zero_ideal())
        throw InputError("nil_index requires a nonzero radical");
    NilResult result{0, {}};
    Ideal current = I;
    for (unsigned s = 1; s <= cap; ++s) {
        Ideal next = ideal_quotient(current, radical);
        // the chain must ascend: current = I:J^(s-1) ⊆ I:J^s
        for (const auto& g : current.generators())
            if (!ideal_member(g, next))
                throw InternalCheckError("colon chain failed to ascend");
        result.chain.push_back(next);
        if (is_unit_ideal(next)) {
            result.index = s;
            return result;
        }
        current = std::move(next);
    }
    throw ResourceLimitError(
        "colon chain did not reach the unit ideal within the cap; "
        "is the supplied ideal really the radical?");
}

}  // namespace nilfit
