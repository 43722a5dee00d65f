#include "nilfit/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace nilfit {

namespace {

std::atomic<bool> g_division_check{false};
std::atomic<std::uint64_t> g_division_checks{0};

struct MonoGreater {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord.greater(a, b);
    }
};

using TermMap = std::map<Monomial, FieldElement, MonoGreater>;

TermMap to_map(const Polynomial& p, const MonomialOrder& ord) {
    TermMap m{MonoGreater{ord}};
    for (const auto& t : p.terms()) m.emplace(t.mono, t.coeff);
    return m;
}

Polynomial from_map(const RingPtr& ring, const TermMap& m) {
    std::vector<Term> ts;
    ts.reserve(m.size());
    for (const auto& [mono, c] : m)
        if (!c.is_zero()) ts.push_back({mono, c});
    return Polynomial::from_terms(ring, std::move(ts));
}

// p -= c * xm * g
void sub_multiple(TermMap& p, const FieldElement& c, const Monomial& xm,
                  const Polynomial& g) {
    for (const auto& t : g.terms()) {
        Monomial m = t.mono * xm;
        FieldElement delta = t.coeff * c;
        auto it = p.find(m);
        if (it == p.end()) {
            p.emplace(std::move(m), -delta);
        } else {
            it->second -= delta;
            if (it->second.is_zero()) p.erase(it);
        }
    }
}

}  // namespace

void set_division_check(bool on) { g_division_check.store(on); }
bool division_check_enabled() { return g_division_check.load(); }
std::uint64_t division_checks_performed() { return g_division_checks.load(); }

DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> G,
                           const MonomialOrder& ord, const GroebnerConfig& cfg) {
    RingPtr ring = f.ring();
    if (ring->order() != ord) {
        // compute in the order's canonical ring and map everything back
        RingPtr variant = ring->with_order(ord);
        std::vector<Polynomial> g2;
        g2.reserve(G.size());
        for (const auto& g : G) g2.push_back(g.to_ring(variant));
        DivisionResult r = normal_form(f.to_ring(variant), g2, ord, cfg);
        r.remainder = r.remainder.to_ring(ring);
        for (auto& q : r.quotients) q = q.to_ring(ring);
        return r;
    }
    for (const auto& g : G) require_same_ring(*ring, *g.ring());

    TermMap p = to_map(f, ord);
    std::vector<Term> rem;
    std::vector<TermMap> quot(G.size(), TermMap{MonoGreater{ord}});
    std::size_t steps = 0;

    while (!p.empty()) {
        const auto& [mono, coeff] = *p.begin();
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero() || !G[i].leading_monomial().divides(mono)) continue;
            const Monomial xm = mono / G[i].leading_monomial();
            const FieldElement fac = coeff / G[i].leading_coeff();
            auto [it, fresh] = quot[i].try_emplace(xm, fac);
            if (!fresh) it->second += fac;
            sub_multiple(p, fac, xm, G[i]);  // cancels p.begin() exactly
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back({mono, coeff});
            p.erase(p.begin());
        }
        ++steps;
        if (p.size() > cfg.max_terms)
            throw ResourceLimitError("polynomial support exceeded max_terms");
    }

    DivisionResult res{Polynomial::from_terms(ring, std::move(rem)), {}, steps};
    res.quotients.reserve(G.size());
    for (const auto& q : quot) res.quotients.push_back(from_map(ring, q));

    if (g_division_check.load(std::memory_order_relaxed)) {
        Polynomial acc = res.remainder;
        for (std::size_t i = 0; i < G.size(); ++i)
            acc = acc + res.quotients[i] * G[i];
        if (!(acc == f))
            throw InternalCheckError("division identity failed to reconstruct");
        g_division_checks.fetch_add(1, std::memory_order_relaxed);
    }
    return res;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw InputError("s-polynomial of a zero polynomial");
    require_same_ring(*f.ring(), *g.ring());
    if (f.ring()->order() != ord) {
        RingPtr variant = f.ring()->with_order(ord);
        return s_polynomial(f.to_ring(variant), g.to_ring(variant), ord)
            .to_ring(f.ring());
    }
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const Polynomial a =
        f.times_term(f.leading_coeff().inverse(), l / f.leading_monomial());
    const Polynomial b =
        g.times_term(g.leading_coeff().inverse(), l / g.leading_monomial());
    return a - b;
}

namespace {

struct Pair {
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (auto c = ord.compare(a.lcm, b.lcm); c != 0)
            return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                         const GroebnerConfig& cfg) {
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    GroebnerBasis out{ord, {}, {}};
    if (gens.empty()) return out;

    RingPtr ring = gens[0].ring()->with_order(ord);
    std::vector<Polynomial> input;
    input.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(*gens[0].ring(), *g.ring());
        input.push_back(g.ring()->order() == ord ? g : g.to_ring(ring));
    }

    BuchbergerStats& st = out.stats;
    std::vector<Polynomial> basis;
    std::set<Pair, PairLess> queue{PairLess{ord}};

    auto add_element = [&](Polynomial p) {
        p = p.monic();
        const std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i) {
            queue.insert({Monomial::lcm(basis[i].leading_monomial(),
                                        p.leading_monomial()),
                          i, n});
            ++st.pairs_generated;
        }
        basis.push_back(std::move(p));
        ++st.basis_additions;
    };

    for (const auto& g : input) add_element(g);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        if (++st.pairs_processed > cfg.max_pairs)
            throw ResourceLimitError("pair count exceeded max_pairs");

        const Monomial& lmi = basis[pr.i].leading_monomial();
        const Monomial& lmj = basis[pr.j].leading_monomial();
        if (lmi.coprime_with(lmj)) {
            ++st.pairs_skipped_coprime;
            continue;
        }
        if (cfg.use_chain_criterion) {
            // drop (i,j) when some lm_k divides lcm(i,j) and both induced
            // lcms are strictly smaller; the strict descent grounds out
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                const Monomial& lmk = basis[k].leading_monomial();
                if (!lmk.divides(pr.lcm)) continue;
                if (Monomial::lcm(lmi, lmk) == pr.lcm) continue;
                if (Monomial::lcm(lmj, lmk) == pr.lcm) continue;
                skip = true;
            }
            if (skip) {
                ++st.pairs_skipped_chain;
                continue;
            }
        }

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], ord);
        DivisionResult red = normal_form(s, basis, ord, cfg);
        st.reduction_steps += red.steps;
        if (red.remainder.is_zero())
            ++st.reductions_to_zero;
        else
            add_element(std::move(red.remainder));
    }

    // minimalize: keep only elements whose leading term no kept leading
    // term divides (ascending scan; a divisor is never larger)
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (auto c = ord.compare(basis[a].leading_monomial(),
                                 basis[b].leading_monomial());
            c != 0)
            return c == std::strong_ordering::less;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial().divides(basis[i].leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = normal_form(reduced[i], others, ord, cfg).remainder.monic();
    }
    out.elements = std::move(reduced);

    // membership of every input generator
    for (const auto& g : input)
        if (!normal_form(g, out.elements, ord, cfg).remainder.is_zero())
            throw InternalCheckError("input generator does not reduce to zero");

    return out;
}

}  // namespace nilfit
