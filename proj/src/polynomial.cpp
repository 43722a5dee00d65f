#include "nilfit/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nilfit {

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const MonomialOrder ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
        if (t.mono.nvars() != p.ring_->nvars())
            throw InputError("monomial length does not match ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
    Polynomial p(ring);
    if (!c.is_zero())
        p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
    return constant(ring, FieldElement::from_int(ring->field(), c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw InputError("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), i),
                        FieldElement::one(ring->field())});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, FieldElement c) {
    Polynomial p(ring);
    if (m.nvars() != p.ring_->nvars())
        throw InputError("monomial length does not match ring");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::linear_form(RingPtr ring,
                                   std::span<const FieldElement> coeffs) {
    if (coeffs.size() != ring->nvars())
        throw InputError("coefficient count does not match ring");
    std::vector<Term> ts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            ts.push_back({Monomial::variable(ring->nvars(), i), coeffs[i]});
    return from_terms(ring, std::move(ts));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_[0].mono.degree()) return false;
    return true;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw InputError("zero polynomial has no leading term");
    return terms_[0].mono;
}

const FieldElement& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw InputError("zero polynomial has no leading term");
    return terms_[0].coeff;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    const MonomialOrder ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*ring_, *o.ring_);
    const MonomialOrder ord = ring_->order();
    auto cmp = [ord](const Monomial& a, const Monomial& b) {
        return ord.greater(a, b);
    };
    std::map<Monomial, FieldElement, decltype(cmp)> acc(cmp);
    const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
    const auto& large = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;
    for (const auto& s : small)
        for (const auto& l : large) {
            Monomial m = s.mono * l.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), s.coeff * l.coeff);
            if (!fresh) it->second += s.coeff * l.coeff;
        }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_term(const FieldElement& c,
                                  const Monomial& m) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != ring_->nvars())
        throw InputError("evaluation point length mismatch");
    FieldElement acc = FieldElement::zero(ring_->field());
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.mono.exponent(i); ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

FieldElement Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement::zero(ring_->field());
}

std::vector<FieldElement> Polynomial::linear_coeffs() const {
    std::vector<FieldElement> cs(ring_->nvars(),
                                 FieldElement::zero(ring_->field()));
    for (const auto& t : terms_) {
        if (t.mono.degree() != 1)
            throw InputError("expected a linear form");
        for (std::size_t i = 0; i < ring_->nvars(); ++i)
            if (t.mono.exponent(i)) cs[i] = t.coeff;
    }
    return cs;
}

Polynomial Polynomial::to_ring(const RingPtr& other) const {
    if (ring_->field() != other->field() ||
        ring_->var_names() != other->var_names())
        throw InputError("rings differ beyond monomial order");
    return from_terms(other, terms_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

}  // namespace nilfit
