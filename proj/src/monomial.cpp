#include "nilfit/monomial.hpp"

namespace nilfit {

std::size_t Monomial::check_nvars(std::size_t n) {
    if (n == 0 || n > kMaxVars)
        throw InputError("variable count " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxVars) + "]");
    return n;
}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents)
    : n_(check_nvars(nvars)) {
    if (exponents.size() != nvars)
        throw InputError("exponent vector length mismatch");
    for (std::size_t i = 0; i < nvars; ++i) {
        if (exponents[i] > 0xffff) throw ResourceLimitError("exponent overflow");
        e_[i] = static_cast<std::uint16_t>(exponents[i]);
        deg_ += exponents[i];
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.e_[i] = 1;
    m.deg_ = 1;
    return m;
}

void Monomial::require_same_size(const Monomial& o) const {
    if (n_ != o.n_) throw InputError("monomial length mismatch");
}

unsigned Monomial::block_degree(std::size_t b) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < b && i < n_; ++i) d += e_[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_size(o);
    Monomial r(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        unsigned s = e_[i] + o.e_[i];
        if (s > 0xffff) throw ResourceLimitError("exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    require_same_size(o);
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    require_same_size(o);
    Monomial r(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        if (o.e_[i] > e_[i]) throw InputError("inexact monomial quotient");
        r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.require_same_size(b);
    Monomial r(static_cast<std::size_t>(a.n_));
    for (std::size_t i = 0; i < a.n_; ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    require_same_size(o);
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n_ != o.n_ || deg_ != o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::string Monomial::str(std::span<const std::string> names) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!e_[i]) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

namespace {

// Graded reverse lexicographic comparison restricted to [lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i))
            // smaller exponent in the least variable wins
            return b.exponent(i) <=> a.exponent(i);
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw InputError("monomial length mismatch");
    const std::size_t n = a.nvars();
    switch (kind) {
        case Kind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a.exponent(i) != b.exponent(i))
                    return a.exponent(i) <=> b.exponent(i);
            return std::strong_ordering::equal;
        case Kind::grevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            return grevlex_range(a, b, 0, n);
        case Kind::elimination: {
            const std::size_t b1 = std::min<std::size_t>(block, n);
            if (auto c = grevlex_range(a, b, 0, b1); c != 0) return c;
            return grevlex_range(a, b, b1, n);
        }
    }
    throw Error("unreachable");
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::lex: return "lex";
        case Kind::grevlex: return "grevlex";
        case Kind::elimination:
            return "elim(" + std::to_string(block) + ")";
    }
    throw Error("unreachable");
}

MonomialOrder MonomialOrder::from_name(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grevlex") return grevlex();
    throw InputError("unknown monomial order '" + s + "'");
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord) {
    return ord.compare(a, b);
}

}  // namespace nilfit
