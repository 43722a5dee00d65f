#include "nilfit/field.hpp"

namespace nilfit {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw InputError("field modulus must be a prime below 2^31, got " +
                         std::to_string(p));
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint32_t mod_inverse(std::uint32_t v, std::uint32_t p) {
    if (v == 0) throw InputError("division by zero in GF(" + std::to_string(p) + ")");
    return static_cast<std::uint32_t>(mod_pow(v, p - 2, p));
}

std::uint32_t reduce_int(long v, std::uint32_t p) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

FieldElement FieldElement::zero(const Field& f) { return from_int(f, 0); }

FieldElement FieldElement::one(const Field& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const Field& f, long v) {
    if (f.is_rational()) return FieldElement(mpq_class(v));
    return FieldElement(reduce_int(v, f.characteristic()), f.characteristic());
}

FieldElement FieldElement::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(std::move(c));
}

FieldElement FieldElement::from_string(const Field& f, const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string num, den;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    if (i < s.size() && s[i] == '/') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
        if (den.empty()) throw ParseError("expected denominator digits", i);
    }
    if (num.empty() || i != s.size())
        throw ParseError("malformed number '" + s + "'", i);
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    if (neg) n = -n;
    if (f.is_rational()) {
        mpq_class q(n, d);
        q.canonicalize();
        return FieldElement(std::move(q));
    }
    const std::uint32_t p = f.characteristic();
    mpz_class np = n % p, dp = d % p;
    std::uint32_t nv = reduce_int(np.get_si(), p);
    std::uint32_t dv = reduce_int(dp.get_si(), p);
    return FieldElement(static_cast<std::uint32_t>(
                            static_cast<std::uint64_t>(nv) * mod_inverse(dv, p) % p),
                        p);
}

Field FieldElement::field() const {
    if (std::holds_alternative<mpq_class>(rep_)) return Field::rationals();
    return Field::prime_field(std::get<ModP>(rep_).p);
}

bool FieldElement::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
    return std::get<ModP>(rep_).v == 0;
}

bool FieldElement::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    return std::get<ModP>(rep_).v == 1;
}

std::uint32_t FieldElement::check_same_modulus(const FieldElement& a,
                                               const FieldElement& b) {
    const auto& ma = std::get<ModP>(a.rep_);
    const auto& mb = std::get<ModP>(b.rep_);
    if (ma.p != mb.p)
        throw InputError("mixing residues mod " + std::to_string(ma.p) +
                         " and mod " + std::to_string(mb.p));
    return ma.p;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        if (!r) throw InputError("mixing rational and prime-field scalars");
        return FieldElement(mpq_class(*q + *r));
    }
    const std::uint32_t p = check_same_modulus(*this, o);
    std::uint64_t s = std::get<ModP>(rep_).v;
    s += std::get<ModP>(o.rep_).v;
    if (s >= p) s -= p;
    return FieldElement(static_cast<std::uint32_t>(s), p);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        if (!r) throw InputError("mixing rational and prime-field scalars");
        return FieldElement(mpq_class(*q * *r));
    }
    const std::uint32_t p = check_same_modulus(*this, o);
    std::uint64_t prod = static_cast<std::uint64_t>(std::get<ModP>(rep_).v) *
                         std::get<ModP>(o.rep_).v % p;
    return FieldElement(static_cast<std::uint32_t>(prod), p);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return FieldElement(mpq_class(-*q));
    const auto& m = std::get<ModP>(rep_);
    return FieldElement(m.v == 0 ? 0 : m.p - m.v, m.p);
}

FieldElement FieldElement::inverse() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) {
        if (sgn(*q) == 0) throw InputError("division by zero");
        return FieldElement(mpq_class(1 / *q));
    }
    const auto& m = std::get<ModP>(rep_);
    return FieldElement(mod_inverse(m.v, m.p), m.p);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        if (!r) throw InputError("mixing rational and prime-field scalars");
        *q += *r;
        return *this;
    }
    *this = *this + o;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        if (!r) throw InputError("mixing rational and prime-field scalars");
        *q -= *r;
        return *this;
    }
    *this = *this - o;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        if (!r) throw InputError("mixing rational and prime-field scalars");
        *q *= *r;
        return *this;
    }
    *this = *this * o;
    return *this;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto* r = std::get_if<mpq_class>(&o.rep_);
        return r && *q == *r;
    }
    const auto* mo = std::get_if<ModP>(&o.rep_);
    return mo && std::get<ModP>(rep_) == *mo;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) {
        const auto& r = std::get<mpq_class>(o.rep_);
        int c = cmp(*q, r);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }
    const auto& a = std::get<ModP>(rep_);
    const auto& b = std::get<ModP>(o.rep_);
    return a.v <=> b.v;
}

std::string FieldElement::str() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
    return std::to_string(std::get<ModP>(rep_).v);
}

const mpq_class& FieldElement::rat() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
    throw InputError("expected a rational scalar");
}

}  // namespace nilfit
