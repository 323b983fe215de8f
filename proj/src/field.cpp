#include "dirhom/field.hpp"

namespace dirhom {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Residue of an arbitrary rational mod p. The denominator of a canonical
// GF(p) element is always 1, but normalize() also accepts raw fractions so
// that integer matrices can be reduced mod p directly.
long long residue(const Rational& x, std::uint32_t p) {
    Integer num = boost::multiprecision::numerator(x) % p;
    Integer den = boost::multiprecision::denominator(x) % p;
    long long n = num.convert_to<long long>();
    long long d = den.convert_to<long long>();
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw FieldError("denominator vanishes mod " + std::to_string(p));
    if (d == 1) return n;
    // n / d mod p via Fermat inverse
    long long inv = 1, base = d, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = static_cast<long long>((__int128)inv * base % p);
        base = static_cast<long long>((__int128)base * base % p);
        e >>= 1;
    }
    return static_cast<long long>((__int128)n * inv % p);
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
    return FieldSpec(p);
}

Rational FieldSpec::from_int(long long n) const {
    if (is_rationals()) return Rational(n);
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Rational(r);
}

Rational FieldSpec::normalize(const Rational& x) const {
    if (is_rationals()) return x;
    return Rational(residue(x, p_));
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const {
    return is_rationals() ? Rational(a + b) : normalize(a + b);
}

Rational FieldSpec::sub(const Rational& a, const Rational& b) const {
    return is_rationals() ? Rational(a - b) : normalize(a - b);
}

Rational FieldSpec::mul(const Rational& a, const Rational& b) const {
    return is_rationals() ? Rational(a * b) : normalize(a * b);
}

Rational FieldSpec::div(const Rational& a, const Rational& b) const {
    if (is_zero(normalize(b))) throw FieldError("division by zero field element");
    if (is_rationals()) return Rational(a / b);
    return normalize(a / b);
}

Rational FieldSpec::neg(const Rational& a) const {
    return is_rationals() ? Rational(-a) : normalize(-a);
}

std::string FieldSpec::name() const {
    return is_rationals() ? "q" : "gf" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& name) {
    if (name == "q" || name == "Q" || name == "rationals") return rationals();
    if (name.rfind("gf", 0) == 0 && name.size() > 2) {
        std::uint64_t p = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9')
                throw FieldError("unrecognized field name: " + name);
            p = p * 10 + (name[i] - '0');
            if (p > 0x7fffffffULL) throw FieldError("prime too large: " + name);
        }
        return gf(static_cast<std::uint32_t>(p));
    }
    throw FieldError("unrecognized field name: " + name);
}

}  // namespace dirhom
