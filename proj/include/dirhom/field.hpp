#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dirhom/errors.hpp"

namespace dirhom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Coefficient field for all homology computations: the rationals or a prime
 * field GF(p), p < 2^31.
 *
 * Field elements are carried as Rational values. Rationals are kept in lowest
 * terms (the representation does this on its own); GF(p) elements are integer
 * residues in [0, p). All arithmetic goes through this class so that one
 * sparse-matrix implementation serves every field.
 */
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec gf(std::uint32_t p);  // throws FieldError unless p is prime

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    Rational from_int(long long n) const;
    Rational normalize(const Rational& x) const;  // canonical representative

    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational div(const Rational& a, const Rational& b) const;  // FieldError on zero divisor
    Rational neg(const Rational& a) const;

    // Canonical values only: zero has numerator 0 in both representations.
    static bool is_zero(const Rational& x) { return x.sign() == 0; }

    std::string name() const;                        // "q", "gf2", "gf3", ...
    static FieldSpec parse(const std::string& name); // inverse of name()

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;  // 0 = rationals
};

}  // namespace dirhom
