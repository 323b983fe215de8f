#include "dirhom/decimal.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dirhom {

using boost::multiprecision::cpp_int;

void Decimal::canonicalize() {
    if (digits_.is_zero()) {
        exponent_ = 0;
        negative_ = false;
        return;
    }
    while (digits_ % 10 == 0) {
        digits_ /= 10;
        ++exponent_;
    }
}

Decimal Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad decimal '") + std::string(text) + "': " + why);
    };
    if (text.empty()) fail("empty");

    Decimal d;
    if (text[i] == '+' || text[i] == '-') {
        d.negative_ = text[i] == '-';
        ++i;
    }
    int digit_count = 0;
    int frac_digits = 0;
    bool seen_point = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        char ch = text[i];
        if (ch == '.') {
            if (seen_point) fail("second decimal point");
            seen_point = true;
        } else if (ch >= '0' && ch <= '9') {
            d.digits_ = d.digits_ * 10 + (ch - '0');
            ++digit_count;
            if (seen_point) ++frac_digits;
        } else {
            fail("unexpected character");
        }
    }
    if (digit_count == 0) fail("no digits");

    long exp10 = -frac_digits;
    if (i < text.size()) {  // exponent part
        ++i;
        if (i >= text.size()) fail("empty exponent");
        bool exp_neg = false;
        if (text[i] == '+' || text[i] == '-') {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) fail("empty exponent");
        long e = 0;
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') fail("bad exponent");
            e = e * 10 + (text[i] - '0');
            if (e > 100000) fail("exponent out of range");
        }
        exp10 += exp_neg ? -e : e;
    }
    d.exponent_ = static_cast<int>(exp10);
    d.canonicalize();
    return d;
}

Decimal Decimal::from_int(long long n) {
    Decimal d;
    d.negative_ = n < 0;
    d.digits_ = d.negative_ ? -cpp_int(n) : cpp_int(n);
    d.canonicalize();
    return d;
}

Decimal Decimal::magnitude() const {
    Decimal d = *this;
    d.negative_ = false;
    return d;
}

int Decimal::compare(const Decimal& other) const {
    if (is_zero() && other.is_zero()) return 0;
    int sa = is_zero() ? 0 : (negative_ ? -1 : 1);
    int sb = other.is_zero() ? 0 : (other.negative_ ? -1 : 1);
    if (sa != sb) return sa < sb ? -1 : 1;

    // Same nonzero sign: compare magnitudes on a shared exponent.
    int e = std::min(exponent_, other.exponent_);
    cpp_int a = digits_;
    cpp_int b = other.digits_;
    for (int k = exponent_; k > e; --k) a *= 10;
    for (int k = other.exponent_; k > e; --k) b *= 10;
    int mag = a == b ? 0 : (a < b ? -1 : 1);
    return sa < 0 ? -mag : mag;
}

std::string Decimal::to_string() const {
    if (is_zero()) return "0";
    std::string body = digits_.str();
    if (exponent_ >= 0) {
        body.append(static_cast<std::size_t>(exponent_), '0');
    } else {
        std::size_t frac = static_cast<std::size_t>(-exponent_);
        if (body.size() > frac) {
            body.insert(body.size() - frac, ".");
        } else {
            std::string zeros(frac - body.size(), '0');
            body = "0." + zeros + body;
        }
    }
    return negative_ ? "-" + body : body;
}

}  // namespace dirhom
