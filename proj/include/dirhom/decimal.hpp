#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

namespace dirhom {

/**
 * Exact decimal number: sign * digits * 10^exponent. Weights are kept in this
 * form from text ingestion onward so that threshold comparison and
 * deduplication never hit float ties; "1e-3" and "0.001" normalize to the
 * same value. to_string() emits a canonical plain-decimal form.
 */
class Decimal {
public:
    Decimal() = default;  // zero
    static Decimal parse(std::string_view text);  // throws std::invalid_argument
    static Decimal from_int(long long n);

    bool is_zero() const { return digits_.is_zero(); }
    bool negative() const { return negative_; }
    Decimal magnitude() const;

    int compare(const Decimal& other) const;  // exact numeric order
    bool operator==(const Decimal& o) const { return compare(o) == 0; }
    std::strong_ordering operator<=>(const Decimal& o) const {
        int c = compare(o);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;

private:
    boost::multiprecision::cpp_int digits_;  // >= 0, no factor of 10 unless zero
    int exponent_ = 0;
    bool negative_ = false;

    void canonicalize();
};

}  // namespace dirhom
