#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace braidlink {

// Exact integer Laurent polynomial in one formal variable.  Depending on
// context the variable is A (Kauffman bracket) or t^{1/2} (Jones).
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int exp);
    static LaurentPoly one() { return monomial(1, 0); }

    const std::map<int, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(int exp) const;
    int min_exp() const;  // undefined on zero
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly shifted(int exp) const;        // times x^exp
    LaurentPoly scaled(long long c) const;
    LaurentPoly mirrored() const;              // x -> 1/x
    LaurentPoly pow(int k) const;              // k >= 0

    bool operator==(const LaurentPoly&) const = default;

    std::string str(const std::string& var = "x") const;

private:
    std::map<int, long long> terms_;
};

// b == +-x^k * a for some k (mirror handled by the caller).
bool unit_monomial_equivalent(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace braidlink
