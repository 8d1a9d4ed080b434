#include "braidlink/laurent.hpp"

#include <stdexcept>

namespace braidlink {

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        long long v = (terms_[e] += c);
        if (v == 0) terms_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            long long v = (r.terms_[e1 + e2] += c1 * c2);
            if (v == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + exp] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(long long c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    LaurentPoly r = one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) out += std::to_string(a);
        if (e != 0) {
            if (a != 1) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

bool unit_monomial_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    int shift = b.min_exp() - a.min_exp();
    long long ca = a.terms().begin()->second;
    long long cb = b.terms().begin()->second;
    if (cb != ca && cb != -ca) return false;
    long long sign = (cb == ca) ? 1 : -1;
    for (const auto& [e, c] : a.terms())
        if (b.coeff(e + shift) != sign * c) return false;
    return true;
}

}  // namespace braidlink
