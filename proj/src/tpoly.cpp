#include "vsgap/tpoly.hpp"

#include <algorithm>

#include "vsgap/error.hpp"

namespace vsgap {

namespace {

void require_same_field(const TPoly& a, const TPoly& b) {
    if (a.characteristic() != b.characteristic())
        throw invalid_input("coefficient fields differ: characteristic " +
                            std::to_string(a.characteristic()) + " vs " +
                            std::to_string(b.characteristic()));
}

// a / b in the coefficient field.
Rat field_div(const Rat& a, const Rat& b, long characteristic) {
    if (characteristic == 0) return a / b;
    Int inv;
    Int bn = b.num() % characteristic;
    if (mpz_invert(inv.get_mpz_t(), bn.get_mpz_t(), Int(characteristic).get_mpz_t()) == 0)
        throw invalid_input("division by zero in F_" + std::to_string(characteristic));
    return Rat(a.num() * inv);
}

}  // namespace

Rat TPoly::reduce_coeff(const Rat& r, long characteristic) {
    if (characteristic == 0) return r;
    if (!r.is_integer())
        throw invalid_input("non-integer coefficient " + r.str() + " in characteristic " +
                            std::to_string(characteristic));
    Int m = r.num() % characteristic;
    if (m < 0) m += characteristic;
    return Rat(m);
}

TPoly::TPoly(long characteristic, const Rat& constant) : char_(characteristic) {
    c_.push_back(reduce_coeff(constant, characteristic));
    normalize();
}

TPoly TPoly::one_plus_t(long characteristic) {
    TPoly p(characteristic);
    p.c_ = {reduce_coeff(Rat(1), characteristic), reduce_coeff(Rat(1), characteristic)};
    p.normalize();
    return p;
}

Rat TPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

void TPoly::normalize() {
    for (Rat& r : c_) r = reduce_coeff(r, char_);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::operator-() const {
    TPoly r(char_);
    r.c_.reserve(c_.size());
    for (const Rat& v : c_) r.c_.push_back(-v);
    r.normalize();
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    r += b;
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
    return a + (-b);
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    require_same_field(a, b);
    TPoly r(a.char_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

TPoly TPoly::pow(long e) const {
    if (e < 0) throw invalid_input("negative power of a t-polynomial");
    TPoly acc = TPoly::one(char_);
    TPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TPoly TPoly::divexact(const TPoly& d) const {
    require_same_field(*this, d);
    if (d.is_zero()) throw invalid_input("division by zero t-polynomial");
    if (is_zero()) return TPoly(char_);
    TPoly rem = *this;
    TPoly quot(char_);
    quot.c_.assign(c_.size(), Rat(0));
    const Rat lead = d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rat q = field_div(rem.c_.back(), lead, char_);
        quot.c_[static_cast<std::size_t>(shift)] = q;
        // rem -= q * t^shift * d
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[static_cast<std::size_t>(shift) + i] -= q * d.c_[i];
        rem.normalize();
    }
    if (!rem.is_zero())
        throw not_divisible("t-polynomial division left remainder " + rem.str());
    quot.normalize();
    return quot;
}

std::string TPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string part;
        if (i == 0) {
            part = c_[i].str();
        } else {
            std::string var = (i == 1) ? "t" : "t^" + std::to_string(i);
            if (c_[i] == Rat(1))
                part = var;
            else if (c_[i] == Rat(-1))
                part = "-" + var;
            else
                part = c_[i].str() + "*" + var;
        }
        if (out.empty()) {
            out = part;
        } else if (!part.empty() && part[0] == '-') {
            out += part;
        } else {
            out += "+" + part;
        }
    }
    return out;
}

}  // namespace vsgap
