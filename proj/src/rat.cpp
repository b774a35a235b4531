#include "vsgap/rat.hpp"

#include <cctype>

#include "vsgap/error.hpp"

namespace vsgap {

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat Rat::parse(std::string_view s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    auto slash = s.find('/');
    auto check_digits = [](std::string_view part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string_view np = (slash == std::string_view::npos) ? s : s.substr(0, slash);
    std::string_view dp = (slash == std::string_view::npos) ? std::string_view("1") : s.substr(slash + 1);
    if (!check_digits(np) || !check_digits(dp))
        throw invalid_input("malformed rational literal: '" + std::string(s) + "'");
    Int num(std::string(np), 10);
    Int den(std::string(dp), 10);
    if (den == 0) throw invalid_input("rational with zero denominator: '" + std::string(s) + "'");
    return Rat(num, den);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::str_frac() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw invalid_input("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat operator*(const Int& a, const Rat& b) {
    return Rat(a) * b;
}

std::string int_str(const Int& n) {
    return n.get_str();
}

Int parse_int(std::string_view s) {
    Rat r = Rat::parse(s);
    if (!r.is_integer()) throw invalid_input("expected integer, got '" + std::string(s) + "'");
    return r.num();
}

Int common_denominator(const std::vector<Rat>& vals) {
    Int d = 1;
    for (const Rat& v : vals) d = lcm(d, v.den());
    return d;
}

}  // namespace vsgap
