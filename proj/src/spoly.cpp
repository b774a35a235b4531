#include "vsgap/spoly.hpp"

#include <omp.h>

#include <algorithm>

#include "vsgap/config.hpp"
#include "vsgap/error.hpp"

namespace vsgap {

namespace {

void require_compatible(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars() != b.nvars())
        throw invalid_input("polynomial arity mismatch: " + std::to_string(a.nvars()) + " vs " +
                            std::to_string(b.nvars()));
    if (a.characteristic() != b.characteristic())
        throw invalid_input("polynomial characteristic mismatch");
}

std::string exp_str(const ExpVec& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

void Substitution::validate() const {
    if (static_cast<int>(images.size()) != nvars_from)
        throw invalid_input("substitution leaves variables unmapped: " +
                            std::to_string(images.size()) + " images for " +
                            std::to_string(nvars_from) + " variables");
    for (const ExpVec& img : images) {
        if (static_cast<int>(img.size()) != nvars_to)
            throw invalid_input("substitution image arity mismatch");
        for (std::int64_t e : img)
            if (e < 0) throw invalid_input("substitution image with negative exponent");
    }
}

SparsePoly SparsePoly::constant(int nvars, long characteristic, const TPoly& c) {
    SparsePoly p(nvars, characteristic);
    p.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(int nvars, long characteristic, const ExpVec& e, const TPoly& c) {
    SparsePoly p(nvars, characteristic);
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, long characteristic, int var) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(var)) = 1;
    return monomial(nvars, characteristic, e, TPoly::one(characteristic));
}

void SparsePoly::add_term(const ExpVec& e, const TPoly& c) {
    if (static_cast<int>(e.size()) != nvars_) throw invalid_input("term arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    enforce_cap();
}

void SparsePoly::enforce_cap() const {
    if (static_cast<std::int64_t>(terms_.size()) > caps().term_cap)
        throw resource_limit("polynomial term count " + std::to_string(terms_.size()) +
                             " exceeds cap " + std::to_string(caps().term_cap));
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(nvars_, char_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    require_compatible(a, b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    return a + (-b);
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.char_ == b.char_ && a.terms_ == b.terms_;
}

SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b) {
    require_compatible(a, b);
    SparsePoly r(a.nvars(), a.characteristic());
    ExpVec e(static_cast<std::size_t>(a.nvars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b) {
    require_compatible(a, b);
    // Partition a's terms into contiguous blocks; each thread accumulates a
    // private partial product. Merging the partials in block order gives the
    // same canonical map as the serial kernel (exact addition commutes).
    std::vector<const std::pair<const ExpVec, TPoly>*> at;
    at.reserve(a.terms().size());
    for (const auto& t : a.terms()) at.push_back(&t);

    int nblocks = std::min<int>(std::max(1, omp_get_max_threads()),
                                static_cast<int>(at.size()) > 0 ? static_cast<int>(at.size()) : 1);
    std::vector<std::map<ExpVec, TPoly>> partial(static_cast<std::size_t>(nblocks));
    std::int64_t cap = caps().term_cap;
    bool overflow = false;

#pragma omp parallel for schedule(static)
    for (int blk = 0; blk < nblocks; ++blk) {
        std::size_t lo = at.size() * static_cast<std::size_t>(blk) / static_cast<std::size_t>(nblocks);
        std::size_t hi =
            at.size() * (static_cast<std::size_t>(blk) + 1) / static_cast<std::size_t>(nblocks);
        auto& out = partial[static_cast<std::size_t>(blk)];
        ExpVec e(static_cast<std::size_t>(a.nvars()));
        for (std::size_t k = lo; k < hi; ++k) {
            const auto& [ea, ca] = *at[k];
            for (const auto& [eb, cb] : b.terms()) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                TPoly prod = ca * cb;
                auto [it, fresh] = out.try_emplace(e, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
            if (static_cast<std::int64_t>(out.size()) > cap) {
#pragma omp atomic write
                overflow = true;
                break;
            }
        }
    }
    if (overflow) throw resource_limit("polynomial term count exceeds cap (parallel product)");

    SparsePoly r(a.nvars(), a.characteristic());
    for (auto& blk : partial)
        for (auto& [e, c] : blk) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
    // The parallel kernel pays off once the term-pair count is substantial.
    std::size_t pairs = term_count() * o.term_count();
    if (pairs >= 16384 && omp_get_max_threads() > 1) return mul_parallel(*this, o);
    return mul_serial(*this, o);
}

SparsePoly SparsePoly::pow(long e) const {
    if (e < 0) throw invalid_input("negative polynomial power");
    SparsePoly acc = constant(nvars_, char_, TPoly::one(char_));
    // For a small base a linear multiply chain beats binary squaring:
    // intermediate powers stay sparse while squares of large intermediates
    // pay quadratic term-pair counts.
    if (term_count() <= 64) {
        for (long k = 0; k < e; ++k) acc = acc.mul(*this);
        return acc;
    }
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base);
        base = (e >>= 1) > 0 ? base.mul(base) : base;
    }
    return acc;
}

SparsePoly SparsePoly::substitute(const Substitution& s) const {
    s.validate();
    if (s.nvars_from != nvars_) throw invalid_input("substitution arity does not match polynomial");
    SparsePoly r(s.nvars_to, char_);
    ExpVec img(static_cast<std::size_t>(s.nvars_to));
    for (const auto& [e, c] : terms_) {
        std::fill(img.begin(), img.end(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            for (std::size_t k = 0; k < img.size(); ++k) img[k] += e[v] * s.images[v][k];
        }
        r.add_term(img, c);
    }
    return r;
}

SparsePoly SparsePoly::divide_by_monomial(const ExpVec& m) const {
    if (static_cast<int>(m.size()) != nvars_) throw invalid_input("divisor arity mismatch");
    SparsePoly r(nvars_, char_);
    for (const auto& [e, c] : terms_) {
        ExpVec q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            q[i] = e[i] - m[i];
            if (q[i] < 0) {
                std::vector<std::string> names;
                for (int k = 0; k < nvars_; ++k) names.push_back("v" + std::to_string(k));
                throw not_divisible("term " + exp_str(e, names) + " not divisible by " +
                                    exp_str(m, names));
            }
        }
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

Rat SparsePoly::min_weight(const std::vector<Rat>& weights) const {
    if (static_cast<int>(weights.size()) != nvars_) throw invalid_input("weight arity mismatch");
    if (terms_.empty()) throw invalid_input("min weight of the zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& [e, c] : terms_) {
        Rat w(0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) w += Rat(Int(static_cast<long>(e[i]))) * weights[i];
        if (first || w < best) best = w;
        first = false;
    }
    return best;
}

bool SparsePoly::has_term_free_of(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(var)] == 0) return true;
    return false;
}

std::string SparsePoly::dump(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw invalid_input("dump name arity mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono = exp_str(it->first, names);
        out += "(" + it->second.str() + ")";
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

}  // namespace vsgap
