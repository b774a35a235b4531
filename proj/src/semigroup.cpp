#include "vsgap/semigroup.hpp"

#include <algorithm>

#include "vsgap/config.hpp"
#include "vsgap/error.hpp"

namespace vsgap {

NumSgp::NumSgp(std::vector<Rat> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw invalid_input("semigroup: empty generator list");
    for (const Rat& g : gens_)
        if (g.sign() <= 0) throw invalid_input("semigroup: nonpositive generator " + g.str());
    scale_ = common_denominator(gens_);
    scaled_.reserve(gens_.size());
    for (const Rat& g : gens_) scaled_.push_back(g.num() * (scale_ / g.den()));
}

std::vector<char> NumSgp::reach_table(const Int& limit) const {
    if (limit > caps().dp_cap)
        throw resource_limit("semigroup DP size " + int_str(limit) + " exceeds cap");
    std::size_t n = limit.get_ui();
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (const Int& g : scaled_) {
        if (g > limit) continue;
        std::size_t step = g.get_ui();
        for (std::size_t v = step; v <= n; ++v)
            if (reach[v - step]) reach[v] = 1;
    }
    return reach;
}

bool NumSgp::member(const Rat& v) const {
    if (v.sign() < 0) throw invalid_input("semigroup membership of negative value " + v.str());
    if (v.is_zero()) return true;
    Rat scaled = Rat(scale_) * v;
    if (!scaled.is_integer()) return false;  // not even in (1/scale)Z
    return reach_table(scaled.num()).back() != 0;
}

std::vector<Rat> NumSgp::enumerate(const Rat& bound) const {
    if (bound.sign() <= 0) throw invalid_input("semigroup enumeration bound must be positive");
    Rat scaled = Rat(scale_) * bound;
    // floor(scale * bound)
    Int limit = scaled.num() / scaled.den();
    std::vector<char> reach = reach_table(limit);
    std::vector<Rat> out;
    for (std::size_t v = 0; v < reach.size(); ++v)
        if (reach[v]) out.emplace_back(Int(static_cast<unsigned long>(v)), scale_);
    return out;  // ascending by construction
}

}  // namespace vsgap
