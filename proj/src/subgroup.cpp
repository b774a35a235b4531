#include "vsgap/subgroup.hpp"

#include "vsgap/error.hpp"

namespace vsgap {

bool QSubgroup::contains(const Rat& v) const {
    return (v / generator).is_integer();
}

QSubgroup group_of(const std::vector<Rat>& gens) {
    if (gens.empty()) throw invalid_input("group_of: empty generator list");
    Int den = common_denominator(gens);
    Int g = 0;
    for (const Rat& v : gens) {
        if (v.sign() <= 0) throw invalid_input("group_of: nonpositive generator " + v.str());
        g = gcd(g, v.num() * (den / v.den()));
    }
    return QSubgroup{Rat(g, den)};
}

Int subgroup_index(const QSubgroup& big, const QSubgroup& small) {
    Rat ratio = small.generator / big.generator;
    if (!ratio.is_integer() || ratio.sign() <= 0)
        throw invalid_input("not a subgroup: generator ratio " + ratio.str() + " is not a positive integer");
    return ratio.num();
}

}  // namespace vsgap
