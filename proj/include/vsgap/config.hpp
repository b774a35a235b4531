#pragma once

#include <cstdint>

namespace vsgap {

// Process-wide resource caps, read once from the environment:
//   VSGAP_TERM_CAP  - max term count of any sparse-polynomial result
//   VSGAP_DP_CAP    - max table size of the semigroup membership DP
//   VSGAP_TUPLE_CAP - max tuples enumerated by the D(i) audit
struct ResourceCaps {
    std::int64_t term_cap = 1'000'000;
    std::int64_t dp_cap = 50'000'000;
    std::int64_t tuple_cap = 2'000'000;
};

const ResourceCaps& caps();

}  // namespace vsgap
