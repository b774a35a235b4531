#include "vsgap/config.hpp"

#include <cstdlib>
#include <string>

namespace vsgap {

namespace {

std::int64_t env_cap(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        long long v = std::stoll(raw);
        if (v > 0) return v;
    } catch (...) {
    }
    return fallback;
}

}  // namespace

const ResourceCaps& caps() {
    static const ResourceCaps c = [] {
        ResourceCaps r;
        r.term_cap = env_cap("VSGAP_TERM_CAP", r.term_cap);
        r.dp_cap = env_cap("VSGAP_DP_CAP", r.dp_cap);
        r.tuple_cap = env_cap("VSGAP_TUPLE_CAP", r.tuple_cap);
        return r;
    }();
    return c;
}

}  // namespace vsgap
