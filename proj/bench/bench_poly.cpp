// Compares the serial reference product kernel against the OpenMP kernel
// on generating-sequence and synthetic workloads, asserting bit-identical
// results. Build target: bench_poly (not part of ctest).

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "vsgap/oracle.hpp"
#include "vsgap/scenario.hpp"
#include "vsgap/spoly.hpp"

using namespace vsgap;

namespace {

double time_once(const SparsePoly& a, const SparsePoly& b, bool parallel, SparsePoly& out) {
    double t0 = omp_get_wtime();
    out = parallel ? mul_parallel(a, b) : mul_serial(a, b);
    return omp_get_wtime() - t0;
}

double best_of(int reps, const SparsePoly& a, const SparsePoly& b, bool parallel,
               SparsePoly& out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t = time_once(a, b, parallel, out);
        if (t < best) best = t;
    }
    return best;
}

void bench(const std::string& name, const SparsePoly& a, const SparsePoly& b) {
    SparsePoly rs(a.nvars(), a.characteristic()), rp(a.nvars(), a.characteristic());
    double ts = best_of(3, a, b, false, rs);
    double tp = best_of(3, a, b, true, rp);
    bool equal = rs == rp;
    std::printf("%-18s %8zu x %-6zu -> %8zu terms  serial %8.3f ms  omp %8.3f ms  x%.2f  %s\n",
                name.c_str(), a.term_count(), b.term_count(), rs.term_count(), ts * 1e3, tp * 1e3,
                ts / tp, equal ? "identical" : "MISMATCH");
    if (!equal) std::exit(1);
}

// (1 + x + y + (1+t) z)^n
SparsePoly dense_base(int n) {
    SparsePoly p = SparsePoly::constant(3, 0, TPoly::one(0)) + SparsePoly::variable(3, 0, 0) +
                   SparsePoly::variable(3, 0, 1) +
                   SparsePoly::monomial(3, 0, {0, 0, 1}, TPoly::one_plus_t(0));
    return p.pow(n);
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    std::printf("threads: %d (OMP_NUM_THREADS to vary)\n", omp_get_max_threads());

    // Generating-sequence flavored workload: powers of P_3 for the default
    // prime data, i.e. the inner loop of the depth-4 oracle expansion.
    ScenarioConfig cfg;
    cfg.prime_count = 3;
    cfg.depth = 3;
    cfg.l = 0;
    PrimeSeq primes = build_primes(0, 3);
    std::vector<Int> a = build_a_seq(primes, 3);
    SparsePoly p3 = build_P(3, primes, a, 0, 1)[3];  // one unit slot: 3 variables
    SparsePoly p3_8 = p3.pow(8 * scale);
    SparsePoly p3_4 = p3.pow(4 * scale);
    bench("pseq_P3^k * P3", p3_8, p3);
    bench("pseq_P3^k/2 squared", p3_4, p3_4);

    bench("dense^10 * dense^10", dense_base(10 * scale), dense_base(10 * scale));
    bench("dense^14 * P3", dense_base(14 * scale), p3);
    return 0;
}
