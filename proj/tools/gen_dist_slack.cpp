// gen_dist_slack - empirical slack sweep behind dist_slack_default.
//
// For each prime, every a in [2, p-5], and every character s_eps, walks the
// congruent weights kb = 1..kbmax and records the largest observed value of
//   |alpha_i - (p-1)i/2| / (ilog_p k + 1)
// over the outer slope indices (i <= d_ur and i > d_iw - d_ur).  The frozen
// constants in dist_slack_default must dominate the printed maxima; rerun
// this tool and re-freeze whenever the sweep range grows.
//
// Usage: gen_dist_slack [kbmax]   (default 400; writes the fixture to stdout)

#include "ghost/theorems.hpp"

#include <cstdio>
#include <cstdlib>

using namespace ghost;

int main(int argc, char** argv) {
    long long kbmax = argc > 1 ? std::atoll(argv[1]) : 400;
    std::printf("# max |alpha_i - (p-1)i/2| / (ilog_p k + 1) over outer i,\n");
    std::printf("# all a in [2, p-5], all s_eps, congruent kb = 1..%lld\n", kbmax);
    Rat huge(1000000);
    for (long long p : {7LL, 11LL, 13LL}) {
        Rat best(0);
        long long best_a = 0, best_s = 0, best_kb = 0;
        for (long long a = 2; a <= p - 5; ++a) {
            for (long long s = 0; s <= p - 2; ++s) {
                GhostContext ctx = GhostContext::make(p, a, 0, s);
                for (long long kb = 1; kb <= kbmax; ++kb) {
                    DistReport rep = distribution_check(ctx, ctx.weight_of(kb), huge);
                    if (best < rep.max_slack) {
                        best = rep.max_slack;
                        best_a = a;
                        best_s = s;
                        best_kb = kb;
                    }
                }
            }
        }
        std::printf("p=%lld kbmax=%lld max_slack=%s at a=%lld s_eps=%lld kb=%lld\n", p,
                    kbmax, best.str().c_str(), best_a, best_s, best_kb);
    }
    return 0;
}
