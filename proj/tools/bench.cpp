// Benchmark comparing the OpenMP kernels with their serial reference
// implementations: the commuting-tuple scan and the standard-monomial
// staircase scan. Results must agree exactly; timings go to stdout.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "morava/groebner.hpp"
#include "morava/group.hpp"
#include "morava/verify.hpp"

using namespace morava;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

grp::GroupPtr dihedral(std::uint32_t half) {
    grp::GroupSpec spec;
    spec.generators = {{"r", half}, {"f", 2}};
    spec.conjugations = {{"r", "f", "r^" + std::to_string(half - 1)}};
    return grp::build_group(spec);
}

void bench_chi(const grp::GroupPtr& g, const char* label, unsigned s) {
    grp::ChiOptions serial{grp::default_chi_budget, grp::ChiStrategy::naive_serial};
    grp::ChiOptions parallel{grp::default_chi_budget, grp::ChiStrategy::naive_parallel};
    grp::ChiOptions chained{grp::default_chi_budget, grp::ChiStrategy::chained};

    double t0 = now_ms();
    std::uint64_t serial_count = grp::commuting_tuple_class_count(*g, s, serial);
    double t_serial = now_ms() - t0;

    t0 = now_ms();
    std::uint64_t parallel_count = grp::commuting_tuple_class_count(*g, s, parallel);
    double t_parallel = now_ms() - t0;

    t0 = now_ms();
    std::uint64_t chained_count = grp::commuting_tuple_class_count(*g, s, chained);
    double t_chained = now_ms() - t0;

    bool agree = serial_count == parallel_count && serial_count == chained_count;
    std::printf("chi  %-22s s=%u  chi=%-8llu serial %9.1f ms  parallel %9.1f ms  "
                "(x%.2f)  chained %9.1f ms  %s\n",
                label, s, static_cast<unsigned long long>(serial_count), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0, t_chained,
                agree ? "agree" : "MISMATCH");
}

void bench_staircase(unsigned s) {
    auto pres = verify::g36_presentation();
    auto build = verify::build_ideal(pres, s);
    double t0 = now_ms();
    auto gb = fp::buchberger(build.generators, {200'000'000ull, 10'000});
    double t_gb = now_ms() - t0;

    t0 = now_ms();
    auto serial = fp::quotient_dimension(gb, fp::Kernel::serial);
    double t_serial = now_ms() - t0;

    t0 = now_ms();
    auto parallel = fp::quotient_dimension(gb, fp::Kernel::parallel);
    double t_parallel = now_ms() - t0;

    std::printf("dim  g36 s=%u  basis=%zu (%.1f ms)  dim=%-8llu serial %9.1f ms  "
                "parallel %9.1f ms  (x%.2f)  %s\n",
                s, gb.gens.size(), t_gb,
                static_cast<unsigned long long>(serial.value_or(0)), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "agree" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif

    bench_chi(grp::build_group(verify::g36_group_spec()), "G36 (order 32)", 2);
    bench_chi(grp::build_group(verify::g36_group_spec()), "G36 (order 32)", 3);

    auto d8 = dihedral(4);
    auto d8_cubed = grp::direct_product(grp::direct_product(d8, d8), d8);
    bench_chi(d8_cubed, "D8^3 (order 512)", 2);

    bench_chi(grp::build_family_group(3, {7, 0, 0, 7}), "family n=3 (order 128)", 2);

    bench_staircase(2);
    bench_staircase(3);
    return 0;
}
