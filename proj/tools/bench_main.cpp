// Compares the OpenMP enumeration and membership sweeps against the serial
// reference implementations, checking that the reports agree byte for byte.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcsq/fixtures.hpp"
#include "mcsq/oracle.hpp"
#include "mcsq/orchestrator.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void bench_enumeration(const char* name, const mcsq::BinaryMatrix& m) {
    auto t0 = Clock::now();
    auto serial = mcsq::enumerate_mcs_serial(m, {m.m(), true});
    double ts = ms_since(t0);
    t0 = Clock::now();
    auto parallel = mcsq::enumerate_mcs(m, {m.m(), true});
    double tp = ms_since(t0);
    bool equal = serial == parallel;
    std::printf("%-28s m=%2d  serial %8.1f ms  parallel(%d) %8.1f ms  speedup %.2fx  reports %s\n", name,
                m.m(), ts, threads(), tp, ts / tp, equal ? "equal" : "DIFFER");
}

void bench_membership(const char* name, const mcsq::BinaryMatrix& m) {
    mcsq::QueryContext ctx(m);
    auto t0 = Clock::now();
    std::string serial_out;
    for (int r = 0; r < m.m(); ++r) serial_out += mcsq::to_json(mcsq::mcs_membership(ctx, r));
    double ts = ms_since(t0);
    t0 = Clock::now();
    auto all = mcsq::mcs_membership_all(m);
    double tp = ms_since(t0);
    std::string parallel_out;
    for (const auto& a : all) parallel_out += mcsq::to_json(a);
    std::printf("%-28s m=%2d  serial %8.1f ms  parallel(%d) %8.1f ms  speedup %.2fx  reports %s\n", name,
                m.m(), ts, threads(), tp, ts / tp, serial_out == parallel_out ? "equal" : "DIFFER");
}

}  // namespace

int main() {
    std::printf("enumeration (exhaustive oracle)\n");
    bench_enumeration("fig2 k=4", mcsq::fixture_fig2(4));
    bench_enumeration("fig2 k=5", mcsq::fixture_fig2(5));
    bench_enumeration("fig1 m=14", mcsq::fixture_fig1(14));
    bench_enumeration("random 15x8 d=0.4", mcsq::random_matrix(15, 8, 0.4, 7));

    std::printf("\nmembership sweep (all rows)\n");
    bench_membership("fig2 k=10", mcsq::fixture_fig2(10));
    bench_membership("fig2 k=20", mcsq::fixture_fig2(20));
    bench_membership("random 24x10 d=0.3", mcsq::random_matrix(24, 10, 0.3, 11));
    return 0;
}
