// Compares the OpenMP kernels against their serial reference
// implementations: lattice enumeration and the Demazure root search.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "favmod/polytope.hpp"
#include "favmod/rootsys.hpp"
#include "favmod/toric.hpp"

using namespace favmod;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds(t0, std::chrono::steady_clock::now());
}

void bench_lattice(const std::string& name, LieType t, const Weight& w, int dilation) {
    PolytopeSpec p = dilate(build_polytope(t, w), dilation);
    LatticeSet serial, parallel;
    double ts = timed([&] { serial = lattice_points_serial(p); });
    double tp = timed([&] { parallel = lattice_points(p); });
    std::printf("%-28s %10zu pts   serial %8.3fs   parallel %8.3fs   %s\n", name.c_str(),
                serial.size(), ts, tp, serial == parallel ? "match" : "MISMATCH");
}

void bench_demazure(int n, int box) {
    std::vector<Ray> rays = fan_rays_A_regular(n);
    std::vector<DemazureRoot> serial, parallel;
    double ts = timed([&] { serial = demazure_roots_serial(rays, box); });
    double tp = timed([&] { parallel = demazure_roots(rays, box); });
    std::printf("demazure n=%d box=%-2d          %10zu roots  serial %8.3fs   parallel %8.3fs   %s\n",
                n, box, serial.size(), ts, tp,
                serial.size() == parallel.size() ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
    bench_lattice("G2 3*P(1,1)", LieType(Family::G2, 2), Weight({1, 1}), 3);
    bench_lattice("G2 4*P(1,1)", LieType(Family::G2, 2), Weight({1, 1}), 4);
    bench_lattice("A3 3*P(1,1,1)", LieType(Family::A, 3), Weight({1, 1, 1}), 3);
    bench_lattice("A3 4*P(1,1,1)", LieType(Family::A, 3), Weight({1, 1, 1}), 4);
    bench_lattice("C3 2*P(1,1,1)", LieType(Family::C, 3), Weight({1, 1, 1}), 2);
    bench_demazure(3, 6);
    bench_demazure(3, 8);
    return 0;
}
