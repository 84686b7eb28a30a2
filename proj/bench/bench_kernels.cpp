// Wall-clock comparison of the serial reference and the OpenMP path for the
// main sweep kernels. Reports are compared for equality as a sanity check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "cyclelift/identity.hpp"
#include "cyclelift/sweeps.hpp"

using namespace cyclelift;

namespace {

double time_it(const std::function<Report()>& f, Report& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* name, const std::function<Report(Exec)>& kernel) {
    Report serial, parallel;
    const double ts = time_it([&] { return kernel(Exec::serial); }, serial);
    const double tp = time_it([&] { return kernel(Exec::parallel); }, parallel);
    std::printf("%-16s checks=%-9lld serial=%8.3f s  parallel=%8.3f s  speedup=%5.2f  identical=%s\n", name,
                static_cast<long long>(serial.checked), ts, tp, ts / tp,
                serial.to_json() == parallel.to_json() ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
    bench("rho", [](Exec e) { return sweeps::rho_sweep({-2, -6, -10, -14, -22, -26}, 20000, e); });

    const auto ctx = padic::LocalContext::make(5, -2, 20);
    const auto vecs = sweeps::random_anisotropic_vectors(ctx, 50, -1, 6, 1);
    bench("r-formula", [&](Exec e) { return sweeps::r_formula_sweep(vecs, 6, e); });
    bench("local-compare", [&](Exec e) { return sweeps::local_compare_sweep(vecs, 4, e); });

    std::vector<localcycles::SpecialHom> homs;
    for (const auto& v : sweeps::random_anisotropic_vectors(ctx, 10, 0, 4, 2))
        homs.push_back(localcycles::make_special_hom(localcycles::Sign::minus, v));
    bench("chart", [&](Exec e) { return sweeps::chart_sweep(homs, 6, e); });

    const auto field = quadfield::make_field(-2);
    bench("main-identity", [&](Exec e) { return identity::verify_main_theorem(field, 35, 2000, e); });
    return 0;
}
