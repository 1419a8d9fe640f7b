// The 20-zero Rhie function of degree five and its co-conjugate at the
// rightmost zero: prints both zero censuses and writes both portraits as PPM.

#include <iostream>
#include <string>

#include "harmonic_zeros/harmonic_zeros.hpp"

#ifndef HARMONIC_ZEROS_DATA_DIR
#define HARMONIC_ZEROS_DATA_DIR "data"
#endif

namespace hz = harmonic_zeros;

int main(int argc, char** argv) {
    const std::string manifest_path =
        argc > 1 ? argv[1] : std::string(HARMONIC_ZEROS_DATA_DIR) + "/gallery_manifest.json";
    const auto manifest = hz::load_manifest(manifest_path);

    for (const char* name : {"rhie_n4_extremal", "rhie_n4_coconj"}) {
        const auto& entry = manifest.at(name);
        const auto f = hz::build_entry(manifest, entry);
        const auto census = hz::census(f);
        const auto reg = hz::extremal_regularity_check(census);
        std::cout << name << ": " << hz::format_rational(f.r()) << "\n"
                  << "  " << census.total() << " zeros (" << census.n_plus << " preserving, " << census.n_minus
                  << " reversing, " << census.n_singular_flagged << " flagged), cap " << census.bound_total
                  << ", " << hz::to_string(reg.status) << "\n";

        hz::PortraitConfig cfg;
        const auto crit = hz::CriticalSet{census.zeros, f.r().poles()};
        const double half = 1.15 * crit.max_modulus() + 0.1;
        cfg.x_min = cfg.y_min = -half;
        cfg.x_max = cfg.y_max = half;
        const std::string out = std::string(name) + ".ppm";
        hz::write_file(out, hz::encode_ppm(hz::render(f, census.zeros, cfg)));
        std::cout << "  wrote " << out << "\n";
    }
}
