#pragma once

#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <harmonic_zeros/harmonic_zeros.hpp>

#include "oracle/grid_newton.hpp"

namespace hz = harmonic_zeros;

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(HZ_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(HZ_GOLDEN_DIR) + "/" + name; }

inline const hz::GalleryManifest& manifest() {
    static const hz::GalleryManifest m = hz::load_manifest(data_path("gallery_manifest.json"));
    return m;
}

inline oracle::Harmonic to_oracle(const hz::RationalFunction& r) {
    const auto p = r.numerator().coeffs();
    const auto q = r.denominator().coeffs();
    return {{p.begin(), p.end()}, {q.begin(), q.end()}};
}

inline double rel_err(hz::Complex got, hz::Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

struct Run {
    int exit_code = -1;
    std::string out;
};

// stdout + stderr of the CLI
inline Run run_cli(const std::string& args) {
    const std::string cmd = std::string(HZ_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace testing_support
