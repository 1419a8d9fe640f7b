// Command-line front end: zeros, winding, verify, portrait, sweep,
// coconjugate, gallery.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonic_zeros/harmonic_zeros.hpp"

#ifndef HARMONIC_ZEROS_DATA_DIR
#define HARMONIC_ZEROS_DATA_DIR "data"
#endif

namespace hz = harmonic_zeros;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// "@path" reads the spec from a file.
std::string resolve_spec(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw hz::IOError("cannot read rational spec file '" + arg.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hz::RationalFunction load_rational(const std::string& arg) { return hz::parse_rational(resolve_spec(arg)); }

std::vector<double> parse_reals(const std::string& s, std::size_t expected, const char* what) {
    const auto parts = split(s, ',');
    if (parts.size() != expected)
        throw hz::ParseError(std::string(what) + " expects " + std::to_string(expected) + " comma-separated values");
    std::vector<double> out;
    for (const auto& p : parts) {
        const hz::Complex c = hz::parse_complex(p);
        if (c.imag() != 0.0) throw hz::ParseError(std::string(what) + " values must be real");
        out.push_back(c.real());
    }
    return out;
}

hz::MobiusTransform parse_mobius(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 4) throw hz::ParseError("--mobius expects a,b,c,d");
    return {hz::parse_complex(parts[0]), hz::parse_complex(parts[1]), hz::parse_complex(parts[2]),
            hz::parse_complex(parts[3])};
}

// lo:hi:step, or a single value
hz::ParameterRange parse_range(const std::string& s) {
    const auto parts = split(s, ':');
    auto real = [](const std::string& t) {
        const hz::Complex c = hz::parse_complex(t);
        if (c.imag() != 0.0) throw hz::ParseError("range values must be real");
        return c.real();
    };
    if (parts.size() == 1) return hz::ParameterRange::single(real(parts[0]));
    if (parts.size() != 3) throw hz::ParseError("range must be 'value' or 'lo:hi:step'");
    return {real(parts[0]), real(parts[1]), real(parts[2])};
}

std::string fmt(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string fmt(hz::Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%+.15f %+.15fi", z.real(), z.imag());
    return buf;
}

void print_zero_table(std::ostream& os, const std::vector<hz::ClassifiedZero>& zeros) {
    os << "  #  location                                   |r'(z)|            residual   sense       index\n";
    int k = 0;
    for (const auto& z : zeros) {
        char line[256];
        std::snprintf(line, sizeof line, "%3d  %-41s  %-17.12g  %-9.2e  %-10s  %s\n", ++k, fmt(z.location).c_str(),
                      z.derivative_modulus, z.residual, std::string(hz::to_string(z.sense)).c_str(),
                      z.index ? std::to_string(*z.index).c_str() : "n/a");
        os << line;
    }
}

struct Options {
    // shared
    std::string rational;
    bool json_out = false;
    // zeros
    double tol = hz::ZeroConfig{}.residual_tol;
    // verify
    std::string family;
    int n = 0;
    double a = 0.0;
    double eps = 0.0;
    int random_count = 0;
    int random_degree = 3;
    std::uint64_t seed = 20240601;
    std::string migration;
    // winding
    std::string center = "0,0";
    double radius = 1.0;
    int samples = hz::WindingConfig{}.initial_samples;
    // portrait
    std::string window = "-2,2,-2,2";
    std::string resolution = "400x400";
    std::string out;
    std::string format = "ppm";
    double brighten = hz::PortraitConfig{}.brighten_factor;
    int marker = hz::PortraitConfig{}.marker_radius_px;
    // coconjugate
    std::string mobius;
    bool print_spec = false;
    // sweep
    std::string a_range;
    std::string eps_range = "0";
    // gallery
    std::string manifest = std::string(HARMONIC_ZEROS_DATA_DIR) + "/gallery_manifest.json";
    std::string dump;
    bool gallery_census = false;
};

int run_zeros(const Options& o) {
    const auto r = load_rational(o.rational).reduced();
    hz::ZeroConfig cfg;
    cfg.residual_tol = o.tol;
    const hz::RationalHarmonicFunction f(r);
    const auto zeros = hz::find_zeros(f, cfg);
    if (o.json_out) {
        std::cout << hz::zero_report(r, zeros).dump(2) << "\n";
        return kExitOk;
    }
    const auto counts = hz::count_senses(zeros);
    std::cout << "r = " << hz::format_rational(r) << "  (degree " << r.degree() << ")\n";
    std::cout << zeros.size() << " zeros: " << counts.preserving << " sense-preserving, " << counts.reversing
              << " sense-reversing, " << counts.singular << " singular-flagged\n";
    print_zero_table(std::cout, zeros);
    return kExitOk;
}

void print_census(std::ostream& os, const hz::ZeroCensus& c, const hz::RegularityReport& reg) {
    auto mark = [](bool ok) { return ok ? "ok" : "EXCEEDED"; };
    os << "degree n = " << c.n << " (deg p = " << c.deg_p << ", deg q = " << c.deg_q << ")\n";
    os << "  sense-preserving           " << c.n_plus << " <= " << c.bound_plus << "  "
       << mark(c.n_plus <= c.bound_plus) << "\n";
    os << "  sense-reversing/singular   " << c.n_minus_zero() << " <= " << c.bound_minus_zero << "  "
       << mark(c.n_minus_zero() <= c.bound_minus_zero) << "  (" << c.n_singular_flagged << " singular-flagged)\n";
    os << "  total                      " << c.total() << " <= " << c.bound_total << "  "
       << mark(c.total() <= c.bound_total) << "\n";
    os << c.total() << "/" << c.bound_total << " zeros, " << (c.at_cap() ? "at cap" : "below cap") << ", "
       << (reg.status == hz::RegularityStatus::not_applicable ? (c.n_singular_flagged ? "singular-flagged" : "regular")
                                                              : std::string(hz::to_string(reg.status)))
       << "\n";
    os << "verdict: " << hz::to_string(c.verdict) << "\n";
}

int run_verify(const Options& o) {
    if (o.random_count > 0) {
        std::mt19937_64 rng(o.seed);
        int fails = 0;
        int indeterminate = 0;
        json rows = json::array();
        for (int i = 0; i < o.random_count; ++i) {
            const auto [dp, dq] = hz::instance_shape(rng, o.random_degree, static_cast<std::size_t>(i));
            const hz::RationalHarmonicFunction f(hz::random_rational(rng, dp, dq));
            if (f.degree() < 2) continue;
            const auto c = hz::census(f);
            fails += c.verdict == hz::Verdict::fail;
            indeterminate += c.verdict == hz::Verdict::indeterminate;
            json row = hz::to_json(c);
            row["rational"] = hz::format_rational(f.r());
            rows.push_back(row);
        }
        if (o.json_out) {
            std::cout << json{{"schema", hz::kReportSchema}, {"seed", o.seed}, {"instances", rows}}.dump(2) << "\n";
        } else {
            std::cout << "seed " << o.seed << ": " << rows.size() << " instances of degree " << o.random_degree
                      << ", " << fails << " fail, " << indeterminate << " indeterminate\n";
        }
        return fails ? kExitVerifyFail : kExitOk;
    }

    hz::RationalHarmonicFunction f = [&] {
        if (!o.family.empty()) return hz::build_family(hz::parse_family(o.family), o.n, o.a, o.eps);
        if (o.rational.empty()) throw hz::ParseError("verify needs --rational, --family or --random");
        return hz::RationalHarmonicFunction(load_rational(o.rational).reduced());
    }();
    const auto c = hz::census(f);
    const auto reg = hz::extremal_regularity_check(c);

    std::vector<hz::MigrationRow> migration;
    if (!o.migration.empty()) migration = hz::root_migration_experiment(f, parse_reals(o.migration, split(o.migration, ',').size(), "--migration"));

    if (o.json_out) {
        json mig = json::array();
        for (const auto& m : migration) mig.push_back(hz::to_json(m));
        json doc{{"schema", hz::kReportSchema},
                 {"rational", hz::format_rational(f.r())},
                 {"census", hz::to_json(c)},
                 {"regularity", hz::to_json(reg)},
                 {"zeros", hz::zero_report(f.r(), c.zeros)["zeros"]}};
        if (!migration.empty()) doc["migration"] = mig;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "r = " << hz::format_rational(f.r()) << "\n";
        print_census(std::cout, c, reg);
        for (const auto& m : migration)
            std::cout << "migration |c| = " << fmt(m.magnitude) << ": " << m.matched << " matched, " << m.unmatched
                      << " unmatched, " << m.singular_skipped << " singular skipped (" << m.status << ")\n";
    }
    return c.verdict == hz::Verdict::fail ? kExitVerifyFail : kExitOk;
}

int run_winding(const Options& o) {
    const hz::RationalHarmonicFunction f(load_rational(o.rational).reduced());
    const auto c = parse_reals(o.center, 2, "--center");
    const hz::Circle gamma({c[0], c[1]}, o.radius);
    hz::WindingConfig cfg;
    cfg.initial_samples = o.samples;
    const auto w = hz::winding([&](hz::Complex z) { return f.value(z); }, gamma, cfg);
    if (o.json_out) {
        json doc = hz::to_json(w);
        doc["schema"] = hz::kReportSchema;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "winding " << w.value << " (samples " << w.samples_used << ", max phase step "
                  << fmt(w.max_step_phase, 6) << " rad)\n";
    }
    return kExitOk;
}

int run_portrait(const Options& o) {
    const hz::RationalHarmonicFunction f(load_rational(o.rational).reduced());
    hz::PortraitConfig cfg;
    const auto w = parse_reals(o.window, 4, "--window");
    cfg.x_min = w[0];
    cfg.x_max = w[1];
    cfg.y_min = w[2];
    cfg.y_max = w[3];
    const auto xpos = o.resolution.find('x');
    if (xpos == std::string::npos) throw hz::ParseError("--resolution expects WxH");
    try {
        cfg.width = std::stoi(o.resolution.substr(0, xpos));
        cfg.height = std::stoi(o.resolution.substr(xpos + 1));
    } catch (const std::exception&) {
        throw hz::ParseError("--resolution expects WxH");
    }
    cfg.format = hz::parse_image_format(o.format);
    cfg.brighten_factor = o.brighten;
    cfg.marker_radius_px = o.marker;
    const auto zeros = hz::find_zeros(f);
    const auto img = hz::render(f, zeros, cfg);
    hz::write_file(o.out, hz::encode(img, cfg.format));
    std::cout << "wrote " << o.out << " (" << cfg.width << "x" << cfg.height << ", " << zeros.size() << " zeros)\n";
    return kExitOk;
}

int run_coconjugate(const Options& o) {
    const auto r = load_rational(o.rational).reduced();
    const auto t = parse_mobius(o.mobius);
    const auto big_r = hz::co_conjugate(r, t);
    if (o.print_spec) {
        std::cout << hz::format_rational(big_r) << "\n";
        return kExitOk;
    }
    std::cout << "R = " << hz::format_rational(big_r) << "\n";
    std::cout << "degree " << big_r.degree() << " (deg p = " << big_r.deg_p() << ", deg q = " << big_r.deg_q()
              << ")\n";
    return kExitOk;
}

int run_sweep(const Options& o) {
    const auto family = hz::parse_family(o.family);
    const auto rows = hz::sweep(family, o.n, parse_range(o.a_range), parse_range(o.eps_range));
    if (o.out.empty()) {
        hz::write_sweep_csv(std::cout, rows);
    } else {
        std::ofstream file(o.out);
        if (!file) throw hz::IOError("cannot open '" + o.out + "'");
        hz::write_sweep_csv(file, rows);
    }
    return kExitOk;
}

int run_gallery(const Options& o) {
    const auto m = hz::load_manifest(o.manifest);
    if (!o.dump.empty()) {
        std::cout << m.at(o.dump).spec << "\n";
        return kExitOk;
    }
    bool failed = false;
    for (const auto& e : m.entries) {
        std::cout << e.name << "  degree " << e.degree << "  expected "
                  << (e.expected_zero_count ? std::to_string(*e.expected_zero_count) : "unknown") << "  ["
                  << e.provenance << "]";
        if (o.gallery_census) {
            const auto f = e.function();
            const auto zeros = hz::find_zeros(f);
            std::cout << "  found " << zeros.size();
            if (f.degree() >= 2) {
                const auto c = hz::census_of(f, zeros);
                std::cout << "  verdict " << hz::to_string(c.verdict);
                failed = failed || c.verdict == hz::Verdict::fail;
            }
        }
        std::cout << "\n";
    }
    return failed ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros of rational harmonic functions r(z) - conj(z)"};
    app.require_subcommand(1);
    Options o;

    auto* zeros = app.add_subcommand("zeros", "Find and classify all zeros");
    zeros->add_option("--rational", o.rational, "Rational spec 'p: ... ; q: ...' or @file")->required();
    zeros->add_flag("--json", o.json_out, "JSON report");
    zeros->add_option("--tol", o.tol, "Residual tolerance");

    auto* verify = app.add_subcommand("verify", "Check zero counts against the degree bounds");
    verify->add_option("--rational", o.rational, "Rational spec or @file");
    verify->add_option("--family", o.family, "mpw or rhie");
    verify->add_option("--n", o.n, "Family parameter n");
    verify->add_option("--a", o.a, "Family parameter a");
    verify->add_option("--eps", o.eps, "Rhie parameter eps");
    verify->add_option("--random", o.random_count, "Number of seeded random instances");
    verify->add_option("--degree", o.random_degree, "Degree of random instances");
    verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--migration", o.migration, "Comma-separated |c| values for the root migration experiment");
    verify->add_flag("--json", o.json_out, "JSON report");

    auto* wind = app.add_subcommand("winding", "Winding of f along a circle");
    wind->add_option("--rational", o.rational, "Rational spec or @file")->required();
    wind->add_option("--center", o.center, "x,y");
    wind->add_option("--radius", o.radius, "Circle radius")->required();
    wind->add_option("--samples", o.samples, "Initial sample count");
    wind->add_flag("--json", o.json_out, "JSON output");

    auto* portrait = app.add_subcommand("portrait", "Render a phase portrait");
    portrait->add_option("--rational", o.rational, "Rational spec or @file")->required();
    portrait->add_option("--window", o.window, "x_min,x_max,y_min,y_max");
    portrait->add_option("--resolution", o.resolution, "WxH");
    portrait->add_option("--out", o.out, "Output file")->required();
    portrait->add_option("--format", o.format, "ppm or png");
    portrait->add_option("--brighten", o.brighten, "Brightening of sense-preserving regions in [0,1]");
    portrait->add_option("--marker", o.marker, "Marker radius in pixels");

    auto* coconj = app.add_subcommand("coconjugate", "Co-conjugate conj(T) o r o T^-1");
    coconj->add_option("--rational", o.rational, "Rational spec or @file")->required();
    coconj->add_option("--mobius", o.mobius, "a,b,c,d of T(z) = (az+b)/(cz+d)")->required();
    coconj->add_flag("--print-spec", o.print_spec, "Print only the resulting spec");

    auto* sweep = app.add_subcommand("sweep", "Zero counts over a parameter grid (CSV)");
    sweep->add_option("--family", o.family, "mpw or rhie")->required();
    sweep->add_option("--n", o.n, "Family parameter n")->required();
    sweep->add_option("--a", o.a_range, "lo:hi:step or value")->required();
    sweep->add_option("--eps", o.eps_range, "lo:hi:step or value (rhie)");
    sweep->add_option("--out", o.out, "CSV file (default stdout)");

    auto* gallery = app.add_subcommand("gallery", "List gallery entries");
    gallery->add_option("--manifest", o.manifest, "Manifest JSON");
    gallery->add_option("--dump", o.dump, "Print the spec of one entry");
    gallery->add_flag("--census", o.gallery_census, "Count zeros of every entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*zeros) return run_zeros(o);
        if (*verify) return run_verify(o);
        if (*wind) return run_winding(o);
        if (*portrait) return run_portrait(o);
        if (*coconj) return run_coconjugate(o);
        if (*sweep) return run_sweep(o);
        if (*gallery) return run_gallery(o);
    } catch (const hz::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const hz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
