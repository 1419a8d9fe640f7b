#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "errors.hpp"
#include "harmonic.hpp"
#include "parallel.hpp"

namespace harmonic_zeros {

enum class ImageFormat { ppm, png };

inline ImageFormat parse_image_format(std::string_view s) {
    if (s == "ppm") return ImageFormat::ppm;
    if (s == "png") return ImageFormat::png;
    throw ParseError("unknown image format '" + std::string(s) + "' (expected ppm or png)");
}

struct PortraitConfig {
    double x_min = -2.0;
    double x_max = 2.0;
    double y_min = -2.0;
    double y_max = 2.0;
    int width = 400;
    int height = 400;
    /// Blend toward white where |r'(z)| > 1.
    double brighten_factor = 0.35;
    int marker_radius_px = 4;
    ImageFormat format = ImageFormat::ppm;

    void validate() const {
        if (!(x_min < x_max) || !(y_min < y_max)) throw DomainError("portrait window must have min < max");
        if (width < 1 || height < 1 || width > 8192 || height > 8192)
            throw DomainError("portrait resolution must lie in [1, 8192] per side");
        if (!(brighten_factor >= 0.0 && brighten_factor <= 1.0)) throw DomainError("brighten_factor must be in [0, 1]");
        if (marker_radius_px < 0) throw DomainError("marker radius must be non-negative");
    }

    /// Pixel centers; row 0 is the top edge, y grows upward.
    Complex pixel_center(int col, int row) const {
        const double x = x_min + (col + 0.5) * (x_max - x_min) / width;
        const double y = y_max - (row + 0.5) * (y_max - y_min) / height;
        return {x, y};
    }
};

/// 8-bit RGB, row-major from the top-left corner.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    std::array<std::uint8_t, 3> pixel(int col, int row) const {
        const auto i = 3 * (static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col));
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }

    void set(int col, int row, std::array<std::uint8_t, 3> c) {
        const auto i = 3 * (static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col));
        rgb[i] = c[0];
        rgb[i + 1] = c[1];
        rgb[i + 2] = c[2];
    }
};

/// arg(v) mapped to [0, 360).
inline double phase_hue_degrees(Complex v) {
    double t = std::arg(v);
    if (t < 0.0) t += 2.0 * std::numbers::pi;
    const double h = t * 180.0 / std::numbers::pi;
    return h >= 360.0 ? 0.0 : h;
}

/// HSV with s = v = 1, standard six-sector conversion; hue 0 is red.
inline std::array<double, 3> hue_to_rgb(double hue_degrees) {
    const double h = hue_degrees / 60.0;
    const int sector = static_cast<int>(std::floor(h)) % 6;
    const double f = h - std::floor(h);
    switch (sector) {
        case 0: return {1.0, f, 0.0};
        case 1: return {1.0 - f, 1.0, 0.0};
        case 2: return {0.0, 1.0, f};
        case 3: return {0.0, 1.0 - f, 1.0};
        case 4: return {f, 0.0, 1.0};
        default: return {1.0, 0.0, 1.0 - f};
    }
}

inline std::uint8_t to_byte(double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); }

namespace detail {

inline void draw_disk(Image& img, int cx, int cy, int radius, std::array<std::uint8_t, 3> color) {
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
            const int x = cx + dx;
            const int y = cy + dy;
            if (x < 0 || y < 0 || x >= img.width || y >= img.height) continue;
            if (dx * dx + dy * dy <= radius * radius) img.set(x, y, color);
        }
}

inline void draw_square(Image& img, int cx, int cy, int radius, std::array<std::uint8_t, 3> color) {
    // side 2 * radius
    for (int y = cy - radius; y < cy + radius; ++y)
        for (int x = cx - radius; x < cx + radius; ++x)
            if (x >= 0 && y >= 0 && x < img.width && y < img.height) img.set(x, y, color);
}

}  // namespace detail

/// Phase portrait of f: hue from arg f(z), blended toward white where f is
/// sense-preserving, zeros as black disks, poles as white squares.
/// Non-finite values render mid-gray. Rows are computed independently, so
/// the image does not depend on the thread count.
inline Image render(const RationalHarmonicFunction& f, const std::vector<ClassifiedZero>& zeros,
                    const PortraitConfig& cfg, unsigned threads = worker_count()) {
    cfg.validate();
    std::vector<Complex> poles;
    if (f.r().deg_q() >= 1)
        for (const auto& p : aberth_roots(f.r().denominator()).roots) poles.push_back(p.value);

    Image img{cfg.width, cfg.height, std::vector<std::uint8_t>(3 * static_cast<std::size_t>(cfg.width) * cfg.height)};
    parallel_for(static_cast<std::size_t>(cfg.height), threads, [&](std::size_t row_index) {
        const int row = static_cast<int>(row_index);
        for (int col = 0; col < cfg.width; ++col) {
            Complex z = cfg.pixel_center(col, row);
            for (Complex p : poles)
                if (std::abs(z - p) < 1e-12) z = p + Complex{1e-9, 0.0};  // approach along +x
            const Complex v = f.value(z);
            const double dmod = std::abs(f.r().derivative_value(z));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                img.set(col, row, {128, 128, 128});
                continue;
            }
            auto rgb = hue_to_rgb(phase_hue_degrees(v));
            if (dmod > 1.0)
                for (double& ch : rgb) ch += (1.0 - ch) * cfg.brighten_factor;
            img.set(col, row, {to_byte(rgb[0]), to_byte(rgb[1]), to_byte(rgb[2])});
        }
    });

    auto to_pixel = [&](Complex z) {
        const double col = (z.real() - cfg.x_min) / (cfg.x_max - cfg.x_min) * cfg.width - 0.5;
        const double row = (cfg.y_max - z.imag()) / (cfg.y_max - cfg.y_min) * cfg.height - 0.5;
        return std::pair<long, long>{std::lround(col), std::lround(row)};
    };
    const int rad = cfg.marker_radius_px;
    for (Complex p : poles) {
        const auto [x, y] = to_pixel(p);
        if (x < -rad || y < -rad || x > cfg.width + rad || y > cfg.height + rad) continue;
        detail::draw_square(img, static_cast<int>(x), static_cast<int>(y), rad, {255, 255, 255});
    }
    for (const auto& z : zeros) {
        const auto [x, y] = to_pixel(z.location);
        if (x < -rad || y < -rad || x > cfg.width + rad || y > cfg.height + rad) continue;
        detail::draw_disk(img, static_cast<int>(x), static_cast<int>(y), rad, {0, 0, 0});
    }
    return img;
}

/// Binary P6, maxval 255.
inline std::string encode_ppm(const Image& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
    return out;
}

/// 8-bit RGB PNG, filter type 0 on every row, one zlib-compressed IDAT.
inline std::string encode_png(const Image& img) {
    auto be32 = [](std::string& s, std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8) s.push_back(static_cast<char>((v >> shift) & 0xFF));
    };
    auto chunk = [&](std::string& out, const char* type, const std::string& data) {
        be32(out, static_cast<std::uint32_t>(data.size()));
        std::string body(type, 4);
        body += data;
        out += body;
        be32(out, static_cast<std::uint32_t>(
                      crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size()))));
    };

    std::string raw;
    const std::size_t stride = 3 * static_cast<std::size_t>(img.width);
    raw.reserve((stride + 1) * static_cast<std::size_t>(img.height));
    for (int row = 0; row < img.height; ++row) {
        raw.push_back('\0');
        raw.append(reinterpret_cast<const char*>(img.rgb.data()) + stride * static_cast<std::size_t>(row), stride);
    }
    uLongf packed_size = compressBound(static_cast<uLong>(raw.size()));
    std::string packed(packed_size, '\0');
    if (compress2(reinterpret_cast<Bytef*>(packed.data()), &packed_size, reinterpret_cast<const Bytef*>(raw.data()),
                  static_cast<uLong>(raw.size()), 9) != Z_OK)
        throw IOError("png: zlib compression failed");
    packed.resize(packed_size);

    std::string out("\x89PNG\r\n\x1a\n", 8);
    std::string header;
    be32(header, static_cast<std::uint32_t>(img.width));
    be32(header, static_cast<std::uint32_t>(img.height));
    header += std::string("\x08\x02\x00\x00\x00", 5);  // depth 8, RGB, deflate, no filter, no interlace
    chunk(out, "IHDR", header);
    chunk(out, "IDAT", packed);
    chunk(out, "IEND", "");
    return out;
}

inline std::string encode(const Image& img, ImageFormat format) {
    return format == ImageFormat::png ? encode_png(img) : encode_ppm(img);
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IOError("write to '" + path + "' failed");
}

}  // namespace harmonic_zeros
