#include "ssg/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

// Incremental PGM token scanner that remembers byte offsets for diagnostics.
struct Scanner {
    const std::string& buf;
    std::size_t pos = 0;

    bool eof() const { return pos >= buf.size(); }

    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
    }

    // At most one comment line is tolerated, directly after the magic.
    void skip_single_comment() {
        skip_space();
        if (!eof() && buf[pos] == '#') {
            while (!eof() && buf[pos] != '\n') ++pos;
        }
    }

    long next_uint(const char* what) {
        skip_space();
        const std::size_t start = pos;
        if (eof() || !std::isdigit(static_cast<unsigned char>(buf[pos]))) {
            throw MalformedHeader(std::string("expected ") + what +
                                  " at byte offset " + std::to_string(start));
        }
        long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(buf[pos]))) {
            value = value * 10 + (buf[pos] - '0');
            if (value > 1'000'000'000L) {
                throw MalformedHeader(std::string("oversized ") + what +
                                      " at byte offset " + std::to_string(start));
            }
            ++pos;
        }
        return value;
    }
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

std::uint8_t quantize(double v) {
    double r = std::floor(v + 0.5);  // round half-up
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

}  // namespace

Image read_pgm(const std::filesystem::path& path) {
    const std::string buf = read_file(path);
    Scanner sc{buf};

    if (buf.size() < 2 || buf[0] != 'P' || (buf[1] != '2' && buf[1] != '5')) {
        throw MalformedHeader("not a P2/P5 PGM (byte offset 0): " + path.string());
    }
    const bool binary = buf[1] == '5';
    sc.pos = 2;
    sc.skip_single_comment();

    const long width = sc.next_uint("width");
    const long height = sc.next_uint("height");
    if (width <= 0 || height <= 0) {
        throw MalformedHeader("non-positive dimensions at byte offset " +
                              std::to_string(sc.pos));
    }

    sc.skip_space();
    const std::size_t maxval_off = sc.pos;
    const long maxval = sc.next_uint("maxval");
    if (maxval > 255) {
        throw UnsupportedMaxval("maxval " + std::to_string(maxval) +
                                " > 255 at byte offset " + std::to_string(maxval_off));
    }
    if (maxval < 1) {
        throw MalformedHeader("maxval must be >= 1 at byte offset " +
                              std::to_string(maxval_off));
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<double> pixels;
    pixels.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the payload.
        if (sc.eof() || !std::isspace(static_cast<unsigned char>(buf[sc.pos]))) {
            throw MalformedHeader("missing payload separator at byte offset " +
                                  std::to_string(sc.pos));
        }
        ++sc.pos;
        if (buf.size() - sc.pos < count) {
            throw TruncatedPayload("payload ends at byte offset " +
                                   std::to_string(buf.size()) + ", expected " +
                                   std::to_string(sc.pos + count) + " bytes");
        }
        for (std::size_t i = 0; i < count; ++i) {
            pixels.push_back(static_cast<double>(
                static_cast<std::uint8_t>(buf[sc.pos + i])));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            sc.skip_space();
            if (sc.eof()) {
                throw TruncatedPayload("expected " + std::to_string(count) +
                                       " samples, input ends at byte offset " +
                                       std::to_string(sc.pos));
            }
            const std::size_t off = sc.pos;
            const long v = sc.next_uint("sample");
            if (v > maxval) {
                throw MalformedHeader("sample " + std::to_string(v) +
                                      " exceeds maxval at byte offset " +
                                      std::to_string(off));
            }
            pixels.push_back(static_cast<double>(v));
        }
    }

    return Image(static_cast<int>(width), static_cast<int>(height),
                 std::move(pixels));
}

void write_pgm(const Image& img, const std::filesystem::path& path,
               bool normalize) {
    if (img.empty()) throw EmptyInput("write_pgm: empty image");

    std::string payload;
    payload.reserve(img.size());
    if (normalize) {
        const double lo = img.min_value();
        const double hi = img.max_value();
        if (hi == lo) {
            payload.assign(img.size(), '\0');
        } else {
            const double scale = 255.0 / (hi - lo);
            for (double v : img.pixels()) {
                payload.push_back(static_cast<char>(quantize((v - lo) * scale)));
            }
        }
    } else {
        for (double v : img.pixels()) {
            payload.push_back(static_cast<char>(quantize(v)));
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoFailure("write failed: " + path.string());
}

void write_csv_matrix(const Image& raster, const std::filesystem::path& path) {
    if (raster.empty()) throw EmptyInput("write_csv_matrix: empty raster");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (int y = 0; y < raster.height(); ++y) {
        for (int x = 0; x < raster.width(); ++x) {
            if (x) out << ',';
            out << format_double(raster.at(x, y));
        }
        out << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;  // cannot fail for double with this buffer size
    return std::string(buf, ptr);
}

}  // namespace ssg
