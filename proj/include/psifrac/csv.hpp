#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psifrac::csv {

/// Fixed-format numeric cell: significant-digit %g, '.' decimal point,
/// locale-independent. 17 digits round-trips doubles exactly.
inline std::string fmt(double v, int significant = 17) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

/// Comma-separated, LF line endings, binary stream (no platform translation).
class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }
    void comment(const std::string& text) { out_ << "# " << text << "\n"; }
    void line(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << "\n";
    }
    template <typename Range>
    void row(const Range& cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << "\n";
    }

private:
    std::ofstream out_;
};

}  // namespace psifrac::csv
