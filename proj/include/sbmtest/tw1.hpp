#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sbmtest {

namespace detail {
extern const char* const kTw1TableVersion;
extern const double kTw1Mean;
extern const double kTw1Sd;
extern const char* const kTw1ChecksumHex;
extern const std::size_t kTw1GridSize;
extern const double kTw1GridX[];
extern const double kTw1GridCdf[];
}  // namespace detail

/// FNV-1a 64-bit hash, used to fingerprint the cdf table asset.
std::uint64_t fnv1a64(std::string_view bytes);

/// Tabulated Tracy-Widom (beta = 1) distribution with monotone cubic
/// (Fritsch-Carlson) interpolation between grid points.
class Tw1Distribution {
public:
    /// The table compiled into the library (generated from the same data
    /// as the text asset shipped under data/).
    static const Tw1Distribution& bundled();

    /// Parses the two-column text asset and verifies its checksum line.
    static Tw1Distribution from_file(const std::string& path);

    Tw1Distribution(std::vector<double> grid_x, std::vector<double> grid_cdf,
                    double mean, double sd, std::string version, std::string checksum_hex);

    /// cdf(x); clamps to the grid endpoints outside the tabulated range.
    double cdf(double x) const;

    /// Inverse cdf for p in (0, 1); ParamError outside.
    double quantile(double p) const;

    double mean() const { return mean_; }
    double sd() const { return sd_; }
    const std::string& version() const { return version_; }
    const std::string& checksum_hex() const { return checksum_hex_; }

    std::size_t grid_size() const { return x_.size(); }
    double grid_x(std::size_t i) const { return x_[i]; }
    double grid_cdf(std::size_t i) const { return f_[i]; }

private:
    double eval_cell(std::size_t cell, double x) const;

    std::vector<double> x_;
    std::vector<double> f_;
    std::vector<double> slope_;  // Fritsch-Carlson tangents
    double mean_;
    double sd_;
    std::string version_;
    std::string checksum_hex_;
};

/// Shortcuts through the bundled table.
double tw1_cdf(double x);
double tw1_quantile(double p);

struct Tw1Moments {
    double mean;
    double sd;
};
Tw1Moments tw1_moments();

}  // namespace sbmtest
