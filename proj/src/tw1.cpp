#include "sbmtest/tw1.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sbmtest/errors.hpp"

namespace sbmtest {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

// Fritsch-Carlson monotone tangents.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (f[i + 1] - f[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double t = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (t * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::abs(t) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return t;
    };
    d[0] = (n == 2) ? delta[0] : endpoint(h[0], h[1], delta[0], delta[1]);
    d[n - 1] =
        (n == 2) ? delta[0] : endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

}  // namespace

Tw1Distribution::Tw1Distribution(std::vector<double> grid_x, std::vector<double> grid_cdf,
                                 double mean, double sd, std::string version,
                                 std::string checksum_hex)
    : x_(std::move(grid_x)),
      f_(std::move(grid_cdf)),
      mean_(mean),
      sd_(sd),
      version_(std::move(version)),
      checksum_hex_(std::move(checksum_hex)) {
    if (x_.size() != f_.size() || x_.size() < 4)
        throw ParamError("Tw1Distribution: grid too small or mismatched");
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        if (!(x_[i + 1] > x_[i]))
            throw ParamError("Tw1Distribution: abscissae not strictly increasing");
        if (!(f_[i + 1] > f_[i]))
            throw ParamError("Tw1Distribution: cdf values not strictly increasing");
    }
    if (!(f_.front() > 0.0) || !(f_.back() < 1.0) || f_.front() > 1e-8 ||
        f_.back() < 1.0 - 1e-8)
        throw ParamError("Tw1Distribution: endpoint mass out of contract");
    slope_ = pchip_slopes(x_, f_);
}

const Tw1Distribution& Tw1Distribution::bundled() {
    static const Tw1Distribution instance = [] {
        std::vector<double> xs(detail::kTw1GridX, detail::kTw1GridX + detail::kTw1GridSize);
        std::vector<double> fs(detail::kTw1GridCdf,
                               detail::kTw1GridCdf + detail::kTw1GridSize);
        return Tw1Distribution(std::move(xs), std::move(fs), detail::kTw1Mean,
                               detail::kTw1Sd, detail::kTw1TableVersion,
                               detail::kTw1ChecksumHex);
    }();
    return instance;
}

Tw1Distribution Tw1Distribution::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("Tw1Distribution: cannot open '" + path + "'");
    std::string version;
    std::string checksum;
    double mean = 0.0, sd = 0.0;
    bool have_mean = false, have_sd = false;
    std::vector<double> xs, fs;
    std::string data_payload;
    std::string line;
    long line_no = 0;
    bool first_comment = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream fields(line.substr(1));
            std::string tag;
            fields >> tag;
            if (first_comment) {
                version = tag;
                first_comment = false;
            } else if (tag == "mean") {
                fields >> mean;
                have_mean = true;
            } else if (tag == "sd") {
                fields >> sd;
                have_sd = true;
            } else if (tag == "fnv1a64") {
                fields >> checksum;
            }
            continue;
        }
        double x, f;
        std::istringstream fields(line);
        if (!(fields >> x >> f))
            throw IoError("Tw1Distribution: malformed line " + std::to_string(line_no) +
                          " in '" + path + "'");
        xs.push_back(x);
        fs.push_back(f);
        data_payload += line;
        data_payload += '\n';
    }
    if (!have_mean || !have_sd || checksum.empty())
        throw IoError("Tw1Distribution: missing header fields in '" + path + "'");
    const std::string actual = hex64(fnv1a64(data_payload));
    if (actual != checksum)
        throw IoError("Tw1Distribution: checksum mismatch in '" + path + "': header " +
                      checksum + ", data " + actual);
    return Tw1Distribution(std::move(xs), std::move(fs), mean, sd, version, checksum);
}

double Tw1Distribution::eval_cell(std::size_t cell, double x) const {
    const double h = x_[cell + 1] - x_[cell];
    const double t = (x - x_[cell]) / h;
    const double f0 = f_[cell], f1 = f_[cell + 1];
    const double d0 = slope_[cell] * h, d1 = slope_[cell + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    return f0 * (2 * t3 - 3 * t2 + 1) + d0 * (t3 - 2 * t2 + t) +
           f1 * (-2 * t3 + 3 * t2) + d1 * (t3 - t2);
}

double Tw1Distribution::cdf(double x) const {
    if (!std::isfinite(x)) throw ParamError("Tw1Distribution::cdf: non-finite argument");
    if (x <= x_.front()) return f_.front();
    if (x >= x_.back()) return f_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t cell = static_cast<std::size_t>(it - x_.begin()) - 1;
    return eval_cell(cell, x);
}

double Tw1Distribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw ParamError("Tw1Distribution::quantile: p must lie in (0,1)");
    if (p <= f_.front()) return x_.front();
    if (p >= f_.back()) return x_.back();
    const auto it = std::upper_bound(f_.begin(), f_.end(), p);
    const std::size_t cell = static_cast<std::size_t>(it - f_.begin()) - 1;
    // safeguarded Newton on the Hermite cubic within the cell
    double lo = x_[cell], hi = x_[cell + 1];
    double x = lo + (hi - lo) * (p - f_[cell]) / (f_[cell + 1] - f_[cell]);
    for (int iter = 0; iter < 60; ++iter) {
        const double fx = eval_cell(cell, x) - p;
        if (fx > 0.0)
            hi = x;
        else
            lo = x;
        const double h = x_[cell + 1] - x_[cell];
        const double t = (x - x_[cell]) / h;
        const double d0 = slope_[cell] * h, d1 = slope_[cell + 1] * h;
        const double deriv = (f_[cell] * (6 * t * t - 6 * t) + d0 * (3 * t * t - 4 * t + 1) +
                              f_[cell + 1] * (6 * t - 6 * t * t) + d1 * (3 * t * t - 2 * t)) /
                             h;
        double next = (deriv > 0.0) ? x - fx / deriv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < 1e-15 * std::max(1.0, std::abs(x))) return next;
        x = next;
    }
    return x;
}

double tw1_cdf(double x) { return Tw1Distribution::bundled().cdf(x); }

double tw1_quantile(double p) { return Tw1Distribution::bundled().quantile(p); }

Tw1Moments tw1_moments() {
    const auto& d = Tw1Distribution::bundled();
    return {d.mean(), d.sd()};
}

}  // namespace sbmtest
