#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grid {

// Error taxonomy; the C API and the CLI map these to status / exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };
LogLevel log_level();
void log_msg(LogLevel level, const std::string& msg);
inline void log_warn(const std::string& m) { log_msg(LogLevel::Warn, m); }
inline void log_info(const std::string& m) { log_msg(LogLevel::Info, m); }
inline void log_debug(const std::string& m) { log_msg(LogLevel::Debug, m); }

// Deterministic RNG. Uniform doubles take the top 53 bits of mt19937_64 and
// gaussians use Box-Muller, so streams do not depend on the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // [0, n), rejection sampled
    int uniform_int(int n);

    double gaussian(double mean = 0.0, double stddev = 1.0);

    // first k elements of a uniform sample without replacement
    template <typename T>
    void partial_shuffle(std::vector<T>& items, size_t k) {
        const size_t n = items.size();
        if (k > n) k = n;
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + static_cast<size_t>(uniform_int(static_cast<int>(n - i)));
            std::swap(items[i], items[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// splitmix64-based combiner for deriving per-node seeds from a base seed
uint64_t mix_seed(uint64_t base, uint64_t salt);

// Shortest round-trip decimal form; used for all CSV/JSON numeric output so
// repeated runs are byte-identical.
std::string fmt_double(double v);

std::vector<std::string> split(const std::string& line, char sep);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

inline double l1_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::fabs(x);
    return s;
}

inline double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// index of the largest entry, lowest index on ties
int argmax_index(std::span<const double> v);

// true iff the largest entry is attained at exactly one index
bool has_strict_argmax(std::span<const double> v);

}  // namespace grid
