#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pathx {

// Thrown when an input file or record is malformed. CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation produces non-finite values or cannot proceed
// numerically. CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense row-major matrix of doubles. Shapes are fixed at construction;
// entries must stay finite (check_finite is applied at module boundaries).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    std::size_t size() const { return data.size(); }

    static Matrix identity(std::size_t n);
    Matrix transposed() const;
};

// c = a * b. Throws std::invalid_argument on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

// a (r x c) * x (c)  -> vector of length r.
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

// x (r) * a (r x c)  -> vector of length c.
std::vector<double> vecmat(std::span<const double> x, const Matrix& a);

// Throws NumericError naming `what` if any entry is NaN or infinite.
void check_finite(std::span<const double> values, const std::string& what);

// Counter-based seeded generator (splitmix-style output function). The i-th
// draw is a pure function of (key, i), so child streams derived from
// (seed, index) are independent of the order they are consumed in.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller; second value of each pair is cached.
    double normal();
    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);
    // Independent stream addressed by (this stream's seed, index).
    Rng child(std::uint64_t index) const;

    // In-place Fisher-Yates shuffle of an index vector.
    void shuffle(std::vector<std::size_t>& items);

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

double sigmoid_scalar(double x);
// Elementwise logistic function; stable for |x| up to ~1e3 (no overflow).
std::vector<double> sigmoid(std::span<const double> x);

// Max-subtraction softmax. Output sums to 1; throws std::invalid_argument("empty input")
// on an empty vector.
std::vector<double> softmax(std::span<const double> x);

// Mean absolute error (1/n) sum |x_i - x_hat_i|. Lengths must match.
double mae_loss(std::span<const double> x, std::span<const double> x_hat);

// Adam optimizer state for one flat parameter vector.
struct AdamState {
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    long step_count = 0;
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState for_size(std::size_t n, double learning_rate = 0.001);
};

// One bias-corrected Adam update. params and grads must match the state size.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

// Central differences (f(x+h e_i) - f(x-h e_i)) / (2h) per coordinate.
// Throws NumericError if f evaluates to a non-finite value.
std::vector<double> finite_diff_grad(const std::function<double(std::span<const double>)>& f,
                                     std::span<const double> x, double h);

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
// written to per-index slots by the caller; the partition is by contiguous
// blocks so output never depends on scheduling. workers <= 1 runs inline.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

// FNV-1a 64-bit hash, used for file checksums and manifests.
std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 14695981039346656037ULL);

}  // namespace pathx
