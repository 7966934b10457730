#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace voxmorph {

// Error taxonomy used across the engine. ConfigError and IoError map to
// usage-level failures (CLI exit 2); everything else is a runtime failure
// (CLI exit 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles. The only tensor type in the engine;
// everything is desk-scale, so no BLAS backend.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  double at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  double* row(int r) { return data_.data() + size_t(r) * cols_; }
  const double* row(int r) const { return data_.data() + size_t(r) * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> flat() const { return {data_.data(), data_.size()}; }

  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool operator==(const Mat& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// C = A * B, shapes (n,k) x (k,m).
Mat matmul(const Mat& a, const Mat& b);
// C = A * B^T, shapes (n,k) x (m,k) -> (n,m).
Mat matmul_nt(const Mat& a, const Mat& b);
// C = (1-w) * A + w * B, elementwise; shapes must match.
Mat blend(const Mat& a, const Mat& b, double w);

// Deterministic PRNG. mt19937_64 gives a standard-defined bit stream, and the
// Gaussian transform is an explicit Box-Muller so sequences do not depend on
// the C++ library's distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64 finalizer; used to derive independent seeds from (seed, tag).
uint64_t mix_seed(uint64_t seed, uint64_t tag);

// FNV-1a over a string, for hashing canonical descriptors into seeds.
uint64_t fnv1a(const std::string& s);

Mat gaussian_mat(uint64_t seed, int rows, int cols, double scale = 1.0);

}  // namespace voxmorph
