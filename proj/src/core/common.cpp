#include "common.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace voxmorph {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

void check_inner(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string("matmul: inner dimension mismatch in ") + what +
                                ": " + std::to_string(a) + " != " + std::to_string(b));
  }
}
}  // namespace

Mat matmul(const Mat& a, const Mat& b) {
  check_inner(a.cols(), b.rows(), "A*B");
  Mat c(a.rows(), b.cols());
  const int n = a.rows(), k = a.cols(), m = b.cols();
#pragma omp parallel for schedule(static) if (size_t(n) * k * m > 65536)
  for (int i = 0; i < n; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (int p = 0; p < k; ++p) {
      const double aip = ai[p];
      const double* bp = b.row(p);
      for (int j = 0; j < m; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
  check_inner(a.cols(), b.cols(), "A*B^T");
  Mat c(a.rows(), b.rows());
  const int n = a.rows(), k = a.cols(), m = b.rows();
#pragma omp parallel for schedule(static) if (size_t(n) * k * m > 65536)
  for (int i = 0; i < n; ++i) {
    const double* ai = a.row(i);
    double* ci = c.row(i);
    for (int j = 0; j < m; ++j) {
      const double* bj = b.row(j);
      double s = 0.0;
      for (int p = 0; p < k; ++p) s += ai[p] * bj[p];
      ci[j] = s;
    }
  }
  return c;
}

Mat blend(const Mat& a, const Mat& b, double w) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("blend: shape mismatch: (" + std::to_string(a.rows()) + "," +
                                std::to_string(a.cols()) + ") vs (" + std::to_string(b.rows()) +
                                "," + std::to_string(b.cols()) + ")");
  }
  Mat c(a.rows(), a.cols());
  const double u = 1.0 - w;
  for (size_t i = 0; i < a.size(); ++i) c.data()[i] = u * a.data()[i] + w * b.data()[i];
  return c;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from zero so the log is finite.
  const double u1 = (double(gen_() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = double(gen_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTau * u2);
  has_spare_ = true;
  return r * std::cos(kTau * u2);
}

uint64_t mix_seed(uint64_t seed, uint64_t tag) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Mat gaussian_mat(uint64_t seed, int rows, int cols, double scale) {
  Mat m(rows, cols);
  Rng rng(seed);
  for (size_t i = 0; i < m.size(); ++i) m.data()[i] = scale * rng.gaussian();
  return m;
}

}  // namespace voxmorph
