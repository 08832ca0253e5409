#ifndef LIEMETRIC_SAMPLING_HPP
#define LIEMETRIC_SAMPLING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace liemetric {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Seeded source for the randomized checks; same seed, same stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// Components uniform in [lo, hi].
  Eigen::VectorXd vector(Eigen::Index n, double lo = -1.0, double hi = 1.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  /// Vector in [-1, 1]^n with infinity norm at least `min_norm`.
  Eigen::VectorXd nonzero_vector(Eigen::Index n, double min_norm = 1e-3) {
    for (;;) {
      Eigen::VectorXd v = vector(n);
      if (v.cwiseAbs().maxCoeff() >= min_norm) return v;
    }
  }

  Eigen::MatrixXd symmetric(Eigen::Index n) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(-1.0, 1.0);
    }
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace liemetric

#endif  // LIEMETRIC_SAMPLING_HPP
