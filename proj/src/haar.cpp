#include "wordmeasure/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

namespace wm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed-shape pairwise sum over [lo, hi).
double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(seed)), static_cast<std::uint32_t>(splitmix64(seed) >> 32),
                    static_cast<std::uint32_t>(splitmix64(index ^ 0x5851f42d4c957f2dULL)),
                    static_cast<std::uint32_t>(splitmix64(index ^ 0x5851f42d4c957f2dULL) >> 32)};
  return std::mt19937_64(seq);
}

ComplexMatrix sample_unitary(int n, std::mt19937_64& stream) {
  if (n < 1) throw std::invalid_argument("sample_unitary: n must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = normal(stream);
      const double im = normal(stream);
      z(i, j) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

nlohmann::json MCEstimate::to_json() const {
  return {{"mean", mean}, {"stderr", stderr_}, {"imag_residual", imag_residual},
          {"samples", samples}, {"n", n}, {"seed", seed}};
}

MCEstimate estimate(const WordTuple& t, int n, std::uint64_t samples, std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("estimate: n must be positive");
  if (samples < 2) throw std::invalid_argument("estimate: at least two samples are required");
  std::map<int, size_t> slot;
  for (const auto& w : t.words)
    for (const auto& l : w.letters()) slot.emplace(l.generator, 0);
  size_t r = 0;
  for (auto& [g, s] : slot) s = r++;
  const double trivial_factor = std::pow(static_cast<double>(n), t.trivial);

  std::vector<double> re(samples);
  std::vector<double> im(samples);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<ComplexMatrix> a(r);
    std::vector<ComplexMatrix> a_inv(r);
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto stream = substream(seed, i);
      for (size_t k = 0; k < r; ++k) {
        a[k] = sample_unitary(n, stream);
        a_inv[k] = a[k].adjoint();
      }
      std::complex<double> value = trivial_factor;
      for (const auto& w : t.words) {
        ComplexMatrix m = ComplexMatrix::Identity(n, n);
        for (const auto& l : w.letters()) {
          const size_t k = slot.at(l.generator);
          m = m * (l.sign > 0 ? a[k] : a_inv[k]);
        }
        value *= m.trace();
      }
      re[i] = value.real();
      im[i] = value.imag();
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(samples, 1024))));
  if (workers == 1) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (samples + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(samples, chunk * static_cast<std::uint64_t>(w));
      const std::uint64_t hi = std::min(samples, lo + chunk);
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  MCEstimate e;
  e.samples = samples;
  e.n = n;
  e.seed = seed;
  const double count = static_cast<double>(samples);
  e.mean = pairwise_sum(re, 0, samples) / count;
  e.imag_residual = std::abs(pairwise_sum(im, 0, samples) / count);
  std::vector<double> dev(samples);
  for (size_t i = 0; i < samples; ++i) dev[i] = (re[i] - e.mean) * (re[i] - e.mean);
  const double var = pairwise_sum(dev, 0, samples) / (count - 1);
  e.stderr_ = std::sqrt(var / count);
  return e;
}

double compare(const MCEstimate& e, const RationalFunction& exact) {
  const double target = exact.evaluate(Rational(e.n)).get_d();
  const double diff = e.mean - target;
  if (e.stderr_ == 0) return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  return diff / e.stderr_;
}

}  // namespace wm
