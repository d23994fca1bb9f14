// Monte-Carlo oracle: Haar-random unitaries and sampled trace moments.
#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <json.hpp>

#include "wordmeasure/ratfunc.hpp"
#include "wordmeasure/words.hpp"

namespace wm {

using ComplexMatrix = Eigen::MatrixXcd;

/// Gaussian matrix, QR, then columns rescaled so that diag(R) > 0.
ComplexMatrix sample_unitary(int n, std::mt19937_64& stream);

/// Independent generator for sample `index` under master `seed`.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

struct MCEstimate {
  double mean = 0;
  double stderr_ = 0;
  double imag_residual = 0;
  std::uint64_t samples = 0;
  int n = 0;
  std::uint64_t seed = 0;
  nlohmann::json to_json() const;
};

/// Sample mean of prod_i tr(w_i(A_1, ..., A_r)), A_k independent Haar. The
/// result depends only on (t, n, samples, seed), not on `threads`.
MCEstimate estimate(const WordTuple& t, int n, std::uint64_t samples, std::uint64_t seed, int threads = 1);

/// (mean - exact(n)) / stderr. Throws DivisionByZero at a pole.
double compare(const MCEstimate& e, const RationalFunction& exact);

}  // namespace wm
