#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

namespace chaosfoundry {

// Leaky hyperbolic-tangent reservoir:
//   R(n+1) = (1 - leak) R(n) + leak * tanh(A R(n) + W_in s(n) + 1)
// The +1 is a scalar bias added to every component of the tanh argument.
struct ReservoirConfig {
  int nodes = 50;               // M
  double leak = 0.45;           // alpha in (0, 1]
  double spectral_radius = 1.0;  // sigma >= 0, largest |eigenvalue| of A after rescaling
  double density = 0.2;         // expected fill fraction of A
  double input_scale = 1.0;     // multiplier on W_in
  double ridge = 1e-6;          // readout regression regularizer
  int washout = 500;            // initial steps discarded from state matrices
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Immutable after construction; shareable across threads.
struct ReservoirNet {
  Eigen::MatrixXd adjacency;      // M x M, spectral radius == config.spectral_radius
  Eigen::VectorXd input_weights;  // M
  ReservoirConfig config;
};

// Time-by-node matrix of reservoir outputs. Row t holds the state after
// consuming input sample washout+t; index convention is n=1 at the first
// post-washout sample. An appended all-ones column (for fitting a constant
// offset) is marked by has_bias.
struct StateMatrix {
  Eigen::MatrixXd values;  // rows: time, cols: nodes (+1 if has_bias)
  bool has_bias = false;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index node_count() const { return has_bias ? values.cols() - 1 : values.cols(); }
};

struct ReadoutWeights {
  Eigen::VectorXd weights;    // length M, or M+1 when fit against a bias column
  double train_nrmse = 0.0;   // std(residual) / std(target), population convention
};

// Largest |eigenvalue|, exact dense solve.
double spectral_radius(const Eigen::MatrixXd& m);

// Erdos-Renyi mask at config.density, nonzeros iid uniform[-1,1], rescaled so
// the spectral radius equals config.spectral_radius (sigma=0 gives A=0).
// W_in iid uniform[-1,1] times input_scale. Deterministic in config.seed.
// An all-zero adjacency draw with sigma>0 is regenerated from the next seed
// substream; throws after 10 attempts.
ReservoirNet build_reservoir(const ReservoirConfig& config);

// Drive from R(0)=0 and return rows for n = washout+1 .. N (no bias column).
// Input is expected normalized (mean ~0, std ~1) and longer than the washout.
StateMatrix drive_reservoir(const ReservoirNet& net, std::span<const double> input);

// Low-level drive: starts from `state`, leaves the final state in `state`,
// returns one row per input sample (no washout, no bias column). This is the
// streaming core; drive_reservoir wraps it.
Eigen::MatrixXd drive_reservoir_states(const ReservoirNet& net, std::span<const double> input,
                                       Eigen::VectorXd& state);

StateMatrix with_bias_column(const StateMatrix& states);

// W = argmin ||g - states*W||^2 + ridge*||W||^2, solved through the SVD of
// the state matrix. ridge=0 with rank-deficient states throws and advises a
// positive ridge.
ReadoutWeights ridge_fit(const StateMatrix& states, std::span<const double> target, double ridge);

std::vector<double> predict_readout(const StateMatrix& states, const ReadoutWeights& weights);

}  // namespace chaosfoundry
