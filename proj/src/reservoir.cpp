#include "chaosfoundry/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chaosfoundry/rng.hpp"
#include "chaosfoundry/stats.hpp"

namespace chaosfoundry {

void ReservoirConfig::validate() const {
  if (nodes < 1) throw std::invalid_argument("reservoir: nodes must be >= 1");
  if (!(leak > 0.0 && leak <= 1.0)) throw std::invalid_argument("reservoir: leak must be in (0, 1]");
  if (spectral_radius < 0.0) throw std::invalid_argument("reservoir: spectral_radius must be >= 0");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("reservoir: density must be in (0, 1]");
  if (ridge < 0.0) throw std::invalid_argument("reservoir: ridge must be >= 0");
  if (washout < 0) throw std::invalid_argument("reservoir: washout must be >= 0");
}

double spectral_radius(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectral_radius: matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

Eigen::MatrixXd draw_adjacency(int nodes, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mask(0.0, 1.0);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      if (mask(rng) < density) a(i, j) = weight(rng);
  return a;
}

}  // namespace

ReservoirNet build_reservoir(const ReservoirConfig& config) {
  config.validate();
  ReservoirNet net;
  net.config = config;

  auto rng = make_engine(derive_seed(config.seed, 0));
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  net.input_weights.resize(config.nodes);
  for (int i = 0; i < config.nodes; ++i) net.input_weights(i) = config.input_scale * weight(rng);

  constexpr int kMaxAttempts = 10;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto arng = make_engine(derive_seed(config.seed, 1 + attempt));
    Eigen::MatrixXd a = draw_adjacency(config.nodes, config.density, arng);
    if (config.spectral_radius == 0.0) {
      net.adjacency = Eigen::MatrixXd::Zero(config.nodes, config.nodes);
      return net;
    }
    const double rho = spectral_radius(a);
    if (rho > 0.0) {
      net.adjacency = a * (config.spectral_radius / rho);
      return net;
    }
  }
  throw std::runtime_error(
      "build_reservoir: adjacency draw had zero spectral radius 10 times in a row "
      "(nodes=" + std::to_string(config.nodes) + ", density=" + std::to_string(config.density) + ")");
}

Eigen::MatrixXd drive_reservoir_states(const ReservoirNet& net, std::span<const double> input,
                                       Eigen::VectorXd& state) {
  const int m = net.config.nodes;
  if (state.size() != m) throw std::invalid_argument("drive: state size does not match node count");
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(input.size()), m);
  Eigen::VectorXd pre(m);
  const double leak = net.config.leak;
  for (std::size_t n = 0; n < input.size(); ++n) {
    pre.noalias() = net.adjacency * state;
    pre.noalias() += net.input_weights * input[n];
    pre.array() += 1.0;
    state = (1.0 - leak) * state + leak * pre.array().tanh().matrix();
    if (!state.allFinite())
      throw std::runtime_error("drive: non-finite reservoir state at input sample " +
                               std::to_string(n + 1));
    rows.row(static_cast<Eigen::Index>(n)) = state;
  }
  return rows;
}

StateMatrix drive_reservoir(const ReservoirNet& net, std::span<const double> input) {
  const int washout = net.config.washout;
  if (input.size() <= static_cast<std::size_t>(washout))
    throw std::invalid_argument("drive: input length " + std::to_string(input.size()) +
                                " does not exceed washout " + std::to_string(washout));
  Eigen::VectorXd state = Eigen::VectorXd::Zero(net.config.nodes);
  Eigen::MatrixXd all = drive_reservoir_states(net, input, state);
  StateMatrix out;
  out.values = all.bottomRows(all.rows() - washout);
  out.has_bias = false;
  return out;
}

StateMatrix with_bias_column(const StateMatrix& states) {
  if (states.has_bias) return states;
  StateMatrix out;
  out.values.resize(states.values.rows(), states.values.cols() + 1);
  out.values.leftCols(states.values.cols()) = states.values;
  out.values.rightCols<1>().setOnes();
  out.has_bias = true;
  return out;
}

ReadoutWeights ridge_fit(const StateMatrix& states, std::span<const double> target, double ridge) {
  if (ridge < 0.0) throw std::invalid_argument("ridge_fit: ridge must be >= 0");
  const Eigen::Index rows = states.values.rows();
  const Eigen::Index cols = states.values.cols();
  if (static_cast<std::size_t>(rows) != target.size())
    throw std::invalid_argument("ridge_fit: state rows (" + std::to_string(rows) +
                                ") != target length (" + std::to_string(target.size()) + ")");
  Eigen::Map<const Eigen::VectorXd> g(target.data(), rows);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(states.values, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double rank_tol = smax * static_cast<double>(std::max(rows, cols)) *
                          std::numeric_limits<double>::epsilon();
  if (ridge == 0.0 && (smax == 0.0 || sv(sv.size() - 1) <= rank_tol))
    throw std::runtime_error(
        "ridge_fit: state matrix is rank deficient and ridge=0 makes the problem "
        "ill-conditioned; use ridge > 0");

  // W = V diag(s / (s^2 + ridge)) U^T g
  Eigen::VectorXd utg = svd.matrixU().transpose() * g;
  Eigen::VectorXd shrink(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    shrink(i) = sv(i) / (sv(i) * sv(i) + ridge) * utg(i);

  ReadoutWeights out;
  out.weights = svd.matrixV() * shrink;
  if (!out.weights.allFinite()) throw std::runtime_error("ridge_fit: non-finite weights");

  Eigen::VectorXd residual = g - states.values * out.weights;
  const double g_std = population_std(std::span<const double>(g.data(), g.size()));
  if (g_std == 0.0) throw std::runtime_error("ridge_fit: constant target (zero std)");
  out.train_nrmse =
      population_std(std::span<const double>(residual.data(), residual.size())) / g_std;
  return out;
}

std::vector<double> predict_readout(const StateMatrix& states, const ReadoutWeights& weights) {
  if (states.values.cols() != weights.weights.size())
    throw std::invalid_argument(
        "predict_readout: weight length " + std::to_string(weights.weights.size()) +
        " does not match state columns " + std::to_string(states.values.cols()) +
        " (bias column presence must agree)");
  Eigen::VectorXd h = states.values * weights.weights;
  return std::vector<double>(h.data(), h.data() + h.size());
}

}  // namespace chaosfoundry
