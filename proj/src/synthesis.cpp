#include "chaosfoundry/synthesis.hpp"

#include <stdexcept>
#include <string>

#include "chaosfoundry/rng.hpp"
#include "chaosfoundry/stats.hpp"

namespace chaosfoundry {

ProjectionMatrix make_projection(int nodes, int n_signals, std::uint64_t seed) {
  if (n_signals < 1 || n_signals > nodes)
    throw std::invalid_argument("make_projection: need 1 <= n_signals <= nodes, got n_signals=" +
                                std::to_string(n_signals) + ", nodes=" + std::to_string(nodes));
  auto rng = make_engine(derive_seed(seed, 0));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  constexpr double kDependentTol = 1e-12;
  constexpr int kMaxRedraws = 10;

  ProjectionMatrix out;
  out.seed = seed;
  out.psi.resize(nodes, n_signals);
  for (int j = 0; j < n_signals; ++j) {
    int redraws = 0;
    while (true) {
      Eigen::VectorXd col(nodes);
      for (int i = 0; i < nodes; ++i) col(i) = unit(rng);
      // modified Gram-Schmidt against the columns already accepted
      for (int k = 0; k < j; ++k) col -= out.psi.col(k).dot(col) * out.psi.col(k);
      const double norm = col.norm();
      if (norm >= kDependentTol) {
        out.psi.col(j) = col / norm;
        break;
      }
      if (++redraws >= kMaxRedraws)
        throw std::runtime_error("make_projection: column " + std::to_string(j + 1) +
                                 " stayed numerically dependent after 10 redraws");
    }
  }
  return out;
}

SignalBank synthesize_bank(const StateMatrix& states, const ProjectionMatrix& projection,
                           bool normalize) {
  if (states.has_bias)
    throw std::invalid_argument("synthesize_bank: states must not carry a bias column");
  if (states.values.cols() != projection.psi.rows())
    throw std::invalid_argument("synthesize_bank: state node count " +
                                std::to_string(states.values.cols()) +
                                " != projection rows " + std::to_string(projection.psi.rows()));
  SignalBank bank;
  bank.theta = states.values * projection.psi;
  bank.normalized = false;
  if (normalize) {
    const Eigen::Index n = bank.theta.rows();
    for (Eigen::Index j = 0; j < bank.theta.cols(); ++j) {
      std::span<const double> col(bank.theta.col(j).data(), static_cast<std::size_t>(n));
      const double m = mean(col);
      const double sd = population_std(col);
      if (sd == 0.0)
        throw std::runtime_error("synthesize_bank: synthesized signal " + std::to_string(j + 1) +
                                 " has zero variance (degenerate reservoir or projection)");
      bank.theta.col(j) = (bank.theta.col(j).array() - m) / sd;
    }
    bank.normalized = true;
  }
  return bank;
}

}  // namespace chaosfoundry
