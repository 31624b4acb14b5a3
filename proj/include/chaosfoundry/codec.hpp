#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chaosfoundry/reservoir.hpp"
#include "chaosfoundry/synthesis.hpp"

namespace chaosfoundry {

// Symbols are integers in 1..n_signals.
using SymbolStream = std::vector<int>;

struct FrameConfig {
  int interval_len = 100;  // N_I, samples per symbol
  int breakpoint = 25;     // N_b, transition length; 1 <= N_b <= N_I
  int n_signals = 4;       // N_s

  // breakpoint = interval_len / 4 (the operating convention).
  static FrameConfig make(int interval_len, int n_signals);
  void validate() const;
};

// Per-signal one-step-ahead readouts (each length M+1, bias included) plus
// the receiver reservoir and the projection both ends share.
struct SymbolModels {
  std::vector<ReadoutWeights> readouts;
  ReservoirNet net;
  ProjectionMatrix projection;

  int signal_count() const { return static_cast<int>(readouts.size()); }
};

enum class DecodeMode { sync, async };

enum class ResidualMetric { squared, absolute };

struct DecodeResult {
  SymbolStream detected;
  Eigen::MatrixXd per_interval_residuals;  // N_d x N_s
  double p_e = -1.0;  // set when ground truth is supplied, else -1
  double ber = -1.0;
};

struct DecodeOptions {
  const SymbolStream* truth = nullptr;  // enables p_e / ber
  // Receiver reservoir state carried across chunked decodes (in/out). The
  // receiver is one continuous drive; splitting a stream is only equivalent
  // to decoding it whole when this state is threaded through.
  Eigen::VectorXd* receiver_state = nullptr;
  // Bank sample index (0-based) of received[0], for chunked decodes whose
  // sync targets live in one global bank.
  std::size_t sample_offset = 0;
  // Rescale the received signal to mean 0 / std 1 before driving (the
  // training signals were normalized the same way). Explicit stats make
  // chunked decodes match the whole-stream decode.
  bool renormalize_input = true;
  std::optional<double> norm_mean;
  std::optional<double> norm_std;
  bool exclude_transition = false;  // drop each interval's first N_b samples from residual sums
  ResidualMetric metric = ResidualMetric::squared;
};

// Transition weight for 1-based sample offset n within an interval:
// n / N_b while n <= N_b, then 1.
double transition_weight(int n, const FrameConfig& frame);

// Chaos-shift-keyed stream: slot k emits
//   W * theta_{I(k)} + (1 - W) * theta_{I(k-1)}
// with I(0) := I(1) and the bank time index running continuously across
// slots. Requires bank length >= (N_d + 1) * N_I.
std::vector<double> encode_stream(const SignalBank& bank, const SymbolStream& stream,
                                  const FrameConfig& frame);

// Adds iid N(0, noise_std^2); noise_std = 0 returns the input bit-exactly.
std::vector<double> apply_awgn(std::span<const double> signal, double noise_std,
                               std::uint64_t seed);

// For each bank signal: drive the receiver reservoir, append the bias column,
// and ridge-fit the one-step-ahead target theta_j(n+1). The bank must be
// normalized (the receivers assume unit-std prediction targets).
SymbolModels train_symbol_models(const SignalBank& bank, const ReservoirNet& rxnet, double ridge,
                                 const ProjectionMatrix* projection = nullptr);

// Drive the receiver once with the received stream and, per interval k and
// candidate j, accumulate the prediction residual against
//   sync:  sync_targets theta_j(n+1)  (clean-drive regeneration)
//   async: the received stream itself one step ahead
// then detect argmin_j. Sync mode requires sync_targets with at least
// sample_offset + length + 1 rows; the received length must be a multiple of
// the interval length.
DecodeResult decode_stream(std::span<const double> received, const SymbolModels& models,
                           const FrameConfig& frame, DecodeMode mode,
                           const SignalBank* sync_targets = nullptr,
                           const DecodeOptions& options = {});

// (symbol error fraction, bit error rate = p_e / log2(n_signals)).
// n_signals = 1 throws: the BER denominator log2(1) vanishes.
std::pair<double, double> error_rates(const SymbolStream& detected, const SymbolStream& truth,
                                      int n_signals);

}  // namespace chaosfoundry
