#pragma once

#include <span>
#include <vector>

namespace effindex::kernels {

// Execution policy for the data-parallel inner loops. Parallel results are
// identical to Serial ones for any thread count: every loop writes disjoint
// slots and reductions are performed serially afterwards.
enum class Exec { Serial, Parallel };

enum class IncrementSampling { Dense, Coarse };

// Mean squared residual of per-box polynomial fits (order 1 or 2) on the
// path, averaged over 2*floor(T/s) boxes taken from the front and the back,
// one value per scale. Values below the numerical zero floor are clamped
// to exactly 0 so that degenerate (perfectly detrendable) paths surface as
// zero fluctuation instead of roundoff dust.
std::vector<double> dfa_fluctuations(std::span<const double> path,
                                     std::span<const int> scales, int order,
                                     Exec exec);

// Mean squared deviation between the path and its centered moving average
// over the (window-1)/2-trimmed interior, one value per window.
std::vector<double> dma_fluctuations(std::span<const double> path,
                                     std::span<const int> windows, Exec exec);

// Height correlation K2(tau) = mean |Y_{t+tau} - Y_t|^2 for tau = 1..tau_max.
// Dense sampling steps t by 1 (overlapping increments); Coarse steps t by
// tau (disjoint increments).
std::vector<double> hhca_k2(std::span<const double> path, int tau_max,
                            IncrementSampling sampling, Exec exec);

// Periodogram ordinates I(omega_j) = |DFT_j|^2 / T at the Fourier
// frequencies omega_j = 2*pi*j/T for j = 1..num_freqs.
std::vector<double> periodogram(std::span<const double> values, int num_freqs,
                                Exec exec);

}  // namespace effindex::kernels

namespace effindex::ref {

// Plain scalar reference implementations of the kernels above, kept for
// testing and for the kernel benchmark. The periodogram reference evaluates
// the trig terms directly instead of by rotation recurrence, and the DFA
// reference solves each box fit by Gaussian elimination, so they exercise
// independent arithmetic paths.
std::vector<double> dfa_fluctuations(std::span<const double> path,
                                     std::span<const int> scales, int order);
std::vector<double> dma_fluctuations(std::span<const double> path,
                                     std::span<const int> windows);
std::vector<double> hhca_k2(std::span<const double> path, int tau_max,
                            kernels::IncrementSampling sampling);
std::vector<double> periodogram(std::span<const double> values, int num_freqs);

}  // namespace effindex::ref
