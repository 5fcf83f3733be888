#ifndef ASMSHAPE_SAMPLER_HPP
#define ASMSHAPE_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "asmshape/arctic.hpp"
#include "asmshape/asm_matrix.hpp"
#include "asmshape/rational.hpp"
#include "asmshape/sixvertex.hpp"

namespace asmshape {

// xoshiro256** seeded through splitmix64; byte-for-byte reproducible across
// platforms, which is part of the output contract.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed);
  uint64_t next();
  double uniform();            // [0, 1)
  uint32_t below(uint32_t n);  // unbiased [0, n)

 private:
  uint64_t s_[4];
};

// Height function on the (N+1) x (N+1) dual grid with DWBC boundary values,
// kept alongside the ASM entry field it determines:
//   height(i, j) = i + j - 2 * corner_sum(i, j).
// Adjacent heights differ by exactly 1; an interior height is flippable when
// its four neighbours agree.
struct HeightState {
  int n = 0;
  std::vector<int> height;        // (n+1)^2, row-major
  std::vector<signed char> a;     // n^2 ASM entries
  int minus_k = 0;                // number of -1 entries, kept incrementally

  static HeightState from_asm(const Asm& m);
  static HeightState initial(int n);  // identity-matrix ASM

  int h(int i, int j) const { return height[size_t(i) * (n + 1) + j]; }
  int& h(int i, int j) { return height[size_t(i) * (n + 1) + j]; }

  Asm to_asm() const;
  SixVertexConfig to_sixvertex() const;
};

struct ChainConfig {
  int n = 0;
  Rational q = 1;
  uint64_t seed = 0;
  long sweeps_burnin = 0;
  long sweeps_between = 1;
  long n_samples = 0;
  int max_n = 512;  // refuse larger lattices without an explicit override
};

// One Metropolis proposal: picks a uniform interior site, flips the height by
// +-2 if the four neighbours agree, accepts with min(1, q^dk) where dk is the
// change in the number of -1 entries. Inadmissible proposal = identity step.
// Returns whether the state changed.
bool step_inplace(HeightState& state, double q, Xoshiro256& rng);
HeightState step(const HeightState& state, const Rational& q, Xoshiro256& rng);

// (n-1)^2 proposals.
void sweep(HeightState& state, double q, Xoshiro256& rng);

struct DensityField {
  int n = 0;
  long samples = 0;
  std::vector<double> plus_mean;   // n^2, mean indicator of +1 entries
  std::vector<double> minus_mean;  // n^2
  std::vector<double> c_mean;      // n^2, plus + minus
};

DensityField sample_density(const ChainConfig& cfg);

// Per row of the top-left quarter, the x where the -1 density first crosses
// the threshold (linear interpolation); rows without a crossing are skipped
// and counted.
std::vector<ScaledCoords> empirical_boundary(const DensityField& field,
                                             double threshold = 0.05,
                                             int* skipped = nullptr);

// Monte Carlo estimate of the EFP arrow event, F_N^(r,s).
double efp_estimate(const ChainConfig& cfg, int r, int s);

// Full profile in r at fixed s from a single chain.
std::vector<double> efp_profile_estimate(const ChainConfig& cfg, int s);

// Exact single-proposal transition matrix over all ASMs of size n, in the
// ordering of all_asms(n); rational entries, for stationarity tests.
std::vector<std::vector<Rational>> transition_matrix(int n, const Rational& q);

struct FrequencyTestResult {
  double chi2 = 0;
  double p_value = 0;
  int dof = 0;
  long samples = 0;
};

// Runs the chain at small n, tallies visited states every sample_every
// sweeps, and chi-square-tests the tally against the exact q^k/Z law.
FrequencyTestResult frequency_test(int n, const Rational& q, uint64_t seed,
                                   long sweeps, long sample_every);

}  // namespace asmshape

#endif
