#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/groups.hpp"
#include "frobsplit/torus.hpp"

namespace frobsplit {

// Which end of  G^der(Z/ell) <= H_ell <= G(Z/ell)  the image is taken to be.
enum class Squeeze { kDerived, kFull };

std::string_view squeeze_name(Squeeze s);
Level squeeze_level(Squeeze s);

struct FractionDetail {
  GroupDescriptor desc;  // at the squeezed level
  std::uint64_t m = 1;
  mpz_class group_order;
  mpz_class j_count;     // (|H| / |N|) * |T*_m|
  mpq_class i_fraction;  // 1 - |J| / |H|
  TorusCensus census;
  bool cross_checked = false;
};

// |I_{ell,m}(H)| / |H| through the count identity.  With `cross_check` and
// |H| <= kGroupBudget, the exhaustive count is compared too and a mismatch
// throws std::logic_error.
FractionDetail anisotropic_fraction_detail(const GroupDescriptor& desc, std::uint64_t m,
                                           Squeeze squeeze, bool cross_check = false);

mpq_class anisotropic_fraction(const GroupDescriptor& desc, std::uint64_t m, Squeeze squeeze);

struct ModelFactor {
  GroupDescriptor desc;
  Squeeze squeeze = Squeeze::kFull;
};

struct GaloisModel {
  std::vector<ModelFactor> factors;  // one per prime, primes distinct
  std::uint64_t m = 1;
  // Report complement / m as well (residue-degree-one convention).
  bool residue_degree_one = false;
};

// Throws kInvalidArgument for repeated primes or m < 1.
GaloisModel make_model(Family family, int r, const std::vector<std::uint64_t>& primes,
                       Squeeze squeeze, std::uint64_t m = 1, bool residue_degree_one = false);

struct PrimeFraction {
  std::uint64_t ell = 0;
  mpq_class fraction;
};

struct DensityReport {
  std::vector<PrimeFraction> per_prime;
  mpq_class product = 1;     // density of I(X/K; G; A)
  mpq_class constant = 0;    // C = max per-prime fraction
  mpq_class bound = 1;       // C^|A|
  mpq_class complement = 0;  // lower bound for the density of J(X/K; G; A)
  std::optional<mpq_class> residue_adjusted;  // complement / m
};

DensityReport density_product(const GaloisModel& model);

// Share of F_{ell^two_g}^x lying in a proper subfield, by inclusion-exclusion
// over the maximal proper subfields.  Throws kInvalidArgument unless two_g is
// even and >= 2, kCompositeModulus for composite ell.
mpq_class cm_subfield_fraction(int two_g, std::uint64_t ell);

// Same count by running subfield_degree over every unit.  Throws
// kBudgetExceeded above 10^6 elements.
mpq_class cm_subfield_fraction_exhaustive(int two_g, std::uint64_t ell);

// Product of cm_subfield_fraction over distinct primes.
mpq_class cm_density_product(int two_g, const std::vector<std::uint64_t>& primes);

struct SimulationResult {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;  // samples landing in I_ell for every ell
  double empirical = 0;
  mpq_class expected;
  double z_score = 0;
  std::uint64_t seed = 0;
  std::uint64_t streams = 1;
  std::vector<std::uint64_t> stream_hits;

  bool operator==(const SimulationResult&) const = default;
};

inline constexpr std::uint64_t kMaxStreams = 256;

// Independent Bernoulli indicators per prime with the exact I-fractions.
// Stream s draws from mt19937_64 seeded with splitmix64(seed + s) and covers a
// contiguous block of samples, so results depend only on (seed, samples,
// streams).  Streams run on their own threads.  Throws kInvalidArgument for
// samples == 0 or streams outside [1, kMaxStreams].
SimulationResult chebotarev_simulate(const GaloisModel& model, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t streams = 1);

// Same, from precomputed per-prime probabilities.
SimulationResult simulate_indicators(const std::vector<mpq_class>& probabilities,
                                     std::uint64_t samples, std::uint64_t seed,
                                     std::uint64_t streams = 1);

}  // namespace frobsplit
