#include "frobsplit/density.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "frobsplit/errors.hpp"
#include "frobsplit/finfield.hpp"
#include "random.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

std::string_view squeeze_name(Squeeze s) { return s == Squeeze::kDerived ? "der" : "full"; }

Level squeeze_level(Squeeze s) {
  return s == Squeeze::kDerived ? Level::kDerived : Level::kSimilitude;
}

namespace {

mpz_class to_mpz(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

}  // namespace

FractionDetail anisotropic_fraction_detail(const GroupDescriptor& desc, u64 m, Squeeze squeeze,
                                           bool cross_check) {
  const GroupDescriptor h = desc.at_level(squeeze_level(squeeze));
  FractionDetail out{h, m, group_order(h), 0, 0, torus_census(h, m), false};
  const TorusCensus& c = out.census;
  out.j_count = out.group_order / to_mpz(c.normalizer_order) * to_mpz(c.regular_count_m);
  if (out.j_count * to_mpz(c.normalizer_order) != out.group_order * to_mpz(c.regular_count_m)) {
    throw std::logic_error("normalizer order does not divide the group order");
  }
  out.i_fraction = 1 - mpq_class(out.j_count, out.group_order);
  out.i_fraction.canonicalize();
  if (cross_check && out.group_order <= to_mpz(kGroupBudget)) {
    const ClassCount cc = classify_group(h, m);
    if (to_mpz(cc.j_count) != out.j_count) {
      throw std::logic_error("count identity gives " + out.j_count.get_str() +
                             " elements of J in " + h.name() + ", enumeration " +
                             std::to_string(cc.j_count));
    }
    out.cross_checked = true;
  }
  return out;
}

mpq_class anisotropic_fraction(const GroupDescriptor& desc, u64 m, Squeeze squeeze) {
  return anisotropic_fraction_detail(desc, m, squeeze).i_fraction;
}

GaloisModel make_model(Family family, int r, const std::vector<u64>& primes, Squeeze squeeze,
                       u64 m, bool residue_degree_one) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "m must be >= 1");
  std::set<u64> seen;
  GaloisModel model{{}, m, residue_degree_one};
  for (u64 ell : primes) {
    if (!seen.insert(ell).second) {
      fail(ErrorCode::kInvalidArgument, "prime " + std::to_string(ell) + " repeated");
    }
    model.factors.push_back({make_descriptor(family, r, ell, squeeze_level(squeeze)), squeeze});
  }
  return model;
}

DensityReport density_product(const GaloisModel& model) {
  if (model.m < 1) fail(ErrorCode::kInvalidArgument, "m must be >= 1");
  DensityReport rep;
  for (const auto& f : model.factors) {
    const mpq_class frac = anisotropic_fraction(f.desc, model.m, f.squeeze);
    rep.per_prime.push_back({f.desc.ell, frac});
    rep.product *= frac;
    if (frac > rep.constant) rep.constant = frac;
  }
  for (std::size_t i = 0; i < model.factors.size(); ++i) rep.bound *= rep.constant;
  rep.complement = 1 - rep.product;
  if (model.residue_degree_one) {
    rep.residue_adjusted = rep.complement / mpq_class(to_mpz(model.m));
    rep.residue_adjusted->canonicalize();
  }
  return rep;
}

namespace {

void check_cm_args(int two_g, u64 ell) {
  if (two_g < 2 || two_g % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "degree must be even and >= 2, got " + std::to_string(two_g));
  }
  if (!is_prime(ell)) fail(ErrorCode::kCompositeModulus, std::to_string(ell) + " is not prime");
}

mpz_class pow_z(u64 base, u64 e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), to_mpz(base).get_mpz_t(), e);
  return out;
}

}  // namespace

mpq_class cm_subfield_fraction(int two_g, u64 ell) {
  check_cm_args(two_g, ell);
  const auto ps = prime_divisors(static_cast<u64>(two_g));
  mpz_class count = 0;
  for (u64 mask = 1; mask < (u64{1} << ps.size()); ++mask) {
    u64 div = 1;
    int bits = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (mask >> i & 1) {
        div *= ps[i];
        ++bits;
      }
    }
    const mpz_class units = pow_z(ell, two_g / div) - 1;
    count += bits % 2 == 1 ? units : mpz_class(-units);
  }
  mpq_class out(count, pow_z(ell, two_g) - 1);
  out.canonicalize();
  return out;
}

mpq_class cm_subfield_fraction_exhaustive(int two_g, u64 ell) {
  check_cm_args(two_g, ell);
  if (pow_z(ell, two_g) > to_mpz(kGroupBudget)) {
    fail(ErrorCode::kBudgetExceeded, "F_" + std::to_string(ell) + "^" + std::to_string(two_g) +
                                         " is larger than 10^6");
  }
  const ExtField& F = make_field(ell, two_g);
  u64 count = 0;
  for (u64 v = 1; v < F.size(); ++v) {
    if (subfield_degree(F.element(v)) < two_g) ++count;
  }
  mpq_class out(to_mpz(count), to_mpz(F.size() - 1));
  out.canonicalize();
  return out;
}

mpq_class cm_density_product(int two_g, const std::vector<u64>& primes) {
  std::set<u64> seen;
  mpq_class out = 1;
  for (u64 ell : primes) {
    if (!seen.insert(ell).second) {
      fail(ErrorCode::kInvalidArgument, "prime " + std::to_string(ell) + " repeated");
    }
    out *= cm_subfield_fraction(two_g, ell);
  }
  return out;
}

namespace {

struct Threshold {
  u64 num;
  u64 den;
};

}  // namespace

SimulationResult simulate_indicators(const std::vector<mpq_class>& probabilities, u64 samples,
                                     u64 seed, u64 streams) {
  if (samples == 0) fail(ErrorCode::kInvalidArgument, "samples must be >= 1");
  if (streams == 0 || streams > kMaxStreams) {
    fail(ErrorCode::kInvalidArgument, "streams must be in [1, " + std::to_string(kMaxStreams) + "]");
  }
  std::vector<Threshold> th;
  mpq_class expected = 1;
  for (mpq_class p : probabilities) {
    p.canonicalize();
    if (p < 0 || p > 1) fail(ErrorCode::kInvalidArgument, "probability outside [0, 1]");
    if (!p.get_den().fits_ulong_p()) fail(ErrorCode::kOverflow, "denominator exceeds 64 bits");
    th.push_back({p.get_num().get_ui(), p.get_den().get_ui()});
    expected *= p;
  }

  SimulationResult res;
  res.samples = samples;
  res.seed = seed;
  res.streams = streams;
  res.expected = expected;
  res.stream_hits.assign(streams, 0);
  auto run = [&](u64 s) {
    const u64 n = samples / streams + (s < samples % streams ? 1 : 0);
    std::mt19937_64 rng(detail::splitmix64(seed + s));
    u64 hits = 0;
    for (u64 i = 0; i < n; ++i) {
      bool all = true;
      for (const Threshold& t : th) all &= detail::bounded(rng, t.den) < t.num;
      hits += all;
    }
    res.stream_hits[s] = hits;
  };
  if (streams == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (u64 s = 0; s < streams; ++s) pool.emplace_back(run, s);
    for (auto& t : pool) t.join();
  }
  for (u64 h : res.stream_hits) res.hits += h;

  const double n = static_cast<double>(samples);
  const double p = expected.get_d();
  res.empirical = static_cast<double>(res.hits) / n;
  const double var = n * p * (1 - p);
  const double dev = static_cast<double>(res.hits) - n * p;
  if (var > 0) {
    res.z_score = dev / std::sqrt(var);
  } else {
    res.z_score = dev == 0 ? 0 : std::numeric_limits<double>::infinity();
  }
  return res;
}

SimulationResult chebotarev_simulate(const GaloisModel& model, u64 samples, u64 seed,
                                     u64 streams) {
  if (samples == 0) fail(ErrorCode::kInvalidArgument, "samples must be >= 1");
  std::vector<mpq_class> probs;
  for (const auto& pf : density_product(model).per_prime) probs.push_back(pf.fraction);
  return simulate_indicators(probs, samples, seed, streams);
}

}  // namespace frobsplit
