#include "shl/paramgen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace shl {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational fraction(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool clears_powers(const Rational& value, const Rational& t, int lo, int hi) {
  for (int k = lo; k <= hi; ++k)
    if (value == pow_int(t, k)) return false;
  return true;
}

std::vector<Rational> all_columns(const ParamSet& params) {
  std::vector<Rational> out = params.s.prefix();
  out.push_back(params.s.tail());
  return out;
}

}  // namespace

ParamSet generate_params(std::uint64_t seed, const ParamShape& shape) {
  if (shape.n_vars < 0) throw std::invalid_argument("n_vars must be nonnegative");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  for (int attempt = 0; attempt < 60; ++attempt) {
    ParamSet params;
    params.epsilon = shape.epsilon;

    long tnum = pick(rng, 1, 8);
    params.t = fraction(tnum, pick(rng, tnum + 1, 12));

    std::vector<Rational> prefix(shape.s_prefix_len, Rational(0));
    Rational tail = 0;
    if (shape.s_mode == SMode::generic) {
      long num_lo = shape.needs_admissible ? -2 : -4;
      long num_hi = -num_lo;
      long den_lo = shape.needs_admissible ? 13 : 5;
      long den_hi = 19;
      for (int x = 0; x < shape.s_prefix_len; ++x) {
        long num = pick(rng, num_lo, num_hi);
        while (x == 0 && num == 0) num = pick(rng, num_lo, num_hi);
        prefix[x] = fraction(num, pick(rng, den_lo, den_hi));
      }
      tail = fraction(pick(rng, num_lo, num_hi), pick(rng, den_lo, den_hi));
    }
    params.s = InhomogeneitySequence(prefix, tail);

    if (shape.unit_gamma) {
      params.gamma = 1;
    } else {
      const Rational& s0 = params.s_at(0);
      bool found = false;
      for (int tries = 0; tries < 2000 && !found; ++tries) {
        long num = pick(rng, -6, 6);
        if (num == 0) continue;
        Rational candidate = fraction(num, pick(rng, 2, 6));
        if (!clears_powers(1 / candidate, params.t, 0, 40)) continue;
        if (s0 != 0) {
          Rational s0sq = s0 * s0;
          if (!clears_powers(1 / (candidate * s0sq), params.t, -24, 24)) continue;
          Rational gs2 = candidate * candidate * s0sq;
          if (!clears_powers(gs2, params.t, 0, 16)) continue;
        }
        params.gamma = candidate;
        found = true;
      }
      if (!found) continue;
    }

    std::vector<Rational> columns = all_columns(params);
    Rational shifted = params.gamma * params.s_at(0);
    long u_num = shape.needs_admissible ? 4 : 6;
    long u_den_lo = shape.needs_admissible ? 17 : 7;
    long u_den_hi = shape.needs_admissible ? 29 : 23;
    bool assembled = true;
    while ((int)params.u.size() < shape.n_vars) {
      bool placed = false;
      for (int tries = 0; tries < 4000 && !placed; ++tries) {
        long num = pick(rng, -u_num, u_num);
        if (num == 0) continue;
        Rational candidate = fraction(num, pick(rng, u_den_lo, u_den_hi));
        bool ok = true;
        for (const Rational& prev : params.u)
          if (prev == candidate) ok = false;
        for (const Rational& sx : columns)
          if (sx == candidate) ok = false;
        if (ok && Rational(shifted * candidate) == 1) ok = false;
        if (ok && shape.needs_admissible)
          for (const Rational& sx : columns)
            if (!contraction_within(candidate, sx, shape.epsilon)) ok = false;
        if (ok && shape.shifted_admissible &&
            !contraction_within(candidate, shifted, shape.epsilon))
          ok = false;
        if (!ok) continue;
        params.u.push_back(candidate);
        placed = true;
      }
      if (!placed) {
        assembled = false;
        break;
      }
    }
    if (!assembled) continue;

    params.validate_basic();
    return params;
  }
  throw std::runtime_error("parameter generation exhausted the retry cap");
}

Signature generate_odd_signature(std::uint64_t seed, int max_parts, int max_part) {
  if (max_parts < 1) throw std::invalid_argument("max_parts must be >= 1");
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  int odd_choices = (max_parts + 1) / 2;
  int len = 2 * static_cast<int>(rng() % odd_choices) + 1;
  std::vector<int> parts(len);
  for (int& part : parts)
    part = static_cast<int>(rng() % static_cast<std::uint64_t>(max_part + 1));
  std::sort(parts.rbegin(), parts.rend());
  return Signature(std::move(parts));
}

}  // namespace shl
