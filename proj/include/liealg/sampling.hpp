#pragma once

// Random reconstruction choices for an automorphism descriptor.
//
// Exact mode keeps every factor rational: a one-parameter group exp(eps D) is
// drawn only when D is nilpotent (rational eps) or an integer diagonal (a
// rational scale e^eps); other generators are left at the identity. Numeric
// mode draws every parameter and exponentiates in floating point.

#include "liealg/descriptor.hpp"

#include <cstdint>
#include <random>

namespace liealg {

enum class SampleMode { Exact, Numeric };

namespace detail {

/// Nonzero rational in [-3, 3] with denominator 1 or 2.
inline Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 2);
  const int n = num(rng);
  return Rational(n <= 6 ? n - 7 : n - 6, den(rng));
}

/// Rational in [-3, 3] with denominator 2, zero allowed.
inline Rational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  return Rational(num(rng), 2);
}

/// Flow parameter in [-2, 2].
inline Rational random_epsilon(std::mt19937_64& rng, SampleMode mode) {
  if (mode == SampleMode::Exact) {
    std::uniform_int_distribution<int> num(-4, 4);
    return Rational(num(rng), 2);
  }
  std::uniform_int_distribution<int> num(-8, 8);
  return Rational(num(rng), 4);
}

inline FlowParam random_flow(const Matrix<Rational>& generator, std::mt19937_64& rng, SampleMode mode) {
  static const Rational kScales[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),
                                     Rational(3, 2), Rational(2),    Rational(3),    Rational(4),    Rational(5),
                                     Rational(7)};
  if (generator.is_zero()) return FlowParam::epsilon(0);
  if (mode == SampleMode::Numeric) return FlowParam::epsilon(random_epsilon(rng, mode));
  if (nilpotency_index(generator)) return FlowParam::epsilon(random_epsilon(rng, mode));
  if (is_integer_diagonal(generator)) {
    std::uniform_int_distribution<std::size_t> pick(0, std::size(kScales) - 1);
    return FlowParam::scale(kScales[pick(rng)]);
  }
  return FlowParam::epsilon(0);
}

/// Product of up to four elementary shears; determinant exactly 1.
inline Matrix<Rational> random_sl(std::size_t n, std::mt19937_64& rng) {
  Matrix<Rational> m = Matrix<Rational>::identity(n);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  const int shears = count(rng);
  for (int s = 0; s < shears; ++s) {
    const std::size_t a = index(rng);
    std::size_t b = index(rng);
    if (a == b) b = (b + 1) % n;
    Matrix<Rational> e = Matrix<Rational>::identity(n);
    e(a, b) = random_nonzero(rng);
    m = m * e;
  }
  return m;
}

}  // namespace detail

inline ReconstructionChoice sample_choice(const LieAlgebra& l, const AutDescriptor& desc, std::mt19937_64& rng,
                                          SampleMode mode = SampleMode::Exact) {
  const std::size_t n = l.dim();
  ReconstructionChoice c;
  for (std::size_t j = 1; j <= n; ++j) c.inner.push_back(detail::random_flow(ad_matrix(l, j), rng, mode));
  if (!desc.discrete.empty()) {
    std::uniform_int_distribution<std::size_t> len(0, 3), gen(0, desc.discrete.size() - 1);
    const std::size_t k = len(rng);
    for (std::size_t s = 0; s < k; ++s) c.word.push_back(gen(rng));
  }
  for (const auto& o : desc.outer) c.outer.push_back(detail::random_flow(o.matrix(n), rng, mode));
  if (desc.family) {
    const auto symbols = desc.family->free_symbols();
    for (int attempt = 0; attempt < 1000; ++attempt) {
      c.family.clear();
      for (const auto& s : symbols) c.family[s] = detail::random_entry(rng);
      if (det(desc.family->instantiate(c.family)) != 0) return c;
    }
    throw Error("could not draw a nonsingular member of matrix family '" + desc.family->name + "'");
  }
  for (const auto& s : desc.block.symbols()) c.scalars[s] = detail::random_nonzero(rng);
  for (const auto& m : desc.block.sl_blocks()) c.sl_blocks[m] = detail::random_sl(m.size(), rng);
  return c;
}

inline GroupElement sample_automorphism(const LieAlgebra& l, const AutDescriptor& desc, std::uint64_t seed,
                                        SampleMode mode = SampleMode::Exact) {
  std::mt19937_64 rng(seed);
  return reconstruct(l, desc, sample_choice(l, desc, rng, mode));
}

}  // namespace liealg
