#include "fibrant/sample.hpp"

#include <random>

namespace fibrant {

namespace {

bool already_present(const std::vector<Module>& pool, const Module& candidate) {
  for (const auto& m : pool) {
    if (m.structurally_equal(candidate)) return true;
  }
  return false;
}

bool morphism_present(const std::vector<Morphism>& pool, const Morphism& candidate) {
  for (const auto& f : pool) {
    if (f == candidate) {
      return true;
    }
  }
  return false;
}

}  // namespace

Sample build_sample(const std::vector<Module>& seeds, const AlgebraPtr& algebra,
                    const SampleOptions& options) {
  Sample sample;
  sample.objects.push_back(zero_module(algebra));
  for (const auto& m : seeds) {
    if (!already_present(sample.objects, m)) sample.objects.push_back(m);
  }
  // Bounded direct sums of pairs of seeds (including squares).
  if (options.sum_bound >= 2) {
    std::size_t n = seeds.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Module s = direct_sum({seeds[i], seeds[j]}, algebra).sum;
        if (!already_present(sample.objects, s)) sample.objects.push_back(s);
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const Field& field = algebra->field();

  for (const auto& x : sample.objects) {
    sample.morphisms.push_back(identity_morphism(x));
  }
  for (const auto& x : sample.objects) {
    for (const auto& y : sample.objects) {
      auto basis = hom_basis(x, y);
      for (const auto& f : basis) {
        if (!morphism_present(sample.morphisms, f)) sample.morphisms.push_back(f);
      }
      if (basis.empty()) {
        Morphism z = zero_morphism(x, y);
        if (!morphism_present(sample.morphisms, z)) sample.morphisms.push_back(z);
        continue;
      }
      for (std::size_t r = 0; r < options.random_per_pair; ++r) {
        Morphism combo = zero_morphism(x, y);
        for (const auto& f : basis) {
          int c = coeff(rng);
          if (c != 0) combo = add(combo, scale(Scalar(Rational(c), field), f));
        }
        if (!morphism_present(sample.morphisms, combo)) sample.morphisms.push_back(combo);
      }
    }
  }

  // Kernel and cokernel arrows give non-split material.
  std::size_t derived = 0;
  std::size_t base_count = sample.morphisms.size();
  for (std::size_t i = 0; i < base_count && derived < options.derived_arrow_cap; ++i) {
    const Morphism& f = sample.morphisms[i];
    if (!is_mono(f)) {
      Morphism inc = kernel(f).map;
      if (!morphism_present(sample.morphisms, inc)) {
        sample.morphisms.push_back(inc);
        ++derived;
      }
    }
    if (!is_epi(f) && derived < options.derived_arrow_cap) {
      Morphism proj = cokernel(f).map;
      if (!morphism_present(sample.morphisms, proj)) {
        sample.morphisms.push_back(proj);
        ++derived;
      }
    }
  }

  return sample;
}

}  // namespace fibrant
