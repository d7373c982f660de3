// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Atomic (finitely supported) complex measures, their Lebesgue decomposition
// and Radon-Nikodym derivatives, and the diagonal sesquilinear forms they
// induce in the atom-indicator basis.
//
// Measure weights are data, not computed quantities, so all support
// decisions here are exact: an atom is in the support of nu iff its weight
// is strictly positive, with no tolerance applied.

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lebforms/errors.hpp"
#include "lebforms/forms.hpp"

namespace lebforms {

class AtomicMeasure {
 public:
  AtomicMeasure(std::vector<std::string> atoms, ComplexVector weights)
      : atoms_(std::move(atoms)), weights_(std::move(weights)) {
    if (atoms_.empty()) {
      throw InvalidInputError("atomic measure: atom set must be non-empty");
    }
    if (static_cast<Index>(atoms_.size()) != weights_.size()) {
      throw InvalidInputError("atomic measure: one weight per atom required");
    }
    if (!weights_.allFinite()) {
      throw InvalidInputError("atomic measure: non-finite weights");
    }
    std::set<std::string> unique(atoms_.begin(), atoms_.end());
    if (unique.size() != atoms_.size()) {
      throw InvalidInputError("atomic measure: atom labels must be unique");
    }
  }

  Index size() const { return weights_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const ComplexVector& weights() const { return weights_; }
  Complex weight(Index i) const { return weights_(i); }

  bool nonnegative_real() const {
    for (Index i = 0; i < weights_.size(); ++i) {
      if (weights_(i).imag() != 0.0 || weights_(i).real() < 0.0) return false;
    }
    return true;
  }

  AtomicMeasure with_weights(ComplexVector weights) const {
    return AtomicMeasure(atoms_, std::move(weights));
  }

 private:
  std::vector<std::string> atoms_;
  ComplexVector weights_;
};

struct MeasureDecomposition {
  AtomicMeasure mu_a;  // vanishes off the support of nu
  AtomicMeasure mu_s;  // vanishes on the support of nu
};

namespace detail {

inline void require_measure_pair(const AtomicMeasure& mu, const AtomicMeasure& nu,
                                 const char* what) {
  if (mu.atoms() != nu.atoms()) {
    throw InvalidInputError(std::string(what) + ": measures live on different atom sets");
  }
  if (!nu.nonnegative_real()) {
    throw ValidationError(std::string(what) + ": nu must have non-negative real weights");
  }
}

}  // namespace detail

// Splits mu along the support of nu: mu_a keeps the weights on atoms where
// nu is positive, mu_s the rest. By construction mu_a << nu and mu_s, nu
// are mutually singular; the split is exact on the weight data.
inline MeasureDecomposition lebesgue_decompose_measure(const AtomicMeasure& mu,
                                                       const AtomicMeasure& nu) {
  detail::require_measure_pair(mu, nu, "lebesgue_decompose_measure");
  ComplexVector a = ComplexVector::Zero(mu.size());
  ComplexVector s = ComplexVector::Zero(mu.size());
  for (Index i = 0; i < mu.size(); ++i) {
    if (nu.weight(i).real() > 0.0) {
      a(i) = mu.weight(i);
    } else {
      s(i) = mu.weight(i);
    }
  }
  return MeasureDecomposition{mu.with_weights(std::move(a)), mu.with_weights(std::move(s))};
}

// Density of the nu-absolutely continuous part of mu: h(atom) = mu_a / nu on
// the support of nu; atoms off the support are omitted.
inline std::map<std::string, Complex> radon_nikodym(const AtomicMeasure& mu,
                                                    const AtomicMeasure& nu) {
  detail::require_measure_pair(mu, nu, "radon_nikodym");
  std::map<std::string, Complex> density;
  for (Index i = 0; i < mu.size(); ++i) {
    if (nu.weight(i).real() > 0.0) {
      density[mu.atoms()[i]] = mu.weight(i) / nu.weight(i).real();
    }
  }
  return density;
}

inline AtomicMeasure total_variation(const AtomicMeasure& mu) {
  ComplexVector tv(mu.size());
  for (Index i = 0; i < mu.size(); ++i) {
    tv(i) = Complex(std::abs(mu.weight(i)), 0.0);
  }
  return mu.with_weights(std::move(tv));
}

// The form t(phi, psi) = sum_i phi_i conj(psi_i) mu_i in the atom-indicator
// basis: the diagonal matrix of the weights. Non-negative iff mu is.
inline FormMatrix induced_form(const AtomicMeasure& mu) {
  ComplexMatrix m = ComplexMatrix::Zero(mu.size(), mu.size());
  for (Index i = 0; i < mu.size(); ++i) {
    m(i, i) = mu.weight(i);
  }
  return FormMatrix(std::move(m));
}

// Atomwise absolute continuity: nu(atom) = 0 implies mu(atom) = 0.
inline bool measure_abs_continuous(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  detail::require_measure_pair(mu, nu, "measure_abs_continuous");
  for (Index i = 0; i < mu.size(); ++i) {
    if (nu.weight(i).real() == 0.0 && mu.weight(i) != Complex(0.0, 0.0)) return false;
  }
  return true;
}

// Atomwise mutual singularity: the supports of mu and nu are disjoint.
inline bool measure_singular(const AtomicMeasure& mu, const AtomicMeasure& nu) {
  detail::require_measure_pair(mu, nu, "measure_singular");
  for (Index i = 0; i < mu.size(); ++i) {
    if (nu.weight(i).real() > 0.0 && mu.weight(i) != Complex(0.0, 0.0)) return false;
  }
  return true;
}

}  // namespace lebforms
