// Copyright 2026 The nullcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algebra/scalar.hpp"

namespace nullcert::fock {

using algebra::BigRational;
using algebra::GaussianRational;

// Photon count per mode.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<unsigned> counts);
  static OccupationVector vacuum(std::size_t modes) { return OccupationVector(std::vector<unsigned>(modes, 0)); }

  std::size_t modes() const noexcept { return counts_.size(); }
  unsigned total() const noexcept { return total_; }
  unsigned operator[](std::size_t k) const { return counts_[k]; }
  std::span<const unsigned> counts() const noexcept { return counts_; }

  // Product of n_k! over modes.
  std::uint64_t factorial_product() const;

  OccupationVector with_added(std::size_t mode, unsigned photons = 1) const;
  OccupationVector prefix(std::size_t modes) const;
  OccupationVector suffix_from(std::size_t first) const;
  OccupationVector permuted(std::span<const unsigned> order) const;
  OccupationVector padded(std::size_t modes) const;

  std::string to_string() const;
  static OccupationVector parse(std::string_view text);

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) { return a.counts_ == b.counts_; }
  // Descending lexicographic: |2,0> sorts before |1,1> before |0,2>.
  friend bool operator<(const OccupationVector& a, const OccupationVector& b) { return a.counts_ > b.counts_; }

 private:
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

// Every occupation of `photons` over `modes`, in OccupationVector order.
std::vector<OccupationVector> fock_basis(unsigned photons, std::size_t modes);

enum class Arithmetic { exact, floating };
std::string to_string(Arithmetic a);
Arithmetic parse_arithmetic(std::string_view text);

using Amplitude = std::variant<GaussianRational, std::complex<double>>;

// A fixed-photon-number pure state. Amplitudes are the coefficients of the
// creation-operator polynomial: c * prod_k (a_k^dagger)^{n_k} |0>. The Fock
// amplitude of a basis term is therefore c * sqrt(prod n_k!); global scale is
// irrelevant everywhere downstream.
class PureState {
 public:
  using Terms = std::map<OccupationVector, Amplitude>;

  // Drops zero amplitudes. Throws ContractViolation on inconsistent mode or
  // photon counts, duplicate basis vectors, or when nothing nonzero remains.
  static PureState make(std::size_t modes, std::vector<std::pair<OccupationVector, Amplitude>> terms);
  static PureState basis(const OccupationVector& occ, GaussianRational amplitude = GaussianRational(1));

  std::size_t modes() const noexcept { return modes_; }
  unsigned photons() const noexcept { return photons_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_exact() const;
  // Amplitude converted exactly to Q(i) (doubles are dyadic rationals).
  static GaussianRational exact_amplitude(const Amplitude& a);

  // sum |c|^2 prod n_k!, the squared norm of the physical state vector.
  BigRational fock_norm2() const;  // exact amplitudes only
  double fock_norm2_approx() const;

  PureState scaled(const GaussianRational& c) const;
  PureState permuted(std::span<const unsigned> order) const;
  PureState padded(std::size_t modes) const;

  friend bool operator==(const PureState& a, const PureState& b) = default;

 private:
  std::size_t modes_ = 0;
  unsigned photons_ = 0;
  Terms terms_;
};

// "amplitude : occupation ; amplitude : occupation ..." with amplitudes in
// the Gaussian-rational text form, or decimal complex numbers for floating
// states. Terms are written in OccupationVector order.
PureState parse_state(std::string_view text);
std::string serialize_state(const PureState& s);

}  // namespace nullcert::fock
