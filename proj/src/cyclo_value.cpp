// Copyright 2026 The codeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codeg/cyclo_value.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "codeg/cyclotomic.hpp"
#include "codeg/errors.hpp"

namespace codeg {

namespace {

// Reduces a dense coefficient vector modulo Phi_n in place and truncates it
// to phi(n) entries.
void ReduceModPhi(unsigned n, std::vector<BigRat>& dense) {
  const IntPolynomial& phi = CyclotomicPoly(n);
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (dense[i] == 0) continue;
    const BigRat c = dense[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      dense[i - deg + j] -= c * BigRat(phi.coeffs()[j]);
    }
  }
  dense.resize(deg);
  for (auto& c : dense) c.canonicalize();
}

}  // namespace

CycloValue::CycloValue(BigRat rational) : root_order_(1), residue_{rational} {
  residue_[0].canonicalize();
}

CycloValue::CycloValue(unsigned root_order,
                       const std::map<unsigned long, BigRat>& terms)
    : root_order_(root_order) {
  if (root_order == 0) throw InvalidArgument("root order must be >= 1");
  residue_.assign(root_order, BigRat(0));
  for (const auto& [k, c] : terms) residue_[k % root_order] += c;
  ReduceModPhi(root_order_, residue_);
}

CycloValue::CycloValue(unsigned root_order, std::vector<BigRat> dense)
    : root_order_(root_order), residue_(std::move(dense)) {
  ReduceModPhi(root_order_, residue_);
}

CycloValue CycloValue::RootOfUnity(unsigned n, unsigned long k) {
  return CycloValue(n, std::map<unsigned long, BigRat>{{k % n, BigRat(1)}});
}

std::map<unsigned long, BigRat> CycloValue::Terms() const {
  std::map<unsigned long, BigRat> out;
  for (std::size_t k = 0; k < residue_.size(); ++k) {
    if (residue_[k] != 0) out.emplace(k, residue_[k]);
  }
  return out;
}

bool CycloValue::IsZero() const {
  for (const auto& c : residue_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloValue::IsRational() const {
  for (std::size_t k = 1; k < residue_.size(); ++k) {
    if (residue_[k] != 0) return false;
  }
  return true;
}

BigRat CycloValue::AsRational() const {
  return residue_.empty() ? BigRat(0) : residue_[0];
}

bool CycloValue::EqualsRational(const BigRat& r) const {
  return (*this - CycloValue(r)).IsZero();
}

CycloValue CycloValue::LiftTo(unsigned m) const {
  if (m == 0 || m % root_order_ != 0) {
    throw InvalidArgument("cannot lift Q(zeta_" + std::to_string(root_order_) +
                          ") to Q(zeta_" + std::to_string(m) + ")");
  }
  if (m == root_order_) return *this;
  const unsigned step = m / root_order_;
  std::vector<BigRat> dense(m, BigRat(0));
  for (std::size_t k = 0; k < residue_.size(); ++k) dense[k * step] = residue_[k];
  return CycloValue(m, std::move(dense));
}

CycloValue CycloValue::Conjugate() const {
  std::vector<BigRat> dense(root_order_, BigRat(0));
  for (std::size_t k = 0; k < residue_.size(); ++k) {
    dense[(root_order_ - k) % root_order_] += residue_[k];
  }
  return CycloValue(root_order_, std::move(dense));
}

CycloValue CycloValue::operator-() const {
  CycloValue out = *this;
  for (auto& c : out.residue_) c = -c;
  return out;
}

CycloValue operator+(const CycloValue& a, const CycloValue& b) {
  const unsigned m = std::lcm(a.root_order_, b.root_order_);
  CycloValue x = a.LiftTo(m), y = b.LiftTo(m);
  for (std::size_t k = 0; k < x.residue_.size(); ++k) {
    x.residue_[k] += y.residue_[k];
    x.residue_[k].canonicalize();
  }
  return x;
}

CycloValue operator-(const CycloValue& a, const CycloValue& b) { return a + (-b); }

CycloValue operator*(const CycloValue& a, const CycloValue& b) {
  const unsigned m = std::lcm(a.root_order_, b.root_order_);
  CycloValue x = a.LiftTo(m), y = b.LiftTo(m);
  std::vector<BigRat> dense(m, BigRat(0));
  for (std::size_t i = 0; i < x.residue_.size(); ++i) {
    if (x.residue_[i] == 0) continue;
    for (std::size_t j = 0; j < y.residue_.size(); ++j) {
      if (y.residue_[j] == 0) continue;
      dense[(i + j) % m] += x.residue_[i] * y.residue_[j];
    }
  }
  return CycloValue(m, std::move(dense));
}

bool operator==(const CycloValue& a, const CycloValue& b) {
  return (a - b).IsZero();
}

std::complex<double> CycloValue::ToComplex() const {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < residue_.size(); ++k) {
    if (residue_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(root_order_);
    acc += residue_[k].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

std::string CycloValue::ToString() const {
  if (IsRational()) return codeg::ToString(AsRational());
  std::string out;
  for (const auto& [k, c] : Terms()) {
    BigRat mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += codeg::ToString(mag);
    if (k > 0) out += "*z(" + std::to_string(root_order_) + ")^" + std::to_string(k);
  }
  return out;
}

}  // namespace codeg
