// Copyright 2026 The lenslab Authors
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

#ifndef LENSLAB_LAURENT_HPP_
#define LENSLAB_LAURENT_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lenslab {

// Integer Laurent polynomial with dense storage. coeffs()[i] is the
// coefficient of t^(min_exp() + i). Always trimmed; the zero polynomial has no
// stored coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t min_exp, std::vector<std::int64_t> coeffs);

  static LaurentPoly Monomial(std::int64_t coeff, std::int64_t exp);
  // Terms as (exponent, coefficient); repeated exponents add up.
  static LaurentPoly FromTerms(
      std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms);

  bool IsZero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const;
  std::int64_t Coeff(std::int64_t exp) const;
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t LeadingCoeff() const;

  bool IsSymmetric() const;
  std::int64_t EvaluateAtOne() const;
  // Exponents of nonzero coefficients, decreasing.
  std::vector<std::int64_t> Support() const;

  LaurentPoly Shifted(std::int64_t n) const;
  LaurentPoly Negated() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void Trim();

  std::int64_t min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly Mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient num / den. Throws kNotDivisible on a nonzero remainder and
// kInvalidArgument for a zero denominator.
LaurentPoly ExactDiv(const LaurentPoly& num, const LaurentPoly& den);

// Centre the support at 0 and make the top coefficient positive.
// Throws kInvalidArgument when the support has odd width.
LaurentPoly Symmetrize(const LaurentPoly& f);

// Normalized Alexander polynomial of the (r,s) torus knot.
LaurentPoly TorusPolynomial(std::int64_t r, std::int64_t s);

struct PeriodicCoeffs {
  std::int64_t p = 1;
  std::vector<std::int64_t> values;  // indexed by residue 0..p-1

  std::int64_t At(std::int64_t i) const;
  friend bool operator==(const PeriodicCoeffs&,
                         const PeriodicCoeffs&) = default;
};

PeriodicCoeffs ReduceCyclic(const LaurentPoly& f, std::int64_t p);

// Unique symmetric lift supported in |i| <= p/2.
LaurentPoly SmallestSymmetricRep(const PeriodicCoeffs& pc);

struct NonZeroProfile {
  std::vector<std::int64_t> ns;        // n_1 > n_2 > ... > n_{2r+1}
  std::vector<std::int64_t> ns_h;      // nonnegative part of ns
  std::int64_t degree = 0;             // d = n_1
  std::int64_t alpha = 0;
  std::vector<std::int64_t> adjacent;  // AS = (n_1, n_3, ..., n_{2j+1})
  std::int64_t r = 0;

  std::int64_t n(std::size_t i) const { return ns.at(i - 1); }  // 1-based
  std::size_t term_count() const { return ns.size(); }
};

bool FlatAlternating(const LaurentPoly& f);

// Throws kNotFlatAlternating unless f is symmetric and FlatAlternating.
NonZeroProfile Profile(const LaurentPoly& f);

// Canonical text, e.g. "t^2 - t + 1 - t^-1 + t^-2".
std::string ToText(const LaurentPoly& f);

// "(a,b,c)"
std::string FormatSequence(std::span<const std::int64_t> seq);

}  // namespace lenslab

#endif  // LENSLAB_LAURENT_HPP_
