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

#include "lenslab/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "lenslab/arith.hpp"
#include "lenslab/error.hpp"

namespace lenslab {

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::vector<std::int64_t> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  Trim();
}

LaurentPoly LaurentPoly::Monomial(std::int64_t coeff, std::int64_t exp) {
  return LaurentPoly(exp, {coeff});
}

LaurentPoly LaurentPoly::FromTerms(
    std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  if (terms.size() == 0) return {};
  std::int64_t lo = terms.begin()->first, hi = lo;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : terms) {
    auto& slot = v[static_cast<std::size_t>(e - lo)];
    slot = CheckedAdd(slot, c);
  }
  return LaurentPoly(lo, std::move(v));
}

void LaurentPoly::Trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](std::int64_t c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

std::int64_t LaurentPoly::max_exp() const {
  if (IsZero()) return 0;
  return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::int64_t LaurentPoly::Coeff(std::int64_t exp) const {
  if (IsZero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

std::int64_t LaurentPoly::LeadingCoeff() const {
  return IsZero() ? 0 : coeffs_.back();
}

bool LaurentPoly::IsSymmetric() const {
  if (IsZero()) return true;
  if (min_exp_ != -max_exp()) return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::int64_t LaurentPoly::EvaluateAtOne() const {
  std::int64_t s = 0;
  for (std::int64_t c : coeffs_) s = CheckedAdd(s, c);
  return s;
}

std::vector<std::int64_t> LaurentPoly::Support() const {
  std::vector<std::int64_t> out;
  for (std::int64_t e = max_exp(); !IsZero() && e >= min_exp_; --e) {
    if (Coeff(e) != 0) out.push_back(e);
  }
  return out;
}

LaurentPoly LaurentPoly::Shifted(std::int64_t n) const {
  if (IsZero()) return {};
  return LaurentPoly(CheckedAdd(min_exp_, n), coeffs_);
}

LaurentPoly LaurentPoly::Negated() const {
  std::vector<std::int64_t> v(coeffs_);
  for (auto& c : v) c = CheckedSub(0, c);
  return LaurentPoly(min_exp_, std::move(v));
}

static LaurentPoly AddScaled(const LaurentPoly& a, const LaurentPoly& b,
                             std::int64_t sign) {
  if (a.IsZero()) return sign > 0 ? b : b.Negated();
  if (b.IsZero()) return a;
  std::int64_t lo = std::min(a.min_exp(), b.min_exp());
  std::int64_t hi = std::max(a.max_exp(), b.max_exp());
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t e = lo; e <= hi; ++e) {
    v[static_cast<std::size_t>(e - lo)] =
        CheckedAdd(a.Coeff(e), CheckedMul(sign, b.Coeff(e)));
  }
  return LaurentPoly(lo, std::move(v));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  return AddScaled(a, b, 1);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return AddScaled(a, b, -1);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return Mul(a, b);
}

LaurentPoly Mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.IsZero() || b.IsZero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<std::int64_t> v(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      v[i + j] = CheckedAdd(v[i + j], CheckedMul(ac[i], bc[j]));
    }
  }
  return LaurentPoly(CheckedAdd(a.min_exp(), b.min_exp()), std::move(v));
}

LaurentPoly ExactDiv(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  }
  if (num.IsZero()) return {};
  auto dc = den.coeffs();
  const std::int64_t width = static_cast<std::int64_t>(dc.size()) - 1;
  const std::int64_t lead = dc.back();
  // Sparse view of the denominator: (offset below the top, coefficient).
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
  for (std::int64_t i = width - 1; i >= 0; --i) {
    if (dc[static_cast<std::size_t>(i)] != 0) {
      terms.emplace_back(width - i, dc[static_cast<std::size_t>(i)]);
    }
  }
  std::vector<std::int64_t> rem(num.coeffs().begin(), num.coeffs().end());
  const std::int64_t n = static_cast<std::int64_t>(rem.size());
  if (n - 1 < width) {
    throw Error(ErrorCode::kNotDivisible, "remainder is nonzero");
  }
  std::vector<std::int64_t> quot(static_cast<std::size_t>(n - width), 0);
  for (std::int64_t top = n - 1; top >= width; --top) {
    std::int64_t c = rem[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    if (c % lead != 0) {
      throw Error(ErrorCode::kNotDivisible, "remainder is nonzero");
    }
    std::int64_t qc = c / lead;
    quot[static_cast<std::size_t>(top - width)] = qc;
    rem[static_cast<std::size_t>(top)] = 0;
    for (const auto& [off, dv] : terms) {
      auto& slot = rem[static_cast<std::size_t>(top - off)];
      slot = CheckedSub(slot, CheckedMul(qc, dv));
    }
  }
  for (std::int64_t i = 0; i < width; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) {
      throw Error(ErrorCode::kNotDivisible, "remainder is nonzero");
    }
  }
  return LaurentPoly(num.min_exp() - den.min_exp(), std::move(quot));
}

LaurentPoly Symmetrize(const LaurentPoly& f) {
  if (f.IsZero()) return {};
  std::int64_t span = f.min_exp() + f.max_exp();
  if (span % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "support has odd width and cannot be centred");
  }
  LaurentPoly g = f.Shifted(-span / 2);
  return g.LeadingCoeff() < 0 ? g.Negated() : g;
}

LaurentPoly TorusPolynomial(std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) {
    throw Error(ErrorCode::kInvalidArgument, "torus indices must be positive");
  }
  if (Gcd(r, s) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "T(" + std::to_string(r) + "," + std::to_string(s) +
                    ") needs coprime indices");
  }
  auto binom = [](std::int64_t n) {
    return LaurentPoly::FromTerms({{n, 1}, {0, -1}});
  };
  LaurentPoly num = binom(CheckedMul(r, s)) * binom(1);
  LaurentPoly den = binom(r) * binom(s);
  return Symmetrize(ExactDiv(num, den));
}

std::int64_t PeriodicCoeffs::At(std::int64_t i) const {
  return values[static_cast<std::size_t>(Mod(i, p))];
}

PeriodicCoeffs ReduceCyclic(const LaurentPoly& f, std::int64_t p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "period must be positive");
  PeriodicCoeffs pc{p, std::vector<std::int64_t>(static_cast<std::size_t>(p), 0)};
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto& slot = pc.values[static_cast<std::size_t>(
        Mod(f.min_exp() + static_cast<std::int64_t>(i), p))];
    slot = CheckedAdd(slot, c[i]);
  }
  return pc;
}

LaurentPoly SmallestSymmetricRep(const PeriodicCoeffs& pc) {
  const std::int64_t p = pc.p;
  if (p < 1 || static_cast<std::int64_t>(pc.values.size()) != p) {
    throw Error(ErrorCode::kInvalidArgument, "malformed periodic coefficients");
  }
  for (std::int64_t i = 1; i < p; ++i) {
    if (pc.At(i) != pc.At(p - i)) {
      throw Error(ErrorCode::kAsymmetricFolding,
                  "folded coefficients at " + std::to_string(i) + " and " +
                      std::to_string(p - i) + " differ");
    }
  }
  const std::int64_t h = p / 2;
  std::vector<std::int64_t> v(static_cast<std::size_t>(2 * h + 1), 0);
  for (std::int64_t i = -((p - 1) / 2); i <= (p - 1) / 2; ++i) {
    v[static_cast<std::size_t>(i + h)] = pc.At(i);
  }
  if (p % 2 == 0) {
    std::int64_t mid = pc.At(h);
    if (mid % 2 != 0) {
      throw Error(ErrorCode::kOddMiddleCoefficient,
                  "folded coefficient at p/2 is odd");
    }
    v.front() = mid / 2;
    v.back() = mid / 2;
  }
  return LaurentPoly(-h, std::move(v));
}

bool FlatAlternating(const LaurentPoly& f) {
  if (f.IsZero() || f.LeadingCoeff() != 1) return false;
  std::int64_t prev = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    std::int64_t c = *it;
    if (c == 0) continue;
    if (c != 1 && c != -1) return false;
    if (c == prev) return false;
    prev = c;
  }
  return true;
}

NonZeroProfile Profile(const LaurentPoly& f) {
  if (!f.IsSymmetric() || !FlatAlternating(f)) {
    throw Error(ErrorCode::kNotFlatAlternating,
                "polynomial is not symmetric, flat and alternating: " +
                    ToText(f));
  }
  NonZeroProfile pr;
  pr.ns = f.Support();
  for (std::int64_t e : pr.ns) {
    if (e >= 0) pr.ns_h.push_back(e);
  }
  pr.degree = pr.ns.front();
  pr.r = static_cast<std::int64_t>(pr.ns.size() - 1) / 2;
  std::size_t j = 0;
  while (2 * j + 2 < pr.ns.size() && pr.ns[2 * j] - pr.ns[2 * j + 1] == 1) ++j;
  for (std::size_t i = 0; i <= 2 * j; i += 2) pr.adjacent.push_back(pr.ns[i]);
  pr.alpha = pr.ns.front() - pr.ns[2 * j];
  return pr;
}

std::string ToText(const LaurentPoly& f) {
  if (f.IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t e : f.Support()) {
    std::int64_t c = f.Coeff(e);
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string FormatSequence(std::span<const std::int64_t> seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

}  // namespace lenslab
