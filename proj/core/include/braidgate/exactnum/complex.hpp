// Copyright 2026 The braidgate Authors
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

#pragma once

#include "braidgate/exactnum/regular_real.hpp"

namespace braidgate::exactnum {

/// Complex number with regular-real components.
struct ExactComplex {
  RegularReal re;
  RegularReal im;

  ExactComplex() = default;
  ExactComplex(RegularReal real, RegularReal imag)
      : re(std::move(real)), im(std::move(imag)) {}
  explicit ExactComplex(const Rational& real)
      : re(real), im(Rational(0)) {}
  ExactComplex(const Rational& real, const Rational& imag)
      : re(real), im(imag) {}
};

inline ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
  return {a.re + b.re, a.im + b.im};
}

inline ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
  return {a.re - b.re, a.im - b.im};
}

inline ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ExactComplex conj(const ExactComplex& a) { return {a.re, -a.im}; }

/// |a|^2 as a regular real.
inline RegularReal abs_sq(const ExactComplex& a) {
  return a.re * a.re + a.im * a.im;
}

}  // namespace braidgate::exactnum
