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

#include <map>
#include <string>
#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/cyclotomic.hpp"
#include "braidgate/exactnum/rational.hpp"

namespace braidgate::monodromy {

using exactnum::Cyclotomic;
using exactnum::Rational;

/// Word in the free group on x_1, ..., x_rank; letter k > 0 is x_k and
/// -k is its inverse.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(int rank, std::vector<int> letters = {});
  static FreeGroupWord generator(int rank, int k);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;
  friend auto operator<=>(const FreeGroupWord& a, const FreeGroupWord& b) {
    return a.letters_ <=> b.letters_;
  }

  /// "x1 x2 x1^-1", or "1" for the empty word.
  std::string to_string() const;

 private:
  int rank_ = 1;
  std::vector<int> letters_;
};

FreeGroupWord concat(const FreeGroupWord& u, const FreeGroupWord& v);
FreeGroupWord inverse(const FreeGroupWord& w);
FreeGroupWord free_reduce(const FreeGroupWord& w);
/// True when u and v are conjugate; decided on cyclically reduced forms.
bool conjugate(const FreeGroupWord& u, const FreeGroupWord& v);

/// Finite rational combination of freely reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(int rank) : rank_(rank) {}
  static GroupRingElement of(const FreeGroupWord& w,
                             const Rational& coeff = Rational(1));

  int rank() const { return rank_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& add(const FreeGroupWord& w, const Rational& coeff);
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

  /// Image under the ring map x_k -> values[k-1]; inverse letters use the
  /// field inverse.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& values) const;

  std::string to_string() const;

 private:
  int rank_ = 1;
  std::map<std::vector<int>, Rational> terms_;
};

/// Free differential d w / d x_k.
GroupRingElement fox_derivative(const FreeGroupWord& w, int k);

/// Endomorphism of the free group given by the images of the generators.
class BraidAutomorphism {
 public:
  BraidAutomorphism() = default;
  explicit BraidAutomorphism(std::vector<FreeGroupWord> images);
  static BraidAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeGroupWord>& images() const { return images_; }
  const FreeGroupWord& image(int k) const {
    return images_[static_cast<std::size_t>(k - 1)];
  }

  /// Substitutes the generator images into w and freely reduces.
  FreeGroupWord apply(const FreeGroupWord& w) const;
  /// The automorphism x -> other(this(x)).
  BraidAutomorphism then(const BraidAutomorphism& other) const;

  friend bool operator==(const BraidAutomorphism&,
                         const BraidAutomorphism&) = default;

 private:
  std::vector<FreeGroupWord> images_;
};

/// Action of a braid on the free group of the punctured plane.
///
/// Generator sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
/// Words act left to right: the automorphism of u v is that of u followed
/// by that of v, so phi(uv)(x) = phi(v)(phi(u)(x)).
BraidAutomorphism braid_to_automorphism(const braid::BraidWord& w);

}  // namespace braidgate::monodromy
