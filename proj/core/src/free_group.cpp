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

#include "braidgate/monodromy/free_group.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidgate/errors.hpp"

namespace braidgate::monodromy {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

void require_same_rank(int a, int b) {
  if (a != b) {
    throw DomainError("free group words of rank " + std::to_string(a) +
                      " and " + std::to_string(b));
  }
}

}  // namespace

FreeGroupWord::FreeGroupWord(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 1) {
    throw DomainError("free group rank must be positive");
  }
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > rank_) {
      throw DomainError("generator index " + std::to_string(l) +
                        " out of range for rank " + std::to_string(rank_));
    }
  }
}

FreeGroupWord FreeGroupWord::generator(int rank, int k) {
  return FreeGroupWord(rank, {k});
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += "x" + std::to_string(std::abs(letters_[k]));
    if (letters_[k] < 0) out += "^-1";
  }
  return out;
}

FreeGroupWord concat(const FreeGroupWord& u, const FreeGroupWord& v) {
  require_same_rank(u.rank(), v.rank());
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return FreeGroupWord(u.rank(), std::move(letters));
}

FreeGroupWord inverse(const FreeGroupWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return FreeGroupWord(w.rank(), std::move(letters));
}

FreeGroupWord free_reduce(const FreeGroupWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int l : w.letters()) push_reduced(out, l);
  return FreeGroupWord(w.rank(), std::move(out));
}

namespace {

std::vector<int> cyclic_reduce(const FreeGroupWord& w) {
  std::vector<int> r = free_reduce(w).letters();
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return {r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi)};
}

}  // namespace

bool conjugate(const FreeGroupWord& u, const FreeGroupWord& v) {
  require_same_rank(u.rank(), v.rank());
  const auto a = cyclic_reduce(u);
  const auto b = cyclic_reduce(v);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> doubled = a;
  doubled.insert(doubled.end(), a.begin(), a.end());
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    if (std::equal(b.begin(), b.end(),
                   doubled.begin() + static_cast<long>(shift))) {
      return true;
    }
  }
  return false;
}

GroupRingElement GroupRingElement::of(const FreeGroupWord& w,
                                      const Rational& coeff) {
  GroupRingElement e(w.rank());
  e.add(w, coeff);
  return e;
}

GroupRingElement& GroupRingElement::add(const FreeGroupWord& w,
                                        const Rational& coeff) {
  require_same_rank(rank_, w.rank());
  if (coeff.is_zero()) return *this;
  auto key = free_reduce(w).letters();
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [letters, c] : other.terms_) {
    add(FreeGroupWord(other.rank_, letters), c);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [letters, c] : other.terms_) {
    add(FreeGroupWord(other.rank_, letters), -c);
  }
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a,
                           const GroupRingElement& b) {
  require_same_rank(a.rank_, b.rank_);
  GroupRingElement out(a.rank_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      std::vector<int> letters = u;
      letters.insert(letters.end(), v.begin(), v.end());
      out.add(FreeGroupWord(a.rank_, std::move(letters)), cu * cv);
    }
  }
  return out;
}

Cyclotomic GroupRingElement::evaluate(
    const std::vector<Cyclotomic>& values) const {
  if (static_cast<int>(values.size()) != rank_) {
    throw DomainError("evaluation needs " + std::to_string(rank_) +
                      " values, got " + std::to_string(values.size()));
  }
  const int order = values.front().order();
  std::vector<Cyclotomic> inverses;
  inverses.reserve(values.size());
  for (const auto& v : values) inverses.push_back(v.inverse());
  Cyclotomic sum = Cyclotomic::zero(order);
  for (const auto& [letters, c] : terms_) {
    Cyclotomic term = Cyclotomic::from_rational(order, c);
    for (int l : letters) {
      term *= l > 0 ? values[static_cast<std::size_t>(l - 1)]
                    : inverses[static_cast<std::size_t>(-l - 1)];
    }
    sum += term;
  }
  return sum;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [letters, c] : terms_) {
    const FreeGroupWord w(rank_, letters);
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    first = false;
    const Rational mag = c.abs();
    if (letters.empty()) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + " ";
      out += w.to_string();
    }
  }
  return out;
}

GroupRingElement fox_derivative(const FreeGroupWord& w, int k) {
  if (k < 1 || k > w.rank()) {
    throw DomainError("derivative index " + std::to_string(k) +
                      " out of range for rank " + std::to_string(w.rank()));
  }
  GroupRingElement out(w.rank());
  std::vector<int> prefix;
  for (int l : w.letters()) {
    if (l == k) {
      out.add(FreeGroupWord(w.rank(), prefix), Rational(1));
    } else if (l == -k) {
      std::vector<int> term = prefix;
      term.push_back(-k);
      out.add(FreeGroupWord(w.rank(), std::move(term)), Rational(-1));
    }
    prefix.push_back(l);
  }
  return out;
}

BraidAutomorphism::BraidAutomorphism(std::vector<FreeGroupWord> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw DomainError("automorphism needs at least one generator");
  }
  for (const auto& w : images_) {
    require_same_rank(w.rank(), rank());
  }
}

BraidAutomorphism BraidAutomorphism::identity(int rank) {
  std::vector<FreeGroupWord> images;
  for (int k = 1; k <= rank; ++k) {
    images.push_back(FreeGroupWord::generator(rank, k));
  }
  return BraidAutomorphism(std::move(images));
}

FreeGroupWord BraidAutomorphism::apply(const FreeGroupWord& w) const {
  require_same_rank(w.rank(), rank());
  std::vector<int> out;
  for (int l : w.letters()) {
    const auto& img = image(std::abs(l)).letters();
    if (l > 0) {
      for (int x : img) push_reduced(out, x);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        push_reduced(out, -*it);
      }
    }
  }
  return FreeGroupWord(rank(), std::move(out));
}

BraidAutomorphism BraidAutomorphism::then(
    const BraidAutomorphism& other) const {
  std::vector<FreeGroupWord> images;
  images.reserve(images_.size());
  for (const auto& w : images_) images.push_back(other.apply(w));
  return BraidAutomorphism(std::move(images));
}

namespace {

BraidAutomorphism letter_automorphism(int rank, int letter) {
  BraidAutomorphism a = BraidAutomorphism::identity(rank);
  std::vector<FreeGroupWord> images = a.images();
  const int i = std::abs(letter);
  if (letter > 0) {
    images[static_cast<std::size_t>(i - 1)] =
        FreeGroupWord(rank, {i, i + 1, -i});
    images[static_cast<std::size_t>(i)] = FreeGroupWord(rank, {i});
  } else {
    images[static_cast<std::size_t>(i - 1)] = FreeGroupWord(rank, {i + 1});
    images[static_cast<std::size_t>(i)] =
        FreeGroupWord(rank, {-(i + 1), i, i + 1});
  }
  return BraidAutomorphism(std::move(images));
}

}  // namespace

BraidAutomorphism braid_to_automorphism(const braid::BraidWord& w) {
  BraidAutomorphism result = BraidAutomorphism::identity(w.strands());
  for (int l : w.letters()) {
    result = result.then(letter_automorphism(w.strands(), l));
  }
  return result;
}

}  // namespace braidgate::monodromy
