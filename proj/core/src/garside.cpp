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

#include "braidgate/braid/garside.hpp"

#include <algorithm>
#include <numeric>

#include "braidgate/errors.hpp"

namespace braidgate::braid {

namespace {

// A simple (permutation) braid is identified with the array a where a[p] is
// the strand at position p after the braid. Concatenating braids composes
// arrays as (a * b)[p] = a[b[p]].
using Simple = std::vector<int>;

Simple identity_simple(int n) {
  Simple a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  return a;
}

Simple delta(int n) {
  Simple a(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) a[static_cast<std::size_t>(p)] = n - 1 - p;
  return a;
}

Simple multiply(const Simple& a, const Simple& b) {
  Simple out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    out[p] = a[static_cast<std::size_t>(b[p])];
  }
  return out;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Simple flip(const Simple& a) {
  const int n = static_cast<int>(a.size());
  Simple out(a.size());
  for (int p = 0; p < n; ++p) {
    out[static_cast<std::size_t>(p)] =
        n - 1 - a[static_cast<std::size_t>(n - 1 - p)];
  }
  return out;
}

// sigma_{i+1} (0-based i) is a left divisor: strand i+1 precedes strand i.
bool starts_with(const Simple& a, int i) {
  const auto pos_i = std::find(a.begin(), a.end(), i);
  const auto pos_next = std::find(a.begin(), a.end(), i + 1);
  return pos_next < pos_i;
}

// sigma_{i+1} (0-based i) is a right divisor.
bool ends_with(const Simple& a, int i) {
  return a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i) + 1];
}

void swap_values(Simple& a, int i) {
  for (auto& v : a) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

// Moves left divisors of `right` into `left` until S(right) is contained
// in F(left). Returns true if anything moved.
bool make_left_weighted(Simple& left, Simple& right) {
  const int n = static_cast<int>(left.size());
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(right, i) && !ends_with(left, i)) {
        std::swap(left[static_cast<std::size_t>(i)],
                  left[static_cast<std::size_t>(i) + 1]);
        swap_values(right, i);
        progress = moved = true;
      }
    }
  }
  return moved;
}

// Reduced positive word of a simple braid, as 1-based generator indices.
std::vector<int> simple_word(Simple a) {
  std::vector<int> reversed;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        reversed.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace

GarsideNormalForm garside_normal_form(const BraidWord& w) {
  const int n = w.strands();
  GarsideNormalForm form;
  form.strands = n;
  if (n <= 1) {
    return form;
  }
  const Simple full = delta(n);
  const Simple id = identity_simple(n);

  long infimum = 0;
  std::vector<Simple> factors;
  for (int letter : w.letters()) {
    const int i = std::abs(letter) - 1;
    Simple s = id;
    std::swap(s[static_cast<std::size_t>(i)],
              s[static_cast<std::size_t>(i) + 1]);
    if (letter > 0) {
      factors.push_back(std::move(s));
    } else {
      // X sigma_i^-1 = Delta^-1 flip(X) (Delta sigma_i^-1).
      for (auto& f : factors) f = flip(f);
      --infimum;
      factors.push_back(multiply(full, s));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = factors.size(); k-- > 1;) {
      if (make_left_weighted(factors[k - 1], factors[k])) changed = true;
    }
  }

  std::size_t first = 0;
  while (first < factors.size() && factors[first] == full) {
    ++infimum;
    ++first;
  }
  std::size_t last = factors.size();
  while (last > first && factors[last - 1] == id) --last;

  form.infimum = infimum;
  form.factors.assign(factors.begin() + static_cast<long>(first),
                      factors.begin() + static_cast<long>(last));
  return form;
}

std::string GarsideNormalForm::to_string() const {
  std::string out = "Delta^" + std::to_string(infimum);
  for (const auto& f : factors) {
    out += " [";
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (p) out += ',';
      out += std::to_string(f[p] + 1);
    }
    out += "]";
  }
  return out;
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<int> letters;
  if (strands > 1) {
    const std::vector<int> delta_word = simple_word(delta(strands));
    for (long k = 0; k < std::abs(infimum); ++k) {
      if (infimum > 0) {
        letters.insert(letters.end(), delta_word.begin(), delta_word.end());
      } else {
        for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) {
          letters.push_back(-*it);
        }
      }
    }
    for (const auto& f : factors) {
      const auto word = simple_word(f);
      letters.insert(letters.end(), word.begin(), word.end());
    }
  }
  return BraidWord(strands, std::move(letters));
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw DomainError("words_equal on different strand counts");
  }
  return garside_normal_form(u) == garside_normal_form(v);
}

bool words_equal(const PureBraidWord& u, const PureBraidWord& v) {
  if (u.strands() != v.strands()) {
    throw DomainError("words_equal on different strand counts");
  }
  return words_equal(embed_pure(u), embed_pure(v));
}

}  // namespace braidgate::braid
