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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidgate::braid {

/// Bijection of {0, ..., n-1}; printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition of positions i and i+1 (1-based i).
  static Permutation adjacent(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// (p o q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Word in the Artin generators sigma_1 .. sigma_{strands-1}. A positive
/// letter i is sigma_i, a negative letter -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Literal equality of letter sequences; see words_equal for the group.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// "strands=K;l1,l2,..."
  std::string to_string() const;
  static BraidWord parse(std::string_view text);
  /// Parses a bare letter list "1,2,-1".
  static BraidWord parse(int strands, std::string_view letters);

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// b_ij (1 <= i < j <= strands) or its inverse.
struct PureLetter {
  int i = 1;
  int j = 2;
  bool inverted = false;

  PureLetter inverse() const { return {i, j, !inverted}; }
  friend bool operator==(const PureLetter&, const PureLetter&) = default;
  friend auto operator<=>(const PureLetter&, const PureLetter&) = default;
};

/// Word in the pure braid generators b_ij.
class PureBraidWord {
 public:
  PureBraidWord() = default;
  explicit PureBraidWord(int strands, std::vector<PureLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<PureLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const PureBraidWord&, const PureBraidWord&) = default;

  /// "strands=K;+(1,3);-(2,4)"
  std::string to_string() const;
  static PureBraidWord parse(std::string_view text);
  /// Parses a bare letter list "+(1,3);-(2,4)".
  static PureBraidWord parse(int strands, std::string_view letters);

 private:
  int strands_ = 2;
  std::vector<PureLetter> letters_;
};

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);
/// Cancels adjacent pairs sigma_i sigma_i^-1 until none remain.
BraidWord free_reduce(const BraidWord& w);

PureBraidWord concat(const PureBraidWord& u, const PureBraidWord& v);
PureBraidWord inverse(const PureBraidWord& w);
PureBraidWord free_reduce(const PureBraidWord& w);

/// Underlying strand permutation; perm(uv) = perm(u) o perm(v).
Permutation perm(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// b_ij -> (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 ...
/// sigma_{j-1}^-1); inverse letters map to the inverse word.
BraidWord embed_pure(const PureLetter& letter, int strands);
BraidWord embed_pure(const PureBraidWord& w);

/// Forgets the strands above target_strands: letters b_ij with j > target
/// are dropped.
PureBraidWord project(const PureBraidWord& w, int target_strands);

}  // namespace braidgate::braid
