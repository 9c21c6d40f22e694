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

#include "braidgate/braid/words.hpp"

#include <algorithm>
#include <numeric>

#include "braidgate/errors.hpp"
#include "text_util.hpp"

namespace braidgate::braid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) {
    throw DomainError("transposition index out of range");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(i - 1)],
            images[static_cast<std::size_t>(i)]);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < size(); ++x) {
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(images_[x] + 1);
  }
  return out + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DomainError("composing permutations of different sizes");
  }
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    images[static_cast<std::size_t>(x)] = p(q(x));
  }
  return Permutation(std::move(images));
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw DomainError("braid words need at least one strand");
  }
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw DomainError("generator index " + std::to_string(l) +
                        " out of range for " + std::to_string(strands_) +
                        " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::string out = "strands=" + std::to_string(strands_) + ";";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

BraidWord BraidWord::parse(int strands, std::string_view letters) {
  std::vector<int> parsed;
  letters = detail::trim(letters);
  if (!letters.empty()) {
    for (auto part : detail::split(letters, ',')) {
      parsed.push_back(detail::parse_int(part, "braid word"));
    }
  }
  return BraidWord(strands, std::move(parsed));
}

BraidWord BraidWord::parse(std::string_view text) {
  const auto semi = text.find(';');
  const int strands = detail::parse_int(
      detail::expect_key(text.substr(0, semi), "strands"), "strand count");
  return parse(strands, semi == std::string_view::npos
                            ? std::string_view{}
                            : text.substr(semi + 1));
}

PureBraidWord::PureBraidWord(int strands, std::vector<PureLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw DomainError("pure braid words need at least one strand");
  }
  for (const auto& l : letters_) {
    if (l.i < 1 || l.i >= l.j || l.j > strands_) {
      throw DomainError("pure generator (" + std::to_string(l.i) + "," +
                        std::to_string(l.j) + ") out of range for " +
                        std::to_string(strands_) + " strands");
    }
  }
}

std::string PureBraidWord::to_string() const {
  std::string out = "strands=" + std::to_string(strands_) + ";";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ';';
    const auto& l = letters_[k];
    out += (l.inverted ? "-(" : "+(") + std::to_string(l.i) + "," +
           std::to_string(l.j) + ")";
  }
  return out;
}

PureBraidWord PureBraidWord::parse(int strands, std::string_view letters) {
  std::vector<PureLetter> parsed;
  letters = detail::trim(letters);
  if (!letters.empty()) {
    for (auto part : detail::split(letters, ';')) {
      PureLetter letter;
      if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
        letter.inverted = part.front() == '-';
        part.remove_prefix(1);
      }
      part = detail::trim(part);
      if (part.size() < 5 || part.front() != '(' || part.back() != ')') {
        throw DomainError("malformed pure braid letter: '" +
                          std::string(part) + "'");
      }
      const auto fields = detail::split(part.substr(1, part.size() - 2), ',');
      if (fields.size() != 2) {
        throw DomainError("malformed pure braid letter: '" +
                          std::string(part) + "'");
      }
      letter.i = detail::parse_int(fields[0], "pure braid letter");
      letter.j = detail::parse_int(fields[1], "pure braid letter");
      if (letter.i > letter.j) std::swap(letter.i, letter.j);
      parsed.push_back(letter);
    }
  }
  return PureBraidWord(strands, std::move(parsed));
}

PureBraidWord PureBraidWord::parse(std::string_view text) {
  const auto semi = text.find(';');
  const int strands = detail::parse_int(
      detail::expect_key(text.substr(0, semi), "strands"), "strand count");
  return parse(strands, semi == std::string_view::npos
                            ? std::string_view{}
                            : text.substr(semi + 1));
}

namespace {

void require_same_strands(int a, int b) {
  if (a != b) {
    throw DomainError("strand count mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
}

}  // namespace

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

PureBraidWord concat(const PureBraidWord& u, const PureBraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  std::vector<PureLetter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return PureBraidWord(u.strands(), std::move(letters));
}

PureBraidWord inverse(const PureBraidWord& w) {
  std::vector<PureLetter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return PureBraidWord(w.strands(), std::move(letters));
}

PureBraidWord free_reduce(const PureBraidWord& w) {
  std::vector<PureLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return PureBraidWord(w.strands(), std::move(stack));
}

Permutation perm(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int l : w.letters()) {
    p = compose(p, Permutation::adjacent(w.strands(), std::abs(l)));
  }
  return p;
}

bool is_pure(const BraidWord& w) { return perm(w).is_identity(); }

BraidWord embed_pure(const PureLetter& letter, int strands) {
  std::vector<int> word;
  for (int k = letter.j - 1; k > letter.i; --k) word.push_back(k);
  word.push_back(letter.i);
  word.push_back(letter.i);
  for (int k = letter.i + 1; k < letter.j; ++k) word.push_back(-k);
  BraidWord image(strands, std::move(word));
  return letter.inverted ? inverse(image) : image;
}

BraidWord embed_pure(const PureBraidWord& w) {
  std::vector<int> letters;
  for (const auto& l : w.letters()) {
    const BraidWord image = embed_pure(l, w.strands());
    letters.insert(letters.end(), image.letters().begin(),
                   image.letters().end());
  }
  return BraidWord(w.strands(), std::move(letters));
}

PureBraidWord project(const PureBraidWord& w, int target_strands) {
  if (target_strands < 1 || target_strands > w.strands()) {
    throw DomainError("cannot project " + std::to_string(w.strands()) +
                      " strands onto " + std::to_string(target_strands));
  }
  std::vector<PureLetter> kept;
  for (const auto& l : w.letters()) {
    if (l.j <= target_strands) kept.push_back(l);
  }
  return PureBraidWord(target_strands, std::move(kept));
}

}  // namespace braidgate::braid
