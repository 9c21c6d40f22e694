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

#include "braidgate/braid/relators.hpp"

#include "braidgate/errors.hpp"

namespace braidgate::braid {

std::vector<BraidWord> relators(int strands) {
  if (strands < 2) {
    throw DomainError("relators need at least two strands");
  }
  std::vector<BraidWord> out;
  for (int i = 1; i < strands; ++i) {
    for (int j = i + 2; j < strands; ++j) {
      out.emplace_back(strands, std::vector<int>{i, j, -i, -j});
    }
  }
  for (int i = 1; i + 1 < strands; ++i) {
    out.emplace_back(strands,
                     std::vector<int>{i, i + 1, i, -(i + 1), -i, -(i + 1)});
  }
  return out;
}

namespace {

PureLetter b(int a, int c) {
  return a < c ? PureLetter{a, c, false} : PureLetter{c, a, false};
}

std::vector<PureLetter> inverted(const std::vector<PureLetter>& word) {
  std::vector<PureLetter> out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

std::vector<PureLetter> join(std::initializer_list<std::vector<PureLetter>> parts) {
  std::vector<PureLetter> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<PureBraidWord> pure_relators(int strands) {
  if (strands < 2) {
    throw DomainError("relators need at least two strands");
  }
  const int n = strands;
  std::vector<PureBraidWord> out;

  // Disjoint or nested pairs commute.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int r = 1; r <= n; ++r) {
        for (int s = r + 1; s <= n; ++s) {
          if ((s < i) || (i < r && s < j)) {
            const std::vector<PureLetter> x{b(i, j)};
            const std::vector<PureLetter> y{b(r, s)};
            out.emplace_back(n, join({x, y, inverted(x), inverted(y)}));
          }
        }
      }
    }
  }

  // Cyclic triples.
  for (int r = 1; r <= n; ++r) {
    for (int i = r + 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::vector<PureLetter> first{b(j, i), b(i, r), b(r, j)};
        const std::vector<PureLetter> second{b(i, r), b(r, j), b(j, i)};
        const std::vector<PureLetter> third{b(r, j), b(j, i), b(i, r)};
        out.emplace_back(n, join({first, inverted(second)}));
        out.emplace_back(n, join({second, inverted(third)}));
      }
    }
  }

  // b_rs commutes with b_jr b_ji b_js.
  for (int r = 1; r <= n; ++r) {
    for (int i = r + 1; i <= n; ++i) {
      for (int s = i + 1; s <= n; ++s) {
        for (int j = s + 1; j <= n; ++j) {
          const std::vector<PureLetter> x{b(r, s)};
          const std::vector<PureLetter> y{b(j, r), b(j, i), b(j, s)};
          out.emplace_back(n, join({x, y, inverted(x), inverted(y)}));
        }
      }
    }
  }
  return out;
}

}  // namespace braidgate::braid
