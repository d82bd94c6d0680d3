// Copyright 2026 The macl Authors
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

#include "macl/residuation.hpp"

#include <algorithm>

namespace macl {

namespace {

std::string pt(GradeChain c, Grade g) { return grade_to_string(c, g); }

// Factories never hand out a triple that fails the adjoint property; this
// runs unconditionally (the tables are tiny) so release builds keep the
// guarantee.
void certify(const AdjointTriple& t) {
  if (auto ce = verify_adjoint(t)) {
    throw GridError("triple '" + t.name() + "' violates the adjoint property: " +
                    ce->detail);
  }
}

}  // namespace

AdjointTriple::AdjointTriple(std::string name, GradeChain chain,
                             std::vector<Grade> conj,
                             std::vector<Grade> res_left,
                             std::vector<Grade> res_right)
    : name_(std::move(name)),
      chain_(chain),
      conj_(std::move(conj)),
      res_left_(std::move(res_left)),
      res_right_(std::move(res_right)) {
  const std::size_t want =
      static_cast<std::size_t>(chain_.size()) * chain_.size();
  if (conj_.size() != want || res_left_.size() != want ||
      res_right_.size() != want) {
    throw GridError("adjoint triple '" + name_ + "': table size mismatch");
  }
  for (Grade v : conj_) {
    if (!chain_.contains(v)) {
      throw GridError("adjoint triple '" + name_ + "': entry off the chain");
    }
  }
  for (Grade x = 1; x <= chain_.n && !zero_divisors_; ++x) {
    for (Grade y = 1; y <= chain_.n; ++y) {
      if (conj_[idx(x, y)] == 0) {
        zero_divisors_ = {x, y};
        break;
      }
    }
  }
  boundary_both_ = true;
  for (Grade x = 0; x <= chain_.n; ++x) {
    if (conj_[idx(x, chain_.n)] != x || conj_[idx(chain_.n, x)] != x) {
      boundary_both_ = false;
      break;
    }
  }
}

namespace {

// Exact index forms of the discretized conjunctors on numerators 0..n:
//   godel        min(i, j)                (ceil is the identity here)
//   lukasiewicz  max(0, i + j - n)
//   product      ceil(i * j / n)
Grade builtin_conj(TNormKind kind, int n, Grade i, Grade j) {
  switch (kind) {
    case TNormKind::Godel:
      return std::min(i, j);
    case TNormKind::Lukasiewicz:
      return std::max(0, i + j - n);
    case TNormKind::Product:
      return static_cast<Grade>((static_cast<long>(i) * j + n - 1) / n);
  }
  return 0;
}

const char* builtin_name(TNormKind kind) {
  switch (kind) {
    case TNormKind::Godel:
      return "godel";
    case TNormKind::Lukasiewicz:
      return "lukasiewicz";
    case TNormKind::Product:
      return "product";
  }
  return "";
}

}  // namespace

AdjointTriple builtin_triple(GradeChain chain, TNormKind kind,
                             std::string name) {
  const int n = chain.n;
  const int m = chain.size();
  std::vector<Grade> conj(static_cast<std::size_t>(m) * m);
  for (Grade i = 0; i <= n; ++i) {
    for (Grade j = 0; j <= n; ++j) {
      conj[i * m + j] = builtin_conj(kind, n, i, j);
    }
  }

  std::vector<Grade> res(static_cast<std::size_t>(m) * m);
  switch (kind) {
    case TNormKind::Godel:
      // floor-discretized residuum: top when y <= z, else z
      for (Grade z = 0; z <= n; ++z) {
        for (Grade y = 0; y <= n; ++y) res[z * m + y] = y <= z ? n : z;
      }
      break;
    case TNormKind::Lukasiewicz:
      // floor-discretized min(1, 1 - y + z)
      for (Grade z = 0; z <= n; ++z) {
        for (Grade y = 0; y <= n; ++y) res[z * m + y] = std::min(n, n - y + z);
      }
      break;
    case TNormKind::Product: {
      // no closed form is used; fall back to the generic max-scan
      auto [left, right] = residua_from_conjunctor(chain, conj);
      AdjointTriple t(std::move(name), chain, std::move(conj),
                      std::move(left), std::move(right));
      certify(t);
      return t;
    }
  }
  // both builtins are commutative, so the two residua coincide
  AdjointTriple t(std::move(name), chain, std::move(conj), res, res);
  certify(t);
  return t;
}

AdjointTriple builtin_triple(GradeChain chain, TNormKind kind) {
  return builtin_triple(chain, kind, builtin_name(kind));
}

std::pair<std::vector<Grade>, std::vector<Grade>> residua_from_conjunctor(
    GradeChain chain, const std::vector<Grade>& conj) {
  const int n = chain.n;
  const int m = chain.size();
  if (conj.size() != static_cast<std::size_t>(m) * m) {
    throw GridError("conjunctor table size mismatch");
  }
  auto at = [&](Grade x, Grade y) { return conj[x * m + y]; };

  for (Grade x = 0; x <= n; ++x) {
    for (Grade y = 0; y <= n; ++y) {
      if (!chain.contains(at(x, y))) {
        throw GridError("conjunctor entry off the chain at (" +
                        pt(chain, x) + ", " + pt(chain, y) + ")");
      }
      if (x > 0 && at(x - 1, y) > at(x, y)) {
        throw NotMonotone("conjunctor decreases in the first argument at (" +
                          pt(chain, x - 1) + " -> " + pt(chain, x) + ", " +
                          pt(chain, y) + ")");
      }
      if (y > 0 && at(x, y - 1) > at(x, y)) {
        throw NotMonotone("conjunctor decreases in the second argument at (" +
                          pt(chain, x) + ", " + pt(chain, y - 1) + " -> " +
                          pt(chain, y) + ")");
      }
    }
  }

  std::vector<Grade> left(static_cast<std::size_t>(m) * m);
  std::vector<Grade> right(static_cast<std::size_t>(m) * m);
  for (Grade z = 0; z <= n; ++z) {
    for (Grade y = 0; y <= n; ++y) {
      Grade best = -1;
      for (Grade x = 0; x <= n; ++x) {
        if (at(x, y) <= z) best = x;
      }
      if (best < 0) {
        throw NoMaximum("no x satisfies conj(x, " + pt(chain, y) + ") <= " +
                        pt(chain, z) + "; the bottom row of the table is "
                        "not bottom");
      }
      left[z * m + y] = best;
    }
    for (Grade x = 0; x <= n; ++x) {
      Grade best = -1;
      for (Grade y = 0; y <= n; ++y) {
        if (at(x, y) <= z) best = y;
      }
      if (best < 0) {
        throw NoMaximum("no y satisfies conj(" + pt(chain, x) + ", y) <= " +
                        pt(chain, z) + "; the bottom column of the table is "
                        "not bottom");
      }
      right[z * m + x] = best;
    }
  }
  return {std::move(left), std::move(right)};
}

AdjointTriple triple_from_table(std::string name, GradeChain chain,
                                std::vector<Grade> conj) {
  auto [left, right] = residua_from_conjunctor(chain, conj);
  AdjointTriple t(std::move(name), chain, std::move(conj), std::move(left),
                  std::move(right));
  certify(t);
  return t;
}

std::optional<AdjointCounterexample> verify_adjoint(const AdjointTriple& t) {
  const int n = t.chain().n;
  for (Grade x = 0; x <= n; ++x) {
    for (Grade y = 0; y <= n; ++y) {
      for (Grade z = 0; z <= n; ++z) {
        const bool middle = t.conj(x, y) <= z;
        if ((x <= t.res_left(z, y)) != middle) {
          return AdjointCounterexample{
              x, y, z, "x <= res_left(z, y) disagrees with conj(x, y) <= z"};
        }
        if ((y <= t.res_right(z, x)) != middle) {
          return AdjointCounterexample{
              x, y, z, "y <= res_right(z, x) disagrees with conj(x, y) <= z"};
        }
      }
    }
  }
  return std::nullopt;
}

bool TriplePropertyReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Item& i) { return i.pass; });
}

TriplePropertyReport verify_triple_properties(const AdjointTriple& t) {
  const GradeChain c = t.chain();
  const int n = c.n;
  TriplePropertyReport report;
  auto add = [&](const std::string& name, bool pass,
                 const std::string& witness) {
    report.items.push_back({name, pass, pass ? "" : witness});
  };

  {
    bool ok = true;
    std::string w;
    for (Grade x = 1; x <= n && ok; ++x) {
      for (Grade y = 0; y <= n && ok; ++y) {
        if (t.conj(x - 1, y) > t.conj(x, y) || t.conj(y, x - 1) > t.conj(y, x)) {
          ok = false;
          w = "at (" + pt(c, x) + ", " + pt(c, y) + ")";
        }
      }
    }
    add("conjunctor order-preserving in both arguments", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade z = 0; z <= n && ok; ++z) {
      for (Grade u = 1; u <= n && ok; ++u) {
        if (z < n && (t.res_left(z, u) > t.res_left(z + 1, u) ||
                      t.res_right(z, u) > t.res_right(z + 1, u))) {
          ok = false;
          w = "not order-preserving in z at (" + pt(c, z) + ", " + pt(c, u) + ")";
        }
        if (t.res_left(z, u - 1) < t.res_left(z, u) ||
            t.res_right(z, u - 1) < t.res_right(z, u)) {
          ok = false;
          w = "not order-reversing at (" + pt(c, z) + ", " + pt(c, u) + ")";
        }
      }
    }
    add("residua order-preserving in first, order-reversing in second "
        "argument",
        ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade y = 0; y <= n && ok; ++y) {
      if (t.conj(0, y) != 0 || t.res_left(n, y) != n) {
        ok = false;
        w = "at y = " + pt(c, y);
      }
    }
    add("conj(bottom, y) = bottom and res_left(top, y) = top", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade x = 0; x <= n && ok; ++x) {
      if (t.conj(x, 0) != 0 || t.res_right(n, x) != n) {
        ok = false;
        w = "at x = " + pt(c, x);
      }
    }
    add("conj(x, bottom) = bottom and res_right(top, x) = top", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade z = 0; z <= n && ok; ++z) {
      if (t.res_right(z, 0) != n || t.res_left(z, 0) != n) {
        ok = false;
        w = "at z = " + pt(c, z);
      }
    }
    add("residua against bottom are top", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade z = 0; z <= n && ok; ++z) {
      for (Grade y = 0; y <= n && ok; ++y) {
        Grade best = -1;
        for (Grade x = 0; x <= n; ++x) {
          if (t.conj(x, y) <= z) best = x;
        }
        if (t.res_left(z, y) != best) {
          ok = false;
          w = "at (z, y) = (" + pt(c, z) + ", " + pt(c, y) + ")";
        }
      }
    }
    add("res_left(z, y) is the maximum of {x : conj(x, y) <= z}", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (Grade z = 0; z <= n && ok; ++z) {
      for (Grade x = 0; x <= n && ok; ++x) {
        Grade best = -1;
        for (Grade y = 0; y <= n; ++y) {
          if (t.conj(x, y) <= z) best = y;
        }
        if (t.res_right(z, x) != best) {
          ok = false;
          w = "at (z, x) = (" + pt(c, z) + ", " + pt(c, x) + ")";
        }
      }
    }
    add("res_right(z, x) is the maximum of {y : conj(x, y) <= z}", ok, w);
  }
  return report;
}

}  // namespace macl
