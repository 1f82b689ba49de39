// Copyright 2026 The dqbreak Authors
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

#include "dqbreak/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dqbreak/error.hpp"

namespace dqbreak {

LiteralPermutation LiteralPermutation::Identity(std::size_t var_count) {
  std::vector<Literal> images(var_count);
  for (std::size_t v = 1; v <= var_count; ++v) {
    images[v - 1] = Pos(static_cast<Var>(v));
  }
  return LiteralPermutation(std::move(images));
}

LiteralPermutation LiteralPermutation::FromImages(std::vector<Literal> images) {
  std::vector<std::uint8_t> seen(images.size(), 0);
  for (const Literal& l : images) {
    if (l.var < 1 || l.var > images.size() || seen[l.var - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "literal images are not a permutation");
    }
    seen[l.var - 1] = 1;
  }
  return LiteralPermutation(std::move(images));
}

bool LiteralPermutation::IsIdentity() const {
  for (std::size_t v = 1; v <= images_.size(); ++v) {
    if (Moves(static_cast<Var>(v))) return false;
  }
  return true;
}

LiteralPermutation LiteralPermutation::Then(
    const LiteralPermutation& then) const {
  std::vector<Literal> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = then(images_[i]);
  return LiteralPermutation(std::move(images));
}

LiteralPermutation LiteralPermutation::Inverse() const {
  std::vector<Literal> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Literal im = images_[i];
    // g(+v) = im  =>  g^-1(+im.var) = +v or -v.
    images[im.var - 1] = Literal{static_cast<Var>(i + 1), im.negated};
  }
  return LiteralPermutation(std::move(images));
}

std::string LiteralPermutation::ToString() const {
  const std::size_t n = images_.size();
  std::vector<std::uint8_t> seen(2 * n, 0);
  std::ostringstream out;
  bool any = false;
  for (std::size_t code = 0; code < 2 * n; code += 2) {
    const Literal start = Literal::FromCode(code);
    if (seen[code] || (*this)(start) == start) continue;
    std::vector<Literal> cycle;
    Literal l = start;
    do {
      cycle.push_back(l);
      seen[l.code()] = 1;
      l = (*this)(l);
    } while (l != start);
    // The mirror cycle carries no extra information.
    for (const Literal& c : cycle) seen[(~c).code()] = 1;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i].ToDimacs();
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

LiteralPermutation ExtractLiteralPermutation(const Perm& automorphism,
                                             const VertexLayout& layout) {
  const std::size_t n = layout.var_count();
  if (automorphism.size() != layout.vertex_count()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "automorphism degree does not match the graph");
  }
  std::vector<Literal> images(n);
  for (Var v = 1; v <= n; ++v) {
    const VertexTag pos = layout.Tag(automorphism[layout.LiteralNode(Pos(v))]);
    const VertexTag neg = layout.Tag(automorphism[layout.LiteralNode(Neg(v))]);
    const VertexTag var = layout.Tag(automorphism[layout.VarNode(v)]);
    if (pos.kind == VertexKind::kVar || pos.kind == VertexKind::kClause) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "literal node mapped to a non-literal node");
    }
    const Literal image{pos.index, pos.kind == VertexKind::kNegLit};
    const Literal neg_image{neg.index, neg.kind == VertexKind::kNegLit};
    if ((neg.kind != VertexKind::kPosLit && neg.kind != VertexKind::kNegLit) ||
        neg_image != ~image || var.kind != VertexKind::kVar ||
        var.index != image.var) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "automorphism is not negation-compatible");
    }
    images[v - 1] = image;
  }
  return LiteralPermutation::FromImages(std::move(images));
}

bool CheckAdmissible(const Prefix& prefix, const LiteralPermutation& perm) {
  if (perm.var_count() != prefix.var_count()) return false;
  const QuantifierIndex index(prefix);
  for (Var v = 1; v <= prefix.var_count(); ++v) {
    if (index.kind(v) != index.kind(perm(v).var)) return false;
  }
  for (const Existential& e : prefix.existentials) {
    const Existential& target =
        prefix.existentials[index.position(perm(e.var).var)];
    for (Var x : e.deps) {
      if (!std::binary_search(target.deps.begin(), target.deps.end(),
                              perm(x).var)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Clause> ApplyToMatrix(const std::vector<Clause>& matrix,
                                  const LiteralPermutation& perm) {
  std::vector<Clause> out;
  out.reserve(matrix.size());
  for (const Clause& c : matrix) {
    Clause mapped;
    mapped.reserve(c.size());
    for (const Literal& l : c) mapped.push_back(perm(l));
    out.push_back(NormalizeClause(std::move(mapped)));
  }
  return out;
}

bool CheckSyntactic(const Dqbf& dqbf, const LiteralPermutation& perm) {
  if (perm.var_count() != dqbf.var_count()) return false;
  std::vector<Clause> original = dqbf.matrix;
  for (Clause& c : original) c = NormalizeClause(std::move(c));
  std::vector<Clause> mapped = ApplyToMatrix(original, perm);
  // The matrix is a set of clauses; repeated clauses carry no meaning.
  for (auto* m : {&original, &mapped}) {
    std::sort(m->begin(), m->end());
    m->erase(std::unique(m->begin(), m->end()), m->end());
  }
  return original == mapped;
}

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::kC1:
      return "C1";
    case Condition::kC2:
      return "C2";
    case Condition::kC3:
      return "C3";
  }
  return "?";
}

namespace {

EligibilityVerdict Violation(Condition c, std::size_t a, std::size_t b) {
  EligibilityVerdict v;
  v.eligible = false;
  v.violated = c;
  v.witness = std::make_pair(a, b);
  return v;
}

bool Contains(const std::vector<Var>& set, Var v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace

EligibilityVerdict FilterEligible(const Prefix& prefix,
                                  const LiteralPermutation& perm) {
  if (!IsTopologicallySorted(prefix)) {
    throw Error(ErrorCode::kNotSorted, "prefix is not topologically sorted");
  }
  const auto& ex = prefix.existentials;
  const QuantifierIndex index(prefix);

  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (Var x : ex[i].deps) {
      if (!Contains(ex[i].deps, perm(x).var)) {
        return Violation(Condition::kC1, i + 1, x);
      }
    }
  }
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const Var target = perm(ex[i].var).var;
    if (!index.is_existential(target)) {
      return Violation(Condition::kC2, i + 1, 0);
    }
    const std::size_t j = index.position(target);
    if (ex[j].deps != ex[i].deps) return Violation(Condition::kC2, i + 1, j + 1);
  }
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (!perm.Moves(ex[i].var)) continue;
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (i == j || IsSubset(ex[i].deps, ex[j].deps) ||
          IsSubset(ex[j].deps, ex[i].deps)) {
        continue;
      }
      bool ok = !perm.Moves(ex[j].var);
      for (Var x : ex[j].deps) {
        if (!Contains(ex[i].deps, x) && perm.Moves(x)) ok = false;
      }
      if (!ok) return Violation(Condition::kC3, i + 1, j + 1);
    }
  }
  return EligibilityVerdict{};
}

std::vector<LiteralPermutation> GroupClosure(
    const std::vector<LiteralPermutation>& generators, std::size_t var_count,
    std::size_t limit) {
  std::set<LiteralPermutation> seen{LiteralPermutation::Identity(var_count)};
  std::deque<LiteralPermutation> queue{*seen.begin()};
  while (!queue.empty()) {
    const LiteralPermutation cur = queue.front();
    queue.pop_front();
    for (const LiteralPermutation& g : generators) {
      LiteralPermutation next = cur.Then(g);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::kBudgetExceeded, "group closure too large");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace dqbreak
