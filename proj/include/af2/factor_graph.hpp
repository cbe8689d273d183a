// Copyright 2026 The af2 Authors
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

// Local E-edge geometry: adjacency, windowed neighbourhoods and sticks.

#ifndef AF2_FACTOR_GRAPH_HPP_
#define AF2_FACTOR_GRAPH_HPP_

#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "af2/primitive.hpp"

namespace af2 {

using VertexSet = std::set<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

inline bool IsEdge(const Vertex& u, const Vertex& v) {
  return u != v && IsBasis(u.rep(), v.rep());
}

// Completion of a vertex representative, memoized per thread.
inline Word CachedCompletion(const Word& x) {
  thread_local std::unordered_map<Word, Word, WordHash> cache;
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  if (cache.size() > 200000) cache.clear();
  return cache.emplace(x, CompleteToBasis(x)).first->second;
}

// {<x^m y^d x^k> : |m|, |k| <= window, d = +-1} with y the completion of x.
inline VertexSet Neighbors(const Vertex& v, int window) {
  const Word& x = v.rep();
  const Word y = CachedCompletion(x);
  std::vector<Word> xp;
  for (int m = -window; m <= window; ++m) xp.push_back(Power(x, m));
  VertexSet out;
  for (const Word& left : xp)
    for (const Word& right : xp)
      for (int d : {1, -1})
        out.insert(Vertex::FromPrimitive(left * Power(y, d) * right));
  return out;
}

// The four common neighbours xy, xy^-1, x^-1y, x^-1y^-1 of an edge.
inline VertexSet Sticks(const Vertex& u, const Vertex& v) {
  if (!IsEdge(u, v))
    throw Error(ErrorKind::kNotAnEdge, u.ToString() + " " + v.ToString());
  const Word& x = u.rep();
  const Word& y = v.rep();
  const Word xi = x.Inverse();
  const Word yi = y.Inverse();
  return {Vertex::FromPrimitive(x * y), Vertex::FromPrimitive(x * yi),
          Vertex::FromPrimitive(xi * y), Vertex::FromPrimitive(xi * yi)};
}

}  // namespace af2

#endif  // AF2_FACTOR_GRAPH_HPP_
