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

// Conjugacy geometry of AF2.
//
// Every computation is transported to the base vertex <b>. For a vertex u
// with representative x, let y be the completion of x and phi the
// automorphism a -> y, b -> x. Its inverse tau sends u to <b>, and a vertex
// v conjugate to u is sent to <b^g> for a conjugator g that never starts
// with a b-letter. In those coordinates:
//
//   * v is a C-neighbour of u iff g = a^d b^m,
//   * the C-distance is the a-length of g,
//   * the C-path visits b^s for the suffixes s of g that begin with an
//     a-letter,
//   * the line through b and b^{a^d b^m} is {<b^j a^d b^m>}.

#ifndef AF2_CONJUGACY_HPP_
#define AF2_CONJUGACY_HPP_

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "af2/factor_graph.hpp"

namespace af2 {

struct Transport {
  Vertex base;
  Word x;
  Word y;
  Automorphism phi;  // a -> y, b -> x
  Automorphism tau;  // x -> b, y -> a

  // The vertex phi(<b^h>).
  Vertex VertexAt(const Word& h) const {
    return Vertex::FromPrimitive(Conjugate(x, phi.Apply(h)));
  }
};

inline Transport TransportOf(const Vertex& u) {
  thread_local std::unordered_map<Word, Transport, WordHash> cache;
  auto it = cache.find(u.rep());
  if (it != cache.end()) return it->second;
  Transport t;
  t.base = u;
  t.x = u.rep();
  t.y = CachedCompletion(t.x);
  t.phi = Automorphism(t.y, t.x);
  const PairReduction r = NielsenReducePair(t.y, t.x);
  t.tau = r.to_standard;
  if (cache.size() > 200000) cache.clear();
  cache.emplace(u.rep(), t);
  return t;
}

// g with tau(rep v) = g^-1 b^{+-1} g, or nullopt when v is not conjugate to
// the base.
inline std::optional<Word> NormalizedConjugator(const Transport& t,
                                                const Vertex& v) {
  const CyclicReduction cr = CyclicReduce(t.tau.Apply(v.rep()));
  if (cr.core != Word::B() && cr.core != Word::B(-1)) return std::nullopt;
  return cr.conjugator;
}

inline bool AreConjugate(const Vertex& u, const Vertex& v) {
  return ConjugacyEqual(u.rep(), v.rep()) ||
         ConjugacyEqual(u.rep(), v.rep().Inverse());
}

inline std::optional<int> CDistance(const Vertex& u, const Vertex& v) {
  if (!AreConjugate(u, v)) return std::nullopt;
  auto g = NormalizedConjugator(TransportOf(u), v);
  if (!g) return std::nullopt;
  return TileProfileOf(*g).a_length;
}

inline bool IsCEdge(const Vertex& u, const Vertex& v) {
  auto d = CDistance(u, v);
  return d && *d == 1;
}

// The unique C-path from u to v, endpoints included.
inline std::vector<Vertex> CPath(const Vertex& u, const Vertex& v) {
  if (!AreConjugate(u, v))
    throw Error(ErrorKind::kNotConjugate, u.ToString() + " " + v.ToString());
  const Transport t = TransportOf(u);
  const auto g = NormalizedConjugator(t, v);
  if (!g) throw Error(ErrorKind::kNotConjugate, u.ToString() + " " + v.ToString());
  const std::vector<Letter> letters = g->Letters();
  std::vector<Vertex> path{u};
  for (std::size_t i = letters.size(); i-- > 0;) {
    if (letters[i].base != Gen::kA) continue;
    const std::span<const Letter> all(letters);
    path.push_back(t.VertexAt(Word::FromLetters(all.subspan(i))));
  }
  return path;
}

// Windowed C-neighbours straight from the definition: <x^t> for the
// completions t = y^d x^k of x, |k| <= window.
inline VertexSet CNeighbors(const Vertex& u, int window) {
  const Word& x = u.rep();
  const Word y = CachedCompletion(x);
  VertexSet out;
  for (int d : {1, -1})
    for (int k = -window; k <= window; ++k)
      out.insert(Vertex::FromPrimitive(Conjugate(x, Power(y, d) * Power(x, k))));
  return out;
}

// ---------------------------------------------------------------------------
// Lines.

// A line, stored by its sorted endpoint pair.
struct Line {
  Vertex first;
  Vertex second;
  friend bool operator==(const Line& l, const Line& m) {
    return l.first == m.first && l.second == m.second;
  }
  friend bool operator<(const Line& l, const Line& m) {
    if (l.first != m.first) return l.first < m.first;
    return l.second < m.second;
  }
  std::string ToString() const {
    return "l(" + first.ToString() + ", " + second.ToString() + ")";
  }
};

inline Line MakeLine(const Vertex& u, const Vertex& v) {
  if (!IsCEdge(u, v))
    throw Error(ErrorKind::kNotACEdge, u.ToString() + " " + v.ToString());
  auto [p, q] = SortedPair(u, v);
  return {p, q};
}

namespace internal {

// Splits a C-neighbour conjugator a^d b^m.
inline std::pair<int, int> SplitNeighbourConjugator(const Word& g) {
  const auto& s = g.syllables();
  const int d = s.at(0).exp;
  const int m = s.size() > 1 ? s[1].exp : 0;
  return {d, m};
}

}  // namespace internal

// {<b^j a^d b^m> : |j| <= window} carried back from the coordinates of u.
inline VertexSet LinePoints(const Vertex& u, const Vertex& v, int window) {
  if (!IsCEdge(u, v))
    throw Error(ErrorKind::kNotACEdge, u.ToString() + " " + v.ToString());
  const Transport t = TransportOf(u);
  const Word g = *NormalizedConjugator(t, v);
  VertexSet out;
  for (int j = -window; j <= window; ++j)
    out.insert(Vertex::FromPrimitive(t.phi.Apply(Word::B(j) * g)));
  return out;
}

inline std::size_t CommonNeighbourCount(const Vertex& u, const Vertex& v,
                                        int window) {
  const VertexSet nu = Neighbors(u, window);
  const VertexSet nv = Neighbors(v, window);
  std::size_t n = 0;
  for (const Vertex& w : nu) n += nv.count(w);
  return n;
}

inline bool DetectCEdgeDefinably(const Vertex& u, const Vertex& v, int window) {
  return CommonNeighbourCount(u, v, window) >= 5;
}

// The four neighbour lines: at each endpoint e with other endpoint o at
// b^{a^d b^m} in the coordinates of e, the lines to b^{a^d b^{m+-1}}.
inline std::vector<Line> LineNeighbours(const Line& l) {
  std::set<Line> out;
  for (int side = 0; side < 2; ++side) {
    const Vertex& e = side == 0 ? l.first : l.second;
    const Vertex& o = side == 0 ? l.second : l.first;
    const Transport t = TransportOf(e);
    const auto [d, m] = internal::SplitNeighbourConjugator(*NormalizedConjugator(t, o));
    for (int s : {1, -1}) {
      const Vertex w = t.VertexAt(Word::A(d) * Word::B(m + s));
      auto [p, q] = SortedPair(e, w);
      out.insert(Line{p, q});
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Parallel and orthogonal pairs.

struct PairClass {
  bool parallel = false;
  std::optional<Vertex> witness;  // present iff orthogonal
};

inline PairClass ClassifyPair(const Vertex& v1, const Vertex& v2) {
  auto d = CDistance(v1, v2);
  if (!d || *d != 2)
    throw Error(ErrorKind::kNotDistanceTwo, v1.ToString() + " " + v2.ToString());
  const Vertex z = CPath(v1, v2)[1];
  const Transport t = TransportOf(z);
  const auto [d1, m1] =
      internal::SplitNeighbourConjugator(*NormalizedConjugator(t, v1));
  const auto [d2, m2] =
      internal::SplitNeighbourConjugator(*NormalizedConjugator(t, v2));
  PairClass out;
  if (d1 == d2) {
    out.parallel = true;
    return out;
  }
  const Word w = d1 > 0 ? Word::B(-m2) * Word::A() * Word::B(m1)
                        : Word::B(-m1) * Word::A() * Word::B(m2);
  out.witness = Vertex::FromPrimitive(t.phi.Apply(w));
  return out;
}

inline bool IsStraight(const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!IsCEdge(path[i], path[i + 1]))
      throw Error(ErrorKind::kNotACPath, path[i].ToString() + " " +
                                             path[i + 1].ToString());
  for (std::size_t i = 0; i + 2 < path.size(); ++i)
    if (!ClassifyPair(path[i], path[i + 2]).parallel) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Neighbour closures.

// Exact membership of z in the neighbour closure of the line l: the C-path
// from z through the seed line is straight.
inline bool ClosureContains(const Line& l, const Vertex& z) {
  if (z == l.first || z == l.second) return true;
  if (!AreConjugate(z, l.first)) return false;
  std::vector<Vertex> q = CPath(z, l.first);
  if (std::find(q.begin(), q.end(), l.second) == q.end()) q.push_back(l.second);
  return IsStraight(q);
}

struct ClosureSet {
  Line seed;
  VertexSet members;
  int depth = 0;
};

// Endpoints of all lines within `depth` neighbour steps of the seed whose
// endpoints stay within C-distance `window` of the seed's first endpoint.
inline ClosureSet NeighbourClosure(const Vertex& u, const Vertex& v, int depth,
                                   int window) {
  ClosureSet c;
  c.seed = MakeLine(u, v);
  c.depth = depth;
  std::set<Line> seen{c.seed};
  std::vector<Line> frontier{c.seed};
  c.members = {u, v};
  for (int step = 0; step < depth; ++step) {
    std::vector<Line> next;
    for (const Line& l : frontier) {
      for (const Line& n : LineNeighbours(l)) {
        if (*CDistance(u, n.first) > window || *CDistance(u, n.second) > window)
          continue;
        if (!seen.insert(n).second) continue;
        c.members.insert(n.first);
        c.members.insert(n.second);
        next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return c;
}

inline bool FamiliesOrthogonal(const ClosureSet& c1, const ClosureSet& c2) {
  std::vector<Vertex> common;
  std::set_intersection(c1.members.begin(), c1.members.end(), c2.members.begin(),
                        c2.members.end(), std::back_inserter(common));
  if (common.size() != 1) return false;
  for (const Vertex& p : c1.members) {
    for (const Vertex& q : c2.members) {
      auto d = CDistance(p, q);
      if (d && *d == 2 && !ClassifyPair(p, q).parallel) return true;
    }
  }
  return false;
}

// x and y are distinct conjugates joined by a straight C-path.
inline bool NAny(const Vertex& x, const Vertex& y) {
  if (x == y || !AreConjugate(x, y)) return false;
  return IsStraight(CPath(x, y));
}

}  // namespace af2

#endif  // AF2_CONJUGACY_HPP_
