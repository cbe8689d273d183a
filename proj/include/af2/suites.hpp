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


// Named verification suites. Each suite runs seeded trials, possibly on
// several threads, and aggregates failures and tallies in trial order so the
// result depends only on the RunConfig.

#ifndef AF2_SUITES_HPP_
#define AF2_SUITES_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "af2/automorphism.hpp"
#include "af2/block.hpp"
#include "af2/conjugacy.hpp"
#include "af2/factor_graph.hpp"
#include "af2/farey.hpp"
#include "af2/io.hpp"
#include "af2/iso.hpp"
#include "af2/model.hpp"
#include "af2/primitive.hpp"

namespace af2 {

struct RunConfig {
  std::uint64_t seed = 1;
  int window = 0;  // 0 selects the suite's own default
  int level_cap = kDefaultLevelCap;
  int trials = 0;  // 0 selects the suite's own default
  std::string output;
  std::string fixture_dir;
  unsigned threads = 0;  // 0 uses the hardware concurrency
};

struct Failure {
  std::uint64_t seed = 0;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  std::vector<Failure> failures;
  std::map<std::string, long> tallies;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

inline Json ToJson(const SuiteResult& r) {
  Json j;
  j["schema"] = internal::SchemaTag(kReportSchema);
  j["suite"] = r.name;
  j["trials"] = r.trials;
  j["passed"] = r.passed();
  j["wall_seconds"] = r.wall_seconds;
  j["tallies"] = r.tallies;
  j["failures"] = Json::array();
  for (const Failure& f : r.failures)
    j["failures"].push_back(
        {{"seed", f.seed}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return j;
}

// splitmix64 step: the seed of trial i is a pure function of (seed, i).
inline std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// The image of a under `max_aut_len` elementary Nielsen moves drawn from the
// seed.
inline Word RandomPrimitive(std::uint64_t seed, int max_aut_len) {
  std::mt19937_64 rng(seed);
  return RandomAutomorphism(rng, max_aut_len).image_a();
}

template <class Rng>
VertexPair RandomBase(Rng& rng, int moves) {
  const Automorphism phi = RandomAutomorphism(rng, moves);
  return {Vertex::FromPrimitive(phi.image_a()), Vertex::FromPrimitive(phi.image_b())};
}

// A freely reduced word of the given length with uniformly drawn letters.
template <class Rng>
Word RandomReducedWord(Rng& rng, int length) {
  static constexpr Letter kLetters[] = {kLetterA, kLetterAInv, kLetterB, kLetterBInv};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < length) {
    const Letter l = kLetters[pick(rng)];
    if (!out.empty() && out.back().base == l.base && out.back().sign == -l.sign) continue;
    out.push_back(l);
  }
  return Word::FromLetters(out);
}

template <class Rng>
int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct TrialOutcome {
  std::optional<Failure> failure;
  std::map<std::string, long> tallies;

  void Fail(std::string inputs, std::string expected, std::string actual) {
    if (!failure) failure = Failure{0, std::move(inputs), std::move(expected), std::move(actual)};
  }
  void Count(const std::string& key, long n = 1) { tallies[key] += n; }
};

// Runs `trials` independent trials across worker threads and merges them in
// trial order.
// Distinct `stream` values give independent seed sequences within a suite.
// `fn` takes the trial seed, and optionally the trial index.
template <class Fn>
void RunTrials(SuiteResult& r, const RunConfig& cfg, int trials, const Fn& fn,
               std::uint64_t stream = 0) {
  const std::uint64_t base = cfg.seed ^ (stream * 0xD1B54A32D192ED03ULL);
  std::vector<TrialOutcome> out(trials);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max(1, trials));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i = static_cast<int>(w); i < trials; i += static_cast<int>(workers))
          if constexpr (std::is_invocable_v<Fn, std::uint64_t, int>)
            out[i] = fn(TrialSeed(base, i), i);
          else
            out[i] = fn(TrialSeed(base, i));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  r.trials += trials;
  for (int i = 0; i < trials; ++i) {
    if (out[i].failure) {
      out[i].failure->seed = TrialSeed(base, i);
      r.failures.push_back(*out[i].failure);
    }
    for (const auto& [k, n] : out[i].tallies) r.tallies[k] += n;
  }
}

inline int Pick(int configured, int fallback) { return configured > 0 ? configured : fallback; }

inline std::string Show(const VertexSet& s) {
  std::string out = "{";
  for (const Vertex& v : s) out += (out.size() > 1 ? ", " : "") + v.ToString();
  return out + "}";
}

namespace suites {

// Windowed common neighbours of a random edge, enumerated in the coordinates
// of the edge and filtered with the Nielsen basis test.
inline void Sticks(SuiteResult& r, const RunConfig& cfg) {
  const int window = Pick(cfg.window, 3);
  RunTrials(r, cfg, Pick(cfg.trials, 200), [window](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Automorphism phi = RandomAutomorphism(rng, Uniform(rng, 0, 8));
    const Word& x = phi.image_a();
    const Word& y = phi.image_b();
    VertexSet common;
    for (int m = -window; m <= window; ++m)
      for (int d : {1, -1})
        for (int k = -window; k <= window; ++k) {
          const Word z = phi.Apply(Word::A(m) * Word::B(d) * Word::A(k));
          if (IsBasis(z, y)) common.insert(Vertex::FromPrimitive(z));
        }
    const VertexSet expected{Vertex::FromPrimitive(x * y), Vertex::FromPrimitive(x * y.Inverse()),
                             Vertex::FromPrimitive(x.Inverse() * y),
                             Vertex::FromPrimitive(x.Inverse() * y.Inverse())};
    TrialOutcome t;
    const VertexSet library = af2::Sticks(Vertex::FromPrimitive(x), Vertex::FromPrimitive(y));
    if (common != expected || library != expected)
      t.Fail("(" + x.ToString() + ", " + y.ToString() + ")", Show(expected),
             "enumerated " + Show(common) + ", library " + Show(library));
    return t;
  });
}

// Nielsen reduction against the commutator oracle; half of the pairs are
// bases by construction.
inline void BasisCross(SuiteResult& r, const RunConfig& cfg) {
  RunTrials(r, cfg, Pick(cfg.trials, 1000), [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Word u;
    Word v;
    if (seed % 2 == 0) {
      do {
        const Automorphism phi = RandomAutomorphism(rng, Uniform(rng, 0, 10));
        u = phi.image_a();
        v = phi.image_b();
      } while (u.length() > 12 || v.length() > 12);
    } else {
      u = RandomReducedWord(rng, Uniform(rng, 0, 12));
      v = RandomReducedWord(rng, Uniform(rng, 0, 12));
    }
    TrialOutcome t;
    const bool nielsen = IsBasis(u, v);
    const bool commutator = IsBasisByCommutator(u, v);
    t.Count(nielsen ? "bases" : "non_bases");
    if (nielsen != commutator)
      t.Fail("(" + u.ToString() + ", " + v.ToString() + ")",
             "commutator oracle " + std::to_string(commutator), "nielsen " + std::to_string(nielsen));
    return t;
  });
}

// A random vertex and conjugates of it reached by short C-walks or by random
// conjugators.
template <class Rng>
Vertex RandomConjugate(Rng& rng, const Vertex& x, int window) {
  if (Uniform(rng, 0, 1) == 0) {
    Vertex y = x;
    const int steps = Uniform(rng, 1, 3);
    for (int i = 0; i < steps; ++i) {
      const VertexSet ns = CNeighbors(y, window);
      auto it = ns.begin();
      std::advance(it, Uniform(rng, 0, static_cast<int>(ns.size()) - 1));
      y = *it;
    }
    return y;
  }
  return CanonicalVertex(Conjugate(x.rep(), RandomReducedWord(rng, Uniform(rng, 1, 6))));
}

inline void TripleConjugate(SuiteResult& r, const RunConfig& cfg) {
  const int window = Pick(cfg.window, 4);
  RunTrials(r, cfg, Pick(cfg.trials, 500), [window](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Vertex x = Vertex::FromPrimitive(RandomPrimitive(seed, Uniform(rng, 0, 5)));
    Vertex y = x;
    Vertex z = x;
    while (y == x) y = RandomConjugate(rng, x, 2);
    while (z == x || z == y) z = RandomConjugate(rng, Uniform(rng, 0, 1) ? x : y, 2);
    const VertexSet dx = Neighbors(x, window);
    const VertexSet dy = Neighbors(y, window);
    std::size_t n = 0;
    for (const Vertex& w : Neighbors(z, window)) n += dx.count(w) && dy.count(w);
    TrialOutcome t;
    t.Count(n == 0 ? "empty" : n == 1 ? "singleton" : "larger");
    if (n > 1)
      t.Fail(x.ToString() + " " + y.ToString() + " " + z.ToString(), "<= 1", std::to_string(n));
    return t;
  });
}

// C-edge pairs have at least five windowed common neighbours; C_2 pairs and
// non-conjugate pairs at most four.
inline void CommonNeighbours(SuiteResult& r, const RunConfig& cfg) {
  const int edge_window = Pick(cfg.window, 3);
  const int other_window = std::max(edge_window, 8);
  const int n = Pick(cfg.trials, 200);
  auto pick = [](std::mt19937_64& rng, const VertexSet& s) {
    auto it = s.begin();
    std::advance(it, Uniform(rng, 0, static_cast<int>(s.size()) - 1));
    return *it;
  };
  RunTrials(r, cfg, n, [=](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Vertex x = Vertex::FromPrimitive(RandomPrimitive(seed, Uniform(rng, 0, 5)));
    const Vertex y = pick(rng, CNeighbors(x, 3));
    const std::size_t c = CommonNeighbourCount(x, y, edge_window);
    TrialOutcome t;
    t.Count("c_edge_pairs");
    if (c < 5 || !IsCEdge(x, y)) t.Fail(x.ToString() + " " + y.ToString(), ">= 5", std::to_string(c));
    return t;
  });
  RunTrials(r, cfg, n, [=](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Vertex x = Vertex::FromPrimitive(RandomPrimitive(seed, Uniform(rng, 0, 5)));
    TrialOutcome t;
    Vertex y = x;
    if (Uniform(rng, 0, 1) == 0) {
      const Vertex mid = pick(rng, CNeighbors(x, 3));
      do y = pick(rng, CNeighbors(mid, 3));
      while (y == x);
      t.Count("c2_pairs");
      if (CDistance(x, y) != 2) t.Fail(x.ToString() + " " + y.ToString(), "C-distance 2", "other");
    } else {
      do y = Vertex::FromPrimitive(RandomPrimitive(rng(), Uniform(rng, 1, 5)));
      while (AreConjugate(x, y));
      t.Count("non_conjugate_pairs");
    }
    const std::size_t c = CommonNeighbourCount(x, y, other_window);
    if (c > 4) t.Fail(x.ToString() + " " + y.ToString(), "<= 4", std::to_string(c));
    return t;
  }, 1);
}

}  // namespace suites

// ---------------------------------------------------------------------------

// Windowed C-ball around `s`: BFS distances and the number of shortest paths
// reaching each vertex. `cycle` records any edge that closes a cycle.
struct CBall {
  std::map<Vertex, int> dist;
  std::map<Vertex, long> paths;
  bool cycle = false;
};

inline CBall ExploreC(const Vertex& s, int depth, int window) {
  CBall b;
  b.dist[s] = 0;
  b.paths[s] = 1;
  std::vector<Vertex> layer{s};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Vertex> next;
    for (const Vertex& v : layer)
      for (const Vertex& w : CNeighbors(v, window)) {
        auto it = b.dist.find(w);
        if (it == b.dist.end()) {
          b.dist.emplace(w, d);
          b.paths[w] = b.paths[v];
          next.push_back(w);
        } else if (it->second == d) {
          b.paths[w] += b.paths[v];
          b.cycle = true;
        } else if (it->second == d - 1) {
          b.cycle = true;
        }
      }
    layer = std::move(next);
  }
  return b;
}

// A conjugator starting with an a-syllable, with `a_length` letters a^{+-1}
// separated by b-powers in [-2, 2].
template <class Rng>
Word RandomConjugator(Rng& rng, int a_length) {
  Word g;
  for (int i = 0; i < a_length; ++i) {
    g *= Word::A(Uniform(rng, 0, 1) ? 1 : -1);
    g *= Word::B(Uniform(rng, -2, 2));
  }
  return g;
}

inline int VertexTile(const Vertex& v) { return TileB(CyclicWord(CyclicReduce(v.rep()).core)); }

namespace suites {

inline constexpr double kBallBudget = 20000;

// c_distance against the a-length of the conjugator, the C-path against the
// exact count of shortest paths in a two-sided windowed C-BFS, and the
// explored balls against cycles.
inline void ConjugacyTree(SuiteResult& r, const RunConfig& cfg) {
  RunTrials(r, cfg, Pick(cfg.trials, 300), [&cfg](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Word g = RandomConjugator(rng, Uniform(rng, 1, 10));
    const Vertex b = Vertex::FromPrimitive(Word::B());
    const Vertex v = CanonicalVertex(Conjugate(Word::B(), g));
    const int d = TileProfileOf(g).a_length;
    TrialOutcome t;
    const std::string in = "b^" + g.ToString();
    const auto cd = CDistance(b, v);
    if (cd != d) t.Fail(in, "c_distance " + std::to_string(d), cd ? std::to_string(*cd) : "none");
    const std::vector<Vertex> path = CPath(b, v);
    if (static_cast<int>(path.size()) != d + 1)
      t.Fail(in, "c_path length " + std::to_string(d), std::to_string(path.size() - 1));
    int window = Pick(cfg.window, 0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      while (window < 8 && !CNeighbors(path[i], window).count(path[i + 1])) ++window;
      if (!IsCEdge(path[i], path[i + 1])) t.Fail(in, "C-edges along the path", "step " + std::to_string(i));
    }
    const double branching = 2.0 * (2 * window + 1);
    if (std::pow(branching, (d + 1) / 2) > kBallBudget) {
      t.Count("bfs_over_budget");
      return t;
    }
    const CBall left = ExploreC(b, (d + 1) / 2, window);
    const CBall right = ExploreC(v, d / 2, window);
    long shortest = 0;
    bool shorter = false;
    for (const auto& [w, n] : right.paths) {
      auto it = left.dist.find(w);
      if (it == left.dist.end()) continue;
      const int len = it->second + right.dist.at(w);
      if (len < d) shorter = true;
      if (it->second == (d + 1) / 2 && right.dist.at(w) == d / 2) shortest += left.paths.at(w) * n;
    }
    t.Count("bfs_exhaustive");
    if (shorter || shortest != 1)
      t.Fail(in, "one C-path of length " + std::to_string(d),
             std::to_string(shortest) + " paths" + (shorter ? ", a shorter one" : ""));
    if (left.cycle || right.cycle) t.Fail(in, "no C-cycle in the windowed balls", "cycle");
    return t;
  });
}

inline bool AreNeighbourLinesByDefinition(const Vertex& x, const Vertex& x1, const Vertex& x2,
                                          int window, int search) {
  const VertexSet l2 = LinePoints(x, x2, search);
  for (const Vertex& y1 : LinePoints(x, x1, window)) {
    bool found = false;
    for (const Vertex& y2 : l2) found = found || IsEdge(y1, y2);
    if (!found) return false;
  }
  return true;
}

inline void FourNeighbours(SuiteResult& r, const RunConfig& cfg) {
  RunTrials(r, cfg, Pick(cfg.trials, 200), [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Vertex x = Vertex::FromPrimitive(RandomPrimitive(seed, Uniform(rng, 0, 6)));
    const VertexSet ns = CNeighbors(x, 3);
    auto it = ns.begin();
    std::advance(it, Uniform(rng, 0, static_cast<int>(ns.size()) - 1));
    const Line l = MakeLine(x, *it);
    const std::vector<Line> nb = LineNeighbours(l);
    int at_first = 0;
    int at_second = 0;
    for (const Line& m : nb) {
      at_first += m.first == l.first || m.second == l.first;
      at_second += m.first == l.second || m.second == l.second;
    }
    TrialOutcome t;
    if (nb.size() != 4 || at_first != 2 || at_second != 2)
      t.Fail(l.ToString(), "4 neighbours, two per endpoint",
             std::to_string(nb.size()) + " (" + std::to_string(at_first) + "+" +
                 std::to_string(at_second) + ")");
    return t;
  });
  // l(b, b^{ab^k}) is a neighbour of l(b, b^a) exactly for k = +-1.
  const Vertex b = Vertex::FromPrimitive(Word::B());
  const Vertex ba = CanonicalVertex(Conjugate(Word::B(), Word::A()));
  const std::vector<Line> nb = LineNeighbours(MakeLine(b, ba));
  for (int k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    const Vertex bk = CanonicalVertex(Conjugate(Word::B(), Word::A() * Word::B(k)));
    const bool expected = k == 1 || k == -1;
    const bool by_definition = AreNeighbourLinesByDefinition(b, ba, bk, 2, 8);
    const Line m = MakeLine(b, bk);
    const bool listed = std::find(nb.begin(), nb.end(), m) != nb.end();
    ++r.trials;
    r.tallies["iff_checks"] += 1;
    if (by_definition != expected || listed != expected)
      r.failures.push_back({cfg.seed, "k = " + std::to_string(k), expected ? "neighbour" : "not a neighbour",
                            std::string("definition ") + (by_definition ? "yes" : "no") + ", library " +
                                (listed ? "yes" : "no")});
  }
}

inline void TileBounds(SuiteResult& r, const RunConfig& cfg) {
  // Labelled Farey edges through level 5 avoiding [b].
  const FareyGraph fg = LabelFarey(BuildFarey(5));
  for (const FareyEdge& e : fg.edges) {
    const ClassId c1 = ProjectWord(e.from_label);
    const ClassId c2 = ProjectWord(e.to_label);
    if (IsBaseB(c1) || IsBaseB(c2)) continue;
    const int gap = std::abs(TileB(CyclicWord(e.from_label)) - TileB(CyclicWord(e.to_label)));
    ++r.trials;
    r.tallies["farey_edges"] += 1;
    if (gap > 1 || EdgeTileGap(fg, c1, c2) != gap)
      r.failures.push_back({cfg.seed, e.from_label.ToString() + " " + e.to_label.ToString(), "gap <= 1",
                            std::to_string(gap) + ", library " + std::to_string(EdgeTileGap(fg, c1, c2))});
  }
  const Vertex b = Vertex::FromPrimitive(Word::B());
  auto pick = [](std::mt19937_64& rng, const std::vector<Vertex>& c) {
    return c[Uniform(rng, 0, static_cast<int>(c.size()) - 1)];
  };
  // Random E-paths of length k <= 5 avoiding C(b).
  RunTrials(r, cfg, Pick(cfg.trials, 200), [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int k = Uniform(rng, 1, 5);
    Vertex start = Vertex::FromPrimitive(RandomPrimitive(seed, Uniform(rng, 0, 4)));
    while (AreConjugate(start, b)) start = Vertex::FromPrimitive(RandomPrimitive(rng(), 3));
    std::vector<Vertex> path{start};
    while (static_cast<int>(path.size()) <= k) {
      std::vector<Vertex> c;
      for (const Vertex& v : Neighbors(path.back(), 3))
        if (!AreConjugate(v, b)) c.push_back(v);
      path.push_back(pick(rng, c));
    }
    TrialOutcome t;
    t.Count("avoiding_paths");
    const int gap = std::abs(VertexTile(path.front()) - VertexTile(path.back()));
    if (gap > k)
      t.Fail(path.front().ToString() + " .. " + path.back().ToString(), "<= " + std::to_string(k),
             std::to_string(gap));
    return t;
  }, 1);
  // Paths from a avoiding C_m(b), m >= k, with a lambda certificate: the
  // first m + 2 - k b-tiles of lambda are bounded by 2^{k+1} - 1.
  RunTrials(r, cfg, 100, [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrialOutcome t;
    for (int attempt = 0; attempt < 20; ++attempt) {
      const int k = Uniform(rng, 1, 4);
      const int m = k + Uniform(rng, 0, 2);
      std::vector<Vertex> path{Vertex::FromPrimitive(Word::A())};
      bool stuck = false;
      while (!stuck && static_cast<int>(path.size()) <= k) {
        const bool last = static_cast<int>(path.size()) == k;
        std::vector<Vertex> c;
        for (const Vertex& v : Neighbors(path.back(), 2)) {
          const auto d = CDistance(v, b);
          if (last || !d || *d > m) c.push_back(v);
        }
        if (c.empty()) stuck = true;
        else path.push_back(pick(rng, c));
      }
      if (stuck) continue;
      const auto s = LambdaAlongPath(path, 4);
      if (!s) {
        t.Count("lambda_not_found");
        continue;
      }
      // The bound is stated for the inverse of f(t_0)^{s_0} ... f(t_k)^{s_k}.
      const Word lambda = LambdaWord(path, *s).Inverse();
      const std::vector<int> tiles = TileProfileOf(lambda).tiles;
      const int bound = (1 << (k + 1)) - 1;
      t.Count("crucial_instances");
      for (int i = 0; i < std::min<int>(m + 2 - k, static_cast<int>(tiles.size())); ++i)
        if (std::abs(tiles[i]) > bound)
          t.Fail("k=" + std::to_string(k) + " m=" + std::to_string(m) + " lambda=" + lambda.ToString(),
                 "tile <= " + std::to_string(bound), std::to_string(tiles[i]));
      return t;
    }
    t.Fail("20 attempts", "a path with a lambda certificate", "none found");
    return t;
  }, 2);
}

inline bool LiteralPab(const Word& w) {
  if (w.empty() || !(w.FirstLetter() == kLetterA) || w.LastLetter().base != Gen::kB) return false;
  for (const Syllable& s : w.syllables())
    if (s.base == Gen::kA && s.exp < 0) return false;
  return true;
}

inline void FareyLabels(SuiteResult& r, const RunConfig& cfg) {
  const FareyGraph fg = LabelFarey(BuildFarey(5));
  std::set<Word, WordLess> seen;
  std::set<ClassId> classes;
  auto fail = [&](const std::string& in, const std::string& exp, const std::string& act) {
    r.failures.push_back({cfg.seed, in, exp, act});
  };
  for (const FareyVertex& v : fg.vertices) {
    ++r.trials;
    const Word& w = v.label;
    if (!IsPrimitive(w).primitive) fail(w.ToString(), "primitive", "not primitive");
    const bool exempt = w == Word::A() || w == Word::B();
    if (!exempt && (!LiteralPab(w) || !InPab(w))) fail(w.ToString(), "in P_ab", "outside");
    if (!seen.insert(w).second || !classes.insert(ProjectWord(w)).second)
      fail(w.ToString(), "distinct", "repeated");
  }
  r.tallies["labels"] = static_cast<long>(fg.vertices.size());
  const int window = Pick(cfg.window, 3);
  const FareyGraph f4 = LabelFarey(BuildFarey(4));
  for (const FareyEdge& e : f4.edges)
    for (int dir = 0; dir < 2; ++dir) {
      const Vertex x = Vertex::FromPrimitive(f4.vertices[dir ? e.to : e.from].label);
      const ClassId cy = ProjectWord(dir ? e.from_label : e.to_label);
      r.tallies["oriented_edges"] += 1;
      for (const Vertex& y : Neighbors(x, window)) {
        if (!(Project(y) == cy)) continue;
        ++r.trials;
        r.tallies["certificates"] += 1;
        if (!SingleEdgeExponent(x, y, 4)) fail(x.ToString() + " " + y.ToString(), "|k| <= 4", "none");
      }
    }
}

}  // namespace suites

// ---------------------------------------------------------------------------

struct PlantedDefect {
  int axiom = 0;
  std::string description;
  LStructure structure;
};

// Small structures each breaking one axiom of T on purpose.
inline std::vector<PlantedDefect> PlantedDefects() {
  std::vector<PlantedDefect> out;
  const AdmissibleStructure ext2 = SingleBlock(2);
  const LStructure base = Derive(ext2);
  const auto id = [&](const char* w) { return ext2.Find(0)->ids.at(ParseVertex(w)); };
  const VertexPair ab{ParseVertex("a"), ParseVertex("b")};
  {
    LStructure l = base;
    const int v = ext2.vertex_count();
    l.vertices.insert(v);
    l.occurrences[v] = {};
    out.push_back({1, "isolated vertex added to Ext_2", l});
  }
  {
    AdmissibleStructure m = SingleBlock(1);
    const auto& ids = m.Find(0)->ids;
    m.AddComponent(ab, 1, {{ab.first, ids.at(ab.first)}, {ab.second, ids.at(ab.second)}});
    out.push_back({2, "two copies of Ext_1 sharing only the edge (a, b)", Derive(m)});
  }
  {
    LStructure l = base;
    l.c.insert(SortedIds(id("abA"), id("Aba")));
    out.push_back({3, "C-edge closing a C-cycle in Ext_2", l});
  }
  {
    LStructure l = base;
    l.orth.erase(SortedIds(id("abA"), id("Aba")));
    out.push_back({4, "orthogonal pair removed from Ext_2", l});
  }
  {
    LStructure l = base;
    l.par.insert(SortedIds(id("a"), id("ab")));
    out.push_back({5, "parallel pair without an orthogonal witness", l});
  }
  {
    const LStructure l3 = Derive(SingleBlock(3));
    bool planted = false;
    for (const auto& [z, ns] : l3.Adjacency(l3.c))
      for (int x1 : ns)
        for (int x2 : ns)
          for (int y : ns) {
            if (planted || x1 == x2 || y == x1 || y == x2) continue;
            if (!l3.par.count(SortedIds(x1, x2)) || !l3.orth.count(SortedIds(y, x1))) continue;
            LStructure l = l3;
            l.orth.erase(SortedIds(y, x2));
            l.par.insert(SortedIds(y, x2));
            out.push_back({6, "orthogonal pair of Ext_3 flipped to parallel", l});
            planted = true;
          }
  }
  {
    AdmissibleStructure m = SingleBlock(1);
    m.AddComponent(ab, 1, {{ab.second, m.Find(0)->ids.at(ab.first)}});
    LStructure l = Derive(m);
    l.c.insert(SortedIds(m.Find(0)->ids.at(ParseVertex("ab")), m.Find(1)->ids.at(ParseVertex("ab"))));
    out.push_back({8, "C-edge between two copies with no common copy", l});
  }
  return out;
}

namespace suites {

inline std::string FixtureDir(const RunConfig& cfg) {
  if (!cfg.fixture_dir.empty()) return cfg.fixture_dir;
#ifdef AF2_FIXTURE_DIR
  return AF2_FIXTURE_DIR;
#else
  throw Error(ErrorKind::kIo, "no fixture directory configured");
#endif
}

inline std::string ShowPairs(const std::set<VertexPair>& s) {
  std::string out;
  for (const auto& [u, v] : s) out += (out.empty() ? "" : ", ") + u.ToString() + "-" + v.ToString();
  return "{" + out + "}";
}

template <class Set>
Set Minus(const Set& x, const Set& y) {
  Set out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()),
                      x.key_comp());
  return out;
}

// Structural comparison of Ext_2((a, b)) with the transcribed listing, then a
// byte comparison of its canonical JSON with the reviewed fixture.
inline void Ext2Golden(SuiteResult& r, const RunConfig& cfg) {
  const std::string dir = FixtureDir(cfg);
  const BlockGraph listed = BlockFromListing(ReadJson(dir + "/ext2_listing.json"));
  const BlockGraph built = BuildExt({ParseVertex("a"), ParseVertex("b")}, 2);
  auto compare = [&](const std::string& what, const std::set<VertexPair>& l,
                     const std::set<VertexPair>& b) {
    ++r.trials;
    const auto lo = Minus(l, b);
    const auto bo = Minus(b, l);
    r.tallies[what] = static_cast<long>(l.size());
    if (!lo.empty() || !bo.empty())
      r.failures.push_back({cfg.seed, what, "listed only " + ShowPairs(lo), "built only " + ShowPairs(bo)});
  };
  ++r.trials;
  r.tallies["vertices"] = static_cast<long>(listed.size());
  if (listed.birth != built.birth)
    r.failures.push_back({cfg.seed, "vertices", std::to_string(listed.size()) + " listed",
                          std::to_string(built.size()) + " built"});
  compare("e_edges", listed.e_edges, built.e_edges);
  compare("c_edges", listed.c_edges, built.c_edges);
  compare("par", listed.par, built.par);
  ++r.trials;
  r.tallies["orth"] = static_cast<long>(listed.orth.size());
  if (listed.orth != built.orth)
    r.failures.push_back({cfg.seed, "orth", "listed witnesses", "built witnesses differ"});
  const std::string fixture = ReadText(dir + "/ext2_canonical.json");
  ++r.trials;
  if (Dump(ToJson(listed)) != fixture)
    r.failures.push_back({cfg.seed, "ext2_canonical.json", "rendering of the listing", "stale fixture"});
  ++r.trials;
  if (Dump(ToJson(built)) != fixture)
    r.failures.push_back({cfg.seed, "canonical JSON bytes", "equal to ext2_canonical.json", "differs"});
}

inline void Amalgamation(SuiteResult& r, const RunConfig& cfg) {
  const ExtensionLimits lim{4, std::min(3, cfg.level_cap)};
  RunTrials(r, cfg, Pick(cfg.trials, 100), [lim](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const AdmissibleStructure a = RandomStrongExtension(SingleBlock(1), rng, Uniform(rng, 0, 2), lim);
    const AdmissibleStructure b = RandomStrongExtension(a, rng, Uniform(rng, 1, 3), lim);
    const AdmissibleStructure c = RandomStrongExtension(a, rng, Uniform(rng, 1, 3), lim);
    const Amalgam am = Amalgamate(a, b, c);
    TrialOutcome t;
    const std::string in = "components A/B/C " + std::to_string(a.components().size()) + "/" +
                           std::to_string(b.components().size()) + "/" +
                           std::to_string(c.components().size());
    const AdmissibilityReport rep = ValidateAdmissible(am.d);
    if (!rep.valid()) t.Fail(in, "D admissible", "violates " + std::to_string(*rep.Violated().begin()));
    if (!IsStrong(b, am.d)) t.Fail(in, "B strong in D", "not strong");
    if (!IsStrong(am.c_image, am.d)) t.Fail(in, "C strong in D", "not strong");
    t.Count("components_in_d", static_cast<long>(am.d.components().size()));
    return t;
  });
  for (int lo = 1; lo <= 3; ++lo)
    for (int hi = lo; hi <= 3; ++hi) {
      const Amalgam am = Amalgamate(SingleBlock(lo), SingleBlock(hi), SingleBlock(3));
      ++r.trials;
      const auto& comps = am.d.components();
      std::set<Vertex> words;
      if (comps.size() == 1)
        for (const auto& [w, gid] : comps[0].ids) words.insert(w);
      const auto block = StandardBlock(3).Vertices();
      if (comps.size() != 1 || comps[0].level != 3 || words != std::set<Vertex>(block.begin(), block.end()))
        r.failures.push_back({cfg.seed, "Ext_" + std::to_string(lo) + " <= Ext_" + std::to_string(hi) + ", Ext_3",
                              "D = Ext_3", std::to_string(comps.size()) + " components"});
    }
}

inline void Axioms(SuiteResult& r, const RunConfig& cfg) {
  const int window = Pick(cfg.window, 4);
  auto check_true = [&](const LStructure& l, const std::string& what, TrialOutcome& t) {
    const AxiomReport rep = CheckAxioms(l, window);
    for (int ax = 1; ax <= 8; ++ax)
      if (!rep.at(ax).ok())
        t.Fail(what, "axiom " + std::to_string(ax) + " holds",
               AxiomStatusName(rep.at(ax).status) +
                   (rep.at(ax).details.empty() ? "" : ": " + rep.at(ax).details.front()));
  };
  for (int k = 1; k <= std::min(3, cfg.level_cap); ++k) {
    TrialOutcome t;
    check_true(Derive(SingleBlock(k)), "Ext_" + std::to_string(k), t);
    ++r.trials;
    r.tallies["ext_fragments"] += 1;
    if (t.failure) r.failures.push_back(*t.failure);
  }
  RunTrials(r, cfg, Pick(cfg.trials, 40), [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const AdmissibleStructure m = RandomStrongExtension(SingleBlock(1), rng, Uniform(rng, 1, 4));
    TrialOutcome t;
    if (!ValidateAdmissible(m).valid()) {
      t.Fail("generated structure", "admissible", "not admissible");
      return t;
    }
    t.Count("generated_structures");
    check_true(Derive(m), "generated structure", t);
    return t;
  });
  for (const PlantedDefect& d : PlantedDefects()) {
    ++r.trials;
    r.tallies["planted_defects"] += 1;
    const std::set<int> failed = CheckAxioms(d.structure, window).Failed();
    if (!failed.count(d.axiom)) {
      std::string got;
      for (int ax : failed) got += (got.empty() ? "" : ",") + std::to_string(ax);
      r.failures.push_back({cfg.seed, d.description, "axiom " + std::to_string(d.axiom) + " rejected",
                            "failed {" + got + "}"});
    }
  }
}

// Blocks over random bases against the standard block, then every pair via
// the composed maps.
inline void BlockIso(SuiteResult& r, const RunConfig& cfg) {
  const int bases = Pick(cfg.trials, 50);
  const int top = std::min(4, cfg.level_cap);
  for (int k = 1; k <= top; ++k) {
    const AnnotatedGraph standard = Annotated(StandardBlock(k));
    std::vector<AnnotatedGraph> graphs(bases);
    std::vector<std::optional<std::vector<int>>> maps(bases);
    RunTrials(r, cfg, bases, [&](std::uint64_t seed, int index) {
      std::mt19937_64 rng(seed);
      const VertexPair base = RandomBase(rng, Uniform(rng, 1, 8));
      TrialOutcome t;
      const AnnotatedGraph g = Annotated(BuildExt(base, k));
      const auto map = FindIsomorphism(standard, g);
      if (!map || !IsIsomorphism(standard, g, *map))
        t.Fail("level " + std::to_string(k) + " over (" + base.first.ToString() + ", " +
                   base.second.ToString() + ")",
               "isomorphic to the standard block", "no isomorphism");
      graphs[index] = g;
      maps[index] = map;
      return t;
    }, static_cast<std::uint64_t>(k));
    long pairs = 0;
    for (int i = 0; i < bases; ++i)
      for (int j = i + 1; j < bases; ++j) {
        if (!maps[i] || !maps[j]) continue;
        std::vector<int> inv(standard.size());
        for (int v = 0; v < standard.size(); ++v) inv[(*maps[i])[v]] = v;
        std::vector<int> composed(standard.size());
        for (int v = 0; v < standard.size(); ++v) composed[v] = (*maps[j])[inv[v]];
        ++pairs;
        if (!IsIsomorphism(graphs[i], graphs[j], composed))
          r.failures.push_back({cfg.seed, "level " + std::to_string(k) + " pair " + std::to_string(i) +
                                              "," + std::to_string(j),
                                "isomorphic", "composed map fails"});
      }
    r.tallies["pairs_level_" + std::to_string(k)] = pairs;
  }
}

}  // namespace suites

struct SuiteInfo {
  const char* name;
  int criterion;
  const char* summary;
  void (*run)(SuiteResult&, const RunConfig&);
};

inline const std::vector<SuiteInfo>& Suites() {
  static const std::vector<SuiteInfo> all = {
      {"sticks", 1, "common neighbours of an edge are its four sticks", suites::Sticks},
      {"ext2-golden", 2, "Ext_2((a,b)) against the transcribed listing", suites::Ext2Golden},
      {"triple-conjugate", 3, "three distinct conjugates share at most one neighbour", suites::TripleConjugate},
      {"common-neighbours", 4, "C-edges are the pairs with at least five common neighbours", suites::CommonNeighbours},
      {"conjugacy-tree", 5, "C-distance, unique C-paths and no C-cycles", suites::ConjugacyTree},
      {"four-neighbours", 6, "every line has exactly four neighbour lines", suites::FourNeighbours},
      {"tile-bounds", 7, "tile gaps on Farey edges, avoiding paths and lambda", suites::TileBounds},
      {"farey-labels", 8, "Farey labels and single-edge certificates", suites::FareyLabels},
      {"amalgamation", 9, "amalgams of admissible structures", suites::Amalgamation},
      {"axioms", 10, "axioms of T on valid and planted structures", suites::Axioms},
      {"basis-cross", 11, "Nielsen basis test against the commutator oracle", suites::BasisCross},
      {"block-iso", 12, "blocks over random bases are isomorphic", suites::BlockIso},
  };
  return all;
}

inline SuiteResult RunSuite(const std::string& name, const RunConfig& cfg) {
  for (const SuiteInfo& s : Suites()) {
    if (name != s.name) continue;
    SuiteResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    s.run(r, cfg);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::kUnknownSuite, name);
}

}  // namespace af2

#endif  // AF2_SUITES_HPP_
