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


// f2: command-line front end to the af2 library and its verification suites.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "af2/suites.hpp"

namespace {

using af2::Json;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

Json Moves(const std::vector<af2::NielsenMove>& moves) {
  Json out = Json::array();
  for (af2::NielsenMove m : moves) out.push_back(af2::MoveName(m));
  return out;
}

Json Vertices(const std::vector<af2::Vertex>& vs) {
  Json out = Json::array();
  for (const af2::Vertex& v : vs) out.push_back(v.ToString());
  return out;
}

// Writes to `path` when given, otherwise JSON on stdout.
template <class G>
void Emit(const G& g, const std::string& path) {
  if (path.empty())
    std::cout << af2::Render(g, af2::Format::kJson);
  else
    af2::Export(g, af2::FormatOf(path), path);
}

void Print(const Json& j) { std::cout << af2::Dump(j); }

int Verify(const std::vector<std::string>& names, af2::RunConfig cfg) {
  std::vector<std::string> run = names;
  if (run.size() == 1 && run[0] == "all") {
    run.clear();
    for (const af2::SuiteInfo& s : af2::Suites()) run.push_back(s.name);
  }
  Json reports = Json::array();
  bool ok = true;
  for (const std::string& name : run) {
    const af2::SuiteResult r = af2::RunSuite(name, cfg);
    ok = ok && r.passed();
    std::cerr << (r.passed() ? "pass " : "FAIL ") << r.name << ": " << r.trials << " trials, "
              << r.failures.size() << " failures, " << r.wall_seconds << " s\n";
    for (const af2::Failure& f : r.failures)
      std::cerr << "  seed " << f.seed << " " << f.inputs << ": expected " << f.expected
                << ", got " << f.actual << "\n";
    reports.push_back(af2::ToJson(r));
  }
  const Json out = reports.size() == 1 ? reports[0] : reports;
  if (cfg.output.empty())
    Print(out);
  else
    af2::WriteText(cfg.output, af2::Dump(out));
  return ok ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-2 free factor complex toolkit"};
  app.require_subcommand(1);
  int status = kExitPass;

  af2::RunConfig cfg;
  cfg.level_cap = af2::LevelCap();
  std::vector<std::string> suite_names;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite_names, "suite name, repeatable, or 'all'")->required();
  verify->add_option("--seed", cfg.seed, "base seed");
  verify->add_option("--window", cfg.window, "window override, 0 for suite default");
  verify->add_option("--trials", cfg.trials, "trial count override, 0 for suite default");
  verify->add_option("--out", cfg.output, "JSON report path");
  verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  verify->add_option("--fixtures", cfg.fixture_dir, "fixture directory");
  verify->callback([&] { status = Verify(suite_names, cfg); });

  auto* list = app.add_subcommand("suites", "list the registered suites");
  list->callback([&] {
    for (const af2::SuiteInfo& s : af2::Suites())
      std::cout << s.criterion << "\t" << s.name << "\t" << s.summary << "\n";
  });

  std::string word1, word2, out_path;
  auto* primitive = app.add_subcommand("primitive", "primitivity verdict with certificate");
  primitive->add_option("word", word1)->required();
  primitive->callback([&] {
    const af2::Word w = af2::Word::Parse(word1);
    const af2::PrimitivityCertificate c = af2::IsPrimitive(w);
    Print({{"word", w.ToString()},
           {"primitive", c.primitive},
           {"moves", Moves(c.moves)},
           {"refutation", c.refutation}});
  });

  auto* basis = app.add_subcommand("basis", "basis verdict with certificate");
  basis->add_option("u", word1)->required();
  basis->add_option("v", word2)->required();
  basis->callback([&] {
    const af2::Word u = af2::Word::Parse(word1);
    const af2::Word v = af2::Word::Parse(word2);
    const af2::PairReduction r = af2::NielsenReducePair(u, v);
    Json j{{"u", u.ToString()}, {"v", v.ToString()}, {"basis", r.is_basis}, {"moves", Moves(r.moves)}};
    if (r.is_basis) j["to_standard"] = r.to_standard.ToString();
    Print(j);
  });

  std::vector<std::string> base;
  int level = 0;
  auto* ext = app.add_subcommand("ext", "build the block Ext_k over a basis");
  ext->add_option("--base", base, "two basis words")->expected(2)->required();
  ext->add_option("--level", level)->required();
  ext->add_option("--out", out_path, "output file, .json or .dot");
  ext->callback([&] {
    const af2::VertexPair e{af2::ParseVertex(base[0]), af2::ParseVertex(base[1])};
    if (!af2::IsEdge(e.first, e.second))
      throw af2::Error(af2::ErrorKind::kNotAnEdge, base[0] + " " + base[1]);
    Emit(af2::BuildExt(e, level), out_path);
  });

  int levels = 0;
  bool labels = false;
  auto* farey = app.add_subcommand("farey", "build the Farey graph");
  farey->add_option("--levels", levels)->required();
  farey->add_flag("--labels", labels, "attach the labelling by cyclic words");
  farey->add_option("--out", out_path, "output file, .json or .dot");
  farey->callback([&] {
    af2::FareyGraph g = af2::BuildFarey(levels);
    if (labels) g = af2::LabelFarey(std::move(g));
    Emit(g, out_path);
  });

  auto* cpath = app.add_subcommand("cpath", "unique C-path between conjugate vertices");
  cpath->add_option("x", word1)->required();
  cpath->add_option("y", word2)->required();
  cpath->callback([&] {
    const auto path = af2::CPath(af2::ParseVertex(word1), af2::ParseVertex(word2));
    Print({{"distance", static_cast<int>(path.size()) - 1}, {"path", Vertices(path)}});
  });

  auto* classify = app.add_subcommand("classify", "parallel or orthogonal at C-distance two");
  classify->add_option("x", word1)->required();
  classify->add_option("y", word2)->required();
  classify->callback([&] {
    const af2::PairClass c = af2::ClassifyPair(af2::ParseVertex(word1), af2::ParseVertex(word2));
    Json j{{"relation", c.parallel ? "par" : "orth"}};
    j["witness"] = c.witness ? Json(c.witness->ToString()) : Json(nullptr);
    Print(j);
  });

  int window = 2;
  auto* line = app.add_subcommand("line", "the line through a C-edge");
  line->add_option("x", word1)->required();
  line->add_option("y", word2)->required();
  line->add_option("--window", window, "points per side");
  line->callback([&] {
    const af2::Vertex x = af2::ParseVertex(word1);
    const af2::Vertex y = af2::ParseVertex(word2);
    const af2::Line l = af2::MakeLine(x, y);
    const af2::VertexSet pts = af2::LinePoints(x, y, window);
    Json nb = Json::array();
    for (const af2::Line& m : af2::LineNeighbours(l))
      nb.push_back(Json::array({m.first.ToString(), m.second.ToString()}));
    Print({{"line", Json::array({l.first.ToString(), l.second.ToString()})},
           {"points", Vertices({pts.begin(), pts.end()})},
           {"neighbours", nb}});
  });

  std::vector<std::string> inputs;
  auto* adm = app.add_subcommand("admissible", "admissible structures");
  adm->require_subcommand(1);
  auto load = [&](std::size_t i) { return af2::StructureFromJson(af2::ReadJson(inputs.at(i))); };
  auto* validate = adm->add_subcommand("validate", "check the admissibility conditions");
  validate->add_option("--in", inputs)->expected(1)->required();
  validate->callback([&] {
    const af2::AdmissibilityReport r = af2::ValidateAdmissible(load(0));
    Json v = Json::object();
    for (const auto& [k, details] : r.violations) v[std::to_string(k)] = details;
    Print({{"valid", r.valid()}, {"violations", v}});
    if (!r.valid()) status = kExitFailure;
  });
  auto* amalgamate = adm->add_subcommand("amalgamate", "amalgam of B and C over A");
  amalgamate->add_option("--in", inputs, "A B C")->expected(3)->required();
  amalgamate->add_option("--out", out_path, "output file, .json or .dot");
  amalgamate->callback([&] { Emit(af2::Amalgamate(load(0), load(1), load(2)).d, out_path); });
  auto* chain = adm->add_subcommand("chain", "minimal chain from A to B");
  chain->add_option("--in", inputs, "A B")->expected(2)->required();
  chain->callback([&] {
    Json steps = Json::array();
    for (const af2::AdmissibleStructure& m : af2::MinimalChain(load(0), load(1)))
      steps.push_back(af2::ToJson(m));
    Print(steps);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const af2::Error& e) {
    std::cerr << "f2: " << e.what() << "\n";
    return kExitConfig;
  }
  return status;
}
