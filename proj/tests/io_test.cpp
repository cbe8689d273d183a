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


#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "af2/io.hpp"

namespace af2 {
namespace {

std::string Fixture(const std::string& name) { return std::string(AF2_FIXTURE_DIR) + "/" + name; }

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("af2_io_test_" + name)).string();
}

TEST(IoTest, Ext1JsonHasSixVertices) {
  const Json j = ToJson(StandardBlock(1));
  EXPECT_EQ(j["vertices"].size(), 6u);
  EXPECT_EQ(j["schema"]["name"], kBlockSchema);
  EXPECT_EQ(j["schema"]["version"], kSchemaVersion);
  EXPECT_EQ(j["e_edges"].size(), 9u);
  EXPECT_EQ(j["c_edges"].size(), 2u);
}

TEST(IoTest, BlockRoundTripIsByteIdentical) {
  for (int k = 0; k <= 3; ++k) {
    const std::string once = Dump(ToJson(StandardBlock(k)));
    const BlockGraph back = BlockFromJson(Json::parse(once));
    EXPECT_EQ(back, StandardBlock(k)) << k;
    EXPECT_EQ(Dump(ToJson(back)), once) << k;
  }
}

TEST(IoTest, FareyRoundTripIsByteIdentical) {
  for (const FareyGraph& g : {BuildFarey(3), LabelFarey(BuildFarey(3))}) {
    const std::string once = Dump(ToJson(g));
    const FareyGraph back = FareyFromJson(Json::parse(once));
    EXPECT_EQ(Dump(ToJson(back)), once);
    EXPECT_EQ(back.levels, g.levels);
    EXPECT_EQ(back.by_class.size(), g.by_class.size());
  }
}

TEST(IoTest, StructureRoundTripIsByteIdentical) {
  AdmissibleStructure m = SingleBlock(2);
  m.AddComponent(m.components()[0].origin, 1,
                 {{ParseVertex("b"), m.components()[0].ids.at(ParseVertex("a"))}});
  const std::string once = Dump(ToJson(m));
  const AdmissibleStructure back = StructureFromJson(Json::parse(once));
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.vertex_count(), m.vertex_count());
  EXPECT_EQ(Dump(ToJson(back)), once);
}

TEST(IoTest, DotStyles) {
  const std::string dot = ToDot(StandardBlock(1));
  EXPECT_NE(dot.find("\"aB\" -- \"Ab\" [style=dashed]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"a\" -- \"b\" [style=solid, penwidth=3]"), std::string::npos) << dot;
  EXPECT_EQ(dot.find("\"a\" -- \"ab\" [style=solid, penwidth=3]"), std::string::npos);
  EXPECT_EQ(dot, ToDot(StandardBlock(1)));
  EXPECT_NE(ToDot(LabelFarey(BuildFarey(1))).find("label=\"aab\""), std::string::npos);
  EXPECT_NE(ToDot(SingleBlock(1)).find("style=dashed"), std::string::npos);
}

TEST(IoTest, SchemaAndFormatErrors) {
  Json j = ToJson(StandardBlock(1));
  j["schema"]["version"] = kSchemaVersion + 1;
  try {
    BlockFromJson(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
  EXPECT_THROW(FareyFromJson(ToJson(StandardBlock(1))), Error);
  Json broken = ToJson(StandardBlock(1));
  broken.erase("c_edges");
  EXPECT_THROW(BlockFromJson(broken), Error);
  EXPECT_EQ(FormatOf("x/y.json"), Format::kJson);
  EXPECT_EQ(FormatOf("y.dot"), Format::kDot);
  EXPECT_THROW(FormatOf("y.txt"), Error);
  EXPECT_THROW(ReadText("/nonexistent/af2/file"), Error);
}

TEST(IoTest, ExportWritesFiles) {
  const std::string path = TempPath("ext2.json");
  Export(StandardBlock(2), FormatOf(path), path);
  EXPECT_EQ(BlockFromJson(ReadJson(path)), StandardBlock(2));
  const std::string dot = TempPath("ext2.dot");
  Export(StandardBlock(2), FormatOf(dot), dot);
  EXPECT_EQ(ReadText(dot), ToDot(StandardBlock(2)));
  std::filesystem::remove(path);
  std::filesystem::remove(dot);
}

// The reviewed canonical fixture is the listing rendered once.
TEST(IoTest, CanonicalListingFixture) {
  const BlockGraph listed = BlockFromListing(ReadJson(Fixture("ext2_listing.json")));
  EXPECT_EQ(Dump(ToJson(listed)), ReadText(Fixture("ext2_canonical.json")));
  EXPECT_EQ(listed.size(), 22u);
  EXPECT_EQ(listed.orth.size(), 6u);
}

}  // namespace
}  // namespace af2
