#include "doctest.h"

#include <sstream>

#include "conifano/io.hpp"

using namespace conifano;

TEST_CASE("parse d x n blocks with comments and ids") {
  std::istringstream in(
      "# V(1)\n"
      "4 5\n"
      " 1 0 0 0 -4\n"
      " 0 1 0 0 -1\n"
      " 0 0 1 0 -1\n"
      " 0 0 0 1 -1\n"
      "\n"
      "2 3\n"
      "1 0 -1\n"
      "0 1 -1\n");
  auto ps = parse_polytopes(in);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].id == "V(1)");
  REQUIRE(ps[0].vertices.size() == 5);
  CHECK(ps[0].vertices[4] == IntVec{-4, -1, -1, -1});
  CHECK(ps[1].id == "poly1");
  CHECK(ps[1].vertices.size() == 3);
}

TEST_CASE("PALP orientation auto-detect") {
  // 5 x 4: rows are vertices
  std::istringstream in(
      "5 4\n"
      " 1 0 0 0\n"
      " 0 1 0 0\n"
      " 0 0 1 0\n"
      " 0 0 0 1\n"
      "-4 -1 -1 -1\n");
  auto ps = parse_polytopes(in);
  REQUIRE(ps.size() == 1);
  REQUIRE(ps[0].vertices.size() == 5);
  CHECK(ps[0].vertices[0] == IntVec{1, 0, 0, 0});

  std::istringstream sq(
      "4 4\n"
      "1 0 0 0\n"
      "0 1 0 0\n"
      "0 0 1 0\n"
      "0 0 0 1\n");
  CHECK_THROWS_AS(parse_polytopes(sq), error);
  std::istringstream sq2(
      "4 4\n"
      "1 0 0 0\n"
      "0 1 0 0\n"
      "0 0 1 0\n"
      "0 0 0 1\n");
  auto forced = parse_polytopes(sq2, HeaderOrder::RowsAreVertices);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].vertices.size() == 4);
}

TEST_CASE("parse errors carry positions") {
  std::istringstream bad1("4\n1 2 3 4\n");
  CHECK_THROWS_AS(parse_polytopes(bad1), error);
  std::istringstream bad2("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(parse_polytopes(bad2), error);
  std::istringstream bad3("2 2\n1 x\n3 4\n");
  CHECK_THROWS_AS(parse_polytopes(bad3), error);
}

TEST_CASE("print_polytope round trips") {
  ParsedPolytope p;
  p.id = "demo";
  p.vertices = {{1, 0}, {0, 1}, {-1, -1}};
  std::istringstream in(print_polytope(p));
  auto back = parse_polytopes(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0].vertices == p.vertices);
}

TEST_CASE("bundled ground truth loads") {
  auto entries = load_ground_truth();
  REQUIRE(entries.size() == 166);
  CHECK(entries.front().id == "V(1)");
  CHECK(entries.front().expected.deg == 64);
  CHECK(entries.front().expected.typeLabel == "4,2");
  CHECK(entries.back().id == "V(166)");
  CHECK(entries.back().expected.b2 == 5);
  int rank1 = 0;
  for (const auto& e : entries)
    if (!e.expected.typeLabel.empty()) ++rank1;
  CHECK(rank1 == 23);
}

TEST_CASE("verify reports corrupted expectations") {
  auto entries = load_ground_truth();
  entries.resize(4);  // V(1)..V(4)
  REQUIRE(entries[2].id == "V(3)");
  entries[2].expected.dp = 11;
  VerifyReport r = verify(entries, 2);
  CHECK(r.total == 4);
  CHECK(r.passed == 3);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].id == "V(3)");
  CHECK(r.mismatches[0].field == "dp");
  CHECK(r.mismatches[0].expected == "11");
  CHECK(r.mismatches[0].computed == "12");
}

TEST_CASE("series hash is stable") {
  auto entries = load_ground_truth();
  SeriesTable S = phi0(relation_lattice(Polytope::from_vertices(entries[0].vertices)), 8);
  CHECK(series_hash(S) == "c9732f91ddc9238a");
}

TEST_CASE("record formatting") {
  InvariantRecord r;
  r.id = "V(1)";
  r.vert = 5;
  r.deg = 64;
  r.py = 1;
  r.b2 = 1;
  r.typeLabel = "4,2";
  std::string tsv = format_record(r, true, "deadbeef00000000", RecordFormat::Tsv);
  CHECK(tsv.find("V(1)\t1\t5") == 0);
  CHECK(tsv.find("deadbeef00000000") != std::string::npos);
  std::string js = format_record(r, true, "deadbeef00000000", RecordFormat::JsonLines);
  CHECK(js.find("\"id\":\"V(1)\"") != std::string::npos);
  CHECK(js.find("\"accepted\":true") != std::string::npos);
  CHECK(record_header(RecordFormat::Tsv).find("id\t") != std::string::npos);
}

TEST_CASE("parallel_map preserves order") {
  auto out = parallel_map(20, 4, [](int i) { return std::to_string(i * i); });
  REQUIRE(out.size() == 20);
  for (int i = 0; i < 20; ++i) CHECK(out[i] == std::to_string(i * i));
}
