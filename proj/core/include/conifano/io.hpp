#pragma once

#include <functional>
#include <iosfwd>

#include "conifano/d3.hpp"
#include "conifano/invariants.hpp"

namespace conifano {

enum class HeaderOrder { Auto, RowsAreCoordinates, RowsAreVertices };

struct ParsedPolytope {
  std::string id;  // from a preceding "# V(k)" comment, else "poly<index>"
  std::vector<IntVec> vertices;
};

// PolytopeFile: "d n" header then d rows of n integers (columns = vertices);
// blocks separated by blank lines, '#' lines are comments.  A PALP-style
// "n d" header (rows = vertices) is auto-detected by which orientation yields
// a 4-dimensional polytope; square headers need an explicit order.
std::vector<ParsedPolytope> parse_polytopes(std::istream& in,
                                            HeaderOrder order = HeaderOrder::Auto);
std::vector<ParsedPolytope> parse_polytope_file(const std::string& path,
                                                HeaderOrder order = HeaderOrder::Auto);

std::string print_polytope(const ParsedPolytope& p);

struct GroundTruthEntry {
  std::string id;
  std::vector<IntVec> vertices;
  InvariantRecord expected;  // typeLabel filled for the rank-1 block
};

// Bundled dataset (or any file in the same "# V(k) key=val..." format).
std::vector<GroundTruthEntry> load_ground_truth(const std::string& path = "");
std::string bundled_dataset_path();

struct VerifyMismatch {
  std::string id;
  std::string field;
  std::string expected, computed;
};

struct VerifyReport {
  int total = 0;
  int passed = 0;
  std::vector<VerifyMismatch> mismatches;
  std::map<int, int> histogram;  // b2 -> count over computed records
};

VerifyReport verify(const std::vector<GroundTruthEntry>& entries, int jobs = 1);

// FNV-1a 64 over the canonical "deg:num/den;" rendering of the table.
std::string series_hash(const SeriesTable& S);

enum class RecordFormat { Tsv, JsonLines };

std::string record_header(RecordFormat fmt);
std::string format_record(const InvariantRecord& r, bool accepted, const std::string& seriesHash,
                          RecordFormat fmt);

// Run fn(i) for i in [0, count) on `jobs` threads; results returned in order.
std::vector<std::string> parallel_map(int count, int jobs,
                                      const std::function<std::string(int)>& fn);

}  // namespace conifano
