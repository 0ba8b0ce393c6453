#include "conifano/io.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef CONIFANO_BUNDLED_DATA
#define CONIFANO_BUNDLED_DATA "core/data/fano166.txt"
#endif

namespace conifano {

namespace {

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

Int parse_int_token(const std::string& tok, int line, int col) {
  try {
    size_t pos = 0;
    (void)std::stol(tok, &pos);  // cheap syntax check; value comes from mpz
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return Int(tok);
  } catch (const std::exception&) {
    std::ostringstream os;
    os << "non-integer token '" << tok << "' at line " << line << ", column " << col;
    throw error(os.str());
  }
}

std::vector<std::pair<std::string, int>> tokenize(const std::string& s) {
  std::vector<std::pair<std::string, int>> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) toks.emplace_back(s.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return toks;
}

std::vector<IntVec> orient(const std::vector<IntVec>& grid, int a, int b, HeaderOrder order,
                           int headerLine) {
  auto columnsOf = [](const std::vector<IntVec>& g) {
    std::vector<IntVec> cols(g[0].size(), IntVec(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = 0; j < g[i].size(); ++j) cols[j][i] = g[i][j];
    return cols;
  };
  auto fullDim = [](const std::vector<IntVec>& verts) {
    try {
      Polytope::from_vertices(verts);
      return true;
    } catch (const error&) {
      return false;
    }
  };
  std::vector<IntVec> asCoords = columnsOf(grid);  // d=a, n=b: vertices are columns
  std::vector<IntVec> asVerts = grid;              // PALP: rows are vertices, d=b, n=a
  switch (order) {
    case HeaderOrder::RowsAreCoordinates:
      return asCoords;
    case HeaderOrder::RowsAreVertices:
      return asVerts;
    case HeaderOrder::Auto:
      break;
  }
  if (a == b) {
    std::ostringstream os;
    os << "ambiguous square header at line " << headerLine
       << "; specify the row orientation explicitly";
    throw error(os.str());
  }
  bool coords4 = (a == 4) && fullDim(asCoords);
  bool verts4 = (b == 4) && fullDim(asVerts);
  if (coords4 && !verts4) return asCoords;
  if (verts4 && !coords4) return asVerts;
  if (coords4 && verts4) {
    std::ostringstream os;
    os << "ambiguous header at line " << headerLine << "; both orientations are 4-dimensional";
    throw error(os.str());
  }
  if (fullDim(asCoords)) return asCoords;
  if (fullDim(asVerts)) return asVerts;
  std::ostringstream os;
  os << "degenerate polytope block at line " << headerLine;
  throw error(os.str());
}

}  // namespace

std::vector<ParsedPolytope> parse_polytopes(std::istream& in, HeaderOrder order) {
  std::vector<ParsedPolytope> out;
  std::string line, pendingId;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) {
      continue;
    }
    auto toks = tokenize(line);
    if (toks[0].first[0] == '#') {
      std::string rest = line.substr(line.find('#') + 1);
      auto rtoks = tokenize(rest);
      if (!rtoks.empty()) pendingId = rtoks[0].first;
      continue;
    }
    if (toks.size() != 2) {
      std::ostringstream os;
      os << "malformed header at line " << lineno << ": expected two integers";
      throw error(os.str());
    }
    long a, b;
    try {
      a = std::stol(toks[0].first);
      b = std::stol(toks[1].first);
    } catch (const std::exception&) {
      std::ostringstream os;
      os << "malformed header at line " << lineno;
      throw error(os.str());
    }
    if (a < 1 || b < 1 || a > 64 || b > 64) {
      std::ostringstream os;
      os << "malformed header at line " << lineno << ": implausible dimensions";
      throw error(os.str());
    }
    int headerLine = lineno;
    std::vector<IntVec> grid;
    std::vector<Int> cur;
    while (static_cast<long>(grid.size()) < a) {
      if (!std::getline(in, line)) {
        std::ostringstream os;
        os << "entry count mismatch in block at line " << headerLine << ": expected " << a
           << " rows of " << b << " integers";
        throw error(os.str());
      }
      ++lineno;
      if (is_blank(line)) continue;
      for (auto& [tok, col] : tokenize(line)) {
        if (tok[0] == '#') break;
        cur.push_back(parse_int_token(tok, lineno, col));
        if (static_cast<long>(cur.size()) == b) {
          grid.emplace_back(std::move(cur));
          cur.clear();
        }
      }
      if (!cur.empty() && static_cast<long>(grid.size()) == a) {
        std::ostringstream os;
        os << "entry count mismatch at line " << lineno << ": extra tokens";
        throw error(os.str());
      }
    }
    ParsedPolytope p;
    p.id = pendingId.empty() ? "poly" + std::to_string(out.size()) : pendingId;
    p.vertices = orient(grid, static_cast<int>(a), static_cast<int>(b), order, headerLine);
    out.push_back(std::move(p));
    pendingId.clear();
  }
  return out;
}

std::vector<ParsedPolytope> parse_polytope_file(const std::string& path, HeaderOrder order) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_polytopes(in, order);
}

std::string print_polytope(const ParsedPolytope& p) {
  std::ostringstream os;
  if (!p.id.empty()) os << "# " << p.id << "\n";
  int n = static_cast<int>(p.vertices.size());
  int d = n ? static_cast<int>(p.vertices[0].size()) : 0;
  os << d << " " << n << "\n";
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string s = p.vertices[j][i].get_str();
      os << (j ? " " : "");
      for (size_t pad = s.size(); pad < 3; ++pad) os << ' ';
      os << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string bundled_dataset_path() { return CONIFANO_BUNDLED_DATA; }

std::vector<GroundTruthEntry> load_ground_truth(const std::string& path) {
  std::string p = path.empty() ? bundled_dataset_path() : path;
  std::ifstream in(p);
  if (!in) throw error("cannot open dataset '" + p + "'");
  std::vector<GroundTruthEntry> out;
  std::string line;
  int lineno = 0;
  GroundTruthEntry pending;
  bool havePending = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    if (line[0] == '#') {
      auto toks = tokenize(line.substr(1));
      if (toks.empty() || toks[0].first.rfind("V(", 0) != 0) continue;
      pending = GroundTruthEntry{};
      pending.id = toks[0].first;
      pending.expected.id = pending.id;
      for (size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i].first;
        size_t eq = t.find('=');
        if (eq == std::string::npos) continue;
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        if (key == "type") {
          pending.expected.typeLabel = val;
          continue;
        }
        long v = std::stol(val);
        if (key == "deg") pending.expected.deg = v;
        else if (key == "h21") pending.expected.h21 = static_cast<int>(v);
        else if (key == "rk") pending.expected.rk = static_cast<int>(v);
        else if (key == "sq") pending.expected.sq = static_cast<int>(v);
        else if (key == "dp") pending.expected.dp = static_cast<int>(v);
        else if (key == "py") pending.expected.py = static_cast<int>(v);
        else if (key == "vert") pending.expected.vert = static_cast<int>(v);
        else if (key == "b2") pending.expected.b2 = static_cast<int>(v);
      }
      havePending = true;
      continue;
    }
    // matrix block: header then rows
    auto toks = tokenize(line);
    if (toks.size() != 2) throw error("malformed dataset header at line " + std::to_string(lineno));
    int d = std::stoi(toks[0].first), n = std::stoi(toks[1].first);
    std::vector<IntVec> rows;
    while (static_cast<int>(rows.size()) < d && std::getline(in, line)) {
      ++lineno;
      if (is_blank(line)) continue;
      IntVec row;
      for (auto& [tok, col] : tokenize(line)) row.push_back(parse_int_token(tok, lineno, col));
      if (static_cast<int>(row.size()) != n)
        throw error("entry count mismatch in dataset at line " + std::to_string(lineno));
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != d)
      throw error("truncated dataset block near line " + std::to_string(lineno));
    if (!havePending) throw error("dataset block without id near line " + std::to_string(lineno));
    pending.vertices.assign(n, IntVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) pending.vertices[j][i] = rows[i][j];
    out.push_back(std::move(pending));
    havePending = false;
  }
  return out;
}

VerifyReport verify(const std::vector<GroundTruthEntry>& entries, int jobs) {
  int count = static_cast<int>(entries.size());
  struct Result {
    std::vector<VerifyMismatch> mismatches;
    int b2 = -1;
  };
  std::vector<Result> results(count);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      const GroundTruthEntry& e = entries[i];
      Result& res = results[i];
      try {
        Polytope P = Polytope::from_vertices(e.vertices);
        InvariantRecord r = full_record(P, e.id);
        auto diff = [&](const std::string& f, auto exp, auto got) {
          std::ostringstream a, b;
          a << exp;
          b << got;
          if (a.str() != b.str()) res.mismatches.push_back({e.id, f, a.str(), b.str()});
        };
        diff("vert", e.expected.vert, r.vert);
        diff("rk", e.expected.rk, r.rk);
        diff("sq", e.expected.sq, r.sq);
        diff("dp", e.expected.dp, r.dp);
        diff("py", e.expected.py, r.py);
        diff("deg", e.expected.deg, r.deg);
        diff("h21", e.expected.h21, r.h21);
        diff("b2", e.expected.b2, r.b2);
        res.b2 = r.b2;
      } catch (const std::exception& ex) {
        res.mismatches.push_back({e.id, "error", "", ex.what()});
      }
    }
  };
  int nThreads = std::max(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (int t = 0; t < nThreads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  VerifyReport rep;
  rep.total = count;
  for (const Result& r : results) {
    if (r.mismatches.empty())
      ++rep.passed;
    else
      rep.mismatches.insert(rep.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    if (r.b2 >= 0) ++rep.histogram[r.b2];
  }
  return rep;
}

std::string series_hash(const SeriesTable& S) {
  uint64_t h = 14695981039346656037ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [key, coeff] : S.coefficients) {
    for (size_t i = 0; i < key.size(); ++i)
      feed((i ? "," : "") + std::to_string(key[i]));
    feed(":" + coeff.get_num().get_str() + "/" + coeff.get_den().get_str() + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string record_header(RecordFormat fmt) {
  if (fmt == RecordFormat::JsonLines) return "";
  return "# conifano-records v1\n"
         "id\taccepted\tvert\trk\tsq\tdp\tpy\tdeg\th21\tb2\ttorsion\ttype\tseries\n";
}

std::string format_record(const InvariantRecord& r, bool accepted, const std::string& seriesHash,
                          RecordFormat fmt) {
  std::string torsion;
  for (const Int& f : r.picardInvariantFactors)
    torsion += (torsion.empty() ? "" : ",") + f.get_str();
  if (torsion.empty()) torsion = "-";
  std::ostringstream os;
  if (fmt == RecordFormat::Tsv) {
    os << r.id << '\t' << (accepted ? 1 : 0) << '\t' << r.vert << '\t' << r.rk << '\t' << r.sq
       << '\t' << r.dp << '\t' << r.py << '\t' << r.deg << '\t' << r.h21 << '\t' << r.b2 << '\t'
       << torsion << '\t' << (r.typeLabel.empty() ? "-" : r.typeLabel) << '\t'
       << (seriesHash.empty() ? "-" : seriesHash);
  } else {
    os << "{\"id\":\"" << r.id << "\",\"accepted\":" << (accepted ? "true" : "false")
       << ",\"vert\":" << r.vert << ",\"rk\":" << r.rk << ",\"sq\":" << r.sq << ",\"dp\":" << r.dp
       << ",\"py\":" << r.py << ",\"deg\":" << r.deg << ",\"h21\":" << r.h21 << ",\"b2\":" << r.b2
       << ",\"torsion\":\"" << torsion << "\",\"type\":\""
       << (r.typeLabel.empty() ? "-" : r.typeLabel) << "\",\"series\":\""
       << (seriesHash.empty() ? "-" : seriesHash) << "\"}";
  }
  return os.str();
}

std::vector<std::string> parallel_map(int count, int jobs,
                                      const std::function<std::string(int)>& fn) {
  std::vector<std::string> out(count);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
  };
  int nThreads = std::max(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (int t = 0; t < nThreads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace conifano
