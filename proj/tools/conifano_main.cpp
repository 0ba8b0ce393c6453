#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "conifano/io.hpp"

using namespace conifano;

namespace {

struct CommonOpts {
  std::string out;
  std::string format = "tsv";
  std::string order = "auto";
  int jobs = 1;
  int maxDegree = 8;
  bool multi = false;
};

HeaderOrder header_order(const std::string& s) {
  if (s == "auto") return HeaderOrder::Auto;
  if (s == "coords") return HeaderOrder::RowsAreCoordinates;
  if (s == "vertices") return HeaderOrder::RowsAreVertices;
  throw error("unknown --order value '" + s + "'");
}

RecordFormat record_format(const std::string& s) {
  if (s == "tsv") return RecordFormat::Tsv;
  if (s == "json-lines") return RecordFormat::JsonLines;
  throw error("unknown --format value '" + s + "'");
}

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw error("cannot open output file '" + o.out + "'");
  return file;
}

std::vector<ParsedPolytope> parse_all(const std::vector<std::string>& files, HeaderOrder ord) {
  std::vector<ParsedPolytope> all;
  for (const std::string& f : files) {
    auto ps = parse_polytope_file(f, ord);
    all.insert(all.end(), ps.begin(), ps.end());
  }
  return all;
}

int run_check(const std::vector<std::string>& files, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  auto polys = parse_all(files, header_order(o.order));
  os << "id\taccepted\tdivisible_by_2\tfaces_ok\tk\ttriangles\tparallelograms\tother\n";
  for (const auto& p : polys) {
    ConifoldVerdict v = check_conditions(Polytope::from_vertices(p.vertices));
    int tri = 0, par = 0, other = 0;
    for (const auto& c : v.faceClasses) {
      if (c.kind == TwoFaceKind::UnimodularTriangle) ++tri;
      else if (c.kind == TwoFaceKind::UnitParallelogram) ++par;
      else ++other;
    }
    os << p.id << '\t' << v.accepted << '\t' << v.divisibleBy2 << '\t' << v.facesOk << '\t'
       << v.k << '\t' << tri << '\t' << par << '\t' << other << '\n';
  }
  return 0;
}

int run_invariants(const std::vector<std::string>& files, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  RecordFormat fmt = record_format(o.format);
  auto polys = parse_all(files, header_order(o.order));
  os << record_header(fmt);
  auto lines = parallel_map(static_cast<int>(polys.size()), o.jobs, [&](int i) {
    Polytope P = Polytope::from_vertices(polys[i].vertices);
    if (!check_conditions(P).accepted) {
      if (fmt == RecordFormat::Tsv)
        return polys[i].id + "\t0\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-\t-";
      return std::string("{\"id\":\"") + polys[i].id + "\",\"accepted\":false}";
    }
    InvariantRecord r = full_record(P, polys[i].id);
    SeriesTable s = phi0(relation_lattice(P), o.maxDegree);
    return format_record(r, true, series_hash(s), fmt);
  });
  for (const auto& l : lines) os << l << '\n';
  return 0;
}

int run_scan(const std::vector<std::string>& files, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  auto polys = parse_all(files, header_order(o.order));
  auto lines = parallel_map(static_cast<int>(polys.size()), o.jobs, [&](int i) {
    Polytope P = Polytope::from_vertices(polys[i].vertices);
    bool ok;
    try {
      ok = check_conditions(P).accepted;
    } catch (const error&) {
      ok = false;  // e.g. not reflexive
    }
    return ok ? print_polytope(polys[i]) : std::string();
  });
  for (const auto& l : lines)
    if (!l.empty()) os << l << '\n';
  return 0;
}

int run_series(const std::vector<std::string>& files, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  auto polys = parse_all(files, header_order(o.order));
  bool json = record_format(o.format) == RecordFormat::JsonLines;
  for (const auto& p : polys) {
    Polytope P = Polytope::from_vertices(p.vertices);
    RelationLattice L = relation_lattice(P);
    SeriesTable S;
    if (o.multi) {
      PLLattice pl = pl_lattice(L.n, check_conditions(P).faceClasses);
      PicardGroup pic = picard(P, pl);
      S = phi_multi(L, pic.basisLift, o.maxDegree);
    } else {
      S = phi0(L, o.maxDegree);
    }
    if (!json) os << "# " << p.id << " vars=" << S.variableCount << " hash=" << series_hash(S)
                  << "\n";
    for (const auto& [key, c] : S.coefficients) {
      if (json) {
        os << "{\"id\":\"" << p.id << "\",\"degree\":[";
        for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
        os << "],\"num\":" << c.get_num() << ",\"den\":" << c.get_den() << "}\n";
      } else {
        for (size_t i = 0; i < key.size(); ++i) os << (i ? " " : "") << key[i];
        os << '\t' << c.get_num() << '\t' << c.get_den() << '\n';
      }
    }
  }
  return 0;
}

int run_fitd3(const std::vector<std::string>& files, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  auto polys = parse_all(files, header_order(o.order));
  int worst = 0;
  for (const auto& p : polys) {
    Polytope P = Polytope::from_vertices(p.vertices);
    SeriesTable S = phi0(relation_lattice(P), o.maxDegree);
    FitResult f = fit(S);
    os << "# " << p.id << "\n";
    if (f.status == FitStatus::NoOperator) {
      os << "status\tno-operator-of-this-shape\n";
      worst = 1;
      continue;
    }
    os << "status\t" << (f.status == FitStatus::Fitted ? "fitted" : "underdetermined")
       << "\tnullspace=" << f.nullspace.size() << "\n";
    for (int j = 0; j <= f.op.J; ++j) {
      os << "P" << j;
      for (int e = 0; e < 4; ++e) os << '\t' << f.op.P[j][e].get_str();
      os << '\n';
    }
    try {
      CountingMatrix A = matrix_from_operator(f.op);
      RatMatrix M = A.matrix();
      for (int i = 0; i < 4; ++i) {
        os << "A" << i;
        for (int j = 0; j < 4; ++j) os << '\t' << M.at(i, j).get_str();
        os << '\n';
      }
    } catch (const error& e) {
      os << "matrix\t" << e.what() << '\n';
    }
    SeriesTable img = apply(f.op, S, S.truncationDegree);
    bool zero = true;
    for (const auto& [k, c] : img.coefficients)
      if (c != 0) zero = false;
    os << "annihilates\t" << (zero ? "yes" : "no") << "\tthrough_degree\t"
       << img.truncationDegree << '\n';
  }
  return worst;
}

int run_verify(const std::string& dataset, const CommonOpts& o) {
  std::ofstream file;
  std::ostream& os = open_out(o, file);
  auto entries = load_ground_truth(dataset);
  VerifyReport rep = verify(entries, o.jobs);
  for (const auto& m : rep.mismatches)
    os << "MISMATCH\t" << m.id << '\t' << m.field << "\texpected=" << m.expected
       << "\tcomputed=" << m.computed << '\n';
  os << "passed\t" << rep.passed << "/" << rep.total << '\n';
  os << "b2_histogram";
  for (const auto& [b2, c] : rep.histogram) os << '\t' << b2 << ":" << c;
  os << '\n';
  return rep.passed == rep.total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conifold-degeneration toolkit for 4d reflexive polytopes"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> files;
  std::string dataset;

  auto addCommon = [&](CLI::App* cmd, bool wantsFiles = true) {
    if (wantsFiles) cmd->add_option("files", files, "polytope files")->required();
    cmd->add_option("--out", opts.out, "write output to file instead of stdout");
    cmd->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "tsv or json-lines")
        ->check(CLI::IsMember({"tsv", "json-lines"}));
    cmd->add_option("--order", opts.order, "row orientation: auto, coords, vertices")
        ->check(CLI::IsMember({"auto", "coords", "vertices"}));
  };

  auto* cCheck = app.add_subcommand("check", "conifold verdict per polytope");
  addCommon(cCheck);
  auto* cInv = app.add_subcommand("invariants", "full invariant records");
  addCommon(cInv);
  cInv->add_option("--max-degree", opts.maxDegree, "series truncation for the hash column");
  auto* cScan = app.add_subcommand("scan", "filter a multi-block file to accepted polytopes");
  addCommon(cScan);
  auto* cSeries = app.add_subcommand("series", "hypergeometric series Phi0 / Phi");
  addCommon(cSeries);
  cSeries->add_option("--max-degree", opts.maxDegree, "kappa-degree truncation");
  cSeries->add_flag("--multi", opts.multi, "multi-parameter Phi graded by a Picard basis");
  auto* cFit = app.add_subcommand("fitd3", "fit the annihilating D3 operator and matrix");
  addCommon(cFit);
  cFit->add_option("--max-degree", opts.maxDegree, "series truncation used for fitting")
      ->default_val(28);
  auto* cVerify = app.add_subcommand("verify", "recompute the bundled ground truth");
  addCommon(cVerify, false);
  cVerify->add_option("--dataset", dataset, "alternate dataset path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cCheck->parsed()) return run_check(files, opts);
    if (cInv->parsed()) return run_invariants(files, opts);
    if (cScan->parsed()) return run_scan(files, opts);
    if (cSeries->parsed()) return run_series(files, opts);
    if (cFit->parsed()) return run_fitd3(files, opts);
    if (cVerify->parsed()) return run_verify(dataset, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
