#include "segkl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace segkl {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed input: " + what);
}

long to_count(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json rat_json(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return Json::array({static_cast<long>(mpz_get_si(c.get_num_mpz_t())),
                      static_cast<long>(mpz_get_si(c.get_den_mpz_t()))});
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    bad("a rational must be [numerator, denominator] or an integer");
  long num = j[0].get<long>(), den = j[1].get<long>();
  if (den == 0) bad("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Json segment_json(const Segment& s) {
  return Json{{"a", rat_json(s.a)}, {"b", rat_json(s.b)}};
}

Segment segment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    bad("a segment must be an object with fields a and b");
  try {
    return Segment(rat_from_json(j["a"]), rat_from_json(j["b"]));
  } catch (const std::domain_error& e) {
    bad(e.what());
  }
}

Json multisegment_json(const Multisegment& m) {
  Json segs = Json::array();
  for (const Segment& s : m.segs) segs.push_back(segment_json(s));
  return Json{{"segments", std::move(segs)}};
}

Multisegment multisegment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
    bad("a multisegment must be an object with a segments array");
  std::vector<Segment> v;
  for (const Json& s : j["segments"]) v.push_back(segment_from_json(s));
  return Multisegment::of(std::move(v));
}

Json weight_json(const WeightFunction& phi) {
  Json vals = Json::array();
  for (const auto& [p, c] : phi.v) vals.push_back(Json::array({rat_json(p), c}));
  return Json{{"values", std::move(vals)}};
}

WeightFunction weight_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    bad("a weight must be an object with a values array");
  WeightFunction phi;
  for (const Json& e : j["values"]) {
    if (!e.is_array() || e.size() != 2) bad("each weight value must be [point, count]");
    Rat p = rat_from_json(e[0]);
    long c = to_count(e[1], "a weight count");
    if (c <= 0) bad("weight counts must be positive");
    if (phi.v.count(p)) bad("weight lists a point twice");
    phi.v[p] = c;
  }
  return phi;
}

Json graded_op_json(const GradedOperator& T) {
  Json blocks = Json::array();
  for (const auto& [p, m] : T.blocks) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows; ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < m.cols; ++c) row.push_back(rat_json(m.a[r][c]));
      rows.push_back(std::move(row));
    }
    blocks.push_back(Json::array({rat_json(p), std::move(rows)}));
  }
  return Json{{"dims", weight_json(T.dims)}, {"blocks", std::move(blocks)}};
}

GradedOperator graded_op_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("blocks") ||
      !j["blocks"].is_array())
    bad("a graded operator must be an object with dims and blocks");
  GradedOperator T;
  T.dims = weight_from_json(j["dims"]);
  for (const Json& b : j["blocks"]) {
    if (!b.is_array() || b.size() != 2 || !b[1].is_array())
      bad("each block must be [degree, matrix]");
    Rat p = rat_from_json(b[0]);
    long rows = T.dims(Rat(p + 1)), cols = T.dims(p);
    const Json& rj = b[1];
    if (static_cast<long>(rj.size()) != rows) bad("block row count mismatch");
    Mat m(rows, cols);
    for (long r = 0; r < rows; ++r) {
      if (!rj[r].is_array() || static_cast<long>(rj[r].size()) != cols)
        bad("block column count mismatch");
      for (long c = 0; c < cols; ++c) m.a[r][c] = rat_from_json(rj[r][c]);
    }
    T.blocks.emplace(p, std::move(m));
  }
  return T;
}

Perm perm_from_code(const std::string& code) {
  std::vector<int> img;
  if (code.find(',') != std::string::npos) {
    std::stringstream ss(code);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        img.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        bad("permutation code entry '" + tok + "'");
      }
    }
  } else {
    for (char ch : code) {
      if (ch < '1' || ch > '9') bad("permutation code character '" + std::string(1, ch) + "'");
      img.push_back(ch - '0');
    }
  }
  if (img.empty()) bad("empty permutation code");
  std::vector<bool> seen(img.size() + 1, false);
  for (int x : img) {
    if (x < 1 || x > static_cast<int>(img.size()) || seen[x])
      bad("'" + code + "' is not a permutation");
    seen[x] = true;
  }
  return Perm(std::move(img));
}

Json kelement_json(const KElement& e) {
  Json terms = Json::array();
  for (const auto& [label, coeff] : e.terms) {
    Json lj;
    if (std::holds_alternative<Multisegment>(label))
      lj = multisegment_json(std::get<Multisegment>(label));
    else
      lj = std::get<Perm>(label).str();
    terms.push_back(Json::array({std::move(lj), coeff}));
  }
  return Json{{"basis", basis_name(e.basis)}, {"terms", std::move(terms)}};
}

KElement kelement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms") ||
      !j["terms"].is_array())
    bad("a K-group element must be an object with basis and terms");
  if (!j["basis"].is_string()) bad("basis must be a string");
  Basis b;
  try {
    b = basis_from_name(j["basis"].get<std::string>());
  } catch (const std::exception& e) {
    bad(e.what());
  }
  KElement e(b);
  bool padic = (b == Basis::PadicStd || b == Basis::PadicSimple ||
                b == Basis::SheafPadicStd || b == Basis::SheafPadicSimple);
  for (const Json& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2) bad("each term must be [label, coeff]");
    long long coeff = to_count(t[1], "a coefficient");
    if (padic) {
      e.add(multisegment_from_json(t[0]), coeff);
    } else {
      if (!t[0].is_string()) bad("real-basis labels must be permutation codes");
      e.add(perm_from_code(t[0].get<std::string>()), coeff);
    }
  }
  return e;
}

std::string matrix_csv(const Mat& m) {
  std::string out;
  for (size_t r = 0; r < m.rows; ++r) {
    for (size_t c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += rat_str(m.a[r][c]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::pair<int, int>> covering_edges(const std::vector<Multisegment>& orbits) {
  int N = static_cast<int>(orbits.size());
  std::vector<std::vector<bool>> leq(N, std::vector<bool>(N, false));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      leq[i][j] = closure_leq(orbits[i], orbits[j]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covering = true;
      for (int z = 0; z < N && covering; ++z)
        if (z != i && z != j && leq[i][z] && leq[z][j]) covering = false;
      if (covering) edges.emplace_back(i, j);
    }
  return edges;
}

std::string poset_dot(const std::vector<Multisegment>& orbits,
                      const std::vector<std::pair<int, int>>& edges) {
  std::string out = "digraph closure {\n  rankdir=BT;\n";
  for (size_t i = 0; i < orbits.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + orbits[i].str() + "\"];\n";
  for (const auto& [i, j] : edges)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

Json block_json(const ComparisonBlock& b) {
  Json j;
  j["phi"] = weight_json(b.phi);
  j["r"] = rat_json(b.r);
  j["n"] = b.n;
  Json lamL = Json::array(), lamR = Json::array();
  for (const Rat& x : b.lamL) lamL.push_back(rat_json(x));
  for (const Rat& x : b.lamR) lamR.push_back(rat_json(x));
  j["lamL"] = std::move(lamL);
  j["lamR"] = std::move(lamR);
  auto [pl, pr] = parabolics_from_weight(b.phi);
  j["parabolics"] = Json{{"left", pl}, {"right", pr}};
  Json labels = Json::array();
  for (const Perm& w : b.labels) {
    Perm v = b.real.rep_to_sheaf(w);
    const Multisegment& m = b.bm.at(w);
    labels.push_back(Json{{"w", w.str()},
                          {"coset", v.str()},
                          {"dim_coset", b.real.dimZ(v)},
                          {"orbit", multisegment_json(m)},
                          {"dim_orbit", orbit_dimension(m)}});
  }
  j["labels"] = std::move(labels);
  Json orbits = Json::array();
  for (const Multisegment& m : enumerate_multisegments(b.phi))
    orbits.push_back(Json{{"orbit", multisegment_json(m)},
                          {"dim", orbit_dimension(m)},
                          {"full_rank", is_full_rank(m)}});
  j["orbits"] = std::move(orbits);
  return j;
}

Json report_json(const DiagramReport& r) {
  Json rows = Json::array();
  for (const DiagramRow& row : r.rows) {
    Json rj{{"label", row.label.str()}, {"ok", row.ok}};
    if (!row.ok) {
      rj["lhs"] = kelement_json(row.lhs);
      rj["rhs"] = kelement_json(row.rhs);
    }
    rows.push_back(std::move(rj));
  }
  return Json{{"ok", r.ok},
              {"note", r.note},
              {"phi", weight_json(r.phi)},
              {"psi", weight_json(r.psi)},
              {"rows", std::move(rows)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file " + path);
  out << text;
}

}  // namespace segkl
