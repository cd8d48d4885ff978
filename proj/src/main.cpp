#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segkl/comparison.hpp"
#include "segkl/functors.hpp"
#include "segkl/io.hpp"
#include "segkl/kgroup.hpp"
#include "segkl/kl.hpp"
#include "segkl/multisegment.hpp"
#include "segkl/vogan.hpp"

namespace {

using namespace segkl;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;

struct Config {
  long mass_bound = 16;
  long n_bound = 8;
  std::string cache_path;
  std::string format = "json";
  int threads = 1;
};

Rat parse_rat(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stol(s));
    long num = std::stol(s.substr(0, slash));
    long den = std::stol(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

void check_mass(const WeightFunction& phi, const Config& cfg) {
  if (phi.mass() > cfg.mass_bound)
    throw std::domain_error("weight mass " + std::to_string(phi.mass()) +
                            " exceeds --mass-bound " + std::to_string(cfg.mass_bound));
}

void check_n(long n, const Config& cfg) {
  if (n > cfg.n_bound)
    throw std::domain_error("rank " + std::to_string(n) + " exceeds --n-bound " +
                            std::to_string(cfg.n_bound));
}

WeightFunction read_weight(const std::string& path, const Config& cfg) {
  WeightFunction phi = weight_from_json(read_json_file(path));
  if (phi.mass() == 0) throw std::invalid_argument("empty weight in " + path);
  check_mass(phi, cfg);
  return phi;
}

ComparisonBlock build_block(const WeightFunction& phi, const Rat& eL, const Rat& eR,
                            const Config& cfg) {
  auto [lamL, lamR] = infchar_from_weight(phi, eL, eR);
  check_n(static_cast<long>(lamL.size()), cfg);
  return block_data_from_infchar(std::move(lamL), std::move(lamR));
}

void load_cache_if_any(KLContext& ctx, const Config& cfg) {
  if (cfg.cache_path.empty()) return;
  std::ifstream in(cfg.cache_path);
  if (!in) return;  // absent cache is fine; it will be created on save
  ctx.load_cache(in);
}

void save_cache_if_any(const KLContext& ctx, const Config& cfg) {
  if (cfg.cache_path.empty()) return;
  std::ofstream out(cfg.cache_path);
  if (!out) throw std::runtime_error("cannot write cache " + cfg.cache_path);
  ctx.save_cache(out);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- orbits

Json orbit_listing(const WeightFunction& phi, const std::vector<Multisegment>& orbits,
                   const std::vector<std::pair<int, int>>& edges) {
  bool haveR = assumption_r(phi).has_value();
  Json list = Json::array();
  for (const Multisegment& m : orbits) {
    Json row{{"orbit", multisegment_json(m)},
             {"name", m.str()},
             {"dim", orbit_dimension(m)}};
    if (haveR) row["full_rank"] = is_full_rank(m);
    list.push_back(std::move(row));
  }
  Json ej = Json::array();
  for (const auto& [i, j] : edges) ej.push_back(Json::array({i, j}));
  return Json{{"phi", weight_json(phi)},
              {"count", orbits.size()},
              {"dim_ambient", dim_ambient(phi)},
              {"orbits", std::move(list)},
              {"edges", std::move(ej)}};
}

int cmd_orbits(const std::string& phiFile, const Config& cfg, bool wantDot) {
  WeightFunction phi = read_weight(phiFile, cfg);
  std::vector<Multisegment> orbits = enumerate_multisegments(phi);
  std::vector<std::pair<int, int>> edges = covering_edges(orbits);
  if (wantDot)
    std::cout << poset_dot(orbits, edges);
  else
    emit(orbit_listing(phi, orbits, edges));
  return kExitOk;
}

int cmd_poset(const std::string& phiFile, const Config& cfg, bool wantJson) {
  WeightFunction phi = read_weight(phiFile, cfg);
  std::vector<Multisegment> orbits = enumerate_multisegments(phi);
  std::vector<std::pair<int, int>> edges = covering_edges(orbits);
  if (wantJson)
    emit(orbit_listing(phi, orbits, edges));
  else
    std::cout << poset_dot(orbits, edges);
  return kExitOk;
}

// -------------------------------------------------------------------- kl

Json poly_json(const Poly& p) {
  Json c = Json::array();
  for (long long x : p.c) c.push_back(x);
  return c;
}

int cmd_kl(long n, const std::string& xCode, const std::string& wCode,
           const Config& cfg) {
  if (!xCode.empty() && n == 0) n = static_cast<long>(perm_from_code(xCode).n());
  if (n < 1) throw std::invalid_argument("kl: pass --n or a pair --x/--w");
  check_n(n, cfg);
  KLContext ctx(static_cast<int>(n));
  load_cache_if_any(ctx, cfg);
  if (!xCode.empty() || !wCode.empty()) {
    if (xCode.empty() || wCode.empty())
      throw std::invalid_argument("kl: --x and --w come together");
    Perm x = perm_from_code(xCode), w = perm_from_code(wCode);
    if (static_cast<long>(x.n()) != n || static_cast<long>(w.n()) != n)
      throw std::invalid_argument("kl: permutation sizes disagree with --n");
    const Poly& p = ctx.kl(x, w);
    save_cache_if_any(ctx, cfg);
    emit(Json{{"n", n}, {"x", x.str()}, {"w", w.str()}, {"p", poly_json(p)}});
    return kExitOk;
  }
  std::vector<Perm> all = all_perms(static_cast<int>(n));
  Json entries = Json::array();
  for (const Perm& w : all)
    for (const Perm& x : all) {
      const Poly& p = ctx.kl(x, w);
      if (!p.is_zero())
        entries.push_back(Json::array({x.str(), w.str(), poly_json(p)}));
    }
  save_cache_if_any(ctx, cfg);
  emit(Json{{"n", n}, {"entries", std::move(entries)}});
  return kExitOk;
}

// --------------------------------------------------------------- compare

int cmd_compare(const std::string& phiFile, const std::string& eLs,
                const std::string& eRs, bool matrices, const Config& cfg) {
  WeightFunction phi = read_weight(phiFile, cfg);
  ComparisonBlock b = build_block(phi, parse_rat(eLs), parse_rat(eRs), cfg);
  if (!matrices) {
    emit(block_json(b));
    return kExitOk;
  }
  KLContext ctx(b.real.n);
  load_cache_if_any(ctx, cfg);
  Mat rep = std_to_simple(b.real, Side::Rep, ctx);
  Mat sheaf = std_to_simple(b.real, Side::Sheaf, ctx);
  Mat padic = padic_std_to_simple(b, Side::Rep, ctx);
  save_cache_if_any(ctx, cfg);
  if (cfg.format == "csv") {
    std::cout << "# standards into simples, parameter side\n" << matrix_csv(rep);
    std::cout << "# normalized standards into simples, dual sheaf side\n"
              << matrix_csv(sheaf);
    std::cout << "# standards into simples, orbit side\n" << matrix_csv(padic);
    return kExitOk;
  }
  auto mat_rows = [](const Mat& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows; ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < m.cols; ++c) row.push_back(rat_json(m.a[r][c]));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json j = block_json(b);
  j["std_to_simple"] = Json{{"rep", mat_rows(rep)},
                            {"sheaf_normalized", mat_rows(sheaf)},
                            {"padic", mat_rows(padic)}};
  emit(j);
  return kExitOk;
}

// ----------------------------------------------------------------- gamma

int cmd_gamma(const std::string& phiFile, const std::string& wCode,
              const std::string& eLs, const std::string& eRs,
              const std::string& basis, const Config& cfg) {
  WeightFunction phi = read_weight(phiFile, cfg);
  ComparisonBlock b = build_block(phi, parse_rat(eLs), parse_rat(eRs), cfg);
  Perm w = perm_from_code(wCode);
  if (static_cast<long>(w.n()) != b.n)
    throw std::invalid_argument("gamma: the label must be a permutation of " +
                                std::to_string(b.n) + " letters");
  Perm label = b.real.rep_label_of(w);
  KElement image;
  if (basis == "std") {
    KElement in(Basis::RealStd);
    in.add(label, 1);
    image = gamma_std(b, in);
  } else if (basis == "simple") {
    image = KElement(Basis::PadicSimple);
    image.add(gamma_orbit(b, label), 1);
  } else {
    throw std::invalid_argument("gamma: --basis must be std or simple");
  }
  emit(Json{{"phi", weight_json(b.phi)},
            {"w", w.str()},
            {"label", label.str()},
            {"image", kelement_json(image)}});
  return kExitOk;
}

// ---------------------------------------------------------------- derive

int cmd_derive(const std::string& inFile, const std::string& kStr,
               const std::string& side, const std::string& projectFile,
               const Config& cfg) {
  KElement e = kelement_from_json(read_json_file(inFile));
  if (e.basis != Basis::PadicStd)
    throw std::domain_error("derive: the element must be in the PadicStd basis");
  for (const auto& [l, c] : e.terms)
    if (std::get<Multisegment>(l).mass() > cfg.mass_bound)
      throw std::domain_error("derive: a label exceeds --mass-bound");
  DSide ds;
  if (side == "left")
    ds = DSide::Left;
  else if (side == "right")
    ds = DSide::Right;
  else
    throw std::invalid_argument("derive: --side must be left or right");
  KElement out = bz_derivative(ds, parse_rat(kStr), e);
  if (!projectFile.empty()) out = project_weight(out, read_weight(projectFile, cfg));
  emit(kelement_json(out));
  return kExitOk;
}

// ------------------------------------------------------------- translate

int cmd_translate(const std::string& lamLs, const std::string& lamRs, int j, int c,
                  const std::string& coord, const std::string& wCode,
                  const Config& cfg) {
  std::vector<Rat> lamL = parse_rat_list(lamLs), lamR = parse_rat_list(lamRs);
  if (lamL.size() != lamR.size())
    throw std::invalid_argument("translate: coordinate lists of unequal length");
  check_n(static_cast<long>(lamL.size()), cfg);
  RealBlock block = RealBlock::of(lamL, lamR);
  TranslationDatum::Coord cc;
  if (coord == "L")
    cc = TranslationDatum::Coord::L;
  else if (coord == "R")
    cc = TranslationDatum::Coord::R;
  else
    throw std::invalid_argument("translate: --coord must be L or R");
  TranslationDatum d = TranslationDatum::run_decrement(
      cc == TranslationDatum::Coord::L ? lamL : lamR, j, c, cc);
  Perm w = perm_from_code(wCode);
  if (w.n() != block.n)
    throw std::invalid_argument("translate: the label must be a permutation of " +
                                std::to_string(block.n) + " letters");
  KElement in(Basis::RealStd);
  in.add(block.rep_label_of(w), 1);
  KElement out = translate(d, block, in);
  RealBlock tgt = translated_block(d, block);
  Json tl = Json::array(), tr = Json::array();
  for (const Rat& x : tgt.lamL) tl.push_back(rat_json(x));
  for (const Rat& x : tgt.lamR) tr.push_back(rat_json(x));
  emit(Json{{"target_lamL", std::move(tl)},
            {"target_lamR", std::move(tr)},
            {"image", kelement_json(out)}});
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify_single(const WeightFunction& phi, long c, const Rat& k, const Rat& eL,
                      const Rat& eR, bool left, const Config& cfg) {
  auto data = assumption_r(phi);
  if (!data) throw std::domain_error("verify: weight fails the unimodality assumption");
  const RDatum* piece = nullptr;
  for (const RDatum& d : *data)
    if (d.piece.lo <= k && k <= d.piece.hi && is_integer(Rat(k - d.piece.lo)))
      piece = &d;
  if (!piece) throw std::domain_error("verify: degree outside the support");
  if (!left && !(k > piece->r + half()))
    throw std::domain_error(
        "verify: degree is not right of the center; pass --left for the mirrored case");
  if (left && !(k < piece->r - half()))
    throw std::domain_error("verify: --left needs a degree left of the center");
  DiagramReport rep = verify_main_diagram(phi, c, k, eL, eR, cfg.threads);
  emit(report_json(rep));
  return rep.ok ? kExitOk : kExitVerifyFail;
}

int cmd_verify_batch(const std::string& dir, const Rat& eL, const Rat& eR,
                     const Config& cfg) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::invalid_argument("verify: " + dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  bool allOk = true;
  Json out = Json::array();
  for (const std::string& f : files) {
    Json fj{{"file", f}};
    try {
      WeightFunction phi = read_weight(f, cfg);
      Json cases = Json::array();
      for (const auto& [c, k] : admissible_diagram_cases(phi)) {
        DiagramReport rep = verify_main_diagram(phi, c, k, eL, eR, cfg.threads);
        allOk = allOk && rep.ok;
        cases.push_back(
            Json{{"c", c}, {"k", rat_json(k)}, {"ok", rep.ok}, {"note", rep.note}});
      }
      if (cases.empty()) fj["note"] = "no admissible degrees";
      fj["cases"] = std::move(cases);
    } catch (const std::exception& e) {
      fj["error"] = e.what();
      allOk = false;
    }
    out.push_back(std::move(fj));
  }
  emit(Json{{"ok", allOk}, {"files", std::move(out)}});
  return allOk ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------------ dims

int cmd_dims(const std::string& phiFile, const std::string& eLs, const std::string& eRs,
             const Config& cfg) {
  WeightFunction phi = read_weight(phiFile, cfg);
  Json orbits = Json::array();
  for (const Multisegment& m : enumerate_multisegments(phi))
    orbits.push_back(Json{{"name", m.str()}, {"dim", orbit_dimension(m)}});
  Json j{{"phi", weight_json(phi)},
         {"dim_ambient", dim_ambient(phi)},
         {"orbits", std::move(orbits)}};
  try {
    ComparisonBlock b = build_block(phi, parse_rat(eLs), parse_rat(eRs), cfg);
    Json cosets = Json::array();
    for (const Perm& w : b.labels) {
      Perm v = b.real.rep_to_sheaf(w);
      cosets.push_back(Json{{"w", w.str()}, {"coset", v.str()}, {"dim", b.real.dimZ(v)}});
    }
    j["cosets"] = std::move(cosets);
  } catch (const std::domain_error&) {
    // Weights without block data still get their orbit dimensions.
  }
  emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit, double-coset and K-group combinatorics for matched blocks"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--mass-bound", cfg.mass_bound, "largest weight mass accepted")
      ->capture_default_str();
  app.add_option("--n-bound", cfg.n_bound, "largest symmetric-group rank accepted")
      ->capture_default_str();
  app.add_option("--kl-cache", cfg.cache_path,
                 "path of a polynomial cache to load and update");
  app.add_option("--format", cfg.format, "output format: json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string phiFile, xCode, wCode, eLs = "1/2", eRs = "-1/2";
  std::string inFile, kStr, side = "left", projectFile, lamLs, lamRs, coord = "L";
  std::string basis = "std", batchDir;
  long klN = 0, cArg = 1;
  int jArg = 1;
  bool wantDot = false, matrices = false, leftFlag = false;

  CLI::App* orbits = app.add_subcommand("orbits", "list the orbits of a weight");
  orbits->add_option("--phi", phiFile, "weight file (JSON)")->required();
  orbits->add_flag("--dot", wantDot, "emit the closure poset as DOT");

  CLI::App* poset = app.add_subcommand("poset", "closure poset of a weight as DOT");
  poset->add_option("--phi", phiFile, "weight file (JSON)")->required();

  CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  kl->add_option("--n", klN, "symmetric group rank");
  kl->add_option("--x", xCode, "lower permutation (one-line code)");
  kl->add_option("--w", wCode, "upper permutation (one-line code)");

  CLI::App* compare = app.add_subcommand("compare", "full dictionary of a block");
  compare->add_option("--phi", phiFile, "weight file (JSON)")->required();
  compare->add_option("--eL", eLs, "left coordinate offset")->capture_default_str();
  compare->add_option("--eR", eRs, "right coordinate offset")->capture_default_str();
  compare->add_flag("--matrices", matrices, "include standard-to-simple matrices");

  CLI::App* gamma = app.add_subcommand("gamma", "image of a standard under the matching");
  gamma->add_option("--phi", phiFile, "weight file (JSON)")->required();
  gamma->add_option("--w", wCode, "double-coset label (one-line code)")->required();
  gamma->add_option("--eL", eLs, "left coordinate offset")->capture_default_str();
  gamma->add_option("--eR", eRs, "right coordinate offset")->capture_default_str();
  gamma->add_option("--basis", basis, "std or simple")->capture_default_str();

  CLI::App* derive = app.add_subcommand("derive", "derivative of a K-group element");
  derive->add_option("--in", inFile, "element file (JSON)")->required();
  derive->add_option("--k", kStr, "degree (rational)")->required();
  derive->add_option("--side", side, "left or right")->capture_default_str();
  derive->add_option("--project", projectFile, "keep only terms of this weight");

  CLI::App* translate = app.add_subcommand("translate", "translate one standard");
  translate->add_option("--lamL", lamLs, "left coordinates, comma-separated")->required();
  translate->add_option("--lamR", lamRs, "right coordinates, comma-separated")->required();
  translate->add_option("--j", jArg, "run suffix start (1-based)")->required();
  translate->add_option("--c", cArg, "run suffix length")->required();
  translate->add_option("--coord", coord, "which coordinate moves: L or R")
      ->capture_default_str();
  translate->add_option("--w", wCode, "double-coset label (one-line code)")->required();

  CLI::App* verify = app.add_subcommand("verify", "check the derivative diagram");
  verify->add_option("--phi", phiFile, "weight file (JSON)");
  verify->add_option("--c", cArg, "multiplicity removed at the degree");
  verify->add_option("--k", kStr, "degree (rational)");
  verify->add_option("--eL", eLs, "left coordinate offset")->capture_default_str();
  verify->add_option("--eR", eRs, "right coordinate offset")->capture_default_str();
  verify->add_flag("--left", leftFlag, "degree lies left of the center");
  verify->add_option("--batch", batchDir, "verify every weight file in a directory");

  CLI::App* dims = app.add_subcommand("dims", "orbit and coset dimension tables");
  dims->add_option("--phi", phiFile, "weight file (JSON)")->required();
  dims->add_option("--eL", eLs, "left coordinate offset")->capture_default_str();
  dims->add_option("--eR", eRs, "right coordinate offset")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (orbits->parsed())
      return cmd_orbits(phiFile, cfg, wantDot || cfg.format == "dot");
    if (poset->parsed()) return cmd_poset(phiFile, cfg, cfg.format == "json");
    if (kl->parsed()) return cmd_kl(klN, xCode, wCode, cfg);
    if (compare->parsed()) return cmd_compare(phiFile, eLs, eRs, matrices, cfg);
    if (gamma->parsed()) return cmd_gamma(phiFile, wCode, eLs, eRs, basis, cfg);
    if (derive->parsed()) return cmd_derive(inFile, kStr, side, projectFile, cfg);
    if (translate->parsed())
      return cmd_translate(lamLs, lamRs, jArg, static_cast<int>(cArg), coord, wCode, cfg);
    if (verify->parsed()) {
      if (!batchDir.empty())
        return cmd_verify_batch(batchDir, parse_rat(eLs), parse_rat(eRs), cfg);
      if (phiFile.empty() || kStr.empty())
        throw std::invalid_argument("verify: pass --phi and --k, or --batch");
      WeightFunction phi = read_weight(phiFile, cfg);
      return cmd_verify_single(phi, cArg, parse_rat(kStr), parse_rat(eLs),
                               parse_rat(eRs), leftFlag, cfg);
    }
    if (dims->parsed()) return cmd_dims(phiFile, eLs, eRs, cfg);
    throw std::invalid_argument("no subcommand");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
