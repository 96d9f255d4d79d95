// hesscoh: command-line interface for exact equivariant Schubert calculus on
// flag varieties, Peterson varieties and regular nilpotent Hessenberg
// varieties.  All arithmetic is exact; output is deterministic byte-for-byte
// for a fixed request.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hesscoh/billey.hh"
#include "hesscoh/hessenberg.hh"
#include "hesscoh/macaulay.hh"
#include "hesscoh/permutation.hh"
#include "hesscoh/peterson.hh"
#include "hesscoh/polynomial.hh"
#include "hesscoh/presentation.hh"
#include "hesscoh/rootsys.hh"

using json = nlohmann::ordered_json;
using namespace hesscoh;

namespace {

constexpr int kSchemaVersion = 1;

// thrown when a mathematical certificate fails; maps to exit code 1
struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("invalid integer list: " + s);
    out.push_back(v);
  }
  return out;
}

std::string int_list_str(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

json poly_json(const SparsePolynomial& p) { return json::parse(p.json()); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string dims_str(const std::vector<long>& dims) {
  std::ostringstream os;
  for (size_t k = 0; k < dims.size(); ++k) os << (k ? " " : "") << dims[k];
  return os.str();
}

// ---------------------------------------------------------------------------
// fixed-points

int cmd_fixed_points(const std::string& h_str, bool as_json) {
  HessenbergFunction h = HessenbergFunction::parse(h_str);
  std::vector<Permutation> pts = fixed_points(h);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["h"] = h.values();
    json arr = json::array();
    for (const Permutation& w : pts) arr.push_back(w.word());
    doc["fixed_points"] = std::move(arr);
    doc["count"] = pts.size();
    doc["indecomposable"] = h.is_indecomposable();
    emit(doc);
  } else {
    std::cout << "h = " << h.str()
              << (h.is_indecomposable() ? " (indecomposable)" : " (decomposable)")
              << "\n";
    std::cout << "count = " << pts.size() << "\n";
    for (const Permutation& w : pts) std::cout << w.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// billey

int cmd_billey(const std::string& cartan, const std::string& v_str,
               const std::string& w_str, bool as_json) {
  CartanDatum d = parse_cartan(cartan);
  std::vector<int> v_word = parse_int_list(v_str);
  if (d.type == 'A') {
    const int n = d.rank + 1;
    if (!is_reduced_word(v_word, n))
      throw std::invalid_argument("--v must be a reduced word (letters in [n-1])");
    Permutation v = from_reduced_word(v_word, n);
    Permutation w = Permutation::parse(w_str);
    if (w.n() != n)
      throw std::invalid_argument("--w must be one-line notation in S_" +
                                  std::to_string(n));
    SparsePolynomial p = billey_restrict_typeA(v, w);
    Integer pi = billey_pi_typeA(v, w);
    if (as_json) {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["cartan"] = d.name();
      doc["v_word"] = v_word;
      doc["w"] = w.word();
      doc["restriction"] = poly_json(p);
      doc["pi_value"] = pi.get_str();
      doc["pi_degree"] = v.length();
      emit(doc);
    } else {
      std::cout << "sigma_v(w) = " << p.str() << "\n";
      std::cout << "pi specialization: " << pi.get_str() << "*t^" << v.length()
                << "\n";
    }
  } else {
    WeylGroup W(d);
    int v = W.from_word(v_word);
    if (W.length(v) != static_cast<int>(v_word.size()))
      throw std::invalid_argument("--v must be a reduced word (letters in [rank])");
    std::vector<int> w_word = parse_int_list(w_str);
    int w = W.from_word(w_word);
    if (W.length(w) != static_cast<int>(w_word.size()))
      throw std::invalid_argument("--w must be a reduced word (letters in [rank])");
    SparsePolynomial p = billey_restrict_general(W, v, w);
    Integer pi = billey_pi_general(W, v, w);
    if (as_json) {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["cartan"] = d.name();
      doc["v_word"] = v_word;
      doc["w_word"] = w_word;
      doc["restriction"] = poly_json(p);
      doc["pi_value"] = pi.get_str();
      doc["pi_degree"] = W.length(v);
      emit(doc);
    } else {
      std::cout << "sigma_v(w) = " << p.str()
                << "   (a_i = simple root coordinates)\n";
      std::cout << "pi specialization: " << pi.get_str() << "*t^" << W.length(v)
                << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// peterson class / monk / giambelli / general

int cmd_peterson_class(int n, const std::string& A_str, bool as_json) {
  PetersonA P(n);
  SubsetA A{parse_int_list(A_str)};
  int idx = P.index_of(A.elems);
  if (idx < 0) throw std::invalid_argument("--A must be a subset of [n-1]");
  LocalizationElement cls = P.basis_class(idx);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["A"] = A.elems;
    doc["v_A"] = P.vA(idx).word();
    json vals = json::array();
    for (int b = 0; b < P.count(); ++b) {
      json entry;
      entry["B"] = P.subset(b).elems;
      entry["w_B"] = P.wA(b).word();
      entry["value"] = poly_json(cls.values[b]);
      vals.push_back(std::move(entry));
    }
    doc["values"] = std::move(vals);
    emit(doc);
  } else {
    std::cout << "p_{v_A} for A = {" << A.str() << "}, v_A = " << P.vA(idx).str()
              << "\n";
    for (int b = 0; b < P.count(); ++b)
      std::cout << "  at w_B = " << P.wA(b).str() << " (B = {" << P.subset(b).str()
                << "}): " << cls.values[b].str() << "\n";
  }
  return 0;
}

bool monk_matches(const MonkExpansion& a, const MonkExpansion& b,
                  std::string* why) {
  if (!(a.diagonal == b.diagonal)) {
    *why = "diagonal terms differ";
    return false;
  }
  if (a.off != b.off) {
    *why = "off-diagonal structure constants differ";
    return false;
  }
  for (const auto& [B, c] : a.off) {
    if (c < 0 || c.get_den() != 1) {
      *why = "structure constant for B = {" + int_list_str(B) +
             "} is not a nonnegative integer";
      return false;
    }
  }
  return true;
}

int cmd_peterson_monk(int n, int i, const std::string& A_str, bool as_json) {
  PetersonA P(n);
  SubsetA A{parse_int_list(A_str)};
  if (P.index_of(A.elems) < 0)
    throw std::invalid_argument("--A must be a subset of [n-1]");
  if (i < 1 || i > n - 1) throw std::invalid_argument("--i must lie in [n-1]");
  MonkExpansion closed = monk_constants_closed(P, i, A);
  MonkExpansion oracle = monk_oracle(P, i, A);
  std::string why;
  bool ok = monk_matches(closed, oracle, &why);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["i"] = i;
    doc["A"] = A.elems;
    doc["diagonal"] = poly_json(closed.diagonal);
    json off = json::array();
    for (const auto& [B, c] : closed.off) {
      json entry;
      entry["B"] = B;
      entry["c"] = rational_str(c);
      off.push_back(std::move(entry));
    }
    doc["off"] = std::move(off);
    doc["closed_equals_oracle"] = ok;
    emit(doc);
  } else {
    std::cout << "p_{s_" << i << "} * p_{v_A}, A = {" << A.str() << "}\n";
    std::cout << "  diagonal: (" << closed.diagonal.str() << ") * p_{v_A}\n";
    for (const auto& [B, c] : closed.off)
      std::cout << "  + " << rational_str(c) << " * p_{v_B}, B = {"
                << int_list_str(B) << "}\n";
    std::cout << (ok ? "closed form matches the localization oracle\n"
                     : "MISMATCH: " + why + "\n");
  }
  if (!ok) throw CertificateFailure("Monk closed form disagrees with the oracle: " + why);
  return 0;
}

int cmd_peterson_giambelli(int n, const std::string& A_str, bool as_json) {
  PetersonA P(n);
  SubsetA A{parse_int_list(A_str)};
  if (P.index_of(A.elems) < 0)
    throw std::invalid_argument("--A must be a subset of [n-1]");
  GiambelliResult r = giambelli_check(P, A);
  Integer factor(1);
  for (const auto& [a, b] : A.strings())
    for (int k = 2; k <= b - a + 1; ++k) factor *= k;
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["A"] = A.elems;
    doc["string_factorial_product"] = factor.get_str();
    doc["holds"] = r.ok;
    emit(doc);
  } else {
    std::cout << "p_{v_A} * " << factor.get_str() << " == prod_{i in A} p_{s_i}: "
              << (r.ok ? "holds pointwise" : "FAILS") << "\n";
  }
  if (!r.ok) throw CertificateFailure("Giambelli identity failed for A = {" + A.str() + "}");
  return 0;
}

int cmd_peterson_general(const std::string& cartan, const std::string& K_str,
                         bool as_json) {
  CartanDatum d = parse_cartan(cartan);
  WeylGroup W(d);
  PetersonGeneral P(W);
  std::vector<int> K = parse_int_list(K_str);
  int idx = P.index_of(K);
  if (idx < 0) throw std::invalid_argument("--K must be a subset of [rank]");
  LocalizationElement cls = P.basis_class(idx);
  GiambelliGeneralResult gg = giambelli_general(P, K);
  bool monk_ok = true;
  std::string monk_why;
  for (int i = 1; i <= d.rank && monk_ok; ++i) {
    MonkGeneralExpansion closed = monk_general_closed(P, i, K);
    MonkGeneralExpansion oracle = monk_general_oracle(P, i, K);
    if (!(closed.diagonal == oracle.diagonal) || closed.off != oracle.off) {
      monk_ok = false;
      monk_why = "Monk quotient formula disagrees with the oracle at i = " +
                 std::to_string(i);
    }
  }
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["cartan"] = d.name();
    doc["K"] = K;
    doc["v_K_word"] = W.word(P.vK(idx));
    json vals = json::array();
    for (int j = 0; j < P.count(); ++j) {
      json entry;
      entry["J"] = P.subset(j);
      entry["value"] = poly_json(cls.values[j]);
      vals.push_back(std::move(entry));
    }
    doc["values"] = std::move(vals);
    doc["giambelli_factor"] = rational_str(gg.factor);
    doc["giambelli_holds"] = gg.ok;
    doc["monk_matches_oracle"] = monk_ok;
    emit(doc);
  } else {
    std::cout << "p_{v_K} in type " << d.name() << ", K = {" << int_list_str(K)
              << "}\n";
    for (int j = 0; j < P.count(); ++j)
      std::cout << "  at w_J, J = {" << int_list_str(P.subset(j))
                << "}: " << cls.values[j].str() << "\n";
    std::cout << "Giambelli factor |Red(v_K)|/prod|K_c|! = " << rational_str(gg.factor)
              << ": " << (gg.ok ? "holds" : "FAILS") << "\n";
    std::cout << (monk_ok ? "Monk quotient formula matches the oracle for every i\n"
                          : monk_why + "\n");
  }
  if (!gg.ok) throw CertificateFailure("general Giambelli identity failed");
  if (!monk_ok) throw CertificateFailure(monk_why);
  return 0;
}

// ---------------------------------------------------------------------------
// fij / ideal / hilbert / verify / verify-all

int cmd_fij(int n, bool t0, bool as_json) {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["equivariant"] = !t0;
    json table = json::array();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) {
        json entry;
        entry["i"] = i;
        entry["j"] = j;
        entry["f"] = poly_json(f_ij(i, j, n, !t0));
        table.push_back(std::move(entry));
      }
    doc["table"] = std::move(table);
    emit(doc);
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j)
        std::cout << "f_{" << i << "," << j << "} = " << f_ij(i, j, n, !t0).str()
                  << "\n";
  }
  return 0;
}

int cmd_ideal(const std::string& h_str, bool t0, bool as_json) {
  HessenbergFunction h = HessenbergFunction::parse(h_str);
  IdealPresentation I = ideal_for(h, !t0);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["h"] = h.values();
    doc["equivariant"] = !t0;
    json gens = json::array();
    for (const auto& g : I.gens) gens.push_back(poly_json(g));
    doc["generators"] = std::move(gens);
    emit(doc);
  } else {
    std::cout << "ideal for h = " << h.str() << (t0 ? " (t = 0)" : "") << "\n";
    for (int j = 1; j <= h.n(); ++j)
      std::cout << "f_{" << h(j) << "," << j << "} = " << I.gens[j - 1].str()
                << "\n";
  }
  return 0;
}

int cmd_hilbert(const std::string& h_str, bool as_json) {
  HessenbergFunction h = HessenbergFunction::parse(h_str);
  HilbertReport rep = hilbert_check(h);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["h"] = h.values();
    doc["dimensions"] = rep.dims;
    doc["expected"] = rep.expected;
    doc["matches_product_formula"] = rep.pass;
    emit(doc);
  } else {
    std::cout << "h = " << h.str() << "\n";
    std::cout << "expected: " << expected_poincare(h).str() << "\n";
    std::cout << "quotient dims (degrees 0.." << rep.bound
              << "): " << dims_str(rep.dims) << "\n";
    std::cout << (rep.pass ? "matches the product formula\n"
                           : "MISMATCH against the product formula\n");
  }
  if (!rep.pass)
    throw CertificateFailure("Hilbert function mismatch for h = " + h.str());
  return 0;
}

struct VerifyOutcome {
  bool pass;
  std::vector<std::string> lines;
};

VerifyOutcome run_verify(const HessenbergFunction& h) {
  VerifyOutcome out{true, {}};
  VanishingReport van = verify_vanishing(h);
  out.pass &= van.pass;
  out.lines.push_back(std::string(van.pass ? "ok   " : "FAIL ") + "vanishing: all " +
                      std::to_string(van.checks) +
                      " generator/fixed-point restrictions are zero" +
                      (van.pass ? "" : " (first failure: " + van.witness + ")"));
  HilbertReport hil = hilbert_check(h);
  out.pass &= hil.pass;
  out.lines.push_back(std::string(hil.pass ? "ok   " : "FAIL ") +
                      "hilbert: quotient dimensions match " +
                      expected_poincare(h).str());
  out.lines.push_back(std::string(hil.pass ? "ok   " : "FAIL ") +
                      "regularity: product-formula criterion " +
                      (hil.pass ? "certifies a regular sequence" : "not certified"));
  return out;
}

int cmd_verify(const std::string& h_str, bool as_json) {
  HessenbergFunction h = HessenbergFunction::parse(h_str);
  VerifyOutcome out = run_verify(h);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["h"] = h.values();
    doc["pass"] = out.pass;
    doc["certificate"] = out.lines;
    emit(doc);
  } else {
    std::cout << "certificate for h = " << h.str() << "\n";
    for (const auto& l : out.lines) std::cout << l << "\n";
    std::cout << (out.pass ? "PASS\n" : "FAIL\n");
  }
  if (!out.pass) throw CertificateFailure("certificate failed for h = " + h.str());
  return 0;
}

int cmd_verify_all(int n, bool allow_large, bool as_json) {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  if (n >= 7 && !allow_large)
    throw std::invalid_argument(
        "n >= 7 enumerates a large Catalan family; pass --allow-large to proceed");
  std::vector<HessenbergFunction> hs = all_hessenberg_functions(n);
  if (!as_json) {
    std::cout << "verify-all n = " << n << ": " << hs.size()
              << " Hessenberg functions; budget roughly "
              << (n <= 4 ? "seconds" : (n <= 5 ? "under a minute" : "minutes"))
              << "\n";
  }
  bool all_pass = true;
  json items = json::array();
  for (const HessenbergFunction& h : hs) {
    VerifyOutcome out = run_verify(h);
    all_pass &= out.pass;
    if (as_json) {
      json entry;
      entry["h"] = h.values();
      entry["pass"] = out.pass;
      items.push_back(std::move(entry));
    } else {
      std::cout << (out.pass ? "ok   " : "FAIL ") << "h = " << h.str() << "\n";
    }
  }
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["count"] = hs.size();
    doc["pass"] = all_pass;
    doc["results"] = std::move(items);
    emit(doc);
  } else {
    std::cout << (all_pass ? "PASS" : "FAIL") << ": " << hs.size()
              << " Hessenberg functions checked\n";
  }
  if (!all_pass) throw CertificateFailure("verify-all found a failing certificate");
  return 0;
}

// ---------------------------------------------------------------------------
// peterson-presentation / cfrac

int cmd_peterson_presentation(const std::string& cartan, int n, bool as_json) {
  PresentationReport rep;
  std::string label;
  if (!cartan.empty()) {
    CartanDatum d = parse_cartan(cartan);
    label = d.name();
    rep = peterson_presentation_general(d);
  } else {
    if (n < 2) throw std::invalid_argument("provide --cartan, or --n >= 2 for type A");
    label = "S_" + std::to_string(n);
    rep = peterson_presentation_check(n);
  }
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["target"] = label;
    doc["pass"] = rep.pass;
    doc["certificate"] = rep.lines;
    emit(doc);
  } else {
    std::cout << "Peterson presentation certificate for " << label << "\n";
    for (const auto& l : rep.lines) std::cout << l << "\n";
    std::cout << (rep.pass ? "PASS\n" : "FAIL\n");
  }
  if (!rep.pass) throw CertificateFailure("Peterson presentation certificate failed");
  return 0;
}

int cmd_cfrac(const std::string& c_str, int m, bool as_json) {
  Rational c = parse_rational(c_str);
  if (m < 0) throw std::invalid_argument("--m must be nonnegative");
  ContinuedFractionResult res = continued_fraction_check(c, m);
  if (as_json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["c"] = rational_str(c);
    doc["m"] = m;
    json xs = json::array();
    for (const Rational& x : res.xs) xs.push_back(rational_str(x));
    doc["x"] = std::move(xs);
    doc["all_positive"] = res.all_positive;
    if (res.failed_at >= 0) doc["division_by_zero_at"] = res.failed_at;
    emit(doc);
  } else {
    for (size_t k = 0; k < res.xs.size(); ++k)
      std::cout << "x_" << k << " = " << rational_str(res.xs[k]) << "\n";
    if (res.failed_at >= 0)
      std::cout << "recursion undefined at m = " << res.failed_at
                << " (division by zero)\n";
    std::cout << (res.all_positive ? "all terms positive\n"
                                   : "positivity fails\n");
  }
  // positivity is only claimed for c <= 1/4
  if (c <= Rational(1, 4) && !res.all_positive)
    throw CertificateFailure("positivity failed although c <= 1/4");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant cohomology of flag, Peterson and regular "
               "nilpotent Hessenberg varieties"};
  app.require_subcommand(1);
  // subcommands taking a --h option cannot also own the short -h help alias
  auto long_help_only = [](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help message and exit");
  };

  // fixed-points
  std::string fp_h;
  bool fp_json = false;
  auto* fp = app.add_subcommand("fixed-points",
                                "circle-fixed points of Hess(N,h)");
  long_help_only(fp);
  fp->add_option("--h", fp_h, "Hessenberg function, e.g. 3,3,4,4")->required();
  fp->add_flag("--json", fp_json, "JSON output");

  // billey
  std::string bl_cartan, bl_v, bl_w;
  bool bl_json = false;
  auto* bl = app.add_subcommand("billey",
                                "restriction of an equivariant Schubert class");
  bl->add_option("--cartan", bl_cartan, "Cartan type, e.g. A3 or B2")->required();
  bl->add_option("--v", bl_v, "reduced word for v, e.g. 1,2")->required();
  bl->add_option("--w", bl_w,
                 "fixed point: one-line notation (type A) or reduced word")
      ->required();
  bl->add_flag("--json", bl_json, "JSON output");

  // peterson
  auto* pe = app.add_subcommand("peterson", "Peterson Schubert calculus");
  pe->require_subcommand(1);
  int pc_n = 0;
  std::string pc_A;
  bool pc_json = false;
  auto* pc = pe->add_subcommand("class", "localized class p_{v_A}");
  pc->add_option("--n", pc_n, "size of the symmetric group S_n")->required();
  pc->add_option("--A", pc_A, "subset of [n-1], e.g. 1,3,4 (empty for {})");
  pc->add_flag("--json", pc_json, "JSON output");

  int pm_n = 0, pm_i = 0;
  std::string pm_A;
  bool pm_json = false;
  auto* pm = pe->add_subcommand("monk", "Monk expansion of p_{s_i} * p_{v_A}");
  pm->add_option("--n", pm_n, "size of the symmetric group S_n")->required();
  pm->add_option("--i", pm_i, "simple transposition index")->required();
  pm->add_option("--A", pm_A, "subset of [n-1] (empty for {})");
  pm->add_flag("--json", pm_json, "JSON output");

  int pg_n = 0;
  std::string pg_A;
  bool pg_json = false;
  auto* pg = pe->add_subcommand("giambelli",
                                "product formula for p_{v_A}");
  pg->add_option("--n", pg_n, "size of the symmetric group S_n")->required();
  pg->add_option("--A", pg_A, "subset of [n-1] (empty for {})");
  pg->add_flag("--json", pg_json, "JSON output");

  std::string pn_cartan, pn_K;
  bool pn_json = false;
  auto* pn = pe->add_subcommand("general",
                                "Peterson calculus in a general Lie type");
  pn->add_option("--cartan", pn_cartan, "Cartan type, e.g. B3")->required();
  pn->add_option("--K", pn_K, "subset of simple roots (empty for {})");
  pn->add_flag("--json", pn_json, "JSON output");

  // fij
  int fj_n = 0;
  bool fj_t0 = false, fj_json = false;
  auto* fj = app.add_subcommand("fij", "table of the recursive generators f_{i,j}");
  fj->add_option("--n", fj_n, "number of x variables")->required();
  fj->add_flag("--t0", fj_t0, "set t = 0 (ordinary cohomology)");
  fj->add_flag("--json", fj_json, "JSON output");

  // ideal
  std::string id_h;
  bool id_t0 = false, id_json = false;
  auto* id = app.add_subcommand("ideal", "generators of the ideal for h");
  long_help_only(id);
  id->add_option("--h", id_h, "Hessenberg function")->required();
  id->add_flag("--t0", id_t0, "set t = 0 (ordinary cohomology)");
  id->add_flag("--json", id_json, "JSON output");

  // hilbert
  std::string hi_h;
  bool hi_json = false;
  auto* hi = app.add_subcommand("hilbert",
                                "Hilbert function of the ordinary quotient");
  long_help_only(hi);
  hi->add_option("--h", hi_h, "Hessenberg function")->required();
  hi->add_flag("--json", hi_json, "JSON output");

  // verify
  std::string ve_h;
  bool ve_json = false;
  auto* ve = app.add_subcommand("verify",
                                "vanishing + Hilbert + regularity certificate");
  long_help_only(ve);
  ve->add_option("--h", ve_h, "Hessenberg function")->required();
  ve->add_flag("--json", ve_json, "JSON output");

  // verify-all
  int va_n = 0;
  bool va_large = false, va_json = false;
  auto* va = app.add_subcommand("verify-all",
                                "certificates for every Hessenberg function");
  va->add_option("--n", va_n, "size of the symmetric group S_n")->required();
  va->add_flag("--allow-large", va_large, "permit n >= 7");
  va->add_flag("--json", va_json, "JSON output");

  // peterson-presentation
  std::string pp_cartan;
  int pp_n = 0;
  bool pp_json = false;
  auto* pp = app.add_subcommand("peterson-presentation",
                                "quadratic presentation certificate");
  pp->add_option("--cartan", pp_cartan, "Cartan type for the general statement");
  pp->add_option("--n", pp_n, "type A symmetric group size");
  pp->add_flag("--json", pp_json, "JSON output");

  // cfrac
  std::string cf_c;
  int cf_m = 0;
  bool cf_json = false;
  auto* cf = app.add_subcommand("cfrac",
                                "continued-fraction recursion x_m = 1 - c/x_{m-1}");
  cf->add_option("--c", cf_c, "exact rational, e.g. 1/4")->required();
  cf->add_option("--m", cf_m, "number of steps")->required();
  cf->add_flag("--json", cf_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*fp) return cmd_fixed_points(fp_h, fp_json);
    if (*bl) return cmd_billey(bl_cartan, bl_v, bl_w, bl_json);
    if (*pc) return cmd_peterson_class(pc_n, pc_A, pc_json);
    if (*pm) return cmd_peterson_monk(pm_n, pm_i, pm_A, pm_json);
    if (*pg) return cmd_peterson_giambelli(pg_n, pg_A, pg_json);
    if (*pn) return cmd_peterson_general(pn_cartan, pn_K, pn_json);
    if (*fj) return cmd_fij(fj_n, fj_t0, fj_json);
    if (*id) return cmd_ideal(id_h, id_t0, id_json);
    if (*hi) return cmd_hilbert(hi_h, hi_json);
    if (*ve) return cmd_verify(ve_h, ve_json);
    if (*va) return cmd_verify_all(va_n, va_large, va_json);
    if (*pp) return cmd_peterson_presentation(pp_cartan, pp_n, pp_json);
    if (*cf) return cmd_cfrac(cf_c, cf_m, cf_json);
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
