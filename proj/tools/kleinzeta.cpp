// Command line front end: field inspection, point counts, Jacobi sums, zeta
// numerators, Hecke eigenvalue tables, and the verification suites.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kleinzeta/character.hpp"
#include "kleinzeta/charsums.hpp"
#include "kleinzeta/curves.hpp"
#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/errors.hpp"
#include "kleinzeta/field.hpp"
#include "kleinzeta/hecke.hpp"
#include "kleinzeta/verify.hpp"
#include "kleinzeta/version.hpp"
#include "kleinzeta/zeta.hpp"

namespace kz = kleinzeta;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double cli_rh_tol = 1e-9;

ordered_json big_json(const kz::BigInt& v) {
  static const kz::BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const kz::BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();  // out of int64 range: decimal string keeps it exact
}

ordered_json poly_json(const std::vector<kz::BigInt>& b) {
  ordered_json a = ordered_json::array();
  for (const auto& c : b) a.push_back(big_json(c));
  return a;
}

std::string render_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : v) {
      if (!first) s += ' ';
      first = false;
      s += render_scalar(e);
    }
    s += ']';
    return s;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Emitter {
  std::string format = "text";
  std::string command;
  std::vector<ordered_json> rows;

  void add(ordered_json row) { rows.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    if (format == "json") {
      ordered_json doc;
      doc["tool"] = "kleinzeta";
      doc["version"] = kz::version_string;
      doc["command"] = command;
      doc["rows"] = rows;
      os << doc.dump(2) << '\n';
    } else if (format == "csv") {
      os << "# kleinzeta " << kz::version_string << "\r\n";
      if (rows.empty()) return;
      bool first = true;
      for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << csv_escape(it.key());
      }
      os << "\r\n";
      for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          if (!first) os << ',';
          first = false;
          os << csv_escape(render_scalar(it.value()));
        }
        os << "\r\n";
      }
    } else {
      os << "kleinzeta " << kz::version_string << '\n';
      for (const auto& row : rows) {
        bool first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          if (!first) os << "  ";
          first = false;
          os << it.key() << '=' << render_scalar(it.value());
        }
        os << '\n';
      }
    }
  }
};

// Single JSON document, advisory only: results are always recomputed and the
// file is rewritten at exit.  Unreadable or mismatched-version files are
// ignored.  With check=true a recomputed value differing from the stored one
// is a verification failure.
struct Cache {
  bool enabled = false;
  bool check = false;
  std::string path;
  ordered_json doc;
  bool dirty = false;
  bool mismatch = false;

  void load() {
    doc = ordered_json::object();
    doc["version"] = 1;
    doc["counts"] = ordered_json::object();
    doc["primes"] = ordered_json::object();
    if (!enabled) return;
    std::ifstream in(path);
    if (!in) return;
    ordered_json parsed = ordered_json::parse(in, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) return;
    if (!parsed.contains("version") || parsed["version"] != 1) return;
    for (const char* sec : {"counts", "primes"})
      if (parsed.contains(sec) && parsed[sec].is_object()) doc[sec] = parsed[sec];
  }

  void store(ordered_json& slot, const std::string& where, const ordered_json& value) {
    if (!slot.is_null()) {
      if (slot != value) {
        if (check) {
          mismatch = true;
          std::cerr << "cache mismatch at " << where << '\n';
        }
        slot = value;
        dirty = true;
      }
      return;
    }
    slot = value;
    dirty = true;
  }

  void record_count(const std::string& curve, std::uint64_t q, std::uint64_t n) {
    if (!enabled) return;
    std::string key = "(" + curve + "," + std::to_string(q) + ")";
    store(doc["counts"][key], "counts/" + key, ordered_json(n));
  }

  void record_prime(std::uint32_t p, const std::string& field, const ordered_json& value) {
    if (!enabled) return;
    std::string key = "(" + std::to_string(p) + ")";
    if (!doc["primes"].contains(key)) doc["primes"][key] = ordered_json::object();
    store(doc["primes"][key][field], "primes/" + key + "/" + field, value);
  }

  void save() {
    if (!enabled || !dirty) return;
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
      std::cerr << "cache: cannot write " << path << '\n';
      return;
    }
    out << doc.dump(2) << '\n';
  }
};

struct GlobalOpts {
  std::string format = "text";
  unsigned threads = 0;
  kz::Budgets budgets;
  Cache cache;
};

// KLEINZETA_THREADS overrides --threads when set.
bool apply_thread_env(unsigned& threads) {
  const char* env = std::getenv("KLEINZETA_THREADS");
  if (!env || !*env) return true;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v > (1u << 16)) return false;
  threads = unsigned(v);
  return true;
}

std::optional<kz::PrimePower> parse_prime_power(std::uint64_t q) {
  if (q < 2 || q > kz::max_field_size) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned r = 0;
  std::uint64_t t = q;
  while (t > 1) {
    if (t % p != 0) return std::nullopt;
    t /= p;
    ++r;
  }
  return kz::PrimePower{std::uint32_t(p), r, std::uint32_t(q)};
}

std::optional<kz::CurveModel> parse_curve(const std::string& s, bool allow_birational) {
  if (s == "klein") return kz::CurveModel::klein();
  if (allow_birational && s == "birational") return kz::CurveModel::klein_birational();
  if (s.rfind("fermat:", 0) == 0) {
    const std::string tail = s.substr(7);
    if (tail.empty() || tail.size() > 6) return std::nullopt;
    for (char c : tail)
      if (c < '0' || c > '9') return std::nullopt;
    unsigned n = unsigned(std::stoul(tail));
    if (n == 0) return std::nullopt;
    return kz::CurveModel::fermat(n);
  }
  return std::nullopt;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return 2;
}

// ---------- subcommands ----------

int run_field(GlobalOpts& g, Emitter& em, std::uint64_t q) {
  auto pp = parse_prime_power(q);
  if (!pp) return usage_error("q must be a prime power up to 2^24");
  kz::Field F = kz::build_field(pp->p, pp->r, g.budgets.field);
  ordered_json row;
  row["p"] = F.p();
  row["r"] = F.r();
  row["q"] = F.q();
  ordered_json mod = ordered_json::array();
  for (std::uint32_t c : F.modulus()) mod.push_back(c);
  row["modulus"] = mod;
  row["generator"] = F.generator();
  em.add(std::move(row));
  return 0;
}

int run_count(GlobalOpts& g, Emitter& em, const std::string& curve, std::uint64_t q,
              const std::string& method) {
  auto model = parse_curve(curve, true);
  if (!model) return usage_error("unknown curve '" + curve + "'");
  auto pp = parse_prime_power(q);
  if (!pp) return usage_error("q must be a prime power up to 2^24");
  if (model->kind != kz::CurveKind::Fermat && pp->p == 7)
    return usage_error("klein models are not defined in characteristic 7 here");
  if (method != "brute" && method != "formula" && method != "both")
    return usage_error("method must be brute, formula or both");

  kz::Field F = kz::build_field(pp->p, pp->r, g.budgets.field);
  std::vector<std::pair<std::string, std::uint64_t>> results;
  if (method == "formula" || method == "both") {
    std::uint64_t n = 0;
    switch (model->kind) {
      case kz::CurveKind::Klein: n = kz::klein_count_formula(F); break;
      case kz::CurveKind::KleinBirational: n = kz::count_birational(F, g.budgets); break;
      default: n = kz::fermat_count_formula(F, model->n); break;
    }
    results.emplace_back("formula", n);
  }
  if (method == "brute" || method == "both")
    results.emplace_back("brute",
                         kz::count_projective_brute(F, *model, g.budgets, g.threads));

  for (const auto& [m, n] : results) {
    ordered_json row;
    row["curve"] = curve;
    row["q"] = q;
    row["method"] = m;
    row["N"] = n;
    em.add(std::move(row));
    g.cache.record_count(curve, q, n);
  }
  if (results.size() == 2 && results[0].second != results[1].second) {
    std::cerr << "count mismatch: formula=" << results[0].second
              << " brute=" << results[1].second << '\n';
    return 1;
  }
  return 0;
}

int run_jacobi(GlobalOpts& g, Emitter& em, std::uint64_t q, unsigned n, unsigned i,
               unsigned j) {
  auto pp = parse_prime_power(q);
  if (!pp) return usage_error("q must be a prime power up to 2^24");
  kz::Field F = kz::build_field(pp->p, pp->r, g.budgets.field);
  if (n == 0 || (F.q() - 1) % n != 0)
    return usage_error("n must divide q-1");
  kz::Character chi = kz::character_of_order(F, n);
  kz::CyclotomicInt J = kz::jacobi_sum(chi.power(i), chi.power(j));
  ordered_json row;
  row["q"] = q;
  row["n"] = n;
  row["i"] = i;
  row["j"] = j;
  row["order"] = J.order();
  row["coeffs"] = poly_json(J.coeffs());
  std::string pretty = kz::to_string(J);
  if (J.order() == 7 && kz::is_sigma2_fixed(J)) pretty = kz::to_string(kz::to_quad7(J));
  row["value"] = pretty;
  em.add(std::move(row));
  return 0;
}

int run_zeta(GlobalOpts& g, Emitter& em, const std::string& curve, std::uint32_t p) {
  auto model = parse_curve(curve, false);
  if (!model) return usage_error("zeta supports curves 'klein' and 'fermat:N'");
  kz::ZetaFunction z;
  if (model->kind == kz::CurveKind::Klein)
    z = kz::zeta_klein(p, g.budgets);
  else
    z = kz::zeta_fermat(p, model->n, g.budgets);

  unsigned genus = unsigned((z.numerator.b.size() - 1) / 2);
  bool fe = kz::functional_equation_holds(z.numerator);
  double rh = kz::rh_max_residual(z.numerator);
  std::vector<kz::BigInt> counts = kz::counts_from_numerator(z.numerator, 2 * genus);

  ordered_json row;
  row["curve"] = curve;
  row["p"] = z.p;
  row["r"] = z.r;
  row["numerator"] = poly_json(z.numerator.b);
  row["rh_max_residual"] = rh;
  row["functional_eq"] = fe;
  row["counts"] = poly_json(counts);
  em.add(std::move(row));

  if (model->kind == kz::CurveKind::Klein)
    g.cache.record_prime(p, "numerator", poly_json(z.numerator.b));
  return fe && rh < cli_rh_tol ? 0 : 1;
}

int run_ap(GlobalOpts& g, Emitter& em, const std::string& range) {
  std::uint64_t lo = 0, hi = 0;
  auto dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoull(range);
    } else {
      lo = std::stoull(range.substr(0, dots));
      hi = std::stoull(range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return usage_error("--p-range expects A..B");
  }
  if (lo > hi || hi > kz::max_field_size) return usage_error("--p-range expects A..B");

  static const char* omega_name[3] = {"1", "omega", "omega^2"};
  bool all_ok = true;
  for (std::uint32_t p : kz::primes_up_to(std::uint32_t(hi))) {
    if (p < lo) continue;
    ordered_json row;
    row["p"] = p;
    if (p == 7) {
      row["a"] = nullptr;
      row["chi7"] = nullptr;
      row["note"] = "ramified, excluded";
      row["verified"] = nullptr;
      em.add(std::move(row));
      continue;
    }
    kz::ApTriple t = kz::ap_triple(p);
    kz::BigInt a = t.a0.rational_value();
    unsigned e = kz::chi7_exponent(p);
    kz::Theorem1Report rep = kz::verify_theorem1(p, g.budgets);
    all_ok = all_ok && rep.match;
    row["a"] = big_json(a);
    row["chi7"] = omega_name[e % 3];
    row["note"] = "";
    row["verified"] = rep.match;
    em.add(std::move(row));
    ordered_json ap = ordered_json::array();
    ap.push_back(big_json(a));
    ap.push_back(e % 3);
    g.cache.record_prime(p, "ap", ap);
    g.cache.record_prime(p, "verified", rep.match);
    g.cache.record_prime(p, "numerator", poly_json(rep.curve_side));
  }
  return all_ok ? 0 : 1;
}

int run_verify(GlobalOpts& g, Emitter& em, const std::string& suite, std::uint32_t pmax,
               std::uint32_t qmax) {
  kz::VerifyOptions opt;
  opt.budgets = g.budgets;
  opt.threads = g.threads;
  if (pmax) {
    opt.theorem1_max = pmax;
    opt.theorem1_cubic_max = std::min(opt.theorem1_cubic_max, pmax);
    opt.weil_klein_max = pmax;
    opt.hudson_williams_max = pmax;
    opt.fc3_prime_max = pmax;
    opt.hecke_max = pmax;
    opt.hecke_norm_max = pmax;
  }
  if (qmax) {
    opt.brute_match_max = qmax;
    opt.congruence_max = qmax;
    opt.weil_fc3_max = qmax;
    opt.fc3_q_max = qmax;
    opt.character_field_max = std::min(opt.character_field_max, qmax);
    opt.cover_max = std::min(opt.cover_max, qmax);
  }

  std::vector<kz::CheckRow> rows = kz::run_suite(suite, opt);
  bool all_ok = true;
  for (const auto& r : rows) {
    ordered_json row;
    row["suite"] = r.suite;
    row["name"] = r.name;
    row["detail"] = r.detail;
    row["pass"] = r.pass;
    em.add(std::move(row));
    all_ok = all_ok && r.pass;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zeta functions of the Klein quartic and Fermat curves"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::uint64_t budget_plane = g.budgets.plane;
  std::uint64_t budget_linear = g.budgets.linear;
  bool verify_cache = false;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads, 0 = hardware");
  app.add_option("--cache", g.cache.path, "advisory result cache file");
  app.add_flag("--verify-cache", verify_cache,
               "fail when recomputed values differ from cached ones");
  app.add_option("--budget-plane", budget_plane, "max q for O(q^2) scans")
      ->capture_default_str();
  app.add_option("--budget-linear", budget_linear, "max q for O(q) scans")
      ->capture_default_str();

  auto* c_field = app.add_subcommand("field", "finite field tables");
  c_field->fallthrough();
  std::uint64_t f_q = 0;
  c_field->add_option("--q", f_q, "prime power")->required();

  auto* c_count = app.add_subcommand("count", "projective point counts");
  c_count->fallthrough();
  std::string ct_curve = "klein";
  std::uint64_t ct_q = 0;
  std::string ct_method = "formula";
  c_count->add_option("--curve", ct_curve, "klein, birational or fermat:N")
      ->capture_default_str();
  c_count->add_option("--q", ct_q, "prime power")->required();
  c_count->add_option("--method", ct_method, "brute, formula or both")
      ->capture_default_str();

  auto* c_jacobi = app.add_subcommand("jacobi", "Jacobi sums as cyclotomic integers");
  c_jacobi->fallthrough();
  std::uint64_t j_q = 0;
  unsigned j_n = 7, j_i = 1, j_j = 2;
  c_jacobi->add_option("--q", j_q, "prime power")->required();
  c_jacobi->add_option("--n", j_n, "character order, must divide q-1")
      ->capture_default_str();
  c_jacobi->add_option("--i", j_i, "first character power")->capture_default_str();
  c_jacobi->add_option("--j", j_j, "second character power")->capture_default_str();

  auto* c_zeta = app.add_subcommand("zeta", "zeta numerator over F_p");
  c_zeta->fallthrough();
  std::string z_curve = "klein";
  std::uint32_t z_p = 0;
  c_zeta->add_option("--curve", z_curve, "klein or fermat:N")->capture_default_str();
  c_zeta->add_option("--p", z_p, "prime")->required();

  auto* c_ap = app.add_subcommand("ap", "newform Hecke eigenvalue table");
  c_ap->fallthrough();
  std::string a_range;
  c_ap->add_option("--p-range", a_range, "primes A..B")->required();

  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->fallthrough();
  std::string v_suite = "all";
  std::uint32_t v_pmax = 0, v_qmax = 0;
  std::string suites_help = "all";
  for (const auto& s : kz::verify_suite_names()) suites_help += ", " + s;
  c_verify->add_option("--suite", v_suite, suites_help)->capture_default_str();
  c_verify->add_option("--p-max", v_pmax, "restrict prime sweeps");
  c_verify->add_option("--q-max", v_qmax, "restrict prime power sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!apply_thread_env(g.threads))
    return usage_error("KLEINZETA_THREADS must be a small nonnegative integer");
  g.budgets.plane = budget_plane;
  g.budgets.linear = budget_linear;
  g.cache.enabled = !g.cache.path.empty();
  g.cache.check = verify_cache;
  g.cache.load();

  Emitter em;
  em.format = g.format;

  int rc = 0;
  try {
    if (c_field->parsed()) {
      em.command = "field";
      rc = run_field(g, em, f_q);
    } else if (c_count->parsed()) {
      em.command = "count";
      rc = run_count(g, em, ct_curve, ct_q, ct_method);
    } else if (c_jacobi->parsed()) {
      em.command = "jacobi";
      rc = run_jacobi(g, em, j_q, j_n, j_i, j_j);
    } else if (c_zeta->parsed()) {
      em.command = "zeta";
      rc = run_zeta(g, em, z_curve, z_p);
    } else if (c_ap->parsed()) {
      em.command = "ap";
      rc = run_ap(g, em, a_range);
    } else if (c_verify->parsed()) {
      em.command = "verify";
      rc = run_verify(g, em, v_suite, v_pmax, v_qmax);
    }
  } catch (const kz::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const kz::integrity_error& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::domain_error& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (rc == 2) return 2;
  em.print(std::cout);
  g.cache.save();
  if (g.cache.mismatch) return 1;
  return rc;
}
