// fbeta: command-line front end. Exit codes: 0 ok, 1 verification failure, 2 invalid input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "fbeta/acceptance.hpp"
#include "fbeta/beta.hpp"
#include "fbeta/chern.hpp"
#include "fbeta/finvariant.hpp"
#include "fbeta/parse.hpp"

using nlohmann::json;

namespace fbeta::cli {
namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kSchema = "fbeta.result/1";
constexpr std::size_t kMinPrecision = 50;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned prime = 2;
  int level = 0;  // 0: derived from the prime
  std::size_t precision = 0;  // 0: kAcceptancePrecision, or max(200, 4 weight + 20) for f-inv
  std::uint64_t seed = kDefaultSeed;
  std::string cache_dir;
  std::string format = "text";
  std::string orientation = "default";

  void finalize() {
    if (!is_prime(prime)) throw InputError("--prime must be a prime, got " + std::to_string(prime));
    if (level == 0) level = prime == 2 ? 3 : 1;
    if (precision != 0 && precision < kMinPrecision) throw InputError("--precision must be at least " + std::to_string(kMinPrecision));
  }
  // Modular-form commands only accept (2, 3) and (p >= 5, 1).
  void require_forms() const {
    bool ok = (prime == 2 && level == 3) || (prime >= 5 && level == 1);
    if (!ok)
      throw InputError("unsupported (prime, level) = (" + std::to_string(prime) + ", " + std::to_string(level) +
                       "); use (2, 3) or (p >= 5, 1)");
    if (orientation == "eisenstein" && !(level == 1 && (prime == 5 || prime == 7)))
      throw InputError("--orientation=eisenstein needs level 1 and p = 5 or 7");
  }
  OrientationKind kind() const {
    return orientation == "eisenstein" ? OrientationKind::Eisenstein : OrientationKind::FormalGroup;
  }
  json echo() const {
    // The cache directory is left out: results never depend on it.
    return json{{"prime", prime}, {"level", level}, {"precision", precision}, {"seed", seed}, {"orientation", orientation}};
  }
};

// Result plus human-readable lines; printed once at the end.
struct Output {
  json result = json::object();
  std::vector<std::string> lines;
  int exit_code = 0;
};

void emit(const RunConfig& cfg, const std::string& command, const Output& out) {
  if (cfg.format == "json") {
    json doc{{"schema", kSchema},
             {"tool_version", kToolVersion},
             {"command", command},
             {"config", cfg.echo()},
             {"result", out.result}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& l : out.lines) std::cout << l << '\n';
  }
}

// ---- cache helpers ----

std::optional<Monomial> parse_monomial(const std::string& s, const AlphabetPtr& A) {
  RPoly m = parse_polynomial(s, A);
  if (m.size() != 1 || m.leading_term().second != 1) return std::nullopt;
  return m.leading_term().first;
}

json lattice_payload(const LatticeBasis& L) {
  std::vector<std::pair<std::string, json>> rows;
  for (const auto& [c, piv] : L.pivots())
    rows.emplace_back(c.str(*L.alphabet()),
                      json{{"pivot", c.str(*L.alphabet())}, {"exponent", piv.exponent}, {"vector", piv.vector.str()}});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json arr = json::array();
  for (auto& r : rows) arr.push_back(std::move(r.second));
  return arr;
}

// Seeds LatticeBasis::full(p, degree) from the cache; writes it back when it had to be computed.
class LatticeCache {
 public:
  LatticeCache(const CacheStore& store, unsigned p, int degree) : store_(store), p_(p), degree_(degree) {
    if (!store_.enabled() || LatticeBasis::has_full(p, degree)) return;
    auto payload = store_.load("lattice", key());
    if (!payload) return;
    try {
      const BPContext& bp = BPContext::get(p);
      std::unordered_map<Monomial, LatticeBasis::Pivot, MonomialHash> pivots;
      for (const auto& row : *payload) {
        auto c = parse_monomial(row.at("pivot").get<std::string>(), bp.alphabet());
        if (!c) return;
        pivots.emplace(*c, LatticeBasis::Pivot{parse_polynomial(row.at("vector").get<std::string>(), bp.alphabet()),
                                               row.at("exponent").get<long>()});
      }
      LatticeBasis::preload_full(LatticeBasis::full_from_pivots(p, degree, std::move(pivots)));
      loaded_ = true;
    } catch (const std::exception&) {
      // corrupt entry: recompute
    }
  }
  void save() const {
    if (!store_.enabled() || loaded_) return;
    store_.store("lattice", key(), lattice_payload(*LatticeBasis::full(p_, degree_)));
  }

 private:
  json key() const { return json{{"prime", p_}, {"degree", degree_}, {"nmax", BPContext::get(p_).nmax()}}; }
  const CacheStore& store_;
  unsigned p_;
  int degree_;
  bool loaded_ = false;
};

void seed_eta_r(const CacheStore& store, const BPContext& bp) {
  auto payload = store.load("eta-r", json{{"prime", bp.prime()}, {"nmax", bp.nmax()}});
  if (!payload || !payload->is_object()) return;
  try {
    std::map<int, RPoly> parsed;
    for (auto& [k, v] : payload->items()) parsed.emplace(std::stoi(k), parse_polynomial(v.get<std::string>(), bp.alphabet()));
    // Only a gap-free prefix is usable by the recursion.
    for (int n = 1; parsed.count(n); ++n) bp.seed_eta_R(n, parsed.at(n));
  } catch (const std::exception&) {
  }
}

void save_eta_r(const CacheStore& store, const BPContext& bp) {
  json table = json::object();
  for (const auto& [n, v] : bp.eta_R_table()) table[std::to_string(n)] = v.str();
  store.store("eta-r", json{{"prime", bp.prime()}, {"nmax", bp.nmax()}}, table);
}

std::string series_digest(const FSeries& s) {
  std::string bytes;
  for (std::size_t i = 0; i < s.precision(); ++i) bytes += s[i].str() + ";";
  return digest(bytes);
}

// ---- commands ----

Output cmd_eta_r(const RunConfig& cfg, const CacheStore& store, int n) {
  const BPContext& bp = BPContext::get(cfg.prime);
  if (n < 1 || n > bp.nmax()) throw InputError("eta-r: n must be between 1 and " + std::to_string(bp.nmax()));
  seed_eta_r(store, bp);
  RPoly v = bp.eta_R_generator(n);
  if (store.enabled()) save_eta_r(store, bp);
  Output out;
  out.result = {{"n", n}, {"eta_R", v.str()}, {"mod_p", reduce_mod_p(v, cfg.prime).str()}};
  out.lines = {"eta_R(v" + std::to_string(n) + ") = " + v.str(),
               "mod " + std::to_string(cfg.prime) + ": " + reduce_mod_p(v, cfg.prime).str()};
  return out;
}

Output cmd_beta_rep(const RunConfig& cfg, const CacheStore& store, int t, int s, int r) {
  if (r > 1) throw InputError("r>1 unsupported");
  if (t < 1 || s < 1 || r < 1) throw InputError("beta-rep: indices must be positive");
  const unsigned p = cfg.prime;
  int degree = beta_degree(p, t, s);
  LatticeCache lc(store, p, degree);
  BetaData b;
  try {
    b = beta_construction(t, s, r, p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  lc.save();
  Output out;
  out.result = {{"t", t},
                {"s", s},
                {"r", r},
                {"degree", b.coset.degree},
                {"order_exponent", b.coset.order_exponent},
                {"x", b.x.str()},
                {"cocycle", b.z.str()},
                {"representative", b.coset.representative.str()}};
  out.lines = {"beta_{" + std::to_string(t) + "/" + std::to_string(s) + "," + std::to_string(r) + "} at p = " +
                   std::to_string(p) + ", degree " + std::to_string(b.coset.degree),
               "x = " + b.x.str(), "cocycle z = " + b.z.str(), "representative " + b.coset.str()};
  return out;
}

struct GeneratorSpec {
  bool alpha = false;
  int t = 0, s = 1;
  std::string name;
};

GeneratorSpec parse_generator(const std::vector<std::string>& words) {
  std::vector<std::string> tok;
  for (const auto& w : words) {
    std::istringstream in(w);
    for (std::string x; in >> x;) tok.push_back(x);
  }
  auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok.at(i), &used);
      if (used != tok.at(i).size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw InputError("expected an integer, got '" + (i < tok.size() ? tok[i] : std::string()) + "'");
    }
  };
  GeneratorSpec g;
  if (tok.size() >= 2 && tok.size() <= 3 && tok[0] == "beta") {
    g.t = num(1);
    if (tok.size() == 3) g.s = num(2);
    g.name = "beta_{" + std::to_string(g.t) + "/" + std::to_string(g.s) + "}";
  } else if (tok.size() == 2 && tok[0] == "alpha1*alpha") {
    g.alpha = true;
    g.t = num(1);
    g.name = "alpha_1 alpha_" + std::to_string(g.t);
  } else {
    throw InputError("generator must be 'beta T [S]' or 'alpha1*alpha T'");
  }
  if (g.t < 1 || g.s < 1) throw InputError("generator indices must be positive");
  return g;
}

Output cmd_f_inv(RunConfig& cfg, const CacheStore& store, const std::vector<std::string>& words) {
  cfg.require_forms();
  GeneratorSpec g = parse_generator(words);
  const unsigned p = cfg.prime;
  if (g.alpha && p != 2) throw InputError("alpha1*alpha is only available at p = 2");
  const Orientation& o = Orientation::get(p, cfg.level, cfg.kind());
  int degree = g.alpha ? 2 * (g.t + 1) : beta_degree(p, g.t, g.s);
  if (cfg.precision == 0) cfg.precision = std::max<std::size_t>(kAcceptancePrecision, 2 * degree + 20);
  LatticeCache lc(store, p, degree);
  TensorCoset rep;
  try {
    rep = g.alpha ? alpha1_alpha_t_representative(g.t) : beta_representative(g.t, g.s, 1, p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  lc.save();
  FClass f = f_invariant(rep, o, cfg.precision);

  // Closed form, where one is known.
  std::optional<FSeries> closed;
  std::string closed_name;
  if (cfg.level == 3) {
    if (g.alpha) {
      FPoly c = closed_form_alpha1_alpha_t();
      closed = IgusaBasis::get().expansion(c, cfg.precision);
      closed_name = c.str();
    } else {
      int i = 0;
      while ((1 << i) < g.s) ++i;
      if ((1 << i) == g.s && g.t % g.s == 0 && (g.t / g.s) % 2 == 1 && !(g.t == 1 && g.s == 1)) {
        FPoly c = closed_form_beta(g.t / g.s, i);
        closed = IgusaBasis::get().expansion(c, cfg.precision);
        closed_name = c.str();
      }
    }
  } else if (g.s == 1 && !g.alpha) {
    if (cfg.kind() == OrientationKind::Eisenstein && g.t == 1) {
      closed = laures_closed_form(p, cfg.precision);
      closed_name = "(E_{p-1} - 1)/p^2 - ((E_{p-1} - 1)/p)^p/p";
    } else if (cfg.kind() == OrientationKind::FormalGroup) {
      closed = beta_t_closed_form(g.t, o, cfg.precision);
      closed_name = "b^t - (T^p - T + b)^t";
    }
  }

  Output out;
  json fc{{"degree", f.degree},
          {"prime", f.prime},
          {"level", f.level},
          {"structured", f.str()},
          {"digest", series_digest(f.reduction)},
          {"precision", f.precision},
          {"ambiguity_basis_size", f.ambiguity.size()}};
  out.result = {{"generator", g.name}, {"f_invariant", fc}};
  out.lines = {"f(" + g.name + ") at (p, level) = (" + std::to_string(p) + ", " + std::to_string(cfg.level) + ")",
               "degree " + std::to_string(f.degree) + ", precision " + std::to_string(f.precision) +
                   ", ambiguity basis " + std::to_string(f.ambiguity.size()),
               "value: " + f.str(), "digest: " + series_digest(f.reduction)};
  if (cfg.level == 3 && f.degree >= 8 && (f.degree & (f.degree - 1)) == 0) {
    int bit = kervaire_projection(f);
    out.result["kervaire_projection"] = bit;
    out.lines.push_back("kervaire projection: " + std::to_string(bit));
  }
  if (closed) {
    bool match = equivalent(f, *closed);
    out.result["closed_form"] = {{"form", closed_name}, {"matches", match}};
    out.lines.push_back("closed form " + closed_name + ": " + (match ? "match" : "MISMATCH"));
    if (!match) out.exit_code = 1;
  }
  return out;
}

Output cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify_suites();
  } else {
    auto known = verify_suites();
    if (std::find(known.begin(), known.end(), suite) == known.end())
      throw InputError("unknown suite '" + suite + "'");
    suites = {suite};
  }
  Output out;
  json arr = json::array();
  bool all_ok = true;
  for (const auto& s : suites) {
    for (const auto& c : run_suite(s, cfg.seed, cfg.precision)) {
      all_ok = all_ok && c.passed;
      arr.push_back({{"suite", s}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out.lines.push_back(std::string(c.passed ? "PASS " : "FAIL ") + s + ": " + c.name +
                          (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
  out.result = {{"suite", suite}, {"passed", all_ok}, {"checks", arr}};
  out.exit_code = all_ok ? 0 : 1;
  return out;
}

Output cmd_qexp(const RunConfig& cfg, const CacheStore& store, const std::string& form, std::size_t terms) {
  cfg.require_forms();
  const ModularForms& M = ModularForms::get(cfg.level);
  RPoly f;
  try {
    f = parse_polynomial(form, M.alphabet());
  } catch (const std::exception& e) {
    throw InputError("cannot parse form '" + form + "': " + e.what());
  }
  json key{{"level", cfg.level}, {"form", f.str()}, {"precision", cfg.precision}};
  std::vector<std::pair<Rational, Rational>> coeffs;
  if (auto payload = store.load("qexp", key)) {
    try {
      for (const auto& c : *payload)
        coeffs.emplace_back(parse_rational(c.at(0).get<std::string>()), parse_rational(c.at(1).get<std::string>()));
      if (coeffs.size() != cfg.precision) coeffs.clear();
    } catch (const std::exception&) {
      coeffs.clear();
    }
  }
  if (coeffs.empty()) {
    CSeries s = M.expansion(f, cfg.precision);
    json payload = json::array();
    for (std::size_t i = 0; i < s.precision(); ++i) {
      coeffs.emplace_back(s[i].a(), s[i].b());
      payload.push_back({to_string(s[i].a()), to_string(s[i].b())});
    }
    store.store("qexp", key, payload);
  }
  Output out;
  json arr = json::array();
  std::size_t shown = std::min(terms, coeffs.size());
  std::string text;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Cyclo c(coeffs[i].first, coeffs[i].second);
    arr.push_back(c.str());
    if (i < shown && !c.is_zero()) {
      std::string cs = c.str();
      if (i > 0 && cs.find_first_of("+-", 1) != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
      text += (text.empty() ? "" : " + ") + cs + (i == 0 ? "" : i == 1 ? "*q" : "*q^" + std::to_string(i));
    }
  }
  out.result = {{"form", f.str()}, {"coefficients", arr}};
  out.lines = {f.str() + " = " + (text.empty() ? "0" : text) + " + O(q^" + std::to_string(shown) + ")"};
  return out;
}

Output cmd_chern(int dimension, const std::string& numbers) {
  Output out;
  if (dimension != 4 && dimension != 8) {
    if (!numbers.empty()) throw InputError("Chern numbers can only be evaluated in dimension 4 or 8");
    KervaireReduction r;
    try {
      r = kervaire_reduction(dimension);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    out.result = {{"dimension", dimension},
                  {"experimental", true},
                  {"complete", r.complete},
                  {"gamma_monomials_tried", r.gamma_monomials_used},
                  {"unresolved", r.unresolved}};
    out.lines = {"dimension " + std::to_string(dimension) + " (experimental): reduction " +
                     (r.complete ? "complete" : "incomplete"),
                 "tried phi^{-1} of " + std::to_string(r.gamma_monomials_used.size()) + " Gamma-monomials"};
    // Group the unresolved Chern monomials by the tensor monomial that blocks them.
    std::map<std::string, int> blocking;
    for (const auto& u : r.unresolved) ++blocking[u.substr(0, u.find(' '))];
    out.lines.push_back(std::to_string(r.unresolved.size()) + " unresolved entries:");
    for (const auto& [m, count] : blocking) out.lines.push_back("  " + m + " (" + std::to_string(count) + ")");
    if (r.polynomial) out.lines.push_back("polynomial: " + r.polynomial->str());
    return out;
  }
  FPoly f = kervaire_chern_polynomial(dimension);
  out.result = {{"dimension", dimension}, {"polynomial", f.str()}, {"required", required_chern_numbers(dimension)}};
  out.lines = {"dimension " + std::to_string(dimension) + ": " + f.str() + " mod 2"};
  if (numbers.empty()) return out;

  std::string text = numbers;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot read " + text.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw InputError("--numbers must be a JSON object name -> integer");
  ChernData data{dimension, {}};
  for (auto& [k, v] : doc.items()) {
    if (!v.is_number_integer() && !v.is_string()) throw InputError("Chern number '" + k + "' is not an integer");
    try {
      data.numbers[k] = Integer(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
    } catch (const std::exception&) {
      throw InputError("Chern number '" + k + "' is not an integer");
    }
  }
  ManifoldVerdict verdict;
  try {
    verdict = evaluate_manifold(data);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out.result["value"] = verdict.value.get_str();
  out.result["parity"] = verdict.kervaire_one ? 1 : 0;
  out.result["verdict"] = verdict.verdict();
  out.lines.push_back("value " + verdict.value.get_str() + ", verdict " + verdict.verdict());
  return out;
}

}  // namespace
}  // namespace fbeta::cli

int main(int argc, char** argv) {
  using namespace fbeta;
  using namespace fbeta::cli;
  CLI::App app{"f-invariants of beta families and related checks"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--prime", cfg.prime, "prime p")->capture_default_str();
  app.add_option("--level", cfg.level, "3 (with p = 2) or 1 (with p >= 5); derived from the prime if omitted");
  app.add_option("--precision", cfg.precision, "q-expansion coefficients (default 200; f-inv: max(200, 4 weight + 20))");
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached eta_R tables, lattices and q-expansions");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--orientation", cfg.orientation, "default or eisenstein (level 1, p = 5 or 7)")
      ->check(CLI::IsMember({"default", "eisenstein"}))
      ->capture_default_str();

  int eta_n = 1;
  auto* eta = app.add_subcommand("eta-r", "right unit on v_n");
  eta->add_option("n", eta_n, "index n")->required();

  int bt = 0, bs = 0, br = 1;
  auto* beta = app.add_subcommand("beta-rep", "representative of beta_{t/s,r} in Ext^2");
  beta->add_option("t", bt)->required();
  beta->add_option("s", bs)->required();
  beta->add_option("r", br)->capture_default_str();

  std::vector<std::string> gen_words;
  auto* finv = app.add_subcommand("f-inv", "f-invariant of 'beta T [S]' or 'alpha1*alpha T'");
  finv->add_option("generator", gen_words)->required()->expected(1, 3);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a check suite (or 'all')");
  verify->add_option("suite", suite)->required();

  std::string form;
  std::size_t terms = 10;
  auto* qexp = app.add_subcommand("qexp", "q-expansion of a polynomial in the modular generators");
  qexp->add_option("form", form)->required();
  qexp->add_option("--terms", terms, "coefficients shown in text mode")->capture_default_str();

  int dimension = 8;
  std::string numbers;
  auto* chern = app.add_subcommand("chern", "Kervaire parity polynomial in Chern numbers");
  chern->add_option("--dimension", dimension)->capture_default_str();
  chern->add_option("--numbers", numbers, "JSON object of Chern numbers, or @file");

  for (auto* sub : {eta, beta, finv, verify, qexp, chern}) sub->fallthrough();

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

  try {
    cfg.finalize();
    if (!*finv && cfg.precision == 0) cfg.precision = kAcceptancePrecision;
    CacheStore store = cfg.cache_dir.empty() ? CacheStore() : CacheStore(cfg.cache_dir);
    Output out;
    std::string command;
    if (*eta) {
      command = "eta-r";
      out = cmd_eta_r(cfg, store, eta_n);
    } else if (*beta) {
      command = "beta-rep";
      out = cmd_beta_rep(cfg, store, bt, bs, br);
    } else if (*finv) {
      command = "f-inv";
      out = cmd_f_inv(cfg, store, gen_words);
    } else if (*verify) {
      command = "verify";
      out = cmd_verify(cfg, suite);
    } else if (*qexp) {
      command = "qexp";
      out = cmd_qexp(cfg, store, form, terms);
    } else {
      command = "chern";
      out = cmd_chern(dimension, numbers);
    }
    emit(cfg, command, out);
    return out.exit_code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
