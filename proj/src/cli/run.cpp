#include "gkz/cli/run.hpp"

#include <chrono>
#include <random>

#include "gkz/error.hpp"
#include "gkz/lattice/instance.hpp"
#include "gkz/suites.hpp"

namespace gkz::cli {

namespace {

using io::json;

struct Context {
  const InstanceConfig& config;
  FiniteField k;
  json& results;
  std::vector<Check>& checks;

  const IntMatrix& matrix() const {
    if (!config.matrix) throw DomainError("this command needs a matrix");
    return *config.matrix;
  }

  CharacterSpec chi(std::size_t n) const {
    if (!config.chi) return CharacterSpec::trivial(n, k);
    if (config.chi->size() != n)
      throw DomainError("chi needs " + std::to_string(n) + " entries, got " + std::to_string(config.chi->size()));
    return CharacterSpec::make(*config.chi, k);
  }

  // The configured point of k^N, or a sampled point of (k^*)^N off the
  // degeneracy locus.
  std::vector<Element> point(const IntMatrix& A) const {
    std::vector<Element> x;
    if (config.x) {
      for (auto c : *config.x) x.push_back(k.element(c));
      return x;
    }
    if (config.x_log) {
      for (auto v : *config.x_log) x.push_back(k.exp(v));
      return x;
    }
    const auto s = sample_point(k, A, config.seed, config.attempts, config.m_max, config.budget);
    json codes = json::array();
    for (auto e : s.x) codes.push_back(e.code);
    results["sample"] = {{"seed", config.seed}, {"x", codes}, {"rejections", s.rejections}};
    return s.x;
  }

  // A single field element for the one-parameter families, default 1.
  Element scalar() const {
    if (config.x) {
      if (config.x->size() != 1) throw DomainError("this command takes a single x");
      return k.element(config.x->front());
    }
    if (config.x_log) {
      if (config.x_log->size() != 1) throw DomainError("this command takes a single x");
      return k.exp(config.x_log->front());
    }
    return k.one();
  }

  void check(std::string name, std::optional<bool> pass, std::string detail = {}) const {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
  }
};

json codes(std::span<const Element> x) {
  json out = json::array();
  for (auto e : x) out.push_back(e.code);
  return out;
}

bool even_exponents(const WeightPolynomial& f) {
  for (int d = 1; d <= f.degree(); d += 2)
    if (f.coeff(d) != 0) return false;
  return true;
}

void cmd_sum(const Context& c) {
  const IntMatrix& A = c.matrix();
  const auto chi = c.chi(static_cast<std::size_t>(A.rows()));
  const auto x = c.point(A);
  const FieldTower T(c.k, c.config.m);
  std::vector<Element> xm;
  for (auto e : x) xm.push_back(T.embed(e));
  c.results["m"] = c.config.m;
  c.results["x"] = codes(x);
  c.results["hyp"] = io::value_json(hyp_sum(SumQuery{T, A, chi, xm}, c.config.budget));
}

void cmd_gauss(const Context& c) {
  const auto chi = c.chi(1);
  const FieldTower T(c.k, c.config.m);
  const CycloNumber g = gauss_sum(T, chi);
  c.results["m"] = c.config.m;
  c.results["gauss"] = io::value_json(g);
  if (chi.is_trivial()) {
    c.check("norm", g == CycloNumber(-1), "trivial character: g = -1");
  } else {
    const CycloNumber Q(Rational(T.ext().size()));
    c.check("norm", g * g.conjugate() == Q, "g times its conjugate equals q^m");
  }
}

void cmd_kloosterman(const Context& c) {
  const std::size_t n = c.config.chi ? c.config.chi->size() : 1;
  if (n == 0) throw DomainError("Kloosterman sums need n >= 1");
  const auto chi = c.chi(n);
  const Element x = c.scalar();
  const FieldTower T(c.k, 1);
  const CycloNumber K = kloosterman_sum(T, chi, x, c.config.budget);
  std::vector<Element> point(n, c.k.one());
  point.push_back(x);
  const CycloNumber H = hyp_sum(SumQuery{T, kloosterman_matrix(static_cast<int>(n)), chi, point}, c.config.budget);
  c.results["x"] = x.code;
  c.results["kloosterman"] = io::value_json(K);
  c.check("matches_hyp", K == H, "equals Hyp for the matrix (I_n | -1) at (1, ..., 1, x)");
}

void cmd_katz(const Context& c) {
  const auto [n, m] = c.config.katz;
  const auto chi = c.chi(static_cast<std::size_t>(n + m - 1));
  const Element x = c.scalar();
  const auto r = katz_equivalence(FieldTower(c.k, 1), n, m, chi, x, c.config.budget);
  c.results["katz"] = {n, m};
  c.results["x"] = x.code;
  c.results["hyp"] = io::value_json(r.lhs);
  c.results["direct"] = io::value_json(r.rhs);
  c.check("equivalence", r.holds, "Hyp equals the directly enumerated sum");
}

void cmd_batch(const Context& c) {
  const IntMatrix& A = c.matrix();
  const auto n = static_cast<std::size_t>(A.rows());
  const auto x = c.point(A);
  const FieldTower T(c.k, c.config.m);
  std::vector<Element> xm;
  for (auto e : x) xm.push_back(T.embed(e));
  const auto table = batch_all_characters(T, A, xm, c.config.budget);
  json rows = json::array();
  CycloNumber total;
  for (std::size_t i = 0; i < table.size(); ++i) {
    rows.push_back({{"chi", character_at(i, n, c.k.unit_order())}, {"hyp", io::value_json(table[i])}});
    total += table[i];
  }
  c.results["m"] = c.config.m;
  c.results["x"] = codes(x);
  c.results["table"] = std::move(rows);
  if (c.config.m == 1) {
    Element sx = c.k.zero();
    for (auto e : x) sx = c.k.add(sx, e);
    CycloNumber expected = additive_char(T, sx);
    for (std::size_t i = 0; i < n; ++i) expected *= Rational(c.k.unit_order());
    c.check("orthogonality", total == expected, "sum over characters equals (q-1)^n psi(sum x)");
  } else {
    c.check("orthogonality", std::nullopt, "stated over the base field only");
  }
}

void cmd_volume(const Context& c) {
  const GkzInstance inst(c.matrix());
  c.results["volume"] = io::to_json(inst.volume);
  c.results["dimension"] = inst.Delta.dim();
  c.results["f_vector"] = inst.Delta.faces.f_vector();
  json vertices = json::array();
  for (int v : inst.Delta.vertices) {
    json p = json::array();
    for (Eigen::Index i = 0; i < inst.Delta.points.rows(); ++i) p.push_back(io::to_json(inst.Delta.points(i, v)));
    vertices.push_back(std::move(p));
  }
  c.results["vertices"] = std::move(vertices);
  c.results["generates_lattice"] = inst.A.generates_lattice();
}

void cmd_alpha_beta(const Context& c) {
  const GkzInstance inst(c.matrix());
  const auto b = beta(inst.Delta);
  c.results["beta"] = io::to_json(b);
  bool even = even_exponents(b);
  if (inst.delta.pointed()) {
    const auto a = alpha(inst.delta);
    c.results["alpha"] = io::to_json(a);
    even = even && even_exponents(a);
  } else {
    c.results["alpha"] = nullptr;
  }
  c.results["Delta"] = io::to_json(inst.Delta.faces);
  c.check("even_exponents", even, "alpha and beta are polynomials in T^2");
}

void cmd_weights(const Context& c) {
  const IntMatrix& A = c.matrix();
  const GkzInstance inst(A);
  const auto chi = c.chi(static_cast<std::size_t>(A.rows()));
  const auto E = E_polynomial(inst, chi);
  const auto e = e_value(inst, chi);
  c.results["E"] = io::to_json(E)["coeffs"];
  c.results["e"] = io::to_json(e);
  json tset = json::array();
  for (const auto& t : t_set(inst, chi))
    tset.push_back({{"face_id", t.face}, {"dim", t.dim}, {"N_tau", t.N_tau}, {"chi_tau", t.chi_tau.exponents}});
  c.results["t_set"] = std::move(tset);
  c.results["degree"] = io::to_json(inst.volume);

  Integer at_one = 0;
  for (const auto& coef : E.coefficients()) at_one += coef;
  const Integer target = A.cols() % 2 == 0 ? inst.volume : Integer(-inst.volume);
  c.check("E_at_one", at_one == target, "E(1) = (-1)^N n! vol(Delta)");
  c.check("degree_bound", E.degree() <= A.rows() + A.cols(), "deg E <= n + N");
  const auto expected = expected_spectrum(E, A.rows(), A.cols(), inst.volume);
  c.results["expected"] = io::to_json(expected);
  c.check("sign", expected.signs_consistent, "nonzero coefficients of E share the sign (-1)^N");
}

void cmd_resonance(const Context& c) {
  const GkzInstance inst(c.matrix());
  const auto chi = c.chi(static_cast<std::size_t>(inst.A.n()));
  c.results["chi"] = chi.exponents;
  c.results["resonance"] = io::to_json(nonresonant(chi, inst.delta, true));
  c.results["generates_lattice"] = inst.A.generates_lattice();
}

void cmd_nondegen(const Context& c) {
  const IntMatrix& A = c.matrix();
  const auto x = c.point(A);
  const auto r = nondegenerate_check(c.k, A, x, c.config.m_max, c.config.budget);
  c.results["x"] = codes(x);
  c.results["nondegeneracy"] = io::to_json(r);
  c.check("nondegenerate", r.nondegenerate,
          r.nondegenerate ? "no witness up to degree " + std::to_string(c.config.m_max) : "witness found");
}

void cmd_lfactor(const Context& c) {
  const IntMatrix& A = c.matrix();
  const GkzInstance inst(A);
  const auto chi = c.chi(static_cast<std::size_t>(A.rows()));
  const auto x = c.point(A);
  const auto D = static_cast<unsigned>(to_int64(inst.volume));
  const unsigned M = overdetermined_depth(c.k.size(), A.rows(), D, c.config.budget);
  const auto sums = power_sums(c.k, A, chi, x, M, c.config.budget);
  const auto cp = charpoly_from_power_sums(sums.P, D, false);
  json S = json::array();
  for (const auto& s : sums.S) S.push_back(io::value_json(s));
  c.results["x"] = codes(x);
  c.results["degree"] = D;
  c.results["power_sums"] = std::move(S);
  c.results["charpoly"] = io::to_json(cp);
  c.check("consistency", cp.consistent, "power sums beyond the degree match the reconstruction");
  if (!cp.consistent) return;
  try {
    const auto s = weight_spectrum(cp, c.k.size(), A.rows(), c.config.digits);
    json w = json::object();
    for (const auto& [v, n] : s.weights) w[std::to_string(v)] = n;
    c.results["weights"] = std::move(w);
    c.check("integral_weights", true, "all 2 log_q |alpha| within tolerance of integers in [0, n]");
  } catch (const ConsistencyError& err) {
    c.check("integral_weights", false, err.what());
  }
}

void cmd_verify(const Context& c) {
  const IntMatrix& A = c.matrix();
  const auto chi = c.chi(static_cast<std::size_t>(A.rows()));
  const auto x = c.point(A);
  VerifyOptions opt;
  opt.m_max = c.config.m_max;
  opt.digits = c.config.digits;
  opt.budget = c.config.budget;
  const auto rep = verify_point(c.k, A, chi, x, opt);
  c.results["x"] = codes(x);
  c.results["report"] = io::to_json(rep);
  c.check("hypotheses", rep.status != "hypotheses unverified", rep.status);
  for (const auto& ch : rep.checks) c.checks.push_back(ch);
}

void cmd_identities(const Context& c) {
  std::mt19937_64 rng(c.config.seed);
  const unsigned count = c.config.samples;
  std::vector<SuiteResult> suites;
  if (c.k.size() >= 3) suites.push_back(mixed_twisted_suite(c.k, rng, count, c.config.budget));
  suites.push_back(homogeneity_suite(c.k, c.config.matrix ? *c.config.matrix : kloosterman_matrix(1), rng, count,
                                     c.config.budget));
  suites.push_back(katz_suite(c.k, rng, count, c.config.budget));
  suites.push_back(nonconfluent_suite(c.k, rng, count, c.config.budget));
  for (const auto& s : suites) {
    c.results[s.name] = {{"cases", s.cases}, {"failures", s.failures}, {"skipped", s.skipped}};
    c.check(s.name, s.pass(), std::to_string(s.cases - s.failures) + "/" + std::to_string(s.cases) + " hold");
  }
}

using Handler = void (*)(const Context&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"sum", cmd_sum},         {"gauss", cmd_gauss},         {"kloosterman", cmd_kloosterman},
      {"katz", cmd_katz},       {"batch", cmd_batch},         {"volume", cmd_volume},
      {"alpha-beta", cmd_alpha_beta}, {"weights", cmd_weights}, {"resonance", cmd_resonance},
      {"nondegen", cmd_nondegen}, {"lfactor", cmd_lfactor},   {"verify", cmd_verify},
      {"identities", cmd_identities}};
  return table;
}

}  // namespace

int Report::exit_code() const {
  for (const auto& c : checks)
    if (c.pass && !*c.pass) return kCheckFailed;
  return kOk;
}

io::json Report::to_json() const {
  json ch = json::object();
  for (const auto& c : checks) ch[c.name] = io::to_json(c);
  return {{"command", command}, {"config", config}, {"results", results}, {"checks", std::move(ch)},
          {"timing", {{"seconds", seconds}}}};
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const std::string& command, const InstanceConfig& config) {
  Handler handler = nullptr;
  for (const auto& [name, h] : handlers())
    if (name == command) handler = h;
  if (!handler) throw DomainError("unknown command '" + command + "'");
  validate(config);

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;
  rep.config = to_json(config);
  rep.results = json::object();
  const FiniteField k = FiniteField::make(config.p, config.e, config.modulus);
  rep.results["field"] = io::to_json(k);
  handler(Context{config, k, rep.results, rep.checks});
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SamplePoint sample_point(const FiniteField& k, const IntMatrix& A, std::uint64_t seed, unsigned attempts,
                         unsigned m_max, std::uint64_t budget) {
  if (k.size() < 2) throw DomainError("no nonzero elements");
  std::mt19937_64 rng(seed);
  SamplePoint out;
  for (unsigned a = 0; a < attempts; ++a) {
    std::vector<Element> x;
    for (Eigen::Index j = 0; j < A.cols(); ++j) x.push_back(Element{static_cast<std::uint32_t>(1 + rng() % k.unit_order())});
    if (nondegenerate_check(k, A, x, m_max, budget).nondegenerate) {
      out.x = std::move(x);
      return out;
    }
    ++out.rejections;
  }
  throw BudgetError("no nondegenerate point in " + std::to_string(attempts) +
                    " attempts; the nondegenerate locus may have no points with nonzero coordinates at this q");
}

int exit_code_for(const std::exception& err) {
  if (dynamic_cast<const DomainError*>(&err)) return kUsage;
  if (dynamic_cast<const BudgetError*>(&err) || dynamic_cast<const PrecisionError*>(&err)) return kBudget;
  return kCheckFailed;
}

io::json error_json(const std::exception& err) {
  std::string kind = "internal";
  if (dynamic_cast<const DomainError*>(&err))
    kind = "usage";
  else if (dynamic_cast<const BudgetError*>(&err))
    kind = "budget";
  else if (dynamic_cast<const PrecisionError*>(&err))
    kind = "precision";
  else if (dynamic_cast<const ConsistencyError*>(&err))
    kind = "consistency";
  return {{"error", kind}, {"message", err.what()}, {"exit_code", exit_code_for(err)}};
}

}  // namespace gkz::cli
