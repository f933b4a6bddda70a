#include "pbrat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "pbrat/classify.hpp"
#include "pbrat/hilbert.hpp"
#include "pbrat/param.hpp"
#include "pbrat/report.hpp"
#include "pbrat/semigroup.hpp"
#include "pbrat/tuples.hpp"
#include "pbrat/verify.hpp"

namespace pbrat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_integer(const std::string& text, const std::string& what) {
  const auto v = parse_int(text);
  if (!v) throw UsageError(what + ": '" + text + "' is not an integer");
  return *v;
}

Int parse_positive(const std::string& text, const std::string& what) {
  const Int v = parse_integer(text, what);
  if (v < 1) throw UsageError(what + " must be a positive integer, got " + text);
  return v;
}

std::vector<Int> parse_positives(const std::vector<std::string>& items, const std::string& what) {
  std::vector<Int> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_positive(s, what));
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(CLI::detail::trim_copy(cur));
  return parts;
}

Quad as_quad(const std::vector<Int>& v, const std::string& what) {
  if (v.size() != 4) throw UsageError(what + " needs exactly 4 entries, got " + std::to_string(v.size()));
  return Quad{v[0], v[1], v[2], v[3]};
}

std::string join(std::span<const Int> xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += to_string(xs[i]);
  }
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, _] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_classification(std::ostream& out, const ClassificationReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (r.input) rows.emplace_back("input", join(r.input->values()));
  if (r.reduced) rows.emplace_back("reduced", join(r.reduced->values()));
  rows.emplace_back("weights", join(r.weights.w) + " (degree " + to_string(r.weights.degree) + ")");
  rows.emplace_back("verdict", std::string(to_string(r.verdict)));
  rows.emplace_back("criterion", std::string(to_string(r.criterion)));
  rows.emplace_back("alpha", to_string(r.alpha));
  rows.emplace_back("ample_canonical", yes_no(r.ample_canonical));
  rows.emplace_back("rational_singularity", yes_no(r.rational_singularity_at_origin));
  if (r.witness) rows.emplace_back("witness", join(*r.witness));
  print_rows(out, rows);
}

// Minimal TOML subset: `key = value` lines, integers, bracketed lists and
// quoted or bare strings, `#` comments.
void apply_config_file(const std::string& path, SweepConfig& cfg, bool& workers_set) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  const auto unquote = [](std::string s) {
    s = CLI::detail::trim_copy(s);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
    return s;
  };
  const auto list_items = [&](std::string v) {
    v = CLI::detail::trim_copy(v);
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
    std::vector<std::string> items;
    for (auto& s : split(v, ',')) {
      if (!s.empty()) items.push_back(unquote(s));
    }
    return items;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = CLI::detail::trim_copy(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = CLI::detail::trim_copy(line.substr(0, eq));
    const std::string value = line.substr(eq + 1);
    if (key == "max_entry") {
      cfg.max_entry = parse_positive(unquote(value), "max_entry");
    } else if (key == "n_range") {
      cfg.n_range = parse_positives(list_items(value), "n_range");
    } else if (key == "checks") {
      cfg.checks.clear();
      for (const auto& name : list_items(value)) {
        const auto c = parse_check(name);
        if (!c) throw UsageError("unknown check '" + name + "'");
        cfg.checks.push_back(*c);
      }
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(parse_positive(unquote(value), "workers"));
      workers_set = true;
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

struct SweepFlags {
  std::string max;
  unsigned jobs = 0;
  std::string checks;
  std::string config;
  std::uint64_t seed = 1;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--max", f.max, "Largest tuple entry");
  cmd->add_option("--jobs", f.jobs, "Worker threads (fallback: PBRAT_JOBS)");
  cmd->add_option("--checks", f.checks, "Comma-separated checks to run");
  cmd->add_option("--config", f.config, "TOML-style sweep config (max_entry, n_range, checks, workers)");
  cmd->add_option("--seed", f.seed, "Unused by sweeps; accepted for uniformity");
}

SweepConfig build_sweep_config(const SweepFlags& f, std::vector<Check> default_checks, Int default_max) {
  SweepConfig cfg;
  cfg.max_entry = default_max;
  cfg.checks = std::move(default_checks);
  bool workers_set = false;
  if (!f.config.empty()) apply_config_file(f.config, cfg, workers_set);
  if (!f.max.empty()) cfg.max_entry = parse_positive(f.max, "--max");
  if (!f.checks.empty()) {
    cfg.checks.clear();
    for (const auto& name : split(f.checks, ',')) {
      const auto c = parse_check(name);
      if (!c) throw UsageError("unknown check '" + name + "'");
      cfg.checks.push_back(*c);
    }
  }
  if (f.jobs > 0) {
    cfg.workers = f.jobs;
  } else if (const char* env = std::getenv("PBRAT_JOBS"); env && *env) {
    cfg.workers = static_cast<unsigned>(parse_positive(env, "PBRAT_JOBS"));
  } else if (!workers_set) {
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  }
  if (cfg.max_entry < 2) throw UsageError("--max must be at least 2");
  return cfg;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rationality of Pham-Brieskorn threefolds and weighted projective hypersurfaces", "pbrat"};
  app.require_subcommand(1);

  bool json = false;
  std::vector<std::string> pos;

  auto* classify = app.add_subcommand("classify", "Classify B_{a0,a1,a2,a3}, or a hypersurface given by --weights/--degree");
  std::string weights_text, degree_text;
  classify->add_option("exponents", pos, "Four positive exponents");
  classify->add_option("--weights", weights_text, "Hypersurface weights w0,w1,w2,w3");
  classify->add_option("--degree", degree_text, "Hypersurface degree (a multiple of lcm(w))");
  classify->add_flag("--json", json, "Emit JSON");

  auto* reduce = app.add_subcommand("reduce", "Cotype-0 reduction of a0 a1 a2 a3");
  reduce->add_option("exponents", pos)->required();
  reduce->add_flag("--json", json);

  auto* cotype_cmd = app.add_subcommand("cotype", "Cotype of a0 a1 a2 a3");
  cotype_cmd->add_option("exponents", pos)->required();
  cotype_cmd->add_flag("--json", json);

  auto* frob = app.add_subcommand("frobenius", "Frobenius number of <d1, d2, ...>");
  frob->add_option("generators", pos)->required();
  frob->add_flag("--json", json);

  auto* member = app.add_subcommand("membership", "Is N in <d1, d2, ...>?");
  member->add_option("values", pos, "N followed by the generators")->required();
  member->add_flag("--json", json);

  auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of S/(f) and h^i(O_X(k))");
  std::string k_text;
  hilbert->add_option("--weights", weights_text)->required();
  hilbert->add_option("--degree", degree_text)->required();
  hilbert->add_option("--k", k_text)->required();
  hilbert->add_flag("--json", json);

  auto* ample = app.add_subcommand("enumerate-ample", "Coprime (a,c) with ac - 2a - 2c > 0");
  std::string max_text;
  bool csv = false;
  ample->add_option("--max", max_text)->required();
  ample->add_flag("--json", json);
  ample->add_flag("--csv", csv);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps (JSON report)");
  verify->require_subcommand(1);
  SweepFlags sweep;
  auto* theorem_a = verify->add_subcommand("theorem-a", "Theorem A parts (i) and (ii)");
  auto* lemmas = verify->add_subcommand("lemmas", "gcd/lcm lemmas and the Brauer-type bound");
  auto* equivalence = verify->add_subcommand("equivalence", "h^2 = 0 versus the classifier");
  for (auto* cmd : {theorem_a, lemmas, equivalence}) add_sweep_flags(cmd, sweep);

  auto* param = verify->add_subcommand("param", "Residual of the Fermat parametrization");
  std::string a_text, c_text;
  std::size_t samples = 100, k_vars = 2, l_vars = 2;
  double tol = 1e-9;
  param->add_option("--a", a_text);
  param->add_option("--c", c_text);
  param->add_option("--samples", samples);
  param->add_option("--seed", sweep.seed);
  param->add_option("--tol", tol);
  param->add_option("--k", k_vars, "Number of X variables");
  param->add_option("--l", l_vars, "Number of Y variables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (classify->parsed()) {
      ClassificationReport r;
      if (!weights_text.empty() || !degree_text.empty()) {
        if (!pos.empty()) throw UsageError("give either exponents or --weights/--degree, not both");
        if (weights_text.empty() || degree_text.empty()) throw UsageError("--weights and --degree go together");
        const Quad w = as_quad(parse_positives(split(weights_text, ','), "weight"), "--weights");
        r = classify_hypersurface(WeightSystem::make(w, parse_positive(degree_text, "--degree")));
      } else {
        r = classify_pb(ExponentTuple(as_quad(parse_positives(pos, "exponent"), "classify")));
      }
      json ? emit(out, to_json(r)) : print_classification(out, r);
    } else if (reduce->parsed()) {
      const ExponentTuple t(as_quad(parse_positives(pos, "exponent"), "reduce"));
      const Reduction red = reduce_to_cotype0(t);
      if (json) {
        emit(out, to_json(red, t));
      } else {
        std::vector<std::pair<std::string, std::string>> rows{{"input", join(t.values())},
                                                              {"reduced", join(red.result.values())}};
        for (std::size_t i = 0; i < red.trace.size(); ++i) rows.emplace_back("step " + std::to_string(i), join(red.trace[i]));
        print_rows(out, rows);
      }
    } else if (cotype_cmd->parsed()) {
      const ExponentTuple t(as_quad(parse_positives(pos, "exponent"), "cotype"));
      if (json) {
        Json j;
        j["input"] = ints_json(t.values());
        j["cotype"] = cotype(t);
        emit(out, j);
      } else {
        out << cotype(t) << '\n';
      }
    } else if (frob->parsed()) {
      const SemigroupSpec spec(parse_positives(pos, "generator"));
      const Int f = frobenius(spec);
      if (json) {
        Json j;
        j["generators"] = ints_json(spec.generators());
        j["frobenius"] = int_json(f);
        emit(out, j);
      } else {
        out << to_string(f) << '\n';
      }
    } else if (member->parsed()) {
      if (pos.size() < 2) throw UsageError("membership needs N and at least one generator");
      const Int n = parse_integer(pos[0], "N");
      if (n < 0) throw UsageError("N must be a natural number");
      const SemigroupSpec spec(parse_positives({pos.begin() + 1, pos.end()}, "generator"));
      const auto rep = representation(spec, n);
      if (json) {
        Json j;
        j["n"] = int_json(n);
        j["generators"] = ints_json(spec.generators());
        j["member"] = rep.has_value();
        j["witness"] = rep ? ints_json(*rep) : Json(nullptr);
        emit(out, j);
      } else {
        out << (rep ? "true" : "false") << '\n';
      }
    } else if (hilbert->parsed()) {
      const Quad w = as_quad(parse_positives(split(weights_text, ','), "weight"), "--weights");
      const WeightSystem ws = WeightSystem::make(w, parse_positive(degree_text, "--degree"));
      const Int k = parse_integer(k_text, "--k");
      const HilbertProfile p = hilbert_profile(ws.w, ws.degree, k);
      Json j = to_json(p);
      j["alpha"] = int_json(ws.alpha);
      j["h0"] = int_json(h_zero(ws, k));
      j["h1"] = int_json(h_middle(ws, k));
      j["h2"] = int_json(h_top(ws, k));
      if (json) {
        emit(out, j);
      } else {
        print_rows(out, {{"weights", join(ws.w)},
                         {"degree", to_string(ws.degree)},
                         {"k", to_string(k)},
                         {"dim S_k", to_string(p.dim_S_k)},
                         {"dim S_(k-d)", to_string(p.dim_S_k_minus_d)},
                         {"dim A_k", to_string(p.dim_A_k)},
                         {"alpha", to_string(ws.alpha)},
                         {"h^0(O_X(k))", to_string(h_zero(ws, k))},
                         {"h^1(O_X(k))", to_string(h_middle(ws, k))},
                         {"h^2(O_X(k))", to_string(h_top(ws, k))}});
      }
    } else if (ample->parsed()) {
      const Int max = parse_positive(max_text, "--max");
      if (max < 2) throw UsageError("--max must be at least 2");
      if (json && csv) throw UsageError("--json and --csv are exclusive");
      const auto pairs = enumerate_ample_pairs(max);
      if (json) {
        Json j;
        j["max"] = int_json(max);
        Json arr = Json::array();
        for (const auto& [a, c] : pairs) arr.push_back(Json::array({int_json(a), int_json(c)}));
        j["pairs"] = std::move(arr);
        emit(out, j);
      } else if (csv) {
        out << "a,c\n";
        for (const auto& [a, c] : pairs) out << to_string(a) << ',' << to_string(c) << '\n';
      } else {
        for (const auto& [a, c] : pairs) out << '(' << to_string(a) << ", " << to_string(c) << ")\n";
      }
    } else if (verify->parsed()) {
      if (param->parsed()) {
        if (a_text.empty() != c_text.empty()) throw UsageError("--a and --c go together");
        if (samples < 1) throw UsageError("--samples must be positive");
        if (!(tol > 0.0)) throw UsageError("--tol must be positive");
        std::vector<std::pair<Int, Int>> pairs;
        if (!a_text.empty()) {
          pairs.emplace_back(parse_positive(a_text, "--a"), parse_positive(c_text, "--c"));
        } else {
          for (Int a = 2; a <= 10; ++a) {
            for (Int c = a + 1; c <= 10; ++c) {
              if (gcd(a, c) == 1) pairs.emplace_back(a, c);
            }
          }
        }
        Json j;
        Json runs = Json::array();
        bool all = true;
        for (const auto& [a, c] : pairs) {
          const ParamCheckReport rep = check_parametrization(a, c, samples, sweep.seed, tol, k_vars, l_vars);
          all = all && rep.passed;
          runs.push_back(to_json(rep));
        }
        j["runs"] = std::move(runs);
        j["passed"] = all;
        emit(out, j);
        return all ? kOk : kViolations;
      }
      SweepConfig cfg;
      if (theorem_a->parsed()) {
        cfg = build_sweep_config(sweep, {Check::TheoremA_i, Check::TheoremA_ii}, 30);
      } else if (lemmas->parsed()) {
        cfg = build_sweep_config(sweep, {Check::Lemma_gkl, Check::Lemma_fg, Check::Brauer}, 30);
      } else {
        cfg = build_sweep_config(sweep, {Check::Equivalence_h2}, 16);
      }
      const SweepReport rep = run_sweep(cfg);
      emit(out, to_json(rep));
      return rep.passed() ? kOk : kViolations;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    Json j;
    j["error"] = error_code(e.kind());
    j["message"] = e.what();
    err << j.dump() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "internal";
    j["message"] = e.what();
    err << j.dump() << '\n';
    return kDomainError;
  }
}

}  // namespace pbrat::cli
