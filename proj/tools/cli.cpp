#include "cli.hpp"

#include "k3lat/errors.hpp"
#include "k3lat/family.hpp"
#include "k3lat/plane_search.hpp"
#include "k3lat/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

namespace k3lat::cli {

namespace {

struct CommandConfig {
  std::string command;
  std::string input;
  std::string s_min = "-5";
  std::string s_max = "5";
  std::size_t samples = 1001;
  unsigned workers = 1;
  std::string json_out;
  bool list_witnesses = false;
  bool symbolic_only = false;
  bool samples_only = false;
  std::string e_scale;
  std::string s = "0";
  std::string a_min = "1";
  std::string a_max = "3";
  std::string b_min = "1";
  std::string b_max = "3";
};

// Index-ordered chunks; each worker writes only its own slots.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F body) {
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * chunk; i < std::min(n, (t + 1) * chunk); ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Rational parse_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string(flag) + ": " + e.what());
  }
}

Rational irrational_scale(const CommandConfig& cfg) {
  return cfg.e_scale.empty() ? default_irrational_scale() : parse_flag(cfg.e_scale, "--e-scale");
}

std::vector<Rational> sweep(const CommandConfig& cfg) {
  const Rational lo = parse_flag(cfg.s_min, "--s-min");
  const Rational hi = parse_flag(cfg.s_max, "--s-max");
  if (!(lo < hi)) throw MalformedInput("--s-min must be smaller than --s-max");
  if (cfg.samples < 1) throw MalformedInput("--samples must be at least 1");
  return linspace(lo, hi, cfg.samples);
}

std::vector<Rational> integer_range(const std::string& lo_text, const std::string& hi_text, const char* name) {
  const Rational lo = parse_flag(lo_text, name);
  const Rational hi = parse_flag(hi_text, name);
  if (lo.get_den() != 1 || hi.get_den() != 1 || hi < lo)
    throw MalformedInput(std::string(name) + ": expected an integer range");
  std::vector<Rational> out;
  for (Integer k = lo.get_num(); k <= hi.get_num(); ++k) out.emplace_back(k);
  return out;
}

SampleRunner parallel_runner(unsigned workers) {
  return [workers](const AffineFamily& fam, const std::vector<Rational>& points) {
    std::vector<SampleOutcome> out(points.size());
    parallel_for(points.size(), workers, [&](std::size_t i) { out[i] = verify_sample(fam, points[i]); });
    return out;
  };
}

Json family_json(const Rational& scale) {
  return {{"irrational_scale", format_rational(scale)},
          {"irrational_norm", to_json(irrational_vector_norm(scale))},
          {"generator", "phi"}};
}

int verify_paper(const CommandConfig& cfg, Json& out) {
  if (cfg.symbolic_only && cfg.samples_only) throw MalformedInput("--symbolic-only and --samples-only exclude each other");
  const Rational scale = irrational_scale(cfg);
  VerifyOptions opts;
  opts.symbolic = !cfg.samples_only;
  opts.samples = !cfg.symbolic_only;
  if (opts.samples) opts.sweep = sweep(cfg);
  opts.runner = parallel_runner(cfg.workers);
  const VerificationCertificate cert = verify_theorem_hypotheses(paper_family(scale), phi(), opts);
  out = to_json(cert);
  out["family"] = family_json(scale);
  out["proof"] = opts.symbolic ? "symbolic" : "samples only";
  return cert.all_pass ? kSuccess : kVerificationFailed;
}

int roots(const CommandConfig& cfg, Json& out) {
  const GramLattice& lat = k3_lattice();
  const auto vectors = vectors_from_json(parse_json_file(cfg.input), lat.rank());
  const Rational s = parse_flag(cfg.s, "--s");
  RootSearchResult r;
  try {
    r = find_roots_orthogonal_to(vectors, s, lat);
  } catch (const NotPositivePlane& e) {
    throw MalformedInput(e.what());
  }
  out = to_json(r, cfg.list_witnesses);
  out["s"] = format_rational(s);
  return r.outcome == RootOutcome::empty ? kSuccess : kVerificationFailed;
}

int e8_roots(const CommandConfig& cfg, Json& out) {
  const GramLattice e8 = minus_e8();
  const auto found = enumerate_norm(IntMatrix::identity(e8.rank()), e8, -2);
  bool closed = true;
  for (const auto& v : found) closed = closed && std::binary_search(found.begin(), found.end(), -v, canonical_less);
  out = {{"count", found.size()}, {"closed_under_negation", closed}};
  if (cfg.list_witnesses) {
    Json list = Json::array();
    for (const auto& v : found) list.push_back(to_json(v));
    out["roots"] = list;
  }
  return kSuccess;
}

int check_isometry(const CommandConfig& cfg, Json& out) {
  const GramLattice& lat = k3_lattice();
  const IntMatrix m = matrix_from_json(parse_json_file(cfg.input));
  if (m.rows() != lat.rank() || m.cols() != lat.rank())
    throw MalformedInput("matrix must be " + std::to_string(lat.rank()) + "x" + std::to_string(lat.rank()));
  const bool iso = is_isometry(m, lat);
  out = {{"isometry", iso}, {"o_plus", iso ? Json(is_o_plus(LatticeIsometry(m, lat))) : Json(false)}};
  if (iso) out["determinant"] = to_json(determinant(m));
  return iso && out["o_plus"].get<bool>() ? kSuccess : kVerificationFailed;
}

int scan(const CommandConfig& cfg, Json& out) {
  const Rational scale = irrational_scale(cfg);
  const AffineFamily fam = paper_family(scale);
  const auto outcomes = parallel_runner(cfg.workers)(fam, sweep(cfg));
  Json rows = Json::array();
  for (const auto& o : outcomes) rows.push_back(to_json(o));
  const SweepSummary summary = summarize(outcomes);
  out = {{"family", family_json(scale)},
         {"samples", rows},
         {"summary", {{"points", summary.points}, {"members", summary.members}, {"witnesses", summary.witnesses}}}};
  return summary.failures.empty() ? kSuccess : kVerificationFailed;
}

int search2d(const CommandConfig& cfg, Json& out) {
  const Rational scale = irrational_scale(cfg);
  const auto a_values = integer_range(cfg.a_min, cfg.a_max, "--a-min/--a-max");
  const auto b_values = integer_range(cfg.b_min, cfg.b_max, "--b-min/--b-max");
  const auto grid = sweep(cfg);
  std::vector<PlaneTemplate> templates;
  for (const auto& a : a_values)
    for (const auto& b : b_values) templates.push_back({a, b, scale});
  std::vector<PlaneCandidate> results(templates.size());
  parallel_for(templates.size(), cfg.workers,
               [&](std::size_t i) { results[i] = evaluate_plane_candidate(templates[i], grid, grid); });

  Json list = Json::array();
  std::size_t passing = 0;
  for (const auto& c : results) {
    Json slices = Json::array();
    for (const auto& st : c.slices)
      slices.push_back({{"axis", st.axis},
                        {"equivariant", st.equivariant},
                        {"shift", st.shift ? Json(format_rational(*st.shift)) : Json(nullptr)},
                        {"symbolic_success", st.symbolic_success},
                        {"symbolic_failure", st.symbolic_failure}});
    Json first = nullptr;
    if (c.first_root_at)
      first = {{"s", format_rational(c.first_root_at->first)},
               {"r", format_rational(c.first_root_at->second)},
               {"root", c.first_root ? to_json(*c.first_root) : Json(nullptr)}};
    passing += c.passes_samples() ? 1 : 0;
    list.push_back({{"a", format_rational(c.tpl.a)},
                    {"b", format_rational(c.tpl.b)},
                    {"positive", c.positive},
                    {"integral_rank", c.rank.integral_rank},
                    {"dimension", c.rank.dimension},
                    {"slices", slices},
                    {"sample_points", c.sample_points},
                    {"sample_roots", c.sample_roots},
                    {"first_root", first},
                    {"passes_samples", c.passes_samples()}});
  }
  out = {{"experimental", true},
         {"status", "sample evidence; symbolic status covers the axis slices only"},
         {"family", family_json(scale)},
         {"candidates", list},
         {"passing", passing}};
  return passing > 0 ? kSuccess : kVerificationFailed;
}

void add_sweep_flags(CLI::App* cmd, CommandConfig& cfg) {
  cmd->add_option("--s-min", cfg.s_min, "lower end of the parameter range (fraction)");
  cmd->add_option("--s-max", cfg.s_max, "upper end of the parameter range (fraction)");
  cmd->add_option("--samples", cfg.samples, "number of evenly spaced sample points");
  cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--e-scale", cfg.e_scale, "scale c of the irrational vector (fraction)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact lattice verification for the K3 lattice construction"};
  app.require_subcommand(1);
  app.add_option("--json-out", cfg.json_out, "also write the JSON result to FILE");

  auto* verify = app.add_subcommand("verify-paper", "check every hypothesis for the one-parameter family");
  add_sweep_flags(verify, cfg);
  verify->add_flag("--symbolic-only", cfg.symbolic_only, "skip the sample sweep");
  verify->add_flag("--samples-only", cfg.samples_only, "skip the symbolic obstruction");

  auto* roots_cmd = app.add_subcommand("roots", "roots orthogonal to user-supplied vectors");
  roots_cmd->add_option("input", cfg.input, "JSON point descriptor")->required();
  roots_cmd->add_option("--s", cfg.s, "parameter value for polynomial coordinates (fraction)");
  roots_cmd->add_flag("--list-witnesses", cfg.list_witnesses, "list every root found");

  auto* e8 = app.add_subcommand("e8-roots", "enumerate the roots of -E8");
  e8->add_flag("--list-witnesses", cfg.list_witnesses, "list every root");

  auto* iso = app.add_subcommand("check-isometry", "isometry and O+ test for a 22x22 matrix");
  iso->add_option("input", cfg.input, "JSON file {\"matrix\": [[...]]}")->required();

  auto* scan_cmd = app.add_subcommand("scan", "per-sample root search along the family");
  add_sweep_flags(scan_cmd, cfg);

  auto* plane = app.add_subcommand("search2d", "experimental grid search over two-parameter families");
  add_sweep_flags(plane, cfg);
  plane->add_option("--a-min", cfg.a_min);
  plane->add_option("--a-max", cfg.a_max);
  plane->add_option("--b-min", cfg.b_min);
  plane->add_option("--b-max", cfg.b_max);

  for (auto* cmd : {verify, roots_cmd, e8, iso, scan_cmd, plane}) cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kMalformedInput;
  }
  if (plane->parsed()) {
    cfg.s_min = plane->count("--s-min") ? cfg.s_min : "-1";
    cfg.s_max = plane->count("--s-max") ? cfg.s_max : "1";
    if (!plane->count("--samples")) cfg.samples = 5;
  }
  if (scan_cmd->parsed() && !scan_cmd->count("--samples")) cfg.samples = 11;

  try {
    Json result;
    int code = kSuccess;
    if (verify->parsed()) code = verify_paper(cfg, result);
    else if (roots_cmd->parsed()) code = roots(cfg, result);
    else if (e8->parsed()) code = e8_roots(cfg, result);
    else if (iso->parsed()) code = check_isometry(cfg, result);
    else if (scan_cmd->parsed()) code = scan(cfg, result);
    else code = search2d(cfg, result);
    const std::string text = result.dump(2) + "\n";
    out << text;
    if (!cfg.json_out.empty()) {
      std::ofstream file(cfg.json_out);
      if (!file) throw MalformedInput("cannot write " + cfg.json_out);
      file << text;
    }
    if (code != kSuccess) err << "verification failed\n";
    return code;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

}  // namespace k3lat::cli
