#include "fatpoints/asymptotics.hpp"
#include "fatpoints/cli.hpp"
#include "fatpoints/errors.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace fatpoints::cli {

using ojson = nlohmann::ordered_json;

namespace {

/// Accumulates the report and tracks whether any rank was uncertified.
struct Context {
  explicit Context(const RunConfig& c) : cfg(c) {}

  const RunConfig& cfg;
  ojson input = ojson::object();
  std::vector<std::string> warnings;
  bool uncertified = false;
  /// Rows for CSV output; empty for structured-only reports.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  AlphaOptions alpha_options() const {
    AlphaOptions o;
    o.rank.strategy = cfg.strategy;
    o.mode = cfg.mode;
    return o;
  }

  void note_certificate(const AlphaCertificate& c, const std::string& what) {
    if (!c.certified) {
      uncertified = true;
      warnings.push_back(what + ": ranks are heuristic (multimodular agreement); use "
                                "--strategy multimodular-certify or exact for a proof");
    }
    if (c.primes_disagreed) {
      warnings.push_back(what + ": modular images disagreed; the larger rank was kept");
    }
  }
};

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw InputError(cfg.command + " expects exactly one input file");
  return cfg.inputs.front();
}

PointConfig load_points(Context& ctx) {
  const auto& path = single_input(ctx.cfg);
  PointConfig pc = parse_points_file(path);
  ctx.input["path"] = path;
  ctx.input["config"] = point_config_json(pc);
  return pc;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson certificate_json(const AlphaCertificate& c) {
  ojson j;
  j["search_interval"] = {c.search_lower, c.search_upper};
  j["kernel_dimension"] = c.kernel_dimension;
  j["columns"] = c.columns;
  j["rank_below"] = c.rank_below;
  j["columns_below"] = c.columns_below;
  j["certified"] = c.certified;
  j["primes_used"] = c.primes_used;
  return j;
}

ojson alpha_entry_json(const AlphaResult& a, const RunConfig& cfg) {
  ojson j;
  j["m"] = a.m;
  j["alpha_m"] = a.alpha;
  j["strategy"] = std::string(to_string(cfg.strategy));
  j["certificate"] = certificate_json(a.certificate);
  return j;
}

ojson verdicts_json(const std::vector<ChudnovskyVerdict>& vs) {
  ojson arr = ojson::array();
  for (const auto& v : vs) {
    arr.push_back({{"m", v.m}, {"alpha_m", v.alpha_m}, {"slack", to_string(v.slack)}, {"holds", v.holds}});
  }
  return arr;
}

ojson cmd_alpha(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const unsigned m = ctx.cfg.m.value_or(1);
  ctx.input["m"] = m;
  const auto a = alpha_symbolic(pc, m, ctx.alpha_options());
  ctx.note_certificate(a.certificate, "alpha m=" + std::to_string(m));
  ctx.csv_header = {"m", "alpha_m", "certified"};
  ctx.csv_rows.push_back({std::to_string(m), std::to_string(a.alpha), a.certificate.certified ? "true" : "false"});
  return alpha_entry_json(a, ctx.cfg);
}

ojson cmd_hilbert(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  std::vector<std::size_t> values;
  if (ctx.cfg.d_max) {
    ctx.input["d_max"] = *ctx.cfg.d_max;
    for (unsigned d = 0; d <= *ctx.cfg.d_max; ++d) values.push_back(hilbert_function(pc, d));
  } else {
    values = hilbert_function_until_stable(pc);
  }
  ojson j;
  j["values"] = values;
  j["generic_position"] = is_generic_position(pc);
  ctx.csv_header = {"d", "H"};
  for (std::size_t d = 0; d < values.size(); ++d) {
    ctx.csv_rows.push_back({std::to_string(d), std::to_string(values[d])});
  }
  return j;
}

ojson cmd_wald(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const unsigned m_max = ctx.cfg.m_max.value_or(4);
  ctx.input["m_max"] = m_max;
  const auto r = waldschmidt_report(pc, m_max, ctx.alpha_options());
  ojson rows = ojson::array();
  ctx.csv_header = {"m", "alpha_m", "ratio", "skoda_ok", "ev_ok", "certified"};
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"alpha_m", row.alpha_m},
                    {"ratio", to_string(row.ratio)},
                    {"skoda_ok", row.skoda_ok},
                    {"ev_ok", row.ev_ok},
                    {"certified", row.certified}});
    ctx.csv_rows.push_back({std::to_string(row.m), std::to_string(row.alpha_m), to_string(row.ratio),
                            row.skoda_ok ? "true" : "false", row.ev_ok ? "true" : "false",
                            row.certified ? "true" : "false"});
  }
  for (const auto& [m, e] : r.table.entries) ctx.note_certificate(e.certificate, "alpha m=" + std::to_string(m));
  for (const auto& row : r.rows) {
    if (!row.skoda_ok) ctx.warnings.push_back("Skoda bound violated at m=" + std::to_string(row.m));
    if (!row.ev_ok) ctx.warnings.push_back("Esnault-Viehweg bound violated at m=" + std::to_string(row.m));
  }
  ojson j;
  j["alpha"] = r.alpha;
  j["rows"] = std::move(rows);
  j["upper_bound"] = to_string(r.upper_bound);
  j["lower_bounds"] = {{"skoda", to_string(r.skoda)},
                       {"ev", r.ev_applies ? ojson(to_string(r.ev)) : ojson(nullptr)}};
  j["chudnovsky_target"] = to_string(r.chudnovsky_target);
  j["waldschmidt_bracket"] = {to_string(r.gamma_lower), to_string(r.gamma_upper)};
  j["verdicts"] = verdicts_json(r.verdicts);
  return j;
}

ojson cmd_chud(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const unsigned m_max = ctx.cfg.m_max.value_or(3);
  ctx.input["m_max"] = m_max;
  const auto table = alpha_table(pc, m_max, ctx.alpha_options());
  for (const auto& [m, e] : table.entries) ctx.note_certificate(e.certificate, "alpha m=" + std::to_string(m));
  const auto verdicts = chudnovsky_verdicts(table, pc.N);
  const unsigned alpha = table.entries.at(1).alpha;
  Rational target(static_cast<long>(alpha + pc.N - 1), static_cast<long>(pc.N));
  target.canonicalize();
  ojson slacks = ojson::array();
  ctx.csv_header = {"m", "alpha_m", "slack", "holds"};
  for (const auto& v : verdicts) {
    slacks.push_back(to_string(v.slack));
    ctx.csv_rows.push_back({std::to_string(v.m), std::to_string(v.alpha_m), to_string(v.slack),
                            v.holds ? "true" : "false"});
  }
  ojson j;
  j["alpha"] = alpha;
  j["chudnovsky_target"] = to_string(target);
  j["slacks"] = std::move(slacks);
  j["verdicts"] = verdicts_json(verdicts);
  return j;
}

ojson cmd_delta(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const unsigned s_max = ctx.cfg.s_max.value_or(4);
  ctx.input["s_max"] = s_max;
  const auto r = delta_t0(pc, s_max, ctx.alpha_options());
  for (const auto& [m, e] : r.table.entries) ctx.note_certificate(e.certificate, "alpha m=" + std::to_string(m));
  ojson j;
  j["alpha_m"] = ojson::array();
  ctx.csv_header = {"s", "alpha_s"};
  for (const auto& [s, e] : r.table.entries) {
    j["alpha_m"].push_back(e.alpha);
    ctx.csv_rows.push_back({std::to_string(s), std::to_string(e.alpha)});
  }
  j["delta"] = r.delta ? ojson(*r.delta) : ojson(nullptr);
  j["t0"] = r.t0 ? ojson(*r.t0) : ojson(nullptr);
  if (!r.delta) ctx.warnings.push_back("no s <= s_max with s*alpha > alpha_s; bound reached");
  return j;
}

ojson cmd_seshadri(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const auto b = seshadri_lower_bound(pc, ctx.alpha_options());
  ojson j;
  j["alpha"] = b.alpha;
  j["radicand"] = to_string(b.radicand);
  j["root_order"] = b.root_order;
  j["decimal"] = {{"value", b.decimal}, {"significant_digits", 12}, {"approximation", true}};
  j["exact"] = b.exact ? ojson(to_string(*b.exact)) : ojson(nullptr);
  ctx.csv_header = {"alpha", "radicand", "root_order", "decimal"};
  ctx.csv_rows.push_back({std::to_string(b.alpha), to_string(b.radicand), std::to_string(b.root_order), b.decimal});
  return j;
}

ojson cmd_quadric(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const auto w = quadric_witness(pc);
  ojson j;
  if (!w) {
    j["witness"] = nullptr;
    return j;
  }
  const MonomialBasis basis(pc.N + 1, 2);
  ojson coeffs = ojson::array();
  for (const auto& c : *w) coeffs.push_back(to_string(c));
  j["witness"] = {{"coefficients", std::move(coeffs)}, {"form", format_form(basis, *w)}};
  return j;
}

ojson cmd_hh(Context& ctx) {
  const PointConfig pc = load_points(ctx);
  const unsigned m = ctx.cfg.m.value_or(1);
  ctx.input["m"] = m;
  if (ctx.cfg.d_max) ctx.input["d_max"] = *ctx.cfg.d_max;
  const auto r = hh_points_check(pc, m, ctx.cfg.d_max, ctx.alpha_options());
  ojson j;
  j["symbolic_exponent"] = r.symbolic_exponent;
  j["alpha_symbolic"] = r.alpha_symbolic;
  j["d_max"] = r.d_max;
  j["scope"] = "degreewise check for degrees alpha(I^(Nm))..d_max only";
  j["degrees"] = ojson::array();
  ctx.csv_header = {"degree", "left_dimension", "right_dimension", "holds"};
  for (const auto& v : r.degrees) {
    j["degrees"].push_back({{"degree", v.degree},
                            {"left_dimension", v.left_dimension},
                            {"right_dimension", v.right_dimension},
                            {"holds", v.holds}});
    ctx.csv_rows.push_back({std::to_string(v.degree), std::to_string(v.left_dimension),
                            std::to_string(v.right_dimension), v.holds ? "true" : "false"});
  }
  j["holds_in_all_checked_degrees"] = r.holds_in_all_checked_degrees;
  return j;
}

ojson cmd_star(Context& ctx) {
  const auto& path = single_input(ctx.cfg);
  const auto hyperplanes = parse_hyperplanes_text(read_text(path), path);
  ctx.input["path"] = path;
  ojson hs = ojson::array();
  for (const auto& h : hyperplanes) {
    ojson row = ojson::array();
    for (const auto& c : h.coeffs.coords()) row.push_back(c.get_str());
    hs.push_back(std::move(row));
  }
  ctx.input["hyperplanes"] = std::move(hs);
  return point_config_json(star_configuration(hyperplanes));
}

ojson cmd_sample(Context& ctx) {
  if (!ctx.cfg.n || !ctx.cfg.dim) throw InputError("sample needs --n and --dim");
  const std::uint64_t seed = ctx.cfg.seed.value_or(0);
  ctx.input["n"] = *ctx.cfg.n;
  ctx.input["N"] = *ctx.cfg.dim;
  ctx.input["seed"] = seed;
  ctx.input["height"] = ctx.cfg.height;
  return point_config_json(sample_config(*ctx.cfg.n, *ctx.cfg.dim, seed, ctx.cfg.height));
}

ojson cmd_semicont(Context& ctx) {
  if (!ctx.cfg.n || !ctx.cfg.dim) throw InputError("semicont needs --n and --dim");
  const unsigned m = ctx.cfg.m.value_or(2);
  std::vector<PointConfig> extra;
  ojson extra_paths = ojson::array();
  for (const auto& path : ctx.cfg.inputs) {
    extra.push_back(parse_points_file(path));
    extra_paths.push_back(path);
  }
  ctx.input["n"] = *ctx.cfg.n;
  ctx.input["N"] = *ctx.cfg.dim;
  ctx.input["m"] = m;
  ctx.input["seeds"] = ctx.cfg.seeds;
  ctx.input["height"] = ctx.cfg.height;
  ctx.input["extra_configs"] = std::move(extra_paths);
  const auto r = semicontinuity_experiment(*ctx.cfg.n, *ctx.cfg.dim, m, ctx.cfg.seeds,
                                           ctx.cfg.height, extra, ctx.alpha_options());
  ojson samples = ojson::array();
  ctx.csv_header = {"label", "seed", "alpha_m", "special"};
  for (const auto& s : r.samples) {
    if (!s.certified) {
      ctx.uncertified = true;
      ctx.warnings.push_back(s.label + ": ranks are heuristic");
    }
    samples.push_back({{"label", s.label},
                       {"seed", s.seed ? ojson(*s.seed) : ojson(nullptr)},
                       {"alpha_m", s.alpha_m},
                       {"special", s.special},
                       {"certified", s.certified}});
    ctx.csv_rows.push_back({s.label, s.seed ? std::to_string(*s.seed) : "", std::to_string(s.alpha_m),
                            s.special ? "true" : "false"});
  }
  ojson j;
  j["samples"] = std::move(samples);
  j["max_alpha_m"] = r.max_alpha;
  j["note"] = "the maximum is a lower bound for the value at general points";
  return j;
}

ojson ideal_json(const MonomialIdeal& I) {
  ojson gens = ojson::array();
  for (const auto& g : I.generators()) gens.push_back(I.format(g));
  return {{"variables", I.variables()}, {"generators", std::move(gens)}};
}

ojson cmd_mono(Context& ctx) {
  const auto& path = single_input(ctx.cfg);
  const MonomialIdeal I = parse_ideal_text(read_text(path), path);
  ctx.input["path"] = path;
  ctx.input["ideal"] = ideal_json(I);
  ojson j;
  j["minimal_generators"] = ideal_json(I)["generators"];
  j["alpha"] = I.is_zero() ? ojson(nullptr) : ojson(alpha_monomial(I));
  if (!I.is_zero() && !I.is_unit()) {
    const auto ass = ass_primes(I, AssMode::bounded_witness);
    ojson primes = ojson::array();
    for (std::size_t i = 0; i < ass.primes.size(); ++i) {
      primes.push_back({{"prime", format_prime(I.variables(), ass.primes[i])},
                        {"witness", I.format(ass.witnesses[i])}});
    }
    j["associated_primes"] = {{"primes", std::move(primes)},
                              {"maximal_ideal_associated", ass.maximal_ideal_associated},
                              {"complete", ass.complete},
                              {"assumption", ass.assumption}};
    if (ctx.cfg.m) {
      ctx.input["m"] = *ctx.cfg.m;
      const MonomialIdeal S = symbolic_power(I, *ctx.cfg.m, ass.primes);
      j["symbolic_power"] = {{"m", *ctx.cfg.m},
                             {"generators", ideal_json(S)["generators"]},
                             {"alpha", alpha_monomial(S)},
                             {"equals_ordinary_power", S == power(I, *ctx.cfg.m)}};
    }
  }
  return j;
}

ojson cmd_mono_verify(Context& ctx) {
  const auto r = verify_counterexample();
  ctx.input["fixture"] = ideal_json(r.J);
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
  }
  ojson ass = ojson::array();
  for (const auto& p : r.ass_J2) ass.push_back(format_prime(r.J.variables(), p));
  ojson j;
  j["checks"] = std::move(checks);
  j["z"] = r.z ? ojson(r.J.format(*r.z)) : ojson(nullptr);
  j["ass_J2"] = std::move(ass);
  j["generator_counts"] = {{"J", r.J.generators().size()},
                           {"J^2", r.J2_generators},
                           {"J^4", r.J4_generators},
                           {"(J^(2))^(2)", r.symbolic_square_of_J2_generators}};
  j["conclusion"] = r.conclusion ? "(J^(2))^(2) != J^(4)" : "verification failed";
  j["all_passed"] = r.all_passed();
  if (!r.all_passed()) throw std::runtime_error("counterexample verification failed");
  return j;
}

using Handler = std::function<ojson(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"alpha", cmd_alpha},     {"hilbert", cmd_hilbert},   {"wald", cmd_wald},
      {"chud", cmd_chud},       {"star", cmd_star},         {"sample", cmd_sample},
      {"quadric", cmd_quadric}, {"hh", cmd_hh},             {"seshadri", cmd_seshadri},
      {"delta", cmd_delta},     {"semicont", cmd_semicont}, {"mono-verify", cmd_mono_verify},
      {"mono", cmd_mono},
  };
  return table;
}

bool csv_capable(const std::string& command) {
  return command != "mono" && command != "mono-verify" && command != "star" &&
         command != "sample" && command != "quadric";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Context& ctx) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ",";
      out += csv_field(fields[i]);
    }
    out += "\n";
  };
  line(ctx.csv_header);
  for (const auto& r : ctx.csv_rows) line(r);
  return out;
}

ojson base_document(const RunConfig& cfg) {
  ojson doc;
  doc["version"] = kVersion;
  doc["command"] = cfg.command;
  return doc;
}

ojson options_json(const RunConfig& cfg) {
  return {{"strategy", std::string(to_string(cfg.strategy))},
          {"mode", std::string(to_string(cfg.mode))},
          {"format", cfg.format}};
}

RunOutcome failure(const RunConfig& cfg, int code, const std::string& message,
                   const std::vector<std::string>& details = {}) {
  ojson doc = base_document(cfg);
  doc["error"] = message;
  if (!details.empty()) doc["details"] = details;
  return {code, doc.dump(2) + "\n", message};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

RunOutcome run(const RunConfig& cfg) {
  const auto it = handlers().find(cfg.command);
  if (it == handlers().end()) return failure(cfg, kInputError, "unknown command '" + cfg.command + "'");
  if (cfg.format != "json" && cfg.format != "csv") {
    return failure(cfg, kInputError, "unknown format '" + cfg.format + "'");
  }
  if (cfg.format == "csv" && !csv_capable(cfg.command)) {
    return failure(cfg, kInputError, cfg.command + " produces a structured report; use --format json");
  }

  Context ctx(cfg);
  ctx.input["options"] = options_json(cfg);
  ojson result;
  try {
    result = it->second(ctx);
  } catch (const InputError& e) {
    return failure(cfg, kInputError, e.what(), e.details());
  } catch (const InvalidArgument& e) {
    return failure(cfg, kInputError, e.what());
  } catch (const CannotSample& e) {
    return failure(cfg, kInputError, e.what());
  } catch (const ImproperConfiguration& e) {
    return failure(cfg, kInputError, e.what());
  } catch (const std::exception& e) {
    return failure(cfg, kInternalFailure, e.what());
  }

  RunOutcome out;
  out.exit_code = ctx.uncertified ? kUncertified : kComputed;
  if (cfg.format == "csv") {
    out.document = render_csv(ctx);
    return out;
  }
  ojson doc = base_document(cfg);
  doc["input"] = std::move(ctx.input);
  doc["result"] = std::move(result);
  doc["warnings"] = ctx.warnings;
  out.document = doc.dump(2) + "\n";
  return out;
}

}  // namespace fatpoints::cli
