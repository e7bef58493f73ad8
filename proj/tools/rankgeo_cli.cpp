// rankgeo: rank-metric code analysis from the command line.
//
// Subcommands: field-info, construct, analyze, hierarchy, duality, wiretap,
// classify, linear-set, verify-all. Reports are JSON (TSV for the tabular
// ones) and are byte-identical for identical inputs, flags and seed.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "rankgeo/constructions.hpp"
#include "rankgeo/serialization.hpp"
#include "rankgeo/wiretap.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace rankgeo;

namespace {

struct CommonOpts {
  std::string in_path;
  std::string format = "json";
  std::uint64_t cap = 0;  // 0 = defaults
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string r_range, u_range;
};

Limits limits_from(const CommonOpts& opts) {
  Limits lim;
  if (opts.cap != 0) {
    lim.subspace_cap = opts.cap;
    lim.codeword_cap = opts.cap;
    lim.brute_cap = opts.cap;
  }
  lim.jobs = opts.jobs;
  return lim;
}

ordered_json field_json(const FieldTower& F) {
  ordered_json j;
  j["p"] = F.p();
  j["e"] = F.e();
  j["m"] = F.m();
  j["modulus"] = F.modulus();
  return j;
}

ordered_json options_json(const CommonOpts& opts, bool with_seed = false, bool with_ranges = false) {
  ordered_json j;
  if (!opts.in_path.empty()) j["in"] = opts.in_path;
  j["format"] = opts.format;
  j["cap"] = opts.cap == 0 ? ordered_json(nullptr) : ordered_json(opts.cap);
  j["jobs"] = opts.jobs;
  if (with_seed) j["seed"] = opts.seed;
  if (with_ranges && !opts.r_range.empty()) j["r_range"] = opts.r_range;
  if (with_ranges && !opts.u_range.empty()) j["u_range"] = opts.u_range;
  return j;
}

ordered_json code_json_summary(const RankMetricCode& code) {
  ordered_json j;
  j["n"] = code.n();
  j["k"] = code.k();
  return j;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, std::size_t lo,
                                                std::size_t hi) {
  if (text.empty()) return {lo, hi};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const std::size_t v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParseError("could not parse range '" + text + "'; expected a or a:b");
  }
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json serialize_word(const Codeword& w) {
  ordered_json arr = ordered_json::array();
  for (auto c : w.coords) arr.push_back(c.log());
  return arr;
}

// --- subcommand bodies; each returns the process exit code ---

int run_field_info(std::int64_t q, std::int64_t m, const CommonOpts& opts) {
  auto tower = make_tower_q(q, m);
  ordered_json j;
  j["command"] = "field-info";
  j["options"] = options_json(opts);
  j["field"] = field_json(*tower);
  j["q"] = tower->q();
  j["size"] = tower->size();
  j["order"] = tower->order();
  j["subfield_step"] = tower->subfield_step();
  j["generator_log"] = 1 % tower->order();
  emit(j);
  return 0;
}

int run_construct(const std::string& family, std::int64_t q, std::int64_t m, std::int64_t k,
                  std::int64_t n, const std::string& out_path, const CommonOpts& opts) {
  FamilyParams params;
  params.q = q;
  params.m = m;
  params.k = k;
  if (family == "h1")
    params.family = Family::H1;
  else if (family == "h2")
    params.family = Family::H2;
  else if (family == "gabidulin")
    params.family = Family::Gabidulin;
  else
    throw BadParameters("unknown family '" + family + "' (h1, h2, gabidulin)");
  if (n > 0) params.n = n;
  const RankMetricCode code = construct_family(params);
  if (out_path.empty()) {
    std::cout << code_to_json(code);
    return 0;
  }
  write_code_file(out_path, code);
  ordered_json j;
  j["command"] = "construct";
  j["options"] = options_json(opts);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  j["written"] = out_path;
  emit(j);
  return 0;
}

int run_analyze(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  const auto dist = rank_weight_distribution(code, lim);
  const std::size_t d = min_rank_distance(code, lim);

  if (opts.format == "tsv") {
    std::cout << "weight\tcount\n";
    for (const auto& [w, c] : dist) std::cout << w << "\t" << c << "\n";
    return 0;
  }
  ordered_json j;
  j["command"] = "analyze";
  j["options"] = options_json(opts);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  j["nondegenerate"] = is_nondegenerate(code);
  if (!is_nondegenerate(code)) j["reduced_length"] = reduce_degenerate(code).code.n();
  j["min_rank_distance"] = d;
  j["singleton_defect"] = code.n() - code.k() + 1 - d;
  j["mrd"] = d == code.n() - code.k() + 1;
  ordered_json dj;
  for (const auto& [w, c] : dist) dj[std::to_string(w)] = c;
  j["distribution"] = std::move(dj);
  emit(j);
  return 0;
}

int run_hierarchy(const std::string& method, const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  const auto [r_lo, r_hi] = parse_range(opts.r_range, 1, code.k());
  if (r_lo < 1 || r_hi > code.k() || r_lo > r_hi)
    throw ParseError("r-range must lie within 1.." + std::to_string(code.k()));
  const bool full = r_lo == 1 && r_hi == code.k();

  std::vector<GrwMethod> methods;
  if (method == "all")
    methods = {GrwMethod::Geometric, GrwMethod::Subcode, GrwMethod::Parity};
  else if (method == "geometric")
    methods = {GrwMethod::Geometric};
  else if (method == "subcode")
    methods = {GrwMethod::Subcode};
  else if (method == "parity")
    methods = {GrwMethod::Parity};
  else
    throw ParseError("unknown method '" + method + "'");

  auto weights_for = [&](GrwMethod m) {
    std::vector<std::size_t> w;
    if (full) {
      w = hierarchy(code, m, lim).weights;
    } else {
      for (std::size_t r = r_lo; r <= r_hi; ++r)
        switch (m) {
          case GrwMethod::Geometric:
            w.push_back(grw_geometric(code, r, lim));
            break;
          case GrwMethod::Subcode:
            w.push_back(grw_subcode(code, r, lim));
            break;
          case GrwMethod::Parity:
            w.push_back(grw_parity(code, r, lim));
            break;
        }
    }
    return w;
  };

  std::vector<std::pair<GrwMethod, std::vector<std::size_t>>> results;
  for (auto m : methods) results.emplace_back(m, weights_for(m));
  bool agree = true;
  for (const auto& [m, w] : results) agree = agree && w == results.front().second;

  if (opts.format == "tsv") {
    std::cout << "method\tr\td_r\n";
    for (const auto& [m, w] : results)
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << grw_method_name(m) << "\t" << r_lo + i << "\t" << w[i] << "\n";
    return agree ? 0 : 1;
  }

  ordered_json j;
  j["command"] = "hierarchy";
  j["options"] = options_json(opts, false, true);
  j["options"]["method"] = method;
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  ordered_json arr = ordered_json::array();
  for (const auto& [m, w] : results) {
    ordered_json h;
    h["method"] = grw_method_name(m);
    h["weights"] = w;
    bool monotonic = true;
    for (std::size_t i = 1; i < w.size(); ++i) monotonic = monotonic && w[i] > w[i - 1];
    bool singleton_ok = true;
    for (std::size_t i = 0; i < w.size(); ++i)
      singleton_ok = singleton_ok && w[i] <= code.n() - code.k() + (r_lo + i);
    h["monotonic"] = monotonic;
    h["singleton_ok"] = singleton_ok;
    arr.push_back(std::move(h));
  }
  j["hierarchies"] = std::move(arr);
  j["methods_agree"] = agree;
  emit(j);
  return agree ? 0 : 1;
}

int run_duality(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  const auto rep = verify_duality(code, lim);
  ordered_json j;
  j["command"] = "duality";
  j["options"] = options_json(opts);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  j["primal_weights"] = rep.primal.weights;
  j["dual_weights"] = rep.dual_side.weights;
  j["dual_complement"] = rep.complement;
  j["disjoint"] = rep.disjoint;
  j["covers_range"] = rep.covers_range;
  j["ok"] = rep.ok;
  emit(j);
  return rep.ok ? 0 : 1;
}

int run_wiretap(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  const auto report = verify_sandwich(code, lim);
  const auto [u_lo, u_hi] = parse_range(opts.u_range, 0, code.n());
  if (u_hi > code.n() || u_lo > u_hi)
    throw ParseError("u-range must lie within 0.." + std::to_string(code.n()));
  const std::size_t relations = check_leakage_relations(code, opts.seed);

  if (opts.format == "tsv") {
    std::cout << "u\tdelta_u\tDelta_u\tsandwich_lhs_index\tholds\n";
    for (const auto& row : report.rows) {
      if (row.u < u_lo || row.u > u_hi) continue;
      std::cout << row.u << "\t" << row.delta << "\t" << row.Delta << "\t" << row.lhs_index
                << "\t" << (row.holds ? "true" : "false") << "\n";
    }
    return report.all_hold && report.identity_ok ? 0 : 1;
  }

  ordered_json j;
  j["command"] = "wiretap";
  j["options"] = options_json(opts, true, true);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    if (row.u < u_lo || row.u > u_hi) continue;
    ordered_json r;
    r["u"] = row.u;
    r["delta_u"] = row.delta;
    r["Delta_u"] = row.Delta;
    r["sandwich_lhs_index"] = row.lhs_index;
    r["lhs_vacuous"] = row.lhs_vacuous;
    r["rhs_vacuous"] = row.rhs_vacuous;
    r["holds"] = row.holds;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["hierarchy"] = report.hierarchy.weights;
  j["identity_ok"] = report.identity_ok;
  j["all_hold"] = report.all_hold;
  j["relations_checked"] = relations;
  j["ok"] = report.all_hold && report.identity_ok;
  emit(j);
  return report.all_hold && report.identity_ok ? 0 : 1;
}

int run_classify(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  const auto res = classify_constant_weight(code, lim);
  ordered_json j;
  j["command"] = "classify";
  j["options"] = options_json(opts);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  j["reduced"] = res.reduced;
  j["original_length"] = res.original_length;
  j["reduced_length"] = res.reduced_length;
  j["verdict"] = res.verdict == ClassificationResult::Verdict::ConstantWeight
                     ? "constant_weight"
                     : "not_constant_weight";
  switch (res.structure) {
    case ClassificationResult::Structure::SingleGenerator:
      j["structure"] = "single_generator";
      break;
    case ClassificationResult::Structure::HadamardEquivalent:
      j["structure"] = "hadamard_equivalent";
      break;
    case ClassificationResult::Structure::NotApplicable:
      j["structure"] = "not_applicable";
      break;
  }
  if (res.verdict == ClassificationResult::Verdict::ConstantWeight) {
    j["weight"] = res.weight;
    if (res.single_generator) j["generator_row"] = serialize_word(*res.single_generator);
    if (res.structure == ClassificationResult::Structure::HadamardEquivalent) {
      j["basis_certificate"] = res.basis_certificate;
      j["hierarchy"] = res.hierarchy_weights;
    }
  } else if (res.witnesses) {
    ordered_json w;
    w["first"] = serialize_word(res.witnesses->first);
    w["first_weight"] = rank_weight(res.witnesses->first);
    w["second"] = serialize_word(res.witnesses->second);
    w["second_weight"] = rank_weight(res.witnesses->second);
    j["witnesses"] = std::move(w);
  }
  emit(j);
  return 0;
}

int run_linear_set(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  auto x = qsystem_from_code(code);
  const auto points = linear_set_points(x, lim);

  if (opts.format == "tsv") {
    std::cout << "point\tweight\n";
    for (const auto& p : points) {
      std::string key;
      for (std::size_t i = 0; i < p.representative.size(); ++i)
        key += (i ? "," : "") + std::to_string(p.representative[i].log());
      std::cout << key << "\t" << p.weight << "\n";
    }
    return 0;
  }

  ordered_json j;
  j["command"] = "linear-set";
  j["options"] = options_json(opts);
  j["field"] = field_json(*code.tower());
  ordered_json ambient;
  ambient["k"] = x.k();
  ambient["q"] = code.tower()->q();
  ambient["m"] = code.tower()->m();
  j["ambient"] = std::move(ambient);
  j["rank"] = x.n();
  ordered_json arr = ordered_json::array();
  for (const auto& p : points) {
    ordered_json pj;
    ordered_json rep = ordered_json::array();
    for (auto c : p.representative) rep.push_back(c.log());
    pj["point"] = std::move(rep);
    pj["weight"] = p.weight;
    arr.push_back(std::move(pj));
  }
  j["points"] = std::move(arr);
  j["scattered"] = is_scattered(x, lim);
  emit(j);
  return 0;
}

int run_verify_all(const CommonOpts& opts) {
  const Limits lim = limits_from(opts);
  auto code = read_code_file(opts.in_path);
  ordered_json checks = ordered_json::array();
  bool all_ok = true;
  auto push = [&](const std::string& name, bool ok, ordered_json detail = {}) {
    ordered_json c;
    c["name"] = name;
    c["ok"] = ok;
    if (!detail.is_null() && !detail.empty()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    all_ok = all_ok && ok;
  };

  const bool nondegenerate = is_nondegenerate(code);

  // cross-definition agreement
  {
    const auto sub = hierarchy(code, GrwMethod::Subcode, lim);
    const auto par = hierarchy(code, GrwMethod::Parity, lim);
    bool agree = sub.weights == par.weights;
    ordered_json detail;
    detail["subcode"] = sub.weights;
    detail["parity"] = par.weights;
    if (nondegenerate) {
      const auto geo = hierarchy(code, GrwMethod::Geometric, lim);
      agree = agree && geo.weights == sub.weights;
      detail["geometric"] = geo.weights;
    } else {
      detail["geometric_skipped_degenerate"] = true;
    }
    push("cross_definition_equality", agree, std::move(detail));

    // monotonicity and the Singleton bound on the computed hierarchy
    bool monotonic = !sub.weights.empty() && sub.weights.front() > 0;
    for (std::size_t i = 1; i < sub.weights.size(); ++i)
      monotonic = monotonic && sub.weights[i] > sub.weights[i - 1];
    const std::size_t top = fq_rank_of_fqm_vectors(code.generator().transpose());
    monotonic = monotonic && sub.weights.back() == top;
    push("monotonicity", monotonic);
    bool singleton = true;
    for (std::size_t r = 1; r <= code.k(); ++r)
      singleton = singleton && sub.weights[r - 1] <= code.n() - code.k() + r;
    push("generalized_singleton", singleton);
  }

  {
    const auto rep = verify_duality(code, lim);
    ordered_json detail;
    detail["primal"] = rep.primal.weights;
    detail["dual"] = rep.dual_side.weights;
    push("duality_partition", rep.ok, std::move(detail));
  }

  {
    const auto rep = verify_sandwich(code, lim);
    push("wiretap_identity", rep.identity_ok);
    push("wiretap_sandwich", rep.all_hold);
    const std::size_t relations = check_leakage_relations(code, opts.seed);
    ordered_json detail;
    detail["relations_checked"] = relations;
    push("leakage_relations", true, std::move(detail));
  }

  ordered_json j;
  j["command"] = "verify-all";
  j["options"] = options_json(opts, true);
  j["field"] = field_json(*code.tower());
  j["code"] = code_json_summary(code);
  j["checks"] = std::move(checks);
  j["ok"] = all_ok;
  emit(j);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-metric code toolkit: generalized weights, wiretap leakage, "
               "linear sets and constant-weight classification"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::int64_t q = 2, m = 2, k = 1, n = 0;
  std::string family = "h1", method = "all", out_path;

  auto add_common = [&](CLI::App* cmd, bool with_in = true) {
    if (with_in) cmd->add_option("--in", opts.in_path, "input code file")->required();
    cmd->add_option("--format", opts.format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--cap", opts.cap, "override the enumeration caps");
    cmd->add_option("--jobs", opts.jobs, "worker threads for subspace scans");
  };

  auto* cmd_field = app.add_subcommand("field-info", "describe a field tower");
  cmd_field->add_option("--q", q, "subfield size (prime power)")->required();
  cmd_field->add_option("--m", m, "extension degree")->required();
  add_common(cmd_field, false);

  auto* cmd_construct = app.add_subcommand("construct", "emit a code file for a named family");
  cmd_construct->add_option("--family", family, "h1, h2 or gabidulin")->required();
  cmd_construct->add_option("--q", q, "subfield size (prime power)")->required();
  cmd_construct->add_option("--m", m, "extension degree")->required();
  cmd_construct->add_option("--k", k, "code dimension")->required();
  cmd_construct->add_option("--n", n, "code length (gabidulin only)");
  cmd_construct->add_option("--out", out_path, "write the code file here instead of stdout");
  add_common(cmd_construct, false);

  auto* cmd_analyze = app.add_subcommand("analyze", "parameters, distance and weight distribution");
  add_common(cmd_analyze);

  auto* cmd_hier = app.add_subcommand("hierarchy", "generalized rank weights");
  cmd_hier->add_option("--method", method, "geometric, subcode, parity or all");
  cmd_hier->add_option("--r-range", opts.r_range, "restrict to d_r for r in a:b");
  add_common(cmd_hier);

  auto* cmd_dual = app.add_subcommand("duality", "weight partition of the code and its dual");
  add_common(cmd_dual);

  auto* cmd_wiretap = app.add_subcommand("wiretap", "leakage profile and the weight sandwich");
  cmd_wiretap->add_option("--u-range", opts.u_range, "restrict the report to u in a:b");
  cmd_wiretap->add_option("--seed", opts.seed, "seed for sampled transmissions");
  add_common(cmd_wiretap);

  auto* cmd_classify = app.add_subcommand("classify", "constant rank-weight classification");
  add_common(cmd_classify);

  auto* cmd_lset = app.add_subcommand("linear-set", "points and weights of the linear set");
  add_common(cmd_lset);

  auto* cmd_verify = app.add_subcommand("verify-all", "run every structural verifier");
  cmd_verify->add_option("--seed", opts.seed, "seed for sampled transmissions");
  add_common(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_field->parsed()) return run_field_info(q, m, opts);
    if (cmd_construct->parsed()) return run_construct(family, q, m, k, n, out_path, opts);
    if (cmd_analyze->parsed()) return run_analyze(opts);
    if (cmd_hier->parsed()) return run_hierarchy(method, opts);
    if (cmd_dual->parsed()) return run_duality(opts);
    if (cmd_wiretap->parsed()) return run_wiretap(opts);
    if (cmd_classify->parsed()) return run_classify(opts);
    if (cmd_lset->parsed()) return run_linear_set(opts);
    if (cmd_verify->parsed()) return run_verify_all(opts);
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HierarchyInvariantViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ClassificationContradiction& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const InconsistentSyndrome& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
