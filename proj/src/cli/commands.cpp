#include "cli/commands.hpp"

#include <functional>
#include <iostream>
#include <regex>

#include "CLI11.hpp"

#include "itrig/arith.hpp"
#include "itrig/cone_ops.hpp"
#include "itrig/random.hpp"
#include "itrig/trig2d.hpp"

namespace itrig::cli {

namespace {

const std::vector<std::string> kSuites{"transpose", "cycle", "adjacent", "simplex", "propp", "special-det", "plucker"};

Result error_result(const Error& e, int code) {
  return {code, Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}};
}

// Runs f; a library error becomes the given exit code.
Result guarded(int code, const std::function<Result()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    // a malformed argument is bad input whichever stage notices it
    return error_result(e, e.kind() == ErrorKind::ParseError ? kInvalidInput : code);
  }
}

ConeDocument load(const std::string& text) {
  ConeDocument doc = parse_document(text);
  (void)doc.cone();
  return doc;
}

Json strings(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

Json arctan_json(const ArctanForm& f) {
  const Eigen::Index k = f.order();
  Json sines = Json::array(), tangents = Json::array(), cosines = Json::object();
  for (Eigen::Index i = 1; i <= k; ++i) {
    sines.push_back(isin(f, i).str());
    tangents.push_back(to_json(itan(f, i)));
    for (Eigen::Index j = 1; j < i; ++j) cosines[std::to_string(j) + "," + std::to_string(i)] = icos(f, j, i).str();
  }
  return {{"grid", matrix_to_json(f.grid)}, {"transform", matrix_to_json(f.transform)}, {"isin", sines},
          {"icos", cosines},           {"itan", tangents},                       {"index", index_of(f).str()}};
}

Json angle_json(const Angle2D& a) {
  return {{"isin", isin2(a).str()}, {"icos", icos2(a).str()}, {"itan", itan2(a).str()}, {"lls", to_json(lls(a))}};
}

Angle2D angle_from_source(const std::string& source) {
  if (looks_rational(source)) return iarctan2(Rational::parse(source));
  const ConeDocument doc = load(source);
  return Angle2D(doc.cone());
}

Json check_json(const std::string& suite, const Check& c) {
  return {{"suite", suite}, {"name", c.name}, {"holds", c.holds}, {"applicable", c.applicable}, {"details", c.details}};
}

std::vector<IntVector> simplex_vertices(const ConeDocument& doc) {
  if (doc.simplex) return *doc.simplex;
  std::vector<IntVector> pts{doc.vertex};
  for (Eigen::Index i = 0; i < doc.edges.cols(); ++i) pts.push_back(doc.vertex + doc.edges.col(i));
  return pts;
}

std::vector<Check> run_suite(const std::string& suite, const ConeDocument& doc) {
  const Cone c = doc.cone();
  const int k = static_cast<int>(c.order());
  std::vector<Check> out;
  if (suite == "transpose") {
    for (int j = 2; j <= k; ++j)
      for (int i = 1; i < j; ++i) out.push_back(verify_transpose_relations(c, i, j));
  } else if (suite == "cycle") {
    out = verify_cycle_products(c, Permutation::rotation(k));
  } else if (suite == "adjacent") {
    for (int i = 1; i <= k; ++i) out.push_back(verify_adjacent_relations(c, i));
  } else if (suite == "simplex") {
    out = simplex_partner_check(Simplex(simplex_vertices(doc)));
  } else if (suite == "propp") {
    out.push_back(verify_canonical_point(c));
  } else if (suite == "special-det") {
    out.push_back(verify_special_determinant(c));
  } else if (suite == "plucker") {
    for (int i = 1; i < k; ++i) {
      auto part = verify_plucker_transpose(c, i);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    fail(ErrorKind::ParseError, "unknown suite '" + suite + "'");
  }
  return out;
}

// Every suite, with inapplicable ones recorded instead of raised.
std::vector<std::pair<std::string, Check>> run_all(const ConeDocument& doc) {
  std::vector<std::pair<std::string, Check>> out;
  for (const auto& suite : kSuites) {
    try {
      for (auto& c : run_suite(suite, doc)) out.emplace_back(suite, std::move(c));
    } catch (const Error& e) {
      out.emplace_back(suite, Check{suite, false, false, e.what()});
    }
  }
  return out;
}

bool valid_suite(const std::string& s) {
  return s == "all" || std::find(kSuites.begin(), kSuites.end(), s) != kSuites.end();
}

}  // namespace

bool looks_rational(const std::string& s) {
  static const std::regex re(R"(\s*[-+]?\d+(/[-+]?\d+)?\s*)");
  return std::regex_match(s, re);
}

Result cmd_arctan(const std::string& input_text) {
  ConeDocument doc;
  if (auto r = guarded(kInvalidInput, [&] { doc = load(input_text); return Result{}; }); r.exit_code) return r;
  return guarded(kInapplicable, [&] {
    Json body = arctan_json(arctan_form(doc.cone()));
    body["cone"] = cone_to_json(doc.cone(), doc.metadata);
    return Result{kOk, body};
  });
}

Result cmd_trig2d(const std::string& source, bool with_sba) {
  std::optional<Angle2D> angle;
  if (auto r = guarded(kInvalidInput, [&] { angle = angle_from_source(source); return Result{}; }); r.exit_code) return r;
  return guarded(kInapplicable, [&] {
    const Angle2D& a = *angle;
    Json body = angle_json(a);
    Json pts = Json::array();
    for (const auto& p : sail(a)) pts.push_back(to_json(p));
    body["sail"] = pts;
    body["cone"] = cone_to_json(a.cone());
    body["transpose"] = angle_json(transpose2(a));
    body["adjacent"] = angle_json(adjacent2(a));
    body["right_angle"] = is_right_angle2(a);
    const Rational t = itan2(a);
    body["cf_odd"] = to_json(cf_expand(t, Parity::Odd));
    body["cf_even"] = to_json(cf_expand(t, Parity::Even));
    if (with_sba) {
      body["sba"] = strings(sba_classical(t));
      body["sba_oracle"] = strings(sba_oracle(t));
      body["approximation_chain"] = strings(approximation_chain2(a));
    }
    return Result{kOk, body};
  });
}

Result cmd_transform(const std::string& input_text, const std::string& op, const std::string& arg) {
  ConeDocument doc;
  if (auto r = guarded(kInvalidInput, [&] { doc = load(input_text); return Result{}; }); r.exit_code) return r;
  return guarded(kInapplicable, [&] {
    const Cone c = doc.cone();
    const int k = static_cast<int>(c.order());
    auto index = [&] { return Integer::parse(arg).to<int>(); };
    std::optional<Cone> out;
    if (op == "transpose")
      out = permute(c, Permutation::parse(arg, k));
    else if (op == "adjacent")
      out = adjacent(c, index());
    else if (op == "reduce")
      out = euclid_reduce(c, index());
    else if (op == "T")
      out = approximation_step(c, index());
    else
      fail(ErrorKind::ParseError, "unknown operation '" + op + "'");
    const auto f = arctan_form(*out);
    Json body{{"operation", op + " " + arg}, {"cone", cone_to_json(*out, doc.metadata)}, {"grid", matrix_to_json(f.grid)}};
    if (op == "reduce") body["partial_quotient"] = partial_quotient(c, index()).str();
    return Result{kOk, body};
  });
}

Result cmd_verify(const std::string& input_text, const std::string& suite) {
  if (!valid_suite(suite)) return error_result(Error(ErrorKind::ParseError, "unknown suite '" + suite + "'"), kInvalidInput);
  ConeDocument doc;
  if (auto r = guarded(kInvalidInput, [&] { doc = load(input_text); return Result{}; }); r.exit_code) return r;
  return guarded(kInapplicable, [&] {
    std::vector<std::pair<std::string, Check>> checks;
    if (suite == "all") {
      checks = run_all(doc);
    } else {
      for (auto& c : run_suite(suite, doc)) checks.emplace_back(suite, std::move(c));
    }
    if (doc.grid) {
      const IntMatrix g = arctan_form(doc.cone()).grid;
      const bool same = g.rows() == doc.grid->rows() && g.cols() == doc.grid->cols() && g == *doc.grid;
      checks.emplace_back("grid", Check{"grid-matches", same, true, same ? "supplied grid is the normal form" : "supplied grid differs from the normal form"});
    }
    Json list = Json::array();
    int failed = 0, skipped = 0;
    for (const auto& [s, c] : checks) {
      list.push_back(check_json(s, c));
      if (!c.applicable) ++skipped;
      else if (!c.holds) ++failed;
    }
    Json body{{"suite", suite}, {"checks", list}, {"failed", failed}, {"not_applicable", skipped}, {"holds", failed == 0}};
    return Result{failed == 0 ? kOk : kCheckFailed, body};
  });
}

Result cmd_verify_random(std::uint64_t seed, int count, int k, long long max_sine, const std::string& suite) {
  if (!valid_suite(suite)) return error_result(Error(ErrorKind::ParseError, "unknown suite '" + suite + "'"), kInvalidInput);
  if (count < 0 || (k != 0 && (k < 2 || k > 6)) || max_sine < 2)
    return error_result(Error(ErrorKind::ParseError, "need count >= 0, k in 2..6 (or 0 for mixed) and max-sine >= 2"), kInvalidInput);
  Sampler rng(seed);
  std::map<std::string, std::array<int, 3>> tally;  // passed, failed, not applicable
  Json failures = Json::array();
  for (int n = 0; n < count; ++n) {
    const int order = k != 0 ? k : static_cast<int>(rng.uniform(2, 4));
    ConeDocument doc;
    const Cone c = random_simple_cone(rng, order, order, max_sine);
    doc.vertex = c.vertex();
    doc.edges = c.edges();
    std::vector<std::pair<std::string, Check>> checks;
    if (suite == "all") {
      checks = run_all(doc);
    } else {
      try {
        for (auto& x : run_suite(suite, doc)) checks.emplace_back(suite, std::move(x));
      } catch (const Error& e) {
        checks.emplace_back(suite, Check{suite, false, false, e.what()});
      }
    }
    for (const auto& [s, ch] : checks) {
      auto& t = tally[s];
      if (!ch.applicable) ++t[2];
      else if (ch.holds) ++t[0];
      else {
        ++t[1];
        Json item = check_json(s, ch);
        item["case"] = n;
        item["grid"] = matrix_to_json(arctan_form(c).grid);
        failures.push_back(item);
      }
    }
  }
  Json summary = Json::object();
  int failed = 0;
  for (const auto& [s, t] : tally) {
    summary[s] = {{"passed", t[0]}, {"failed", t[1]}, {"not_applicable", t[2]}};
    failed += t[1];
  }
  Json body{{"seed", std::to_string(seed)}, {"count", count}, {"k", k}, {"max_sine", std::to_string(max_sine)},
            {"suite", suite}, {"summary", summary}, {"failures", failures}, {"holds", failed == 0}};
  return {failed == 0 ? kOk : kCheckFailed, body};
}

Result cmd_triangle(const std::vector<std::string>& tangents) {
  std::vector<Rational> qs;
  if (auto r = guarded(kInvalidInput, [&] {
        if (tangents.size() != 3) fail(ErrorKind::ParseError, "triangle takes three tangents");
        for (const auto& t : tangents) {
          qs.push_back(Rational::parse(t));
          if (qs.back().sign() <= 0) fail(ErrorKind::NonPositive, "tangent " + t + " is not positive");
        }
        return Result{};
      });
      r.exit_code)
    return r;
  return guarded(kInapplicable, [&] {
    const auto v = triangle_exists(qs);
    Json orders = Json::array();
    std::array<int, 3> ord{0, 1, 2};
    do {
      const ProjRat whole = bracket_eval({qs[ord[0]], qs[ord[1]], qs[ord[2]]}, {-1, -1});
      const ProjRat part = bracket_eval({qs[ord[0]], qs[ord[1]]}, {-1});
      orders.push_back({{"ordering", {ord[0] + 1, ord[1] + 1, ord[2] + 1}}, {"bracket", whole.str()}, {"partial", part.str()}});
    } while (std::next_permutation(ord.begin(), ord.end()));
    Json body{{"exists", v.exists},
              {"tangents", strings(qs)},
              {"orderings", orders}};
    if (v.exists) {
      body["ordering"] = {v.ordering[0] + 1, v.ordering[1] + 1, v.ordering[2] + 1};
      body["bracket"] = v.bracket->str();
      body["partial"] = v.partial->str();
    }
    return Result{kOk, body};
  });
}

Result cmd_sba(const std::string& source, int max_steps) {
  std::optional<Cone> cone;
  if (auto r = guarded(kInvalidInput, [&] {
        if (max_steps < 0) fail(ErrorKind::ParseError, "max-steps must be non-negative");
        cone = looks_rational(source) ? iarctan2(Rational::parse(source)).cone() : load(source).cone();
        return Result{};
      });
      r.exit_code)
    return r;
  return guarded(kInapplicable, [&] {
    const auto nodes = sba_cones(*cone, max_steps);
    Json classes = Json::array();
    for (const auto& n : nodes) {
      Json item{{"grid", matrix_to_json(n.grid)}, {"depth", n.depth}, {"step", n.step}};
      item["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
      if (cone->order() == 2) item["itan"] = itan2(Angle2D(n.cone)).str();
      classes.push_back(item);
    }
    Json body{{"max_steps", max_steps}, {"count", nodes.size()}, {"classes", classes}};
    if (looks_rational(source)) body["sba_classical"] = strings(sba_classical(Rational::parse(source)));
    return Result{kOk, body};
  });
}

Result cmd_plucker(const std::string& input_text) {
  ConeDocument doc;
  if (auto r = guarded(kInvalidInput, [&] { doc = load(input_text); return Result{}; }); r.exit_code) return r;
  return guarded(kInapplicable, [&] {
    const auto f = arctan_form(doc.cone());
    Json body{{"plucker", to_json(plucker(f))}, {"grid", matrix_to_json(f.grid)}, {"index", index_of(f).str()},
              {"isin_k", isin(f, f.order()).str()}};
    return Result{kOk, body};
  });
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer trigonometry of rational cones"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false, json = false;
  app.add_flag("--text", text, "human-readable output");
  app.add_flag("--json", json, "canonical JSON output (default)");

  std::string path, source, suite = "all", transpose, adjacent_i, reduce_i, step_i;
  bool with_sba = false;
  std::uint64_t seed = 1;
  int count = 100, k = 0, max_steps = 8;
  long long max_sine = 1000000;
  std::vector<std::string> tangents;

  auto* arctan = app.add_subcommand("arctan", "normal form and trigonometric functions of a cone");
  arctan->add_option("input", path, "matrix or JSON cone file, '-' for stdin")->required();

  auto* trig = app.add_subcommand("trig2d", "planar trigonometry of iarctan(q) or a planar cone");
  trig->add_option("input", source, "rational such as 8/5, or a cone file")->required();
  trig->add_flag("--sba", with_sba, "list strong best approximations of the tangent");

  auto* transform = app.add_subcommand("transform", "apply a transpose, adjacent, reduction or approximation step");
  transform->add_option("input", path)->required();
  auto* o1 = transform->add_option("--transpose", transpose, "permutation, e.g. (1,3) or [3,2,1]");
  auto* o2 = transform->add_option("--adjacent", adjacent_i, "edge index to negate");
  auto* o3 = transform->add_option("--reduce", reduce_i, "Euclidean reduction index");
  auto* o4 = transform->add_option("-T,--T,--step", step_i, "approximation step index");
  o1->excludes(o2)->excludes(o3)->excludes(o4);
  o2->excludes(o3)->excludes(o4);
  o3->excludes(o4);

  auto* verify = app.add_subcommand("verify", "check the congruence relations on a cone");
  verify->add_option("input", path)->required();
  verify->add_option("--suite", suite, "transpose|cycle|adjacent|simplex|propp|special-det|plucker|all");

  auto* vrand = app.add_subcommand("verify-random", "run the relation checks on seeded random simple cones");
  vrand->add_option("--seed", seed);
  vrand->add_option("--count", count);
  vrand->add_option("--k", k, "number of edges, 0 for a mix of 2, 3 and 4");
  vrand->add_option("--max-sine", max_sine);
  vrand->add_option("--suite", suite);

  auto* tri = app.add_subcommand("triangle", "does an integer triangle with these angle tangents exist");
  tri->add_option("tangents", tangents, "three rationals")->required()->expected(3);

  auto* sba = app.add_subcommand("sba", "strong best approximations of a simple cone");
  sba->add_option("input", source, "rational or cone file")->required();
  sba->add_option("--max-steps,--depth", max_steps, "maximal number of steps");

  auto* pl = app.add_subcommand("plucker", "Plücker coordinates of the tangent");
  pl->add_option("input", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  auto read = [&](const std::string& p, std::string& dst) -> bool {
    try {
      dst = read_input(p, in);
      return true;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return false;
    }
  };

  Result r;
  std::string body;
  if (arctan->parsed()) {
    if (!read(path, body)) return kInvalidInput;
    r = cmd_arctan(body);
  } else if (trig->parsed() || sba->parsed()) {
    std::string src = source;
    if (!looks_rational(source) && !read(source, src)) return kInvalidInput;
    r = trig->parsed() ? cmd_trig2d(src, with_sba) : cmd_sba(src, max_steps);
  } else if (transform->parsed()) {
    if (!read(path, body)) return kInvalidInput;
    if (o1->count()) r = cmd_transform(body, "transpose", transpose);
    else if (o2->count()) r = cmd_transform(body, "adjacent", adjacent_i);
    else if (o3->count()) r = cmd_transform(body, "reduce", reduce_i);
    else if (o4->count()) r = cmd_transform(body, "T", step_i);
    else {
      err << "transform needs one of --transpose, --adjacent, --reduce, --T\n";
      return kInvalidInput;
    }
  } else if (verify->parsed()) {
    if (!read(path, body)) return kInvalidInput;
    r = cmd_verify(body, suite);
  } else if (vrand->parsed()) {
    r = cmd_verify_random(seed, count, k, max_sine, suite);
  } else if (tri->parsed()) {
    r = cmd_triangle(tangents);
  } else if (pl->parsed()) {
    if (!read(path, body)) return kInvalidInput;
    r = cmd_plucker(body);
  }
  if (r.body.contains("error")) err << r.body["message"].get<std::string>() << "\n";
  out << (text ? as_text(r.body) : canonical(r.body) + "\n");
  return r.exit_code;
}

}  // namespace itrig::cli
