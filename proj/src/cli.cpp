#include "nullkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullkit/conjectures.hpp"
#include "nullkit/parallel.hpp"
#include "nullkit/problem.hpp"

namespace nullkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t threads = 0;
  std::string input;
  std::string other;
  std::string with;
  std::string order = "degrevlex";
  std::string op;
  std::string method = "colon";
  std::string poly;
  std::string family;
  std::string target;
  std::string bounds;
  std::string suite_name;
  std::string suite_ideal;
  std::size_t k = 1;
  bool affine = false;
  bool projective = false;
  bool emit_normalized = false;
  bool nonradical = false;
  std::uint32_t q = 2;
  std::size_t n = 2;
  unsigned maxdeg = 2;
};

// Collects the text rendering and the JSON report side by side; only one of
// them is printed at the end.
struct Output {
  std::ostringstream text;
  json report;
  bool failed = false;

  void assertion(const std::string& name, bool passed, const std::string& detail = {}) {
    json a{{"name", name}, {"passed", passed}};
    if (!detail.empty()) a["detail"] = detail;
    report["assertions"].push_back(std::move(a));
    if (!passed) failed = true;
  }
};

std::vector<std::string> strings(const std::vector<Polynomial>& ps,
                                 const MonomialOrder& order = MonomialOrder::degrevlex()) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
  if (lines.empty()) out << "0\n";
  for (const auto& l : lines) out << l << "\n";
}

void describe_problem(const Problem& p, json& report) {
  report["field"] = {{"base", p.base->name()}, {"coeffs", p.coeffs->name()}, {"points", p.points->name()}};
  report["vars"] = p.ring->vars;
  report["ideal"] = strings(p.ideal.gens());
}

SpaceKind space_kind(const Options& o) { return o.affine ? SpaceKind::Affine : SpaceKind::Projective; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json method_json(const MethodReport& r) {
  json j{{"method", std::string(to_string(r.method))},
         {"quotient_rounds", r.quotient_rounds},
         {"gb_size", r.gb_size},
         {"seconds", r.seconds}};
  if (r.d) j["d"] = *r.d;
  return j;
}

Problem input_problem(const Options& o) {
  if (o.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required");
  return load_problem(o.input);
}

Ideal second_ideal(const Options& o, const Problem& p) {
  if (!o.with.empty()) return Ideal(p.ring, parse_polynomial_list(o.with, p.ring));
  if (!o.other.empty()) {
    Problem q = load_problem(o.other);
    if (q.ring->vars != p.ring->vars || !same_field(q.coeffs, p.coeffs))
      throw Error(ErrorKind::RingMismatch, "'" + o.other + "' declares a different ring");
    return Ideal(p.ring, q.ideal.gens());
  }
  throw Error(ErrorKind::InvalidArgument, "--op " + o.op + " needs a second ideal via --with or --other");
}

int cmd_gb(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  const MonomialOrder order = parse_order(o.order);
  describe_problem(p, out.report);
  const auto start = std::chrono::steady_clock::now();
  const auto lines = strings(p.ideal.groebner(order).gens(), order);
  out.report["result"] = {{"order", o.order}, {"gb", lines}, {"gb_size", lines.size()},
                          {"seconds", seconds_since(start)}};
  print_lines(out.text, lines);
  return kOk;
}

int cmd_ideal_op(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  json result{{"op", o.op}, {"inputs", json::array({strings(p.ideal.gens())})}};
  Ideal r = p.ideal;
  if (o.op == "eliminate") {
    r = eliminate(p.ideal, o.k);
    result["k"] = o.k;
  } else {
    const Ideal b = second_ideal(o, p);
    result["inputs"].push_back(strings(b.gens()));
    if (o.op == "sum") r = ideal_sum(p.ideal, b);
    else if (o.op == "intersect") r = ideal_intersect(p.ideal, b);
    else if (o.op == "quotient") r = ideal_quotient(p.ideal, b);
    else if (o.op == "saturate") {
      auto s = ideal_saturate(p.ideal, b);
      r = s.ideal;
      result["iterations"] = s.iterations;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown --op '" + o.op + "'");
    }
  }
  const auto lines = strings(r.groebner().gens());
  result["gb"] = lines;
  out.report["result"] = result;
  print_lines(out.text, lines);
  return kOk;
}

int cmd_points(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  const Variety v = zero_set(p.ideal, p.points, space_kind(o));
  std::vector<std::string> pts;
  for (const auto& pt : v.points) pts.push_back(format_point(*v.field, pt, v.kind));
  out.report["result"] = {{"kind", o.affine ? "affine" : "projective"}, {"count", pts.size()}, {"points", pts}};
  for (const auto& s : pts) out.text << s << "\n";
  return kOk;
}

// Affine I(Z(I)) by the formula or from the points; the empty zero set gives <1>.
Ideal affine_by(const Problem& p, VanishingMethod method, MethodReport& report) {
  const auto start = std::chrono::steady_clock::now();
  Ideal r = p.ideal;
  if (method == VanishingMethod::Oracle) {
    if (zero_set(p.ideal, p.points, SpaceKind::Affine).empty()) r = Ideal::unit(p.ring);
    else r = affine_oracle(p.ideal, p.config(method));
  } else {
    r = affine_vanishing(p.ideal, p.config(method));
  }
  report.method = method;
  report.gb_size = r.groebner().size();
  report.seconds = seconds_since(start);
  return r;
}

// Prints the classification of an empty projective variety; true if empty.
bool report_if_empty(const Problem& p, Output& out) {
  if (!zero_set(p.ideal, p.points, SpaceKind::Projective).empty()) return false;
  const auto tag = std::string(to_string(classify_empty(p.ideal, p.config())));
  out.report["result"] = {{"empty", true}, {"classification", tag}};
  out.text << tag << "\n";
  return true;
}

int cmd_vanishing(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  const VanishingMethod method = parse_method(o.method);
  if (o.affine) {
    MethodReport rep{};
    const Ideal r = affine_by(p, method, rep);
    const auto lines = strings(r.groebner().gens());
    json m = method_json(rep);
    m["method"] = method == VanishingMethod::Oracle ? "oracle" : "formula";
    out.report["methods"] = json::array({m});
    out.report["result"] = {{"kind", "affine"}, {"gb", lines}};
    print_lines(out.text, lines);
    return kOk;
  }
  if (report_if_empty(p, out)) return kOk;
  const auto res = projective_vanishing(p.ideal, p.config(method));
  const auto lines = strings(res.ideal.groebner().gens());
  out.report["methods"] = json::array({method_json(res.report)});
  out.report["result"] = {{"kind", "projective"}, {"gb", lines}};
  print_lines(out.text, lines);
  return kOk;
}

void print_table(std::ostream& out, const std::vector<MethodReport>& reports, const std::vector<std::string>& names) {
  out << std::left << std::setw(12) << "method" << std::setw(12) << "seconds" << std::setw(8) << "rounds"
      << "gb_size\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(6) << reports[i].seconds;
    out << std::left << std::setw(12) << names[i] << std::setw(12) << secs.str() << std::setw(8)
        << reports[i].quotient_rounds << reports[i].gb_size << "\n";
  }
}

int cmd_compare(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  std::vector<Ideal> ideals;
  std::vector<MethodReport> reports;
  std::vector<std::string> names;
  if (o.affine) {
    for (auto m : {VanishingMethod::Colon, VanishingMethod::Oracle}) {
      MethodReport rep{};
      ideals.push_back(affine_by(p, m, rep));
      reports.push_back(rep);
      names.push_back(m == VanishingMethod::Oracle ? "oracle" : "formula");
    }
  } else {
    if (report_if_empty(p, out)) return kOk;
    for (auto m : {VanishingMethod::Colon, VanishingMethod::Saturation, VanishingMethod::Oracle}) {
      auto res = projective_vanishing(p.ideal, p.config(m));
      ideals.push_back(res.ideal);
      reports.push_back(res.report);
      names.emplace_back(to_string(m));
    }
  }
  bool agree = true;
  for (std::size_t i = 1; i < ideals.size(); ++i)
    agree = agree && ideals[i].groebner().gens() == ideals[0].groebner().gens();
  json methods = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json m = method_json(reports[i]);
    m["method"] = names[i];
    m["gb"] = strings(ideals[i].groebner().gens());
    methods.push_back(std::move(m));
  }
  out.report["methods"] = methods;
  out.assertion("all methods give the same reduced basis", agree);
  print_table(out.text, reports, names);
  out.text << "agree: " << (agree ? "yes" : "NO") << "\n";
  if (agree) {
    print_lines(out.text, strings(ideals[0].groebner().gens()));
  } else {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      out.text << "-- " << names[i] << "\n";
      print_lines(out.text, strings(ideals[i].groebner().gens()));
    }
  }
  return agree ? kOk : kAssertionFailure;
}

int cmd_certify(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  const NullConfig cfg = p.config();
  json certs = json::array();
  if (o.poly.empty()) {
    for (std::size_t j = 0; j < p.ring->nvars(); ++j) {
      const auto c = make_certificate(p.ideal, j, cfg);
      if (j == 0) out.text << "d = " << c.d << "\n";
      out.text << "j = " << j << "\n  g = " << c.g.to_string() << "\n  l = " << c.l.to_string() << "\n";
      certs.push_back({{"j", j}, {"d", c.d}, {"g", c.g.to_string()}, {"l", c.l.to_string()}});
    }
    out.assertion("g_j in I, l_j vanishes off V, degrees and identities verified", true);
  } else {
    const Polynomial f = parse_polynomial(o.poly, p.ring);
    const auto ms = certify_membership(f, p.ideal, cfg);
    for (const auto& m : ms) {
      if (m.cert.j == 0) out.text << "d = " << m.cert.d << "\n";
      out.text << "j = " << m.cert.j << "\n  g = " << m.cert.g.to_string() << "\n  l = " << m.cert.l.to_string()
               << "\n  g*f = " << m.g_times_f.to_string() << "\n  l*f = " << m.l_times_f.to_string() << "\n";
      certs.push_back({{"j", m.cert.j},
                       {"d", m.cert.d},
                       {"g", m.cert.g.to_string()},
                       {"l", m.cert.l.to_string()},
                       {"g_times_f", m.g_times_f.to_string()},
                       {"l_times_f", m.l_times_f.to_string()}});
    }
    out.report["poly"] = f.to_string();
    out.assertion("X_j^d f = g_j f + l_j f with g_j f in I and l_j f in Gamma*", true);
  }
  out.report["result"] = {{"certificates", certs}};
  return kOk;
}

json search_json(const SearchResult& r) {
  json j{{"family", std::string(to_string(r.family))},
         {"bounds", r.bounds.to_string()},
         {"exhausted", r.exhausted()},
         {"candidates_tested", r.candidates_tested},
         {"structures", r.structures},
         {"arg_pool", r.arg_pool}};
  if (r.witness) {
    json stages = json::array();
    for (const auto& s : r.witness->stages) stages.push_back(s.to_string());
    j["witness"] = {{"stages", stages},
                    {"args", strings(r.witness->args)},
                    {"composite", r.witness->composite().to_string()}};
  }
  return j;
}

int cmd_search(const Options& o, Output& out) {
  if (o.nonradical) {
    auto hit = find_nonradical_instance(o.q, o.n, o.maxdeg);
    json result{{"q", o.q}, {"n", o.n}, {"maxdeg", o.maxdeg}, {"found", hit.has_value()}};
    if (!hit) {
      out.text << "not found\n";
    } else {
      const bool in_radical = radical_membership(hit->witness, hit->augmented);
      const bool in_ideal = hit->augmented.contains(hit->witness);
      result["ideal"] = strings(hit->ideal.gens());
      result["augmented"] = strings(hit->augmented.groebner().gens());
      result["colon"] = strings(hit->colon.groebner().gens());
      result["witness"] = hit->witness.to_string();
      result["ideals_examined"] = hit->ideals_examined;
      out.assertion("witness in the radical of I + Gamma*", in_radical);
      out.assertion("witness not in I + Gamma*", !in_ideal);
      out.text << "ideal: " << hit->ideal.to_string() << "\n"
               << "I + Gamma*: " << hit->augmented.to_string() << "\n"
               << "colon: " << hit->colon.to_string() << "\n"
               << "witness: " << hit->witness.to_string() << "\n"
               << "ideals examined: " << hit->ideals_examined << "\n";
    }
    out.report["result"] = result;
    return out.failed ? kAssertionFailure : kOk;
  }
  if (o.family.empty() || o.target.empty())
    throw Error(ErrorKind::InvalidArgument, "search needs --family and --target (or --nonradical)");
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  const Family fam = parse_family(o.family);
  const SearchBounds bounds = parse_bounds(o.bounds);
  const Polynomial f = parse_polynomial(o.target, p.ring);
  const auto r = search_witness(f, p.ideal, fam, bounds, p.points);
  out.report["result"] = search_json(r);
  if (r.witness) {
    out.text << "found after " << r.candidates_tested << " candidates\n" << r.witness->describe() << "\n";
  } else {
    out.text << "exhausted after " << r.candidates_tested << " candidates (" << r.structures << " structures, pool "
             << r.arg_pool << ", bounds " << bounds.to_string() << ")\n";
  }
  return kOk;
}

int cmd_suite(const Options& o, Output& out) {
  SuiteOptions opts;
  opts.bounds = parse_bounds(o.bounds);
  if (!o.suite_ideal.empty()) opts.ideal_override = o.suite_ideal;
  const auto report = counterexample_suite(opts);
  json checks = json::array();
  std::map<std::string, bool> groups;
  for (const auto& c : report.checks) {
    checks.push_back({{"group", c.group},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail},
                      {"vacuous", c.vacuous}});
    out.assertion("(" + c.group + ") " + c.name, c.passed, c.detail);
    auto [it, fresh] = groups.emplace(c.group, c.passed);
    if (!fresh) it->second = it->second && c.passed;
    out.text << (c.passed ? "[PASS] " : "[FAIL] ") << "(" << c.group << ") " << c.name << ": " << c.detail << "\n";
  }
  json searches = json::array();
  for (const auto& s : report.searches) searches.push_back(search_json(s));
  std::size_t passing = 0;
  for (const auto& [g, ok] : groups) passing += ok ? 1 : 0;
  out.text << "groups passed: " << passing << "/" << groups.size() << "\n";
  out.report["result"] = {{"suite", "counterexample"},
                          {"bounds", opts.bounds.to_string()},
                          {"checks", checks},
                          {"searches", searches},
                          {"groups_passed", passing},
                          {"groups", groups.size()}};
  return report.passed() ? kOk : kAssertionFailure;
}

int cmd_parse(const Options& o, Output& out) {
  const Problem p = input_problem(o);
  describe_problem(p, out.report);
  out.report["result"] = {{"normalized", p.emit()}};
  if (o.emit_normalized) {
    out.text << p.emit();
  } else {
    out.text << "ring " << p.coeffs->name() << "[";
    for (std::size_t i = 0; i < p.ring->vars.size(); ++i) out.text << (i ? ", " : "") << p.ring->vars[i];
    out.text << "], points over " << p.points->name() << "\n" << p.ideal.to_string() << "\n";
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VerificationFailure:
    case ErrorKind::SuiteFailure:
    case ErrorKind::ClassificationFailure:
      return kAssertionFailure;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gröbner bases and finite-field Nullstellensätze", "nullkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", o.json, "Emit the JSON run report");
  app.add_option("--threads", o.threads, "Worker threads (default: NULLKIT_THREADS or all cores)");

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", o.input, "Problem file (.null)"); };
  auto add_kind = [&](CLI::App* sub) {
    auto* a = sub->add_flag("--affine", o.affine, "Affine space");
    auto* p = sub->add_flag("--projective", o.projective, "Projective space (default)");
    a->excludes(p);
  };

  auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis of the input ideal");
  add_input(gb);
  gb->add_option("--order", o.order, "lex, degrevlex or block(k)");

  auto* iop = app.add_subcommand("ideal-op", "Sum, intersection, quotient, saturation or elimination");
  add_input(iop);
  iop->add_option("--op", o.op, "sum|intersect|quotient|saturate|eliminate")
      ->required()
      ->check(CLI::IsMember({"sum", "intersect", "quotient", "saturate", "eliminate"}));
  iop->add_option("--with", o.with, "Generators of the second ideal");
  iop->add_option("--other", o.other, "Problem file holding the second ideal");
  iop->add_option("--k", o.k, "Variables to eliminate");

  auto* pts = app.add_subcommand("points", "List the K-rational zero set");
  add_input(pts);
  add_kind(pts);

  auto* van = app.add_subcommand("vanishing", "Vanishing ideal of the zero set");
  add_input(van);
  add_kind(van);
  van->add_option("--method", o.method, "colon|saturation|oracle");

  auto* cmp = app.add_subcommand("compare", "Run every method and check they agree");
  add_input(cmp);
  add_kind(cmp);

  auto* cert = app.add_subcommand("certify", "Certificates for the degree-bound colon");
  add_input(cert);
  cert->add_option("--poly", o.poly, "Certify membership of this form in the vanishing ideal");

  auto* search = app.add_subcommand("search", "Bounded search for composed-form witnesses");
  search->add_option("--ideal,--input", o.input, "Problem file");
  search->add_option("--family", o.family, "r1|r2|r3");
  search->add_option("--target", o.target, "Polynomial f");
  search->add_option("--bounds", o.bounds, "m=,degp=,degargs=,chain=,inner=");
  search->add_flag("--nonradical", o.nonradical, "Search for I with I + Gamma* not radical");
  search->add_option("--q", o.q, "Field size for --nonradical");
  search->add_option("--n", o.n, "Projective dimension for --nonradical");
  search->add_option("--maxdeg", o.maxdeg, "Maximal generator degree for --nonradical");

  auto* suite = app.add_subcommand("suite", "Run a built-in check suite");
  suite->add_option("name", o.suite_name, "Suite name")->required()->check(CLI::IsMember({"counterexample"}));
  suite->add_option("--bounds", o.bounds, "Search bounds");
  suite->add_option("--ideal", o.suite_ideal, "Generators replacing <X1>");

  auto* parse = app.add_subcommand("parse", "Parse a problem file");
  add_input(parse);
  parse->add_flag("--emit-normalized", o.emit_normalized, "Print the canonical form of the file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (o.threads) set_thread_count(o.threads);

  CLI::App* sub = app.get_subcommands().front();
  Output result;
  result.report = {{"schema_version", kSchemaVersion},
                   {"tool", "nullkit"},
                   {"version", kVersion},
                   {"command", sub->get_name()},
                   {"argv", args},
                   {"assertions", json::array()}};
  int code = kOk;
  try {
    const std::string& name = sub->get_name();
    if (name == "gb") code = cmd_gb(o, result);
    else if (name == "ideal-op") code = cmd_ideal_op(o, result);
    else if (name == "points") code = cmd_points(o, result);
    else if (name == "vanishing") code = cmd_vanishing(o, result);
    else if (name == "compare") code = cmd_compare(o, result);
    else if (name == "certify") code = cmd_certify(o, result);
    else if (name == "search") code = cmd_search(o, result);
    else if (name == "suite") code = cmd_suite(o, result);
    else code = cmd_parse(o, result);
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    err << "nullkit: " << e.what() << "\n";
    result.report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.message()}};
  }
  result.report["exit_code"] = code;
  if (o.json) out << result.report.dump(2) << "\n";
  else if (code == kOk || code == kAssertionFailure) out << result.text.str();
  return code;
}

}  // namespace nullkit::cli
