#include "hassecount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "hassecount/counting.hpp"
#include "hassecount/exceptions.hpp"
#include "hassecount/order.hpp"
#include "hassecount/parallel.hpp"
#include "hassecount/sweep.hpp"

namespace hassecount::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> poly;
  std::string curve;
  std::string format = "json";
};

std::vector<std::uint64_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      if (item.empty() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
    }
  }
  return out;
}

FieldPtr make_field(const FieldArgs& a) {
  try {
    return Field::from_order(a.q, a.poly);
  } catch (const Error& e) {
    throw UsageError(std::string("--q/--poly: ") + e.what());
  }
}

Curve make_curve(const FieldPtr& field, const FieldArgs& a) {
  auto v = parse_list(a.curve, "--curve");
  if (v.size() != 5) throw UsageError("--curve needs five coefficients a1,a2,a3,a4,a6");
  std::array<std::uint64_t, 5> enc{};
  std::copy(v.begin(), v.end(), enc.begin());
  for (auto c : enc) {
    if (c >= field->order()) throw UsageError("--curve: coefficient outside [0, q)");
  }
  return Curve::from_encodings(field, enc);
}

Json encodings(const Coefficients& a) {
  Json arr = Json::array();
  for (auto c : a) arr.push_back(c.enc);
  return arr;
}

Json point_json(const Point& p) {
  if (p.infinity) return "inf";
  return Json::array({p.x.enc, p.y.enc});
}

// Flat record as JSON, or as a two-line TSV (header, values).
void emit_record(const Json& rec, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << rec.dump() << '\n';
    return;
  }
  std::string head, vals;
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    if (!head.empty()) {
      head += '\t';
      vals += '\t';
    }
    head += it.key();
    if (it->is_string()) {
      vals += it->get<std::string>();
    } else if (it->is_array()) {
      std::string joined;
      for (const auto& x : *it) {
        if (!joined.empty()) joined += ',';
        joined += x.is_string() ? x.get<std::string>() : x.dump();
      }
      vals += joined;
    } else {
      vals += it->dump();
    }
  }
  out << head << '\n' << vals << '\n';
}

Json base_record(const Curve& e) {
  Json rec;
  rec["q"] = e.field().order();
  rec["curve"] = encodings(e.coefficients());
  return rec;
}

int cmd_count(const FieldArgs& fa, const std::string& method_name, std::uint64_t seed,
              std::ostream& out) {
  auto method = parse_count_method(method_name);
  if (!method) throw UsageError("--method must be auto, exhaustive or point_order");
  auto field = make_field(fa);
  const Curve e = make_curve(field, fa);
  const CountResult r = count_points(e, *method, seed);
  Json rec = base_record(e);
  rec["count"] = r.count;
  rec["trace"] = r.trace;
  rec["twist_count"] = r.twist_count;
  rec["method"] = std::string(to_string(r.method));
  rec["samples_used"] = r.samples_used;
  emit_record(rec, fa.format, out);
  return kOk;
}

int cmd_order(const FieldArgs& fa, const std::string& point_arg, std::ostream& out) {
  auto field = make_field(fa);
  const Curve e = make_curve(field, fa);
  Point p = Point::at_infinity();
  if (point_arg != "inf") {
    auto v = parse_list(point_arg, "--point");
    if (v.size() != 2) throw UsageError("--point needs x,y or inf");
    if (v[0] >= field->order() || v[1] >= field->order()) {
      throw UsageError("--point: coordinate outside [0, q)");
    }
    p = Point::affine(field->element(v[0]), field->element(v[1]));
  }
  if (!e.contains(p)) fail(ErrorCode::point_not_on_curve, "point is not on the curve");
  const auto bsgs = bsgs_search(e, p);
  Json rec = base_record(e);
  rec["point"] = point_json(p);
  rec["order"] = exact_order(e, p, bsgs.annihilator);
  rec["annihilator"] = bsgs.annihilator;
  emit_record(rec, fa.format, out);
  return kOk;
}

int cmd_twist(const FieldArgs& fa, std::ostream& out) {
  auto field = make_field(fa);
  const Curve e = make_curve(field, fa);
  const Curve t = e.quadratic_twist();
  Json rec = base_record(e);
  rec["twist"] = encodings(t.coefficients());
  if (field->order() <= Field::kTableLimit) {
    rec["count"] = e.count_exhaustive();
    rec["twist_count"] = t.count_exhaustive();
  }
  emit_record(rec, fa.format, out);
  return kOk;
}

int cmd_group(const FieldArgs& fa, std::ostream& out) {
  auto field = make_field(fa);
  const Curve e = make_curve(field, fa);
  const GroupStructure g = group_structure(e);
  Json rec = base_record(e);
  rec["count"] = g.n1 * g.n2;
  rec["n1"] = g.n1;
  rec["n2"] = g.n2;
  emit_record(rec, fa.format, out);
  return kOk;
}

std::optional<ExceptionRule> parse_reading(const std::string& s) {
  if (s == "exponents") return ExceptionRule::groups;
  if (s == "exponents+q-1") return ExceptionRule::groups_with_q_minus_1;
  if (s == "q-1") return ExceptionRule::q_minus_1_only;
  return std::nullopt;
}

int cmd_exceptions(std::uint64_t qmax, bool corollary, const std::string& reading, bool parity,
                   const std::string& format, std::ostream& out) {
  if (qmax < 2) throw UsageError("--qmax must be at least 2");
  ExceptionRule rule = ExceptionRule::exponents;
  if (corollary) {
    auto r = parse_reading(reading);
    if (!r) throw UsageError("--reading must be exponents, exponents+q-1 or q-1");
    rule = *r;
  }
  auto records = sweep_exceptions(qmax, rule, Execution::parallel);
  if (parity) records = parity_filter(records);
  std::vector<std::uint64_t> qs;
  for (const auto& r : records) {
    if (qs.empty() || qs.back() != r.q) qs.push_back(r.q);
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : records) {
      arr.push_back(Json{{"q", r.q}, {"M", r.M}, {"N", r.N}, {"t", r.t}, {"t_prime", r.t_prime}});
    }
    out << Json{{"records", arr}, {"exceptional_q", qs}}.dump() << '\n';
    return kOk;
  }
  out << "q\tM\tN\tt\tt'\n";
  for (const auto& r : records) {
    out << r.q << '\t' << r.M << '\t' << r.N << '\t' << r.t << '\t' << r.t_prime << '\n';
  }
  out << "# exceptional q:";
  for (auto q : qs) out << ' ' << q;
  out << '\n';
  return kOk;
}

int cmd_table1(const std::string& format, const std::string& alpha_name, std::ostream& out) {
  AlphaConvention alpha;
  if (alpha_name == "conway") {
    alpha = AlphaConvention::conway;
  } else if (alpha_name == "default") {
    alpha = AlphaConvention::default_field;
  } else {
    throw UsageError("--alpha must be conway or default");
  }
  const auto checks = verify_table1(alpha);
  bool all = true;
  Json arr = Json::array();
  if (format != "json") out << "q\tM\tN\tt\tt'\tE\t#E\tlambda\tlambda'\tstatus\n";
  for (const auto& c : checks) {
    all = all && c.passed();
    const char* status = c.passed() ? (c.symmetric_match ? "PASS(sym)" : "PASS") : "FAIL";
    if (format == "json") {
      arr.push_back(Json{{"q", c.row.q},
                         {"M", c.row.M},
                         {"N", c.row.N},
                         {"t", c.row.t},
                         {"t_primes", c.row.t_primes},
                         {"equation", c.row.equation},
                         {"count", c.count},
                         {"lambda", c.lambda},
                         {"twist_lambda", c.twist_lambda},
                         {"quadruples_ok", c.quadruples_ok},
                         {"curve_ok", c.curve_ok},
                         {"symmetric_match", c.symmetric_match},
                         {"passed", c.passed()}});
      continue;
    }
    std::string tps;
    for (auto tp : c.row.t_primes) tps += (tps.empty() ? "" : ",") + std::to_string(tp);
    out << c.row.q << '\t' << c.row.M << '\t' << c.row.N << '\t' << c.row.t << '\t' << tps
        << '\t' << c.row.equation << '\t' << c.count << '\t' << c.lambda << '\t'
        << c.twist_lambda << '\t' << status << '\n';
  }
  if (format == "json") out << arr.dump() << '\n';
  return all ? kOk : kInternal;
}

// Invariant sweep; fast mode stops at q <= 128.
int cmd_selftest(bool fast, std::ostream& out) {
  const std::uint64_t qmax = fast ? 128 : 1024;
  const auto qs = prime_powers_up_to(qmax);
  bool all = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    out << (ok ? "PASS" : "FAIL") << '\t' << name << '\t' << detail << '\n';
  };

  {
    std::uint64_t bad = 0;
    for (auto q : qs) {
      auto f = Field::from_order(q);
      for (std::uint64_t a = 1; a < q; ++a) {
        const Element e{static_cast<std::uint32_t>(a)};
        if (f->mul(e, f->inv(e)) != f->one()) ++bad;
      }
    }
    report("field_inverse", bad == 0, "q<=" + std::to_string(qmax) + " bad=" + std::to_string(bad));
  }
  {
    std::uint64_t bad = 0, curves = 0;
    for (auto q : qs) {
      auto f = Field::from_order(q);
      for (const auto& a : random_coefficients(f, 10, q)) {
        const Curve e = Curve::make(f, a);
        ++curves;
        if (e.count_exhaustive() + e.quadratic_twist().count_exhaustive() != 2 * (q + 1)) ++bad;
      }
    }
    report("twist_identity", bad == 0,
           "curves=" + std::to_string(curves) + " bad=" + std::to_string(bad));
  }
  {
    CountCheck total;
    for (auto q : qs) {
      if (is_excluded_field(q)) continue;
      auto f = Field::from_order(q);
      auto c = check_counts(f, random_coefficients(f, 20, q), CountMethod::point_order, 0,
                            Execution::parallel);
      total.curves += c.curves;
      total.mismatches += c.mismatches;
      total.errors += c.errors;
    }
    report("point_order_vs_exhaustive", total.mismatches == 0 && total.errors == 0,
           "curves=" + std::to_string(total.curves) + " mismatches=" +
               std::to_string(total.mismatches) + " errors=" + std::to_string(total.errors));
  }
  {
    std::uint64_t bad = 0, curves = 0;
    for (auto q : qs) {
      if (q > 256) break;
      auto f = Field::from_order(q);
      for (const auto& a : random_coefficients(f, 5, q + 1)) {
        ++curves;
        try {
          group_structure(Curve::make(f, a));
        } catch (const Error&) {
          ++bad;
        }
      }
    }
    report("group_structure", bad == 0,
           "curves=" + std::to_string(curves) + " bad=" + std::to_string(bad));
  }
  {
    const auto got = exceptional_q_set(1024);
    const bool ok = std::equal(got.begin(), got.end(), kExcludedFields.begin(), kExcludedFields.end());
    std::string s;
    for (auto q : got) s += (s.empty() ? "" : ",") + std::to_string(q);
    report("exceptional_set", ok, s);
  }
  {
    std::size_t passed = 0;
    const auto checks = verify_table1();
    for (const auto& c : checks) passed += c.passed();
    report("table1", passed == checks.size(),
           std::to_string(passed) + "/" + std::to_string(checks.size()));
  }
  return all ? kOk : kInternal;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_prime:
    case ErrorCode::not_prime_power:
    case ErrorCode::reducible_polynomial:
    case ErrorCode::invalid_encoding:
      return kUsage;
    case ErrorCode::internal:
    case ErrorCode::incompatible_congruence:
    case ErrorCode::iteration_cap_exceeded:
      return kInternal;
    default:
      return kDomain;
  }
}

}  // namespace

std::string version() {
  return std::string("hassecount 1.0.0 (rng: ") + kRngName + ")";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point counting on elliptic curves over finite fields via point orders",
               "hassecount"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  int jobs = 0;
  if (const char* env = std::getenv("HASSECOUNT_JOBS")) jobs = std::atoi(env);

  FieldArgs fa;
  std::string method = "auto", point = "inf", reading = "exponents+q-1", alpha = "conway";
  std::string table_format = "tsv";
  std::uint64_t seed = 0, qmax = 1024;
  bool corollary = false, parity = false, fast = false;

  auto add_field_opts = [&](CLI::App* sub) {
    sub->add_option("--q", fa.q, "field order p^k")->required();
    sub->add_option("--poly", fa.poly, "modulus as encoding sum c_i p^i (monic, degree k)");
    sub->add_option("--curve", fa.curve, "a1,a2,a3,a4,a6 as element encodings")->required();
    sub->add_option("--format", fa.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* count = app.add_subcommand("count", "compute #E");
  add_field_opts(count);
  count->add_option("--method", method, "auto, exhaustive or point_order");
  count->add_option("--seed", seed, "RNG seed");

  auto* order = app.add_subcommand("order", "order of a point");
  add_field_opts(order);
  order->add_option("--point", point, "x,y or inf")->required();

  auto* twist = app.add_subcommand("twist", "quadratic twist");
  add_field_opts(twist);

  auto* group = app.add_subcommand("group", "group structure Z/n1 x Z/n2");
  add_field_opts(group);

  auto* exc = app.add_subcommand("exceptions", "enumerate exceptional (M, N, t, t') quadruples");
  exc->add_option("--qmax", qmax, "largest q to sweep");
  exc->add_flag("--corollary", corollary, "apply the t'-side group filter");
  exc->add_option("--reading", reading, "t'-side filter with --corollary: exponents, exponents+q-1, q-1");
  exc->add_flag("--parity", parity, "keep only records passing the parity test");
  exc->add_option("--format", table_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  exc->add_option("--jobs", jobs, "worker threads");

  auto* table1 = app.add_subcommand("table1", "verify the table of exceptional cases");
  table1->add_option("--format", table_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  table1->add_option("--alpha", alpha, "conway or default");

  auto* selftest = app.add_subcommand("selftest", "invariant sweep over q <= 1024");
  selftest->add_flag("--fast", fast, "stop at q <= 128");
  selftest->add_option("--jobs", jobs, "worker threads");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (jobs > 0) set_worker_count(jobs);

  try {
    if (*count) return cmd_count(fa, method, seed, out);
    if (*order) return cmd_order(fa, point, out);
    if (*twist) return cmd_twist(fa, out);
    if (*group) return cmd_group(fa, out);
    if (*exc) return cmd_exceptions(qmax, corollary, reading, parity, table_format, out);
    if (*table1) return cmd_table1(table_format, alpha, out);
    if (*selftest) return cmd_selftest(fast, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace hassecount::cli
