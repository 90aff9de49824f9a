#include "affine_fock/cli.hpp"

#include "affine_fock/conventions.hpp"
#include "affine_fock/equivariant.hpp"
#include "affine_fock/errors.hpp"
#include "affine_fock/frenkel_kac.hpp"
#include "affine_fock/json_io.hpp"
#include "affine_fock/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace affine_fock::cli {

namespace {

struct Common {
  std::string format = "json";
  bool pretty = false;
};

void emit_json(std::ostream& out, const Json& j, const Common& o) {
  out << (o.pretty ? j.dump(2) : j.dump()) << '\n';
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string parts_cell(const Partition& p) {
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : ";") + std::to_string(x);
  return s;
}

void emit_vector(std::ostream& out, const BosonVector& v, const Common& o) {
  if (o.format == "csv") {
    out << "label,coeff\n";
    for (const auto& [lambda, c] : v) out << csv_cell(parts_cell(lambda)) << ',' << to_string(c) << '\n';
    return;
  }
  emit_json(out, to_json_value(v), o);
}

void add_format_flags(CLI::App* sub, Common& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--pretty", o.pretty, "Indent JSON output");
}

// Degree change of a generator on the b-basis.
int degree_shift(const AffineGenerator& g) {
  using K = AffineGenerator::Kind;
  switch (g.kind) {
    case K::E: return -1;
    case K::F: return 1;
    case K::P: return -g.m;
    default: return 0;
  }
}

BosonVector act_on(const AffineGenerator& g, const Partition& lambda, int l, const std::string& side,
                   int window) {
  require_generator(g, l);
  if (side == "explicit") {
    if (!g.is_chevalley())
      throw ConstraintError("the explicit side supports e_i, f_i, h_i; use --side frenkel-kac");
    return explicit_action(g, lambda, l);
  }
  if (side == "frenkel-kac") {
    const DegreeWindow w{window, 0};
    return transport_inverse(fk_action(g, transport(BosonVector::basis(lambda), l), l, w), l);
  }
  if (g.kind != AffineGenerator::Kind::E)
    throw ConstraintError("the geometric side supports e_i only");
  return geometric_action_e(g.i, lambda, l);
}

int cmd_core_quotient(int l, const std::string& lambda_text, bool inverse, const std::string& c_text,
                      const std::string& q_text, const Common& o, std::ostream& out) {
  require_level(l);
  if (inverse) {
    if (c_text.empty() || q_text.empty()) throw ParseError("--inverse needs --c and --q");
    const CoreVector c = parse_int_vector(parse_json_text(c_text));
    const PartitionTuple q = parse_partition_tuple(parse_json_text(q_text));
    const Partition lambda = cq_inverse(c, q, l);
    if (o.format == "csv")
      out << "lambda\n" << csv_cell(parts_cell(lambda)) << '\n';
    else
      emit_json(out, {{"lambda", to_json_value(lambda)}}, o);
    return kOk;
  }
  if (lambda_text.empty()) throw ParseError("--lambda is required");
  const Partition lambda = parse_partition(parse_json_text(lambda_text));
  const CoreQuotient cq = core_and_quotient(lambda, l);
  const bool roundtrip = cq_inverse(cq.c, cq.q, l) == lambda;
  if (o.format == "csv") {
    out << "k,c,q\n";
    for (int j = 0; j < l; ++j)
      out << (2 * j + 1) << "/2," << cq.c[j] << ',' << csv_cell(parts_cell(cq.q[j])) << '\n';
  } else {
    emit_json(out, {{"c", cq.c}, {"q", to_json_value(cq.q)}, {"roundtrip", roundtrip}}, o);
  }
  return roundtrip ? kOk : kMismatch;
}

int cmd_matrix(const AffineGenerator& g, int l, int degree, const std::string& side, const Common& o,
               std::ostream& out) {
  require_generator(g, l);
  if (degree < 0) throw ConstraintError("degree must be non-negative");
  const int target = degree + degree_shift(g);
  const std::vector<Partition> cols = enumerate_partitions(degree);
  const std::vector<Partition> rows = target >= 0 ? enumerate_partitions(target) : std::vector<Partition>{};
  const int window = std::max(degree, target) + 1;
  struct Entry {
    std::size_t r, c;
    Rational v;
  };
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const BosonVector img = act_on(g, cols[c], l, side, window);
    for (const auto& [mu, v] : img) {
      const auto it = std::find(rows.begin(), rows.end(), mu);
      if (it == rows.end()) throw std::logic_error("image outside the target slice");
      entries.push_back({static_cast<std::size_t>(it - rows.begin()), c, v});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.r, a.c) < std::tie(b.r, b.c); });
  if (o.format == "csv") {
    out << "row,col,row_label,col_label,value\n";
    for (const auto& e : entries)
      out << e.r << ',' << e.c << ',' << csv_cell(parts_cell(rows[e.r])) << ','
          << csv_cell(parts_cell(cols[e.c])) << ',' << to_string(e.v) << '\n';
    return kOk;
  }
  Json j;
  j["generator"] = g.to_string();
  j["l"] = l;
  j["degree"] = degree;
  j["target_degree"] = target;
  j["side"] = side;
  j["rows"] = Json::array();
  for (const auto& p : rows) j["rows"].push_back(to_json_value(p));
  j["cols"] = Json::array();
  for (const auto& p : cols) j["cols"].push_back(to_json_value(p));
  j["entries"] = Json::array();
  for (const auto& e : entries) j["entries"].push_back({{"row", e.r}, {"col", e.c}, {"value", to_string(e.v)}});
  emit_json(out, j, o);
  return kOk;
}

int cmd_verify(const std::string& suite, int l, int degree, int charge_bound,
               const std::vector<std::string>& mutate, const Common& o, std::ostream& out) {
  unsigned mask = 0;
  for (const auto& name : mutate) {
    const Mutation m = parse_mutation(name);
    if (m == Mutation::None) throw ParseError("unknown mutation '" + name + "'");
    mask |= static_cast<unsigned>(m);
  }
  const unsigned saved = mutations();
  set_mutations(mask);
  std::vector<Report> reports;
  try {
    reports = run_suite(suite, l, degree, charge_bound);
  } catch (...) {
    set_mutations(saved);
    throw;
  }
  set_mutations(saved);
  if (o.format == "csv") {
    out << "suite,status,checked,failure_count\n";
    for (const auto& r : reports)
      out << r.suite << ',' << (r.ok() ? "ok" : "mismatch") << ',' << r.checked << ','
          << r.failures.size() << '\n';
    out << "\nsuite,generator,lambda,lhs,rhs\n";
    for (const auto& r : reports)
      for (const auto& f : r.failures)
        out << r.suite << ',' << csv_cell(f.generator) << ',' << csv_cell(f.lambda.dump()) << ','
            << csv_cell(f.lhs.dump()) << ',' << csv_cell(f.rhs.dump()) << '\n';
  } else {
    emit_json(out, combined_report(reports, l, degree), o);
  }
  return all_ok(reports) ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Level-one Fock space representations of affine sl(l): computations and checks",
               "affine-fock"};
  app.require_subcommand(1);

  Common common;
  int l = 0;
  int degree = 6;
  int charge_bound = 2;
  int window = -1;
  std::string lambda_text, c_text, q_text, gen_text, side = "explicit", suite = "all";
  bool inverse = false;
  std::vector<std::string> mutate;

  auto* cq = app.add_subcommand("core-quotient", "Core vector and quotient of a partition (or the inverse)");
  cq->add_option("--l", l, "Level l >= 2")->required();
  cq->add_option("--lambda", lambda_text, "Partition as JSON, e.g. [3,1,1]");
  cq->add_flag("--inverse", inverse, "Reassemble a partition from --c and --q");
  cq->add_option("--c", c_text, "Core vector as JSON");
  cq->add_option("--q", q_text, "Quotient as JSON array of partitions");
  add_format_flags(cq, common);

  auto* act = app.add_subcommand("act", "Apply a generator to b_lambda");
  act->add_option("--g", gen_text, "Generator: e_i, f_i, h_i, p_i(m), c, d")->required();
  act->add_option("--lambda", lambda_text, "Partition as JSON")->required();
  act->add_option("--l", l, "Level l >= 2")->required();
  act->add_option("--side", side, "Realization")->check(CLI::IsMember({"explicit", "frenkel-kac", "geometric"}));
  act->add_option("--window", window, "Maximal quotient degree for vertex operators");
  add_format_flags(act, common);

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"boson-fermion", "frenkel-kac", "geometric", "fixed-points", "relations", "all"}));
  ver->add_option("--l", l, "Level l >= 2")->default_val(3);
  ver->add_option("--degree", degree, "Maximal degree")->default_val(6);
  ver->add_option("--charge-bound", charge_bound, "Charge bound for boson-fermion")->default_val(2);
  ver->add_option("--mutate", mutate, "Corrupt a sign convention (testing only)")->group("");
  add_format_flags(ver, common);

  auto* mat = app.add_subcommand("matrix", "Operator matrix on a degree slice");
  mat->add_option("--g", gen_text, "Generator: e_i, f_i, h_i, p_i(m), c, d")->required();
  mat->add_option("--l", l, "Level l >= 2")->required();
  mat->add_option("--degree", degree, "Source degree")->required();
  mat->add_option("--side", side, "Realization")->check(CLI::IsMember({"explicit", "frenkel-kac", "geometric"}));
  add_format_flags(mat, common);

  std::vector<std::string> argv_store{"affine-fock"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (cq->parsed()) return cmd_core_quotient(l, lambda_text, inverse, c_text, q_text, common, out);
    if (act->parsed()) {
      const AffineGenerator g = parse_generator(gen_text);
      const Partition lambda = parse_partition(parse_json_text(lambda_text));
      if (window < 0) window = lambda.size() + std::max(1, std::abs(degree_shift(g))) + 1;
      emit_vector(out, act_on(g, lambda, l, side, window), common);
      return kOk;
    }
    if (ver->parsed()) return cmd_verify(suite, l, degree, charge_bound, mutate, common, out);
    if (mat->parsed()) return cmd_matrix(parse_generator(gen_text), l, degree, side, common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ConstraintError& e) {
    err << "constraint violation: " << e.what() << '\n';
    return kConstraint;
  } catch (const WindowOverflow& e) {
    err << "window overflow: " << e.what() << '\n';
    return kWindowOverflow;
  }
  return kParseError;
}

}  // namespace affine_fock::cli
