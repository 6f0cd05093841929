#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orthocyc/orthocyc.hpp"

using namespace orthocyc;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Flags {
  long q = 2;
  int dim = 4;
  int order = 12;
  std::string u = "1/2";
  std::uint64_t seed = 1;
  std::string variant = "R";
  std::string format = "text";
  std::string out;
  long count = 10;
  std::string suite = "all";
  int max_dim = 6;
  std::string family = "sp";
  std::string kind = "all";
  std::size_t cap = oracle::kDefaultElementCap;
};

// A result table; every cell is already rendered.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

void render(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json j;
    j["command"] = t.command;
    j["params"] = Json::object();
    for (const auto& [k, v] : t.params) j["params"][k] = v;
    j["rows"] = Json::array();
    for (const auto& row : t.rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) r[t.columns[i]] = row[i];
      j["rows"].push_back(r);
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  } else {
    os << "#";
    for (const auto& [k, v] : t.params) os << " " << k << "=" << v;
    os << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << cells[i];
        if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size() + 2, ' ');
      }
      os << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

std::string r(const Rational& x) { return format_rational(x); }

void require_q(long q) {
  if (!is_even_prime_power(q)) throw UsageError("--q must be a power of 2, got " + std::to_string(q));
}

void require_dim(int dim) {
  if (dim < 2 || dim % 2) throw UsageError("--dim must be a positive even integer");
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> names = {
      {"sp", Family::Sp},           {"oplus", Family::Oplus},          {"ominus", Family::Ominus},
      {"omegaplus", Family::OmegaPlus}, {"omegaminus", Family::OmegaMinus}, {"odd", Family::Odd}};
  auto it = names.find(s);
  if (it == names.end()) throw UsageError("unknown family '" + s + "'");
  return it->second;
}

Table proportions(const Flags& f) {
  require_q(f.q);
  require_dim(f.dim);
  Table t{"proportions", {{"q", std::to_string(f.q)}, {"dim", std::to_string(f.dim)}},
          {"data", "p_plus", "p_minus", "omega_plus", "omega_minus"}, {}};
  FqField F(f.q);
  IrreducibleCatalog cat(F);
  for_each_o_data(cat, f.dim, [&](const RcfData& d) {
    auto p = class_proportions(F, d);
    t.rows.push_back({to_string(d), r(p.p_plus), r(p.p_minus), r(omega_class_proportion(F, d, 1)),
                      r(omega_class_proportion(F, d, -1))});
  });
  return t;
}

Table fixed_space(const Flags& f) {
  require_q(f.q);
  require_dim(f.dim);
  static const std::map<std::string, FixedSpaceKind> kinds = {{"all", FixedSpaceKind::All},
                                                             {"unipotent", FixedSpaceKind::Unipotent},
                                                             {"omega", FixedSpaceKind::Omega},
                                                             {"omega-unipotent", FixedSpaceKind::OmegaUnipotent}};
  auto it = kinds.find(f.kind);
  if (it == kinds.end()) throw UsageError("unknown --kind '" + f.kind + "'");
  Table t{"fixed-space", {{"q", std::to_string(f.q)}, {"dim", std::to_string(f.dim)}, {"kind", f.kind}},
          {"k", "p_plus", "p_minus"}, {}};
  for (const auto& row : fixed_space_table(f.dim, f.q, it->second).rows)
    t.rows.push_back({std::to_string(row.k), r(row.p_plus), r(row.p_minus)});
  return t;
}

Table unipotent(const Flags& f) {
  require_q(f.q);
  require_dim(f.dim);
  Table t{"unipotent",
          {{"q", std::to_string(f.q)},
           {"dim", std::to_string(f.dim)},
           {"count_plus", unip_count(1, f.dim, f.q).get_str()},
           {"count_minus", unip_count(-1, f.dim, f.q).get_str()}},
          {"jordan_type", "p_sum", "p_diff", "sp_classes", "oplus_classes", "ominus_classes"},
          {}};
  for (const auto& lambda : iter_partitions(f.dim, odd_parts_even_mult))
    t.rows.push_back({to_string(lambda), r(p_sum_unipotent(lambda, f.q)), r(p_diff_unipotent(lambda, f.q)),
                      std::to_string(classes_of_type(lambda, Context::Sp).size()),
                      std::to_string(classes_of_type(lambda, Context::Oplus).size()),
                      std::to_string(classes_of_type(lambda, Context::Ominus).size())});
  return t;
}

Table cyclic(const Flags& f) {
  require_q(f.q);
  if (f.order < 2) throw UsageError("--order must be at least 2");
  Table t{"cyclic", {{"q", std::to_string(f.q)}, {"order", std::to_string(f.order)}}, {"dim", "c_plus", "c_minus"}, {}};
  for (int two_n = 2; two_n <= f.order; two_n += 2)
    t.rows.push_back({std::to_string(two_n), r(cyclic_proportion(1, two_n, f.q)), r(cyclic_proportion(-1, two_n, f.q))});
  return t;
}

Table classes(const Flags& f) {
  require_q(f.q);
  require_dim(f.dim);
  Family fam = parse_family(f.family);
  Context ctx = fam == Family::Sp ? Context::Sp : fam == Family::Oplus ? Context::Oplus : Context::Ominus;
  if (fam != Family::Sp && fam != Family::Oplus && fam != Family::Ominus)
    throw UsageError("classes supports --family sp, oplus or ominus");
  Table t{"classes", {{"q", std::to_string(f.q)}, {"dim", std::to_string(f.dim)}, {"family", f.family}},
          {"jordan_type", "decomposition", "signs", "weil_diff"}, {}};
  for (const auto& lambda : iter_partitions(f.dim, odd_parts_even_mult))
    for (const auto& label : classes_of_type(lambda, ctx))
      t.rows.push_back({to_string(lambda), to_string(label.decomposition), signs_string(label),
                        ctx == Context::Sp ? weil_diff_value(label, f.q).get_str() : ""});
  return t;
}

Table oracle_table(const Flags& f) {
  Family fam = parse_family(f.family);
  require_q(f.q);
  auto g = oracle::build_group({fam, f.dim, f.q}, f.cap);
  auto table = oracle::empirical_class_table(g);
  const bool orthogonal = fam == Family::Oplus || fam == Family::Ominus;
  const bool omega = fam == Family::OmegaPlus || fam == Family::OmegaMinus;
  const int eps = fam == Family::Oplus || fam == Family::OmegaPlus ? 1 : -1;
  Table t{"oracle",
          {{"q", std::to_string(f.q)}, {"dim", std::to_string(f.dim)}, {"family", f.family}, {"order", table.total.get_str()}},
          {"data", "count", "proportion", "formula"},
          {}};
  for (const auto& [d, c] : table.counts) {
    std::string formula;
    if (orthogonal) {
      auto p = class_proportions(g.F(), d);
      formula = r(eps > 0 ? p.p_plus : p.p_minus);
    } else if (omega) {
      formula = r(omega_class_proportion(g.F(), d, eps));
    }
    t.rows.push_back({to_string(d), c.get_str(), r(table.proportion(d)), formula});
  }
  return t;
}

Rational parse_u(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw UsageError("--u must be an exact rational like 1/2, got '" + s + "'");
  }
}

int sample_command(const Flags& f, std::ostream& os) {
  require_q(f.q);
  Rational u = parse_u(f.u);
  if (u <= 0 || u * u >= f.q) throw UsageError("--u must satisfy 0 < u < sqrt(q)");
  if (f.count < 0 || f.count > std::numeric_limits<int>::max()) throw UsageError("-n out of range");
  MeasureVariant v;
  try {
    v = parse_variant(f.variant);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  auto draws = sample(MeasureParams(u, f.q), v, f.seed, static_cast<int>(f.count));
  Table t{"sample",
          {{"q", std::to_string(f.q)}, {"u", r(u)}, {"variant", variant_name(v)}, {"seed", std::to_string(f.seed)},
           {"n", std::to_string(f.count)}},
          {"partition"},
          {}};
  if (f.format == "text") {
    for (const auto& p : draws) os << to_string(p) << "\n";
    return 0;
  }
  for (const auto& p : draws) t.rows.push_back({to_string(p)});
  render(t, f.format, os);
  return 0;
}

int verify_command(const Flags& f, std::ostream& os) {
  require_q(f.q);
  if (f.max_dim < 2 || f.max_dim % 2) throw UsageError("--max-dim must be a positive even integer");
  verify::Options o;
  o.q = f.q;
  o.max_dim = f.max_dim;
  o.seed = f.seed;
  o.samples = f.count;
  Table t{"verify",
          {{"suite", f.suite}, {"q", std::to_string(f.q)}, {"max_dim", std::to_string(f.max_dim)}},
          {"id", "criterion", "result", "checks", "detail"},
          {}};
  int failed = 0;
  for (const auto& res : verify::run_suite(f.suite, o)) {
    failed += !res.passed;
    t.rows.push_back({std::to_string(res.id), res.name, res.passed ? "PASS" : "FAIL", std::to_string(res.checks), res.detail});
  }
  render(t, f.format, os);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle indices of orthogonal groups in even characteristic"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* c) {
    c->add_option("--q", f.q, "field size, a power of 2");
    c->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", f.out, "write output to this file");
  };

  auto* prop = app.add_subcommand("proportions", "class proportions for every orthogonal data of a dimension");
  auto* fix = app.add_subcommand("fixed-space", "fixed-space dimension distribution");
  auto* unip = app.add_subcommand("unipotent", "unipotent proportions and class counts by Jordan type");
  auto* cyc = app.add_subcommand("cyclic", "cyclic proportions up to a dimension");
  auto* cls = app.add_subcommand("classes", "unipotent class labels");
  auto* smp = app.add_subcommand("sample", "draw partitions from a measure");
  auto* orc = app.add_subcommand("oracle", "enumerate a small group and tabulate its classes");
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  for (auto* c : {prop, fix, unip, cyc, cls, smp, orc, ver}) common(c);
  for (auto* c : {prop, fix, unip, cls, orc}) c->add_option("--dim", f.dim, "dimension");
  fix->add_option("--kind", f.kind, "all, unipotent, omega or omega-unipotent");
  cyc->add_option("--order", f.order, "largest dimension");
  cls->add_option("--family", f.family, "sp, oplus or ominus");
  orc->add_option("--family", f.family, "sp, oplus, ominus, omegaplus, omegaminus or odd");
  orc->add_option("--cap", f.cap, "element budget");
  smp->add_option("--u", f.u, "exact rational parameter");
  smp->add_option("--variant", f.variant, "R, Re or Ro");
  smp->add_option("--seed", f.seed, "random seed");
  smp->add_option("-n", f.count, "number of draws");
  ver->add_option("--suite", f.suite, "all, oracle, con, fixdim, unipdim, cyclic, classes, weil, series, measures, odd");
  ver->add_option("--max-dim", f.max_dim, "largest oracle dimension");
  ver->add_option("--seed", f.seed, "sampler seed");
  ver->add_option("-n", f.count, "sampler draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (ver->parsed() && ver->count("-n") == 0) f.count = verify::Options{}.samples;
  if (ver->parsed() && ver->count("--seed") == 0) f.seed = verify::Options{}.seed;

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) {
      std::cerr << "cannot open " << f.out << "\n";
      return 2;
    }
  }
  std::ostream& os = f.out.empty() ? std::cout : file;

  try {
    if (smp->parsed()) return sample_command(f, os);
    if (ver->parsed()) return verify_command(f, os);
    Table t;
    if (prop->parsed()) t = proportions(f);
    if (fix->parsed()) t = fixed_space(f);
    if (unip->parsed()) t = unipotent(f);
    if (cyc->parsed()) t = cyclic(f);
    if (cls->parsed()) t = classes(f);
    if (orc->parsed()) t = oracle_table(f);
    render(t, f.format, os);
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NormalizationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
