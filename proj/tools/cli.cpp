#include "cli.hpp"

#include <atomic>
#include <thread>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "a1deg/bezout.hpp"
#include "a1deg/local_degree.hpp"
#include "a1deg/modular.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/serialize.hpp"

namespace a1deg::cli {

namespace {

struct Config {
  bool json = false;
  bool ascii = false;
  std::string field = "Q";
};

class Printer {
 public:
  Printer(std::ostream& out, const Config& cfg) : out_(out), cfg_(cfg) {}
  std::string show(const GWClass& x) const { return x.display(cfg_.ascii); }
  Json gw(const GWClass& x) const { return gw_to_json(x, cfg_.ascii); }
  void emit(const Json& j) const { out_ << j.dump(2) << "\n"; }
  std::ostream& text() const { return out_; }
  bool json() const { return cfg_.json; }
  bool ascii() const { return cfg_.ascii; }

 private:
  std::ostream& out_;
  const Config& cfg_;
};

std::string matrix_row(const std::vector<Rational>& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + row[i].get_str();
  return s + "]";
}

SymmetricForm<ModP> reduce_form(const SymmetricForm<Rational>& m, std::int64_t p) {
  Matrix<ModP> r;
  for (const auto& row : m.entries()) {
    std::vector<ModP> v;
    for (const auto& x : row) v.push_back(ModP::from_rational(x, p));
    r.push_back(std::move(v));
  }
  return SymmetricForm<ModP>(std::move(r));
}

GWClass class_over(const SymmetricForm<Rational>& m, const BaseField& field) {
  if (field.is_rational()) return diagonalize(m);
  if (m.size() == 0) return GWClass(field);
  return diagonalize(reduce_form(m, field.characteristic()));
}

// First admissible fiber among 0, 1, -1, 2, -2, ...
Rational choose_fiber(const RationalMap& m) {
  for (long k = 0; k <= 100; ++k) {
    for (long q : {k, -k}) {
      if (k == 0 && q != 0) continue;
      QPoly h = m.numerator() - m.denominator() * Rational(q);
      if (h.degree() == m.degree() && gcd(h, m.denominator()).degree() == 0) return Rational(q);
    }
  }
  throw DomainError("no admissible fiber found among small integers; pass --fiber");
}

void cmd_bezout(const Printer& pr, const BaseField& field, const std::string& text) {
  RationalMap m = RationalMap::parse(text);
  SymmetricForm<Rational> b = bezout_matrix(m);
  GWClass c = class_over(b, field);
  if (pr.json()) {
    pr.emit(Json{{"map", m.to_string()}, {"matrix", matrix_to_json(b.entries())}, {"class", pr.gw(c)}});
    return;
  }
  pr.text() << "map: " << m.to_string() << "\n";
  pr.text() << "bezout matrix:\n";
  for (const auto& row : b.entries()) pr.text() << "  " << matrix_row(row) << "\n";
  pr.text() << "class: " << pr.show(c) << "\n";
}

void cmd_degree(const Printer& pr, const BaseField& field, const std::string& text, const std::string& via,
                const std::optional<std::string>& fiber) {
  RationalMap m = RationalMap::parse(text);
  if (via == "bezout") {
    if (fiber) throw DomainError("--fiber only applies with --via local");
    GWClass c = class_over(bezout_matrix(m), field);
    if (pr.json()) {
      pr.emit(Json{{"map", m.to_string()}, {"via", "bezout"}, {"class", pr.gw(c)}});
    } else {
      pr.text() << pr.show(c) << "\n";
    }
    return;
  }
  if (!field.is_rational()) throw DomainError("--via local is implemented over Q only");
  Rational q = fiber ? parse_rational(*fiber) : choose_fiber(m);
  LocalDegreeResult r = local_degrees_of_rational_map(m, q);
  if (pr.json()) {
    Json j = local_degrees_to_json(r, pr.ascii());
    pr.emit(Json{{"map", m.to_string()}, {"via", "local"}, {"fiber", rational_to_json(q)}, {"class", j["total"]},
                 {"points", j["points"]}});
    return;
  }
  pr.text() << pr.show(r.total) << "\n";
  pr.text() << "fiber over " << q.get_str() << ":\n";
  for (const auto& p : r.points) {
    pr.text() << "  " << p.point.to_string() << "  e=" << p.multiplicity << "  " << pr.show(p.index) << "\n";
  }
}

void cmd_ekl(const Printer& pr, const BaseField& field, const std::string& system, const std::string& vars_text,
             const std::string& normalization) {
  std::vector<std::string> vars = split_list(vars_text, ',');
  std::vector<MultiPoly<Rational>> f;
  for (const std::string& s : split_list(system, ';')) f.push_back(parse_poly(s, vars));
  if (f.size() != vars.size()) {
    throw DomainError("ekl: " + std::to_string(f.size()) + " equations in " + std::to_string(vars.size()) + " variables");
  }
  SocleNormalization norm = SocleNormalization::DividedDifferences;
  if (normalization == "jacobian") norm = SocleNormalization::Jacobian;
  EKLResult r{GWClass(field), 0};
  if (field.is_rational()) {
    r = ekl_multivariate_at_origin(f, norm);
  } else {
    const std::int64_t p = field.characteristic();
    std::vector<MultiPoly<ModP>> g;
    for (const auto& fi : f) {
      g.push_back(map_coefficients(fi, ModP(0, p), [p](const Rational& c) { return ModP::from_rational(c, p); }));
    }
    r = ekl_multivariate_at_origin(g, norm);
  }
  if (pr.json()) {
    Json sys = Json::array();
    for (const auto& fi : f) sys.push_back(fi.to_string());
    pr.emit(Json{{"system", sys}, {"vars", vars}, {"normalization", normalization}, {"dimension", r.dimension},
                 {"class", pr.gw(r.cls)}});
    return;
  }
  pr.text() << "class: " << pr.show(r.cls) << "\n";
  pr.text() << "dimension: " << r.dimension << "\n";
}

void cmd_trace(const Printer& pr, const BaseField& field, const std::string& minpoly, const std::string& gram_text) {
  if (!field.is_rational()) throw DomainError("trace transfer is implemented over Q only");
  std::vector<std::string> ids = identifiers_in(minpoly);
  if (ids.size() != 1) throw ParseError("the minimal polynomial must use exactly one variable", 0);
  FieldPtr L = NumberField::make(parse_unipoly(minpoly, ids[0]), ids[0]);
  Matrix<NFElement> gram;
  for (const std::string& row : split_list(gram_text, ';')) {
    std::vector<NFElement> r;
    for (const std::string& e : split_list(row, ',')) r.emplace_back(L, parse_unipoly(e, ids[0]));
    gram.push_back(std::move(r));
  }
  GWClass c = transfer_trace(L, gram);
  if (pr.json()) {
    pr.emit(Json{{"minpoly", L->minpoly().with_var(ids[0]).to_string()}, {"degree", L->degree()}, {"class", pr.gw(c)}});
    return;
  }
  pr.text() << "class: " << pr.show(c) << "\n";
  pr.text() << "rank: " << c.rank() << "\n";
}

std::string report_text(const Printer& pr, const ModularCoverReport& r) {
  std::ostringstream os;
  os << to_string(r.family) << "(" << r.level << "): degree " << r.degree.get_str() << ", profile ";
  if (r.profile.all_double) {
    os << "all_double";
  } else {
    os << "exceptional (" << r.profile.unramified_count << " unramified)";
  }
  if (r.a1_degree) {
    os << ", A1 degree " << pr.show(*r.a1_degree);
  } else if (r.partial) {
    os << ", A1 degree " << pr.show(r.partial->hyperbolic_part) << " + (" << r.partial->unresolved_points
       << " unresolved points)";
  } else {
    os << ", A1 degree unavailable";
  }
  os << "\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like A..B", 0);
  try {
    std::size_t used_a = 0, used_b = 0;
    long a = std::stol(text.substr(0, dots), &used_a);
    long b = std::stol(text.substr(dots + 2), &used_b);
    if (used_a != dots || used_b != text.size() - dots - 2) throw std::invalid_argument("trailing");
    if (a > b) throw ParseError("empty range " + text, 0);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParseError("invalid range '" + text + "'", 0);
  }
}

int cmd_modular(const Printer& pr, const std::string& family_text, std::optional<long> level,
                const std::optional<std::string>& range) {
  CoveringFamily family = parse_family(family_text);
  if (level.has_value() == range.has_value()) throw ParseError("give exactly one of --level and --range", 0);
  if (level) {
    ModularCoverReport r = a1_degree_modular(family, *level);
    if (pr.json()) {
      pr.emit(report_to_json(r, pr.ascii()));
    } else {
      pr.text() << report_text(pr, r);
    }
    return 0;
  }
  auto [a, b] = parse_range(*range);
  if (b - a > 100000) throw DomainError("range too long (at most 100000 levels)");
  // Workers claim levels from a shared counter; results land in level order.
  struct Item {
    std::optional<ModularCoverReport> report;
    std::string error;
  };
  std::vector<Item> items(static_cast<std::size_t>(b - a + 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        items[i].report = a1_degree_modular(family, a + static_cast<long>(i));
      } catch (const DomainError& e) {
        items[i].error = e.what();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(items.size(), std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  Json all = Json::array();
  long n = a;
  for (const Item& it : items) {
    if (pr.json()) {
      all.push_back(it.report ? report_to_json(*it.report, pr.ascii())
                              : Json{{"family", to_string(family)}, {"N", n}, {"error", it.error}});
    } else if (it.report) {
      pr.text() << report_text(pr, *it.report);
    } else {
      pr.text() << to_string(family) << "(" << n << "): error: " << it.error << "\n";
    }
    ++n;
  }
  if (pr.json()) pr.emit(all);
  return 0;
}

void cmd_catalog(const Printer& pr, bool check) {
  Json entries = Json::array();
  for (const auto& e : hauptmodul_catalog()) {
    GWClass c = global_a1_degree(e.map);
    if (pr.json()) {
      entries.push_back(Json{{"family", to_string(e.family)},
                             {"N", e.level},
                             {"label", e.label},
                             {"map", e.map.to_string()},
                             {"source", e.source},
                             {"degree", e.map.degree()},
                             {"class", pr.gw(c)}});
    } else {
      pr.text() << to_string(e.family) << "(" << e.level << ") " << e.label << ": " << e.map.to_string() << "  degree "
                << e.map.degree() << "  class " << pr.show(c) << "\n";
    }
  }
  if (!check) {
    if (pr.json()) pr.emit(Json{{"entries", entries}});
    return;
  }
  Json checks = Json::array();
  for (long n : {2L, 3L, 5L}) {
    GenusZeroCrossCheck c = cross_check_genus0(n);
    const HauptmodulEntry* standard = nullptr;
    for (const auto& e : hauptmodul_catalog()) {
      if (e.level == n && e.label == "standard") standard = &e;
    }
    RationalMap w = atkin_lehner_involution(n);
    GWClass wc = global_a1_degree(w);
    GWClass twisted = global_a1_degree(compose_with_fractional_linear(standard->map, w));
    bool al = twisted == wc * c.bezout;
    if (pr.json()) {
      Json j = cross_check_to_json(c, pr.ascii());
      j["atkin_lehner"] = Json{{"involution", w.to_string()}, {"class", pr.gw(wc)}, {"composed_class", pr.gw(twisted)},
                               {"twist_law_holds", al}};
      checks.push_back(j);
      continue;
    }
    pr.text() << "cross-check X0(" << n << "): " << (c.agrees ? "agrees" : "does not agree") << "\n";
    pr.text() << "  bezout class " << pr.show(c.bezout) << "\n";
    for (const auto& p : c.fiber.points) {
      pr.text() << "  over 1728: " << p.point.to_string() << "  e=" << p.multiplicity << "  " << pr.show(p.index) << "\n";
    }
    for (const auto& note : c.notes) pr.text() << "  note: " << note << "\n";
    pr.text() << "  atkin-lehner " << w.to_string() << ": class " << pr.show(wc) << ", composed "
              << pr.show(twisted) << (al ? " (twist law holds)" : " (twist law fails)") << "\n";
  }
  X011Report x = verify_x011(x011_printed_data());
  if (pr.json()) {
    pr.emit(Json{{"entries", entries}, {"cross_checks", checks}, {"x0_11", x011_to_json(x, pr.ascii())}});
    return;
  }
  pr.text() << "X0(11): proportional " << (x.proportional ? "yes" : "no");
  if (x.lambda) pr.text() << ", lambda " << x.lambda->get_str() << " (printed " << x.expected_lambda.get_str() << ")";
  pr.text() << ", alpha squarefree " << (x.alpha_squarefree ? "yes" : "no") << ", gcd(alpha, c1) = 1 "
            << (x.alpha_coprime_to_c1 ? "yes" : "no") << "\n";
  if (!x.proportional) pr.text() << "  residual: " << x.residual.to_string() << "\n";
  pr.text() << "  conclusion: " << (x.conclusion ? pr.show(*x.conclusion) : std::string("none")) << "\n";
}

void cmd_gw_simplify(const Printer& pr, const BaseField& field, const std::string& diagonal) {
  std::vector<Rational> entries;
  for (const std::string& s : split_list(diagonal, ',')) entries.push_back(parse_rational(s));
  GWClass x(field, entries);
  Json j = pr.gw(x);
  if (pr.json()) {
    pr.emit(j);
    return;
  }
  pr.text() << "display: " << j["display"].get<std::string>() << "\n";
  pr.text() << "rank: " << x.rank() << "\n";
  if (field.is_rational()) pr.text() << "signature: " << x.signature() << "\n";
  pr.text() << "discriminant: " << x.discriminant().get_str() << "\n";
  if (field.is_rational()) {
    pr.text() << "hasse:";
    for (const auto& [p, e] : x.hasse()) pr.text() << " " << p.get_str() << ":" << (e > 0 ? "+1" : "-1");
    pr.text() << "\n";
  }
  auto m = x.hyperbolic_multiple();
  pr.text() << "hyperbolic_multiple: " << (m ? std::to_string(*m) : "none") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact A1 degrees of rational maps, EKL classes and modular covering maps", "a1deg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_flag("--ascii", cfg.ascii, "ASCII brackets in class displays");
  app.add_option("--field", cfg.field, "Base field: Q or Fp:<p>");

  std::string map_text, via = "bezout", system, vars, normalization = "socle", minpoly, gram, family = "x0",
                        diagonal;
  std::optional<std::string> fiber, range;
  std::optional<long> level;
  bool check = false;

  auto* bez = app.add_subcommand("bezout", "Bezout matrix and class of F/G");
  bez->add_option("--map", map_text, "\"F/G\"")->required();

  auto* deg = app.add_subcommand("degree", "Global A1 degree");
  deg->require_subcommand(1);
  auto* rmap = deg->add_subcommand("rational-map", "Degree of a rational map P^1 -> P^1");
  rmap->add_option("--map", map_text, "\"F/G\"")->required();
  rmap->add_option("--via", via, "bezout or local")->check(CLI::IsMember({"bezout", "local"}));
  rmap->add_option("--fiber", fiber, "Rational fiber for the local route");

  auto* ekl = app.add_subcommand("ekl", "EKL class of a system at the origin");
  ekl->add_option("--system", system, "\"f1;f2;...\"")->required();
  ekl->add_option("--vars", vars, "\"x,y,...\"")->required();
  ekl->add_option("--normalization", normalization, "socle or jacobian")
      ->check(CLI::IsMember({"socle", "jacobian"}));

  auto* tr = app.add_subcommand("trace", "Trace transfer of a form over a number field");
  tr->add_option("--minpoly", minpoly, "Minimal polynomial of the generator")->required();
  tr->add_option("--gram", gram, "Rows separated by ';', entries by ','")->required();

  auto* mod = app.add_subcommand("modular", "Covering maps of modular curves");
  mod->add_option("--family", family, "x0, x1 or full");
  mod->add_option("--level", level, "Level N");
  mod->add_option("--range", range, "Levels A..B");

  auto* cat = app.add_subcommand("catalog", "Hauptmodul catalog");
  cat->add_flag("--check", check, "Run the genus-0 cross-checks and the X0(11) verification");

  auto* gw = app.add_subcommand("gw", "Grothendieck-Witt utilities");
  gw->require_subcommand(1);
  auto* simp = gw->add_subcommand("simplify", "Canonical form and invariants of a diagonal class");
  simp->add_option("--diagonal", diagonal, "\"a1,a2,...\"")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Printer pr(out, cfg);
    BaseField field = BaseField::rationals();
    try {
      field = BaseField::parse(cfg.field);
    } catch (const DomainError& e) {
      throw ParseError(std::string("--field: ") + e.what(), 0);
    }
    if (bez->parsed()) {
      cmd_bezout(pr, field, map_text);
    } else if (rmap->parsed()) {
      cmd_degree(pr, field, map_text, via, fiber);
    } else if (ekl->parsed()) {
      cmd_ekl(pr, field, system, vars, normalization);
    } else if (tr->parsed()) {
      cmd_trace(pr, field, minpoly, gram);
    } else if (mod->parsed()) {
      return cmd_modular(pr, family, level, range);
    } else if (cat->parsed()) {
      cmd_catalog(pr, check);
    } else if (simp->parsed()) {
      cmd_gw_simplify(pr, field, diagonal);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    if (cfg.json) {
      out << Json{{"error", e.what()}}.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace a1deg::cli
