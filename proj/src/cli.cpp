#include "holweitz/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "holweitz/errors.hpp"

namespace holweitz::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Labels parse_weight(const std::string& text, const std::string& flag) {
  Labels out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, end - start);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
      throw UsageError(flag + ": expected comma-separated non-negative integers, got '" + text + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

struct Options {
  std::string holonomy, algebra, weight, left, right, bundle, form_class, format = "table", registry, fixtures;
  int degree = -1;
  bool quiet = false, bless = false;
};

ContextPtr context(const Options& o) {
  if (o.holonomy.empty()) throw UsageError("--holonomy is required");
  std::vector<RegistryRecord> extra;
  if (!o.registry.empty()) extra = load_registry(o.registry);
  return make_context(o.holonomy, extra);
}

RootSystemPtr algebra(const Options& o) {
  if (!o.algebra.empty() && !o.holonomy.empty()) throw UsageError("--algebra and --holonomy are exclusive");
  if (!o.algebra.empty()) return parse_root_system(o.algebra);
  if (!o.holonomy.empty()) return context(o)->root_system();
  throw UsageError("one of --algebra or --holonomy is required");
}

Irrep irrep(const RootSystemPtr& rs, const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  Labels labels = parse_weight(text, flag);
  if (static_cast<int>(labels.size()) != rs->rank())
    throw UsageError(flag + ": " + rs->name() + " needs " + std::to_string(rs->rank()) + " labels, got " +
                     std::to_string(labels.size()));
  return Irrep(rs, std::move(labels));
}

void emit(std::ostream& out, const Options& o, const Json& json, const std::string& table) {
  if (o.format == "json")
    out << json.dump(2) << '\n';
  else
    out << table;
}

int cmd_casimir(const Options& o, std::ostream& out) {
  if (!o.holonomy.empty() && o.algebra.empty()) {
    const auto ctx = context(o);
    const Irrep pi = irrep(ctx->root_system(), o.weight, "--weight");
    const Rational c = casimir_lambda2(*ctx, pi);
    emit(out, o, Json{{"value", c.str()}}, ctx->id() + " " + to_string(pi.highest_weight()) + "  " + c.str() + "\n");
    return 0;
  }
  const Irrep pi = irrep(algebra(o), o.weight, "--weight");
  const Rational c = casimir_base(pi);
  emit(out, o, Json{{"value", c.str()}}, to_string(pi) + "  " + c.str() + "\n");
  return 0;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Irrep pi = irrep(algebra(o), o.weight, "--weight");
  const auto d = dimension(pi);
  emit(out, o, Json{{"value", d}}, to_string(pi) + "  " + std::to_string(d) + "\n");
  return 0;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const auto rs = algebra(o);
  const Decomposition d = tensor(irrep(rs, o.left, "--left"), irrep(rs, o.right, "--right"));
  emit(out, o, to_json(d), render_table(d));
  return 0;
}

int cmd_exterior(const Options& o, std::ostream& out) {
  if (o.degree < 0) throw UsageError("--degree is required");
  if (o.weight.empty()) {
    const auto ctx = context(o);
    const Decomposition& d = ctx->form_space(o.degree);
    emit(out, o, to_json(d), render_table(d));
    return 0;
  }
  const Decomposition d = exterior_power(irrep(algebra(o), o.weight, "--weight"), o.degree);
  emit(out, o, to_json(d), render_table(d));
  return 0;
}

int cmd_weitzenboeck(const Options& o, std::ostream& out, const RenderStyle& style) {
  const auto ctx = context(o);
  const WeitzenboeckFormula f = conformal_weights(*ctx, irrep(ctx->root_system(), o.bundle, "--bundle"));
  Json j = to_json(f);
  if (o.quiet) j.erase("discrepancies");
  emit(out, o, j, render_table(*ctx, f, style));
  return 0;
}

FormClass form_class(const Options& o) {
  const auto c = parse_form_class(o.form_class);
  if (!c) throw UsageError("--class: expected twistor, killing or star-killing, got '" + o.form_class + "'");
  return *c;
}

int cmd_prove(const Options& o, std::ostream& out, const RenderStyle& style) {
  if (o.degree < 0) throw UsageError("--degree is required");
  const auto ctx = context(o);
  const FormClass c = form_class(o);
  if (!o.bundle.empty()) {
    const ComponentVerdict v = prove_component(*ctx, irrep(ctx->root_system(), o.bundle, "--bundle"), o.degree, c);
    DegreeReport r;
    r.context = ctx->id();
    r.degree = r.analyzed_degree = o.degree;
    r.form_class = r.analyzed_class = c;
    r.componentwise = true;
    r.components.push_back(v);
    r.verdict = v.verdict;
    emit(out, o, to_json(*ctx, r), render_table(*ctx, r, style));
    return 0;
  }
  const DegreeReport r = prove_degree(*ctx, o.degree, c);
  emit(out, o, to_json(*ctx, r), render_table(*ctx, r, style));
  return 0;
}

int cmd_theorem(const Options& o, std::ostream& out, const RenderStyle& style) {
  const auto ctx = context(o);
  const TheoremReport t = prove_theorems(*ctx);
  emit(out, o, to_json(*ctx, t), render_table(*ctx, t, style));
  return t.matches_claims ? 0 : 1;
}

std::filesystem::path fixture_dir(const Options& o) {
  if (!o.fixtures.empty()) return o.fixtures;
#ifdef HOLWEITZ_FIXTURE_DIR
  return HOLWEITZ_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

const std::vector<Labels>& paper_irreps(const std::string& ctx) {
  static const std::vector<Labels> g2{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}};
  static const std::vector<Labels> spin7{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {0, 0, 2}, {1, 0, 1},
                                         {1, 1, 0}, {0, 1, 1}, {0, 0, 3}, {2, 0, 1}, {1, 0, 2}};
  return ctx == "g2" ? g2 : spin7;
}

}  // namespace

std::map<std::string, Json> golden_corpus() {
  std::map<std::string, Json> corpus;
  Json casimirs, forms;
  for (const std::string id : {"g2", "spin7"}) {
    const auto ctx = make_context(id);
    Json rows = Json::array();
    for (const auto& w : paper_irreps(id)) {
      const Irrep pi = ctx->irrep(w);
      rows.push_back({{"weight", labels_json(w)},
                      {"dim", dimension(pi)},
                      {"casimir_base", casimir_base(pi).str()},
                      {"casimir_lambda2", casimir_lambda2(*ctx, pi).str()}});
    }
    casimirs[id] = std::move(rows);
    Json spaces = Json::array();
    for (int p = 0; p <= ctx->n(); ++p) spaces.push_back({{"degree", p}, {"summands", to_json(ctx->form_space(p))}});
    forms[id] = std::move(spaces);
    corpus["theorem_" + id + ".json"] = to_json(*ctx, prove_theorems(*ctx));
  }
  corpus["casimir.json"] = std::move(casimirs);
  corpus["forms.json"] = std::move(forms);

  Json formulas = Json::array();
  for (const auto& printed : printed_formulas()) {
    const auto ctx = make_context(printed.context);
    formulas.push_back(to_json(conformal_weights(*ctx, ctx->irrep(printed.bundle))));
  }
  corpus["weitzenboeck.json"] = std::move(formulas);
  return corpus;
}

int selftest(const std::filesystem::path& dir, std::ostream& out) {
  int failures = 0;
  for (const auto& [name, expected_now] : golden_corpus()) {
    const auto path = dir / name;
    std::ifstream in(path);
    if (!in) {
      out << "FAIL " << name << ": missing fixture " << path.string() << '\n';
      ++failures;
      continue;
    }
    Json stored;
    try {
      stored = Json::parse(in);
    } catch (const Json::parse_error& e) {
      out << "FAIL " << name << ": " << e.what() << '\n';
      ++failures;
      continue;
    }
    if (stored == expected_now) {
      out << "ok   " << name << '\n';
      continue;
    }
    ++failures;
    out << "FAIL " << name << " (patch from fixture to computed):\n" << Json::diff(stored, expected_now).dump(2) << '\n';
  }
  return failures;
}

void bless(const std::filesystem::path& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, doc] : golden_corpus()) {
    std::ofstream file(dir / name);
    file << doc.dump(2) << '\n';
    out << "wrote " << (dir / name).string() << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Conformal weights, Weitzenboeck formulas and parallelism proofs for G2 and Spin7 holonomy",
               "holweitz"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_ctx = [&](CLI::App* sub) {
    sub->add_option("--holonomy", o.holonomy, "g2, spin7 or so5..so10");
    sub->add_option("--registry", o.registry, "JSON file extending the q(R)-trivial registry");
  };

  auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalue");
  auto* dim = app.add_subcommand("dim", "Weyl dimension");
  auto* tens = app.add_subcommand("tensor", "Tensor product decomposition");
  auto* ext = app.add_subcommand("exterior", "Exterior power decomposition");
  auto* weitz = app.add_subcommand("weitzenboeck", "Conformal weights and Weitzenboeck formula");
  auto* prove = app.add_subcommand("prove", "Parallelism proof for one degree and form class");
  auto* theorem = app.add_subcommand("theorem", "Reproduce the parallelism theorem for a context");
  auto* self = app.add_subcommand("selftest", "Compare against the golden fixtures");

  for (auto* sub : {casimir, dim, tens, ext}) {
    sub->add_option("--algebra", o.algebra, "Root system, e.g. G2, B3, D4");
    add_ctx(sub);
    add_format(sub);
  }
  for (auto* sub : {casimir, dim, ext}) sub->add_option("--weight", o.weight, "Dynkin labels, e.g. 2,0");
  tens->add_option("--left", o.left, "Dynkin labels")->required();
  tens->add_option("--right", o.right, "Dynkin labels")->required();
  ext->add_option("--degree", o.degree, "p")->required();

  for (auto* sub : {weitz, prove, theorem}) {
    add_ctx(sub);
    sub->get_option("--holonomy")->required();
    add_format(sub);
  }
  weitz->add_option("--bundle", o.bundle, "Dynkin labels of E")->required();
  weitz->add_flag("--quiet", o.quiet, "Suppress discrepancy annotations");
  prove->add_option("--degree", o.degree, "p")->required();
  prove->add_option("--class", o.form_class, "twistor, killing or star-killing")->required();
  prove->add_option("--bundle", o.bundle, "Restrict to one component of Lambda^p");

  self->add_option("--fixtures", o.fixtures, "Fixture directory");
  self->add_flag("--bless", o.bless, "Regenerate the fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const RenderStyle style{color && o.format == "table", o.quiet};
  try {
    if (*casimir) return cmd_casimir(o, out);
    if (*dim) return cmd_dim(o, out);
    if (*tens) return cmd_tensor(o, out);
    if (*ext) return cmd_exterior(o, out);
    if (*weitz) return cmd_weitzenboeck(o, out, style);
    if (*prove) return cmd_prove(o, out, style);
    if (*theorem) return cmd_theorem(o, out, style);
    if (*self) {
      const auto dir = fixture_dir(o);
      if (o.bless) {
        bless(dir, out);
        return 0;
      }
      return selftest(dir, out) == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (o.format == "json")
      err << Json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << '\n';
    else
      err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace holweitz::cli
