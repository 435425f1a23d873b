#include "antisym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "antisym/embedding.hpp"
#include "antisym/errors.hpp"
#include "antisym/expression.hpp"
#include "antisym/json.hpp"
#include "antisym/verify.hpp"

namespace antisym::cli {

namespace {

using nlohmann::json;

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  std::size_t n_max = 5;
  std::size_t max_index = 8;
  bool json = false;
  bool approx = false;
  bool enclose = false;
  std::uint64_t min_hits = 50;
  std::vector<std::string> labels;
  std::vector<std::string> fresh_labels;
  std::string x_text;
  std::string s_text;
};

std::vector<Label> parse_labels(const std::vector<std::string>& bits) {
  std::vector<Label> out;
  for (const auto& b : bits) out.push_back(Label::parse(b));
  return out;
}

std::string approx_string(const Rational& value) {
  std::ostringstream os;
  os << std::setprecision(17) << value.approx();
  return os.str();
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.campaign << ": pairs=" << r.pairs_checked << " violations=" << r.violations.size()
     << " elapsed_ms=" << std::fixed << std::setprecision(1) << r.elapsed_ms << (r.pass() ? " PASS" : " FAIL");
  return os.str();
}

void print_report_text(const VerificationReport& r, std::ostream& out) {
  out << report_line(r) << "\n";
  for (const auto& [key, value] : r.counts) out << "  " << key << " = " << value << "\n";
  bool any_branch = false;
  for (auto b : kAllBranches) any_branch = any_branch || r.branch_count(b) > 0;
  if (any_branch) {
    for (auto b : kAllBranches) out << "  branch " << to_string(b) << " = " << r.branch_count(b) << "\n";
  }
  for (const auto& f : r.exceptional) out << "  exceptional s = " << f.s << "  distance " << f.distance << "  gap " << f.gap << "\n";
  for (const auto& v : r.violations) {
    out << "  VIOLATION " << v.check << " x = " << v.x << " s = " << v.s;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

EmbeddingConfig embedding_config(const Options& o) {
  EmbeddingConfig c;
  c.n_max = o.n_max;
  c.validate();
  return c;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const HamelVector x = parse_expression(o.x_text);
  const CodePoint point = encode(x);
  if (o.json) {
    out << json{{"x", to_string(x)}, {"n_x", n_of(x)}, {"delta", delta(x).to_string()}, {"code_point", to_json(point)}}.dump()
        << "\n";
  } else {
    out << to_json(point).dump(2) << "\n";
  }
  return kPass;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const HamelVector x = parse_expression(o.x_text);
  const TernaryFraction value = f_ternary(x, embedding_config(o));
  const Rational exact = value.to_rational();
  if (o.json) {
    json j{{"x", to_string(x)}, {"n_x", n_of(x)}, {"f", exact.to_string()}, {"f_factored", value.to_factored_string()}};
    if (o.approx) j["approx_inexact"] = approx_string(exact);
    out << j.dump() << "\n";
  } else {
    out << value.to_factored_string() << "\n";
    if (o.approx) out << "approx " << approx_string(exact) << " (inexact)\n";
  }
  return kPass;
}

int cmd_gap(const Options& o, std::ostream& out) {
  const EmbeddingConfig config = embedding_config(o);
  const HamelVector x = parse_expression(o.x_text);
  const HamelVector s = parse_expression(o.s_text);
  const std::uint64_t eps = epsilon_exponent(x, config);
  const bool member = in_z_set(x, s);
  const LazyEncoding minus(x - s);
  const LazyEncoding plus(x + s);
  const Rational dist = distance_from_index(first_differing_coordinate(minus, plus));
  const Rational del = delta(x);

  std::string gap_text;
  bool reaches = false;
  bool exact = true;
  try {
    TernaryFraction g = TernaryFraction::difference(f_ternary(x + s, config), f_ternary(x - s, config));
    g.numerator = abs(g.numerator);
    gap_text = g.to_factored_string();
    reaches = g.compare_abs_to_pow3_inverse(eps) >= 0;
  } catch (const CapacityError&) {
    if (!o.enclose) throw;
    exact = false;
    const GapEnclosure e = embed_gap_enclosure(minus, plus, block_offset(config.n_max + 1));
    gap_text = "[" + e.lower_ternary().to_factored_string() + ", " + e.upper_ternary().to_factored_string() + "]";
    reaches = e.lower_reaches_pow3_inverse(eps);
  }
  // Outside Z_x both separations are guaranteed.
  const bool pass = member || (reaches && dist >= del);

  if (o.json) {
    out << json{{"x", to_string(x)},       {"s", to_string(s)},
                {"gap", gap_text},         {"gap_exact", exact},
                {"epsilon", "1/3^" + std::to_string(eps)},
                {"gap_reaches_epsilon", reaches},
                {"distance", dist.to_string()},
                {"delta", del.to_string()}, {"in_z_set", member},
                {"pass", pass}}
               .dump()
        << "\n";
  } else {
    out << "gap " << (exact ? "= " : "in ") << gap_text << "\n"
        << "epsilon = 1/3^" << eps << "\n"
        << "gap >= epsilon: " << (reaches ? "true" : "false") << "\n"
        << "distance = " << dist << "\n"
        << "delta = " << del << "\n"
        << "s in Z_x: " << (member ? "true" : "false") << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_zx(const Options& o, std::ostream& out) {
  const EmbeddingConfig config = embedding_config(o);
  const HamelVector x = parse_expression(o.x_text);
  const std::vector<HamelVector> zx = z_set(x);
  const Rational del = delta(x);
  const bool pass = zx.size() == z_set_size(x);
  json elements = json::array();
  for (const auto& s : zx) {
    const LazyEncoding minus(x - s);
    const LazyEncoding plus(x + s);
    const Rational dist = distance_from_index(first_differing_coordinate(minus, plus));
    const std::string g = describe_gap(x, s, config);
    if (o.json) {
      elements.push_back({{"s", to_string(s)}, {"distance", dist.to_string()}, {"gap", g}, {"below_delta", dist < del}});
    } else {
      out << to_string(s) << "\t distance " << dist << "\t gap " << g << (dist < del ? "\t (below delta)" : "") << "\n";
    }
  }
  if (o.json) {
    out << json{{"x", to_string(x)}, {"n_x", n_of(x)}, {"size", zx.size()}, {"elements", elements}, {"pass", pass}}.dump()
        << "\n";
  } else {
    out << zx.size() << " elements (n_x = " << n_of(x) << ", delta = " << del << ")\n";
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_scan(const Options& o, std::ostream& out) {
  ContainmentConfig config;
  config.sample_count = o.samples;
  config.seed = o.seed;
  config.max_index = o.max_index;
  config.embedding = embedding_config(o);
  if (!o.fresh_labels.empty()) config.fresh_labels = parse_labels(o.fresh_labels);
  const VerificationReport report = containment_campaign(parse_expression(o.x_text), config);
  if (o.json) {
    out << to_json(report).dump() << "\n";
  } else {
    print_report_text(report, out);
  }
  return report.pass() ? kPass : kCheckFailed;
}

std::vector<Label> labels_or(const Options& o, std::initializer_list<const char*> fallback) {
  if (!o.labels.empty()) return parse_labels(o.labels);
  std::vector<Label> out;
  for (const char* b : fallback) out.push_back(Label::parse(b));
  return out;
}

int emit_reports(const Options& o, const std::vector<VerificationReport>& reports, bool pass, json extra,
                 std::ostream& out) {
  if (o.json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    extra["reports"] = std::move(list);
    extra["pass"] = pass;
    out << extra.dump() << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r, out);
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<VerificationReport> reports;
  reports.push_back(exhaustive_lemma_check(labels_or(o, {"", "1"}), 5));
  reports.push_back(exhaustive_lemma_check({Label::parse(""), Label::parse("01"), Label::parse("1")}, 4));
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  return emit_reports(o, reports, pass, json::object(), out);
}

int cmd_cases(const Options& o, std::ostream& out) {
  std::vector<VerificationReport> reports;
  reports.push_back(exhaustive_lemma_check({Label::parse(""), Label::parse("1")}, 5));
  reports.push_back(random_lemma_campaign(labels_or(o, {"", "000000001", "1"}), o.max_index, o.samples, o.seed));
  VerificationReport total;
  for (const auto& r : reports) total.merge(r);
  bool covered = true;
  json histogram = json::object();
  for (auto b : kAllBranches) {
    histogram[std::string(to_string(b))] = total.branch_count(b);
    covered = covered && total.branch_count(b) >= o.min_hits;
  }
  const bool pass = total.pass() && covered;
  if (!o.json) {
    for (auto b : kAllBranches) out << to_string(b) << " " << total.branch_count(b) << "\n";
    out << "coverage >= " << o.min_hits << " per branch: " << (covered ? "yes" : "no") << "\n";
  }
  return emit_reports(o, reports, pass, json{{"branch_histogram", histogram}, {"min_hits", o.min_hits}}, out);
}

int fail_with(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& message,
              std::optional<std::size_t> position = std::nullopt) {
  json e{{"kind", kind}, {"message", message}};
  if (position) e["position"] = *position;
  out << json{{"error", e}}.dump() << "\n";
  err << "error: " << message << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact evaluation and verification of a uniformly antisymmetric function on symbolic reals", "antisym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--samples", o.samples, "Random samples or pairs");
  app.add_option("--n-max", o.n_max, "Highest coordinate the embedding materializes")->check(CLI::Range(0, 18));
  app.add_option("--max-index", o.max_index, "Coefficients drawn from q_0 .. q_{max-1}")->check(CLI::Range(2, 4096));
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--approx", o.approx, "Add an inexact decimal preview");

  auto* encode_cmd = app.add_subcommand("encode", "Print the code point g(x)");
  encode_cmd->add_option("x", o.x_text, "Expression")->required();
  auto* eval_cmd = app.add_subcommand("eval", "Print f(x) exactly");
  eval_cmd->add_option("x", o.x_text, "Expression")->required();
  auto* gap_cmd = app.add_subcommand("gap", "Print |f(x+s) - f(x-s)| and compare it with epsilon(x)");
  gap_cmd->add_option("x", o.x_text, "Expression")->required();
  gap_cmd->add_option("s", o.s_text, "Expression")->required();
  gap_cmd->add_flag("--enclose", o.enclose, "Fall back to a certified enclosure past n_max");
  auto* zx_cmd = app.add_subcommand("zx", "List Z_x with distances and gaps");
  zx_cmd->add_option("x", o.x_text, "Expression")->required();
  auto* scan_cmd = app.add_subcommand("scan", "Run the containment campaign around x");
  scan_cmd->add_option("x", o.x_text, "Expression")->required();
  scan_cmd->add_option("--fresh-label", o.fresh_labels, "Extra labels for sampled s (repeatable)");
  auto* selftest_cmd = app.add_subcommand("selftest", "Exhaustive lemma check on built-in universes");
  selftest_cmd->add_option("--label", o.labels, "Universe label (repeatable)");
  auto* cases_cmd = app.add_subcommand("cases", "Branch coverage of the lemma's case analysis");
  cases_cmd->add_option("--label", o.labels, "Label for the random campaign (repeatable)");
  cases_cmd->add_option("--min-hits", o.min_hits, "Required hits per branch");

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> handlers{
      {encode_cmd, cmd_encode}, {eval_cmd, cmd_eval},         {gap_cmd, cmd_gap},    {zx_cmd, cmd_zx},
      {scan_cmd, cmd_scan},     {selftest_cmd, cmd_selftest}, {cases_cmd, cmd_cases}};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return fail_with(out, err, kUsageError, "usage", e.what());
  }

  try {
    for (const auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) return handler(o, out);
    }
  } catch (const ParseError& e) {
    return fail_with(out, err, kUsageError, "parse", e.what(), e.position());
  } catch (const PreconditionError& e) {
    return fail_with(out, err, kUsageError, "precondition", e.what());
  } catch (const CapacityError& e) {
    return fail_with(out, err, kCapacityError, "capacity", e.what());
  }
  return kUsageError;
}

}  // namespace antisym::cli
