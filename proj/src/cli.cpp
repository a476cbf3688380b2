#include "tubes/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>

#include "tubes/check.hpp"
#include "tubes/error.hpp"
#include "tubes/intersections.hpp"
#include "tubes/quiver.hpp"
#include "tubes/rep_oracle.hpp"
#include "tubes/svg.hpp"
#include "tubes/tube_model.hpp"

namespace tubes {

namespace {

using Json = nlohmann::ordered_json;

struct Request {
  std::string command;
  std::optional<std::int64_t> n;
  bool infinity = false;
  std::vector<std::string> arcs;
  std::vector<std::string> modules;
  bool cluster = false;
  bool explain = false;
  bool points = false;
  bool json = false;
  std::string format;
  std::string view = "cover";
  std::string output;
  std::int64_t max_len = 0;
  std::int64_t a_min = -3;
  std::int64_t a_max = 3;
  std::int64_t n_max = 6;
  std::int64_t len_max = 18;
  bool flip_signs = false;
};

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw TubeError(ErrorKind::InvalidArgument, "cannot parse \"" + whole + "\" as a pair a,b");
  }
  return value;
}

ArcU parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw TubeError(ErrorKind::InvalidArgument, "expected a,b but got \"" + text + "\"");
  return make_arc_u(parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text));
}

std::int64_t require_rank(const Request& req) {
  if (!req.n) throw TubeError(ErrorKind::InvalidArgument, "--n is required unless --infinity is given");
  if (*req.n < 1) throw TubeError(ErrorKind::InvalidArgument, "--n must be positive, got " + std::to_string(*req.n));
  return *req.n;
}

std::vector<ArcU> parse_all(const std::vector<std::string>& items, std::size_t lo, std::size_t hi,
                            const std::string& flag) {
  if (items.size() < lo || items.size() > hi) {
    throw TubeError(ErrorKind::InvalidArgument, "expected " + std::to_string(lo) +
                                                    (lo == hi ? "" : "-" + std::to_string(hi)) + " " + flag +
                                                    " values, got " + std::to_string(items.size()));
  }
  std::vector<ArcU> out;
  for (const auto& item : items) out.push_back(parse_pair(item));
  return out;
}

bool wants_json(const Request& req) { return req.json || req.format == "json"; }

Json report_json(const CrossingReport& r) {
  Json j;
  j["pos"] = r.pos;
  j["neg"] = r.neg;
  j["total"] = r.total;
  if (r.points) {
    j["points"] = Json::array();
    for (const auto& p : *r.points) {
      j["points"].push_back({{"x", p.x.str()}, {"y", p.y.str()}, {"sign", p.sign}, {"shift", p.shift_m}});
    }
  }
  return j;
}

void write_aligned(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << "\n";
}

int cmd_intersect(const Request& req, std::ostream& out) {
  const auto lifts = parse_all(req.arcs, 2, 2, "--arc");
  const std::int64_t n = require_rank(req);
  const ArcAnn alpha = project(lifts[0], n);
  const ArcAnn beta = project(lifts[1], n);
  CrossingReport report = itotal(n, alpha, beta);
  if (req.points) report.points = cover_count(n, alpha, beta, true).points;
  if (wants_json(req)) {
    out << report_json(report).dump() << "\n";
    return kExitOk;
  }
  write_aligned(out, {{"pos", std::to_string(report.pos)},
                      {"neg", std::to_string(report.neg)},
                      {"total", std::to_string(report.total)}});
  if (report.points) {
    for (const auto& p : *report.points) {
      out << "crossing x=" << p.x << " y=" << p.y << " sign=" << (p.sign > 0 ? "+" : "-") << " shift=" << p.shift_m
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_ext(const Request& req, std::ostream& out) {
  const auto labels = parse_all(req.modules, 2, 2, "--mod");
  std::int64_t ext = 0;
  Json explain;
  if (req.infinity) {
    const IndecModule m1(Rank::infinite(), labels[0].a(), labels[0].b());
    const IndecModule m2(Rank::infinite(), labels[1].a(), labels[1].b());
    ext = ext_dim_infinity(m1, m2, req.cluster);
    const CrossingReport r = strip_total(labels[0], labels[1]);
    explain = {{"alpha", labels[0].str()}, {"beta", labels[1].str()}, {"pos", r.pos}, {"neg", r.neg},
               {"total", r.total}, {"equals", req.cluster ? "total" : "neg"}};
  } else {
    const std::int64_t n = require_rank(req);
    const IndecModule m1(Rank::finite(n), labels[0].a(), labels[0].b());
    const IndecModule m2(Rank::finite(n), labels[1].a(), labels[1].b());
    ext = req.cluster ? ext_dim_cluster(m1, m2) : ext_dim_tube(m1, m2);
    const CrossingReport r = itotal(n, phi_inv(m1), phi_inv(m2));
    explain = {{"alpha", phi_inv(m1).str()}, {"beta", phi_inv(m2).str()}, {"pos", r.pos}, {"neg", r.neg},
               {"total", r.total}, {"equals", req.cluster ? "total" : "neg"}};
  }
  if (wants_json(req)) {
    Json j{{"ext", ext}};
    if (req.explain) j["explain"] = explain;
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << ext << "\n";
  if (req.explain) {
    write_aligned(out, {{"alpha", explain["alpha"].get<std::string>()},
                        {"beta", explain["beta"].get<std::string>()},
                        {"pos", std::to_string(explain["pos"].get<std::int64_t>())},
                        {"neg", std::to_string(explain["neg"].get<std::int64_t>())},
                        {"total", std::to_string(explain["total"].get<std::int64_t>())},
                        {"equals", explain["equals"].get<std::string>()}});
  }
  return kExitOk;
}

template <typename Quiver>
Json quiver_json(const Quiver& q, const std::string& rank) {
  Json j;
  j["rank"] = rank;
  j["max_len"] = q.max_len;
  j["vertices"] = Json::array();
  j["arrows"] = Json::array();
  j["tau"] = Json::array();
  for (const auto& x : q.vertices) {
    const ArcU lift = [&] {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ArcAnn>) {
        return canonical_lift(x);
      } else {
        return x;
      }
    }();
    j["vertices"].push_back({{"label", x.str()}, {"a", lift.a()}, {"b", lift.b()}});
  }
  for (const auto& x : q.vertices) {
    for (const auto& y : q.successors(x)) j["arrows"].push_back({x.str(), y.str()});
  }
  for (const auto& x : q.vertices) {
    if (auto tx = q.translate(x)) j["tau"].push_back({x.str(), tx->str()});
  }
  return j;
}

int cmd_quiver(const Request& req, std::ostream& out) {
  const std::string format = req.json ? "json" : (req.format.empty() ? "dot" : req.format);
  if (format != "dot" && format != "json") {
    throw TubeError(ErrorKind::InvalidArgument, "quiver supports --format dot|json, got " + format);
  }
  if (req.infinity) {
    const LineQuiver q = generate_infinity_window(req.a_min, req.a_max, req.max_len);
    out << (format == "dot" ? to_dot(q) : quiver_json(q, "inf").dump() + "\n");
  } else {
    const std::int64_t n = require_rank(req);
    const TubeQuiver q = generate_window(n, req.max_len);
    out << (format == "dot" ? to_dot(q) : quiver_json(q, std::to_string(n)).dump() + "\n");
  }
  return kExitOk;
}

int cmd_draw(const Request& req, std::ostream& out) {
  const auto lifts = parse_all(req.arcs, 1, 2, "--arc");
  const std::int64_t n = require_rank(req);
  if (req.view != "cover" && req.view != "annulus") {
    throw TubeError(ErrorKind::InvalidArgument, "--view must be cover or annulus, got " + req.view);
  }
  std::vector<ArcAnn> arcs;
  for (const ArcU& lift : lifts) arcs.push_back(project(lift, n));
  DrawOptions options;
  options.view = req.view == "cover" ? View::Cover : View::Annulus;
  const char* no_color = std::getenv("NO_COLOR");
  options.monochrome = no_color != nullptr && *no_color != '\0';
  const std::string svg = draw_svg(arcs, options);
  if (req.output.empty()) {
    out << svg;
  } else {
    std::ofstream file(req.output, std::ios::binary);
    if (!file) throw TubeError(ErrorKind::InvalidArgument, "cannot write " + req.output);
    file << svg;
  }
  return kExitOk;
}

Json dims_json(const NilpotentRep& r) {
  Json dims = Json::array();
  for (auto d : r.dims) dims.push_back(d);
  return dims;
}

int cmd_oracle(const Request& req, std::ostream& out) {
  const auto labels = parse_all(req.modules, 2, 2, "--mod");
  Json j;
  if (req.infinity) {
    const IndecModule m1(Rank::infinite(), labels[0].a(), labels[0].b());
    const IndecModule m2(Rank::infinite(), labels[1].a(), labels[1].b());
    j["hom"] = hom_dim_line(m1, m2);
    j["ext_ar"] = ext_dim_line(m1, m2);
    j["ext_euler"] = ext_dim_line_euler(m1, m2);
  } else {
    const std::int64_t n = require_rank(req);
    const IndecModule m1(Rank::finite(n), labels[0].a(), labels[0].b());
    const IndecModule m2(Rank::finite(n), labels[1].a(), labels[1].b());
    const NilpotentRep r1 = build_rep(m1);
    const NilpotentRep r2 = build_rep(m2);
    j["hom"] = hom_dim_linalg(r1, r2);
    j["ext_ar"] = ext_dim_ar(m1, m2);
    j["ext_euler"] = ext_dim_euler(m1, m2);
    j["euler_form"] = euler_form(r1, r2);
    j["dims1"] = dims_json(r1);
    j["dims2"] = dims_json(r2);
  }
  if (wants_json(req)) {
    out << j.dump() << "\n";
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [key, value] : j.items()) rows.emplace_back(key, value.dump());
  write_aligned(out, rows);
  return kExitOk;
}

int cmd_check(const Request& req, std::ostream& out) {
  CheckOptions options;
  options.n_max = req.n_max;
  options.len_max = req.len_max;
  if (req.flip_signs) options.convention = SignConvention::Flipped;
  const CheckSummary summary = run_checks(options);
  const CheckResult* first = summary.first_failure();
  if (wants_json(req)) {
    Json j;
    j["ok"] = summary.ok();
    j["checks"] = Json::array();
    for (const auto& r : summary.results) {
      Json c{{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}};
      if (r.counterexample) c["counterexample"] = *r.counterexample;
      j["checks"].push_back(c);
    }
    out << j.dump() << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : summary.results) width = std::max(width, r.name.size());
    for (const auto& r : summary.results) {
      out << std::left << std::setw(static_cast<int>(width + 2)) << r.name << (r.failed ? "FAIL" : "pass")
          << "  passed " << r.passed << "  failed " << r.failed << "\n";
    }
    if (first) out << "first counterexample (" << first->name << "): " << *first->counterexample << "\n";
    out << (summary.ok() ? "all checks passed" : "property check failed") << "\n";
  }
  return summary.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented arcs in the annulus and Ext dimensions in tube categories", "tubes"};
  app.require_subcommand(1);
  Request req;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", req.json, "Emit JSON");
    cmd->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"json", "text", "dot", "svg"}));
  };

  auto* intersect = app.add_subcommand("intersect", "Signed crossing numbers of two arcs of A(n)");
  intersect->add_option("--n", req.n, "Number of marked points")->required();
  intersect->add_option("--arc", req.arcs, "Arc given by a lift a,b (twice)")->take_all();
  intersect->add_flag("--points", req.points, "Include exact crossing coordinates");
  add_output_flags(intersect);

  auto* ext = app.add_subcommand("ext", "dim Ext^1 between two indecomposables");
  ext->add_option("--n", req.n, "Rank of the tube");
  ext->add_flag("--infinity", req.infinity, "Work in the ZA_infinity category");
  ext->add_option("--mod", req.modules, "Module label a,b (twice)")->take_all();
  ext->add_flag("--cluster", req.cluster, "Ext^1 in the cluster category");
  ext->add_flag("--explain", req.explain, "Show the crossing numbers the dimension equals");
  add_output_flags(ext);

  auto* quiver = app.add_subcommand("quiver", "Window of the translation quiver");
  quiver->add_option("--n", req.n, "Rank of the tube");
  quiver->add_flag("--infinity", req.infinity, "ZA_infinity window");
  quiver->add_option("--max-len", req.max_len, "Largest combinatorial length")->required();
  quiver->add_option("--a-min", req.a_min, "Smallest start point (ZA_infinity)");
  quiver->add_option("--a-max", req.a_max, "Largest start point (ZA_infinity)");
  add_output_flags(quiver);

  auto* draw = app.add_subcommand("draw", "SVG picture of one or two arcs");
  draw->add_option("--n", req.n, "Number of marked points")->required();
  draw->add_option("--arc", req.arcs, "Arc given by a lift a,b (once or twice)")->take_all();
  draw->add_option("--view", req.view, "cover or annulus");
  draw->add_option("--output,-o", req.output, "Write the SVG to a file");
  add_output_flags(draw);

  auto* oracle = app.add_subcommand("oracle", "Hom/Ext dimensions by linear algebra on representations");
  oracle->add_option("--n", req.n, "Rank of the tube");
  oracle->add_flag("--infinity", req.infinity, "Line quiver instead of the cyclic quiver");
  oracle->add_option("--mod", req.modules, "Module label a,b (twice)")->take_all();
  add_output_flags(oracle);

  auto* check = app.add_subcommand("check", "Run the property sweeps");
  check->add_option("--n-max", req.n_max, "Largest rank swept (1..8)");
  check->add_option("--len-max", req.len_max, "Largest combinatorial length swept (2..32)");
  check->add_flag("--flip-signs", req.flip_signs, "Invert the crossing sign rule (mutation test)")->group("");
  add_output_flags(check);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (intersect->parsed()) return cmd_intersect(req, out);
    if (ext->parsed()) return cmd_ext(req, out);
    if (quiver->parsed()) return cmd_quiver(req, out);
    if (draw->parsed()) return cmd_draw(req, out);
    if (oracle->parsed()) return cmd_oracle(req, out);
    if (check->parsed()) return cmd_check(req, out);
  } catch (const TubeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tubes
