#include "relorbit/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relorbit/cli/json_io.hpp"
#include "relorbit/exact_numbers/continued_fraction.hpp"
#include "relorbit/exact_numbers/scalar_format.hpp"
#include "relorbit/flat_torus/reduce.hpp"

namespace relorbit::cli {
namespace {

using exact_numbers::format_exact;
using exact_numbers::parse_scalar;
using exact_numbers::QuadraticScalar;
using exact_numbers::RealSpec;
using exact_numbers::to_decimal;

constexpr const char* kModule = "cli";

struct RunConfig {
  std::string command;
  std::string alpha = "golden";
  std::string a = "1";
  std::string N = "1";
  std::vector<std::string> tremor;
  std::string surface;
  std::size_t depth = 10;
  long K = 10;
  double eps_dist = experiments::kDefaultEpsDist;
  double eps_gap = -1;
  std::string csv;
  std::string svg;
  bool json = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, kModule, "cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw Error(ErrorCode::InvalidArgument, kModule, "failed writing '" + path + "'");
}

slit_surface::ELocusSurface load_surface(const RunConfig& c) {
  if (!c.surface.empty()) {
    std::string text = c.surface;
    if (text.front() != '{') {
      std::ifstream f(text);
      if (!f) throw Error(ErrorCode::InvalidArgument, kModule, "cannot read surface file '" + text + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    try {
      return surface_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, kModule, std::string("surface JSON: ") + e.what());
    }
  }
  slit_surface::TremorParam tremor;
  if (!c.tremor.empty()) {
    tremor.a1 = parse_scalar(c.tremor.at(0));
    tremor.a2 = parse_scalar(c.tremor.at(1));
  }
  return slit_surface::make_surface(flat_torus::NormalizedTorus(parse_scalar(c.a), RealSpec::parse(c.alpha)),
                                    parse_scalar(c.N), tremor);
}

std::string quotient_list(const std::vector<exact_numbers::BigInt>& qs) {
  std::string s = "[";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    s += qs[i].get_str();
    if (i + 1 < qs.size()) s += i == 0 ? ";" : ",";
  }
  return s + "]";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_cf(const RunConfig& c, std::ostream& out) {
  const RealSpec alpha = RealSpec::parse(c.alpha);
  const std::vector<exact_numbers::BigInt> qs = exact_numbers::cf_expand(alpha, c.depth);
  if (!c.json) {
    out << quotient_list(qs) << '\n';
    return;
  }
  Json conv = Json::array();
  for (const exact_numbers::Convergent& k : exact_numbers::convergents_of(qs)) {
    conv.push_back({{"k", k.k}, {"p", k.p.get_str()}, {"q", k.q.get_str()}});
  }
  print_json(out, {{"alpha", c.alpha}, {"quotients", quotient_list(qs)}, {"convergents", conv}});
}

void cmd_reduce(const RunConfig& c, std::ostream& out) {
  const slit_surface::ELocusSurface s = load_surface(c);
  const flat_torus::ShortSlit r = flat_torus::reduce_slit(s.torus, s.slit);
  if (c.json) {
    print_json(out, {{"surface", surface_to_json(s)}, {"vector", vector_json(r.vector)}, {"anchor", r.anchor}});
    return;
  }
  out << "vector = (" << to_decimal(r.vector.x, 40) << ", " << to_decimal(r.vector.y, 40) << ")\n"
      << "exact = (" << format_exact(r.vector.x) << ", " << format_exact(r.vector.y) << ")\n"
      << "anchor = " << r.anchor << '\n';
}

void print_checkerboard(const checkerboard::Checkerboard& cb, std::ostream& out) {
  out << "N = " << exact_numbers::format_scalar(cb.slit.N) << '\n'
      << "cells = " << cb.cells.size() << '\n'
      << "B1 = " << to_decimal(cb.B1, 40) << '\n'
      << "B2 = " << to_decimal(cb.B2, 40) << '\n'
      << "imbalance = " << to_decimal(checkerboard::imbalance(cb), 40) << '\n'
      << "theta = " << to_decimal(checkerboard::exchange_proportion(cb), 40) << '\n';
  if (cb.q_index) out << "q_index = " << *cb.q_index << '\n';
}

void cmd_checkerboard(const RunConfig& c, std::ostream& out) {
  const slit_surface::ELocusSurface s = load_surface(c);
  const checkerboard::Checkerboard cb = checkerboard::build_limited(s.torus, s.slit);
  if (!c.csv.empty()) write_file(c.csv, checkerboard::render_csv(cb));
  if (!c.svg.empty()) write_file(c.svg, checkerboard::render_svg(cb));
  if (c.json) {
    print_json(out, checkerboard_json(cb));
  } else {
    print_checkerboard(cb, out);
  }
}

void cmd_render(const RunConfig& c, std::ostream& out) {
  if (c.svg.empty()) throw Error(ErrorCode::InvalidArgument, kModule, "render needs --svg");
  cmd_checkerboard(c, out);
}

double eps_gap_for(const RunConfig& c, const slit_surface::TremorParam& t) {
  return c.eps_gap > 0 ? c.eps_gap : experiments::kDefaultEpsGapFactor * (t.a1 - t.a2).abs().to_double();
}

void cmd_orbit(const RunConfig& c, std::ostream& out) {
  const slit_surface::ELocusSurface s = load_surface(c);
  const std::vector<experiments::RecurrenceRecord> records = experiments::recurrence_trajectory(s, c.depth);
  const experiments::RecurrenceVerdict verdict =
      experiments::classify_recurrence(records, c.eps_dist, eps_gap_for(c, s.tremor));
  if (!c.csv.empty()) write_file(c.csv, experiments::records_csv(records));
  if (c.json) {
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(record_json(r));
    print_json(out, {{"surface", surface_to_json(s)},
                     {"period_tuple", tuple_json(slit_surface::period_tuple(s))},
                     {"records", recs},
                     {"verdict", verdict_json(verdict)}});
    return;
  }
  if (c.csv.empty()) out << experiments::records_csv(records);
  out << "verdict = " << experiments::verdict_name(verdict) << '\n';
}

void cmd_theorem_check(const RunConfig& c, std::ostream& out) {
  slit_surface::TremorParam tremor{QuadraticScalar(1), QuadraticScalar(0)};
  if (!c.tremor.empty()) tremor = {parse_scalar(c.tremor.at(0)), parse_scalar(c.tremor.at(1))};
  const experiments::TheoremReport rep =
      experiments::theorem_check(RealSpec::parse(c.alpha), tremor, c.depth, c.K, c.eps_dist, c.eps_gap);
  if (!c.csv.empty()) write_file(c.csv, experiments::records_csv(rep.records));
  if (c.json) {
    print_json(out, {{"alpha", c.alpha},
                     {"depth", c.depth},
                     {"K", c.K},
                     {"cf_verdict", verdict_json(rep.cf_verdict)},
                     {"empirical_verdict", verdict_json(rep.empirical_verdict)},
                     {"agree", rep.agree}});
    return;
  }
  out << "cf_verdict = " << experiments::verdict_name(rep.cf_verdict) << '\n'
      << "empirical_verdict = " << experiments::verdict_name(rep.empirical_verdict) << '\n'
      << "agree = " << (rep.agree ? "true" : "false") << '\n';
}

void report(const Error& e, bool json, std::ostream& err) {
  if (json) {
    err << error_json(e).dump() << '\n';
  } else {
    err << "error [" << to_string(e.code()) << "] " << e.module() << ": " << e.what() << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Rel orbits of tremored slit tori"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--alpha", c.alpha, "builtin id, quadratic scalar, or [a0;a1,...]");
  app.add_option("--a", c.a, "torus modulus a");
  app.add_option("--N", c.N, "slit length in units of a");
  app.add_option("--tremor", c.tremor, "shears A1 A2")->expected(2);
  app.add_option("--surface", c.surface, "surface JSON file or inline JSON");
  app.add_option("--depth", c.depth, "convergent depth")->check(CLI::PositiveNumber);
  app.add_option("--K", c.K, "quotient bound for the badly approximable verdict")->check(CLI::PositiveNumber);
  app.add_option("--eps-dist", c.eps_dist, "recurrence distance tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-gap", c.eps_gap, "separation tolerance (default 0.1 |a1 - a2|)")->check(CLI::PositiveNumber);
  app.add_option("--csv", c.csv, "CSV output path");
  app.add_option("--svg", c.svg, "SVG output path");
  app.add_flag("--json", c.json, "machine-readable output and errors");
  for (const char* name : {"cf", "reduce", "checkerboard", "orbit", "theorem-check", "render"}) {
    app.add_subcommand(name)->callback([&c, name] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(Error(ErrorCode::InvalidArgument, kModule, e.what()), c.json, err);
    return kExitPrecondition;
  }
  try {
    if (c.command == "cf") {
      cmd_cf(c, out);
    } else if (c.command == "reduce") {
      cmd_reduce(c, out);
    } else if (c.command == "checkerboard") {
      cmd_checkerboard(c, out);
    } else if (c.command == "orbit") {
      cmd_orbit(c, out);
    } else if (c.command == "theorem-check") {
      cmd_theorem_check(c, out);
    } else {
      cmd_render(c, out);
    }
  } catch (const Error& e) {
    report(e, c.json, err);
    return e.code() == ErrorCode::PrecisionExhausted ? kExitPrecision : kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace relorbit::cli
