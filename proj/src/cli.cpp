#include "segre/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "segre/orbits.hpp"
#include "segre/rank.hpp"
#include "segre/report.hpp"
#include "segre/variety.hpp"

namespace segre::cli {

namespace {

struct Config {
  std::optional<unsigned> q;
  std::optional<unsigned> p;
  std::optional<unsigned> e;
  std::string coords;
  std::string segre_point = "1,0,1,0,1,0";
  std::string out_path;
  std::string format;
  unsigned threads = 1;
  bool allow_large = false;
};

// Reported with exit code kMalformedInput or kZeroVector.
struct InputError {
  int code;
  std::string message;
};

Field select_field(const Config& c) {
  try {
    if (c.q && c.p) {
      const Field f(*c.p, c.e.value_or(1));
      if (f.order() != *c.q) throw InputError{kMalformedInput, "--q disagrees with --p/--e"};
      return f;
    }
    if (c.q) return Field::of_order(*c.q);
    if (c.p) return Field(*c.p, c.e.value_or(1));
  } catch (const std::invalid_argument& ex) {
    throw InputError{kMalformedInput, ex.what()};
  }
  throw InputError{kMalformedInput, "select a field with --q or --p [--e]"};
}

std::vector<Elem> parse_elements(const Field& f, const std::string& text,
                                 std::size_t expected, const char* what) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = -1;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 0 ||
        value >= static_cast<long>(f.order()))
      throw InputError{kMalformedInput, std::string("malformed ") + what + ": '" + item +
                                            "' is not a field element"};
    out.push_back(Elem{static_cast<unsigned>(value)});
  }
  if (out.size() != expected)
    throw InputError{kMalformedInput, std::string(what) + " needs " +
                                          std::to_string(expected) + " comma-separated values"};
  return out;
}

Tensor222 parse_tensor(const Field& f, const std::string& text) {
  const auto v = parse_elements(f, text, 8, "--coords");
  Tensor222 t;
  std::copy(v.begin(), v.end(), t.a.begin());
  if (t.is_zero()) throw InputError{kZeroVector, "the zero vector is not a point"};
  return t;
}

SegrePoint parse_segre_point(const Field& f, const std::string& text) {
  const auto v = parse_elements(f, text, 6, "--point");
  SegrePoint s;
  for (int i = 0; i < 3; ++i) {
    const Vec2 pair = {v[2 * i], v[2 * i + 1]};
    if (is_zero(pair)) throw InputError{kMalformedInput, "--point has a zero factor"};
    s.factors[i] = pg_normalize(f, pair);
  }
  return s;
}

std::string join(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]);
}

// Writes to --out when given, else to out.
void emit(const Config& c, std::ostream& out, const std::string& body) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw InputError{kMalformedInput, "cannot write " + c.out_path};
  file << body;
}

int cmd_classify(const Config& c, std::ostream& out) {
  const Field f = select_field(c);
  const Tensor222 t = parse_tensor(f, c.coords);
  const Variety variety(f);
  const RankSolver solver(variety);
  const PointProfile profile = profile_point(variety, solver, t);
  const ProjPoint point = variety.space().point(t.a);
  const auto ranks = flattening_ranks(f, t);
  const bool odd = f.characteristic() != 2;

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["q"] = f.order();
    j["point"] = format_coords(point.coords);
    j["index"] = point.index;
    j["rank"] = profile.rank;
    j["flattening_ranks"] = ranks;
    j["singular"] = profile.singular;
    if (odd) j["hyperdeterminant"] = hyperdeterminant(f, t).value;
    j["label"] = std::string(to_string(profile.label));
    out << j.dump(2) << '\n';
  } else {
    out << "point             " << format_coords(point.coords) << '\n'
        << "index             " << point.index << '\n'
        << "rank              " << profile.rank << '\n'
        << "flattening ranks  " << join(ranks) << '\n'
        << "singular          " << (profile.singular ? "true" : "false") << '\n';
    if (odd) out << "hyperdeterminant  " << unsigned{hyperdeterminant(f, t).value} << '\n';
    out << "label             " << to_string(profile.label) << '\n';
  }
  return kOk;
}

int cmd_rank(const Config& c, std::ostream& out) {
  const Field f = select_field(c);
  const Tensor222 t = parse_tensor(f, c.coords);
  const Variety variety(f);
  const RankValue rank = RankSolver(variety).rank(t);

  std::optional<std::vector<RankTerm>> terms;
  if (f.order() <= RankOracle::kMaxOrder) terms = RankOracle(variety).decompose(t);

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["q"] = f.order();
    j["rank"] = rank;
    if (terms) {
      j["oracle_rank"] = terms->size();
      auto arr = nlohmann::ordered_json::array();
      for (const RankTerm& term : *terms)
        arr.push_back({{"coefficient", term.coefficient.value},
                       {"tensor", format_coords(variety.tensors()[term.segre_index].a)}});
      j["decomposition"] = std::move(arr);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "rank  " << rank << '\n';
    if (terms) {
      out << "oracle rank  " << terms->size() << '\n';
      for (const RankTerm& term : *terms)
        out << "  " << unsigned{term.coefficient.value} << " * ("
            << format_coords(variety.tensors()[term.segre_index].a) << ")\n";
    }
  }
  return terms && static_cast<RankValue>(terms->size()) != rank ? kVerificationFailed
                                                               : kOk;
}

int cmd_shamrock(const Config& c, std::ostream& out) {
  const Field f = select_field(c);
  const SegrePoint base = parse_segre_point(f, c.segre_point);
  const Variety variety(f);
  const RankSolver solver(variety);
  const Shamrock sh = variety.shamrock(base);

  std::vector<PointIndex> segre_points;
  for (const ProjPoint& p : variety.enumerate()) segre_points.push_back(p.index);
  std::sort(segre_points.begin(), segre_points.end());

  std::array<std::size_t, 3> leaf_sizes{};
  std::array<std::size_t, 3> on_variety{};
  for (int k = 0; k < 3; ++k) {
    leaf_sizes[k] = sh.leaves[k].points.size();
    for (PointIndex p : sh.leaves[k].points)
      if (std::binary_search(segre_points.begin(), segre_points.end(), p)) ++on_variety[k];
  }
  RankValue max_rank = 0;
  for (PointIndex p : sh.points)
    max_rank = std::max(max_rank, solver.rank(Tensor222{variety.space().coords(p)}));
  const bool bound_ok = max_rank <= 2;

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["q"] = f.order();
    j["base"] = format_coords(variety.embed(base).coords);
    j["leaf_sizes"] = leaf_sizes;
    j["leaf_segre_points"] = on_variety;
    j["union_size"] = sh.points.size();
    j["max_rank"] = max_rank;
    j["rank_bound_holds"] = bound_ok;
    emit(c, out, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "base point         " << format_coords(variety.embed(base).coords) << '\n';
    for (int k = 0; k < 3; ++k)
      s << "leaf " << k + 1 << "             " << leaf_sizes[k] << " points, "
        << on_variety[k] << " on the variety\n";
    s << "shamrock           " << sh.points.size() << " points\n"
      << "max rank           " << max_rank << '\n';
    emit(c, out, s.str());
  }
  return bound_ok ? kOk : kVerificationFailed;
}

std::string summary_table(const OrbitReport& report, double seconds) {
  std::ostringstream s;
  s << "q = " << report.q << ", " << report.points << " points, " << report.orbits.size()
    << " orbits\n";
  s << "orbit  label  size        rank  flattening  singular  representative\n";
  for (const OrbitSummary& o : report.orbits)
    s << std::left << std::setw(7) << o.id << std::setw(7) << to_string(o.label)
      << std::setw(12) << o.size << std::setw(6) << o.rank << std::setw(12)
      << join(o.flattening) << std::setw(10) << (o.singular ? "yes" : "no")
      << format_coords(o.representative.coords) << '\n';
  s << "five orbits: " << (report.five_orbits ? "yes" : "NO")
    << "; four singular orbits: " << (report.four_singular ? "yes" : "NO")
    << "; classifier matches: " << (report.classifier_matches ? "yes" : "NO")
    << "; invariants constant: " << (report.invariants_constant ? "yes" : "NO") << '\n';
  s << std::fixed << std::setprecision(2) << "elapsed " << seconds << " s\n";
  return s.str();
}

int cmd_space(const Config& c, bool verify, std::ostream& out, std::ostream& err) {
  const Field f = select_field(c);
  const RunOptions options{c.threads, c.allow_large};
  check_envelope(f, options);

  const auto start = std::chrono::steady_clock::now();
  const Variety variety(f);
  const Classification classes = classify_space(variety, options);
  const OrbitReport report = build_report(variety, classes);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (verify) {
    if (!c.out_path.empty()) emit(c, out, report_json(report));
    if (c.format == "json" && c.out_path.empty())
      out << report_json(report);
    else
      out << summary_table(report, seconds);
    for (const std::string& failure : report.failures) err << "FAILED: " << failure << '\n';
    return report.verified() ? kOk : kVerificationFailed;
  }

  if (c.format == "csv") {
    std::ostringstream s;
    write_csv(s, variety, classes);
    emit(c, out, s.str());
  } else if (c.format == "text") {
    emit(c, out, summary_table(report, seconds));
  } else {
    emit(c, out, report_json(report));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of the Segre variety S(2,2,2) stabiliser on PG(7,q)", "segre222"};
  app.require_subcommand(1);
  Config c;

  const auto add_field = [&c](CLI::App* sub) {
    sub->add_option("--q", c.q, "Field order (prime power <= 16)");
    sub->add_option("--p", c.p, "Field characteristic");
    sub->add_option("--e", c.e, "Extension degree (default 1)");
  };
  const auto add_output = [&c](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out_path, "Output file");
  };
  const auto add_space = [&c](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", c.allow_large, "Permit q > 7 for whole-space commands");
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify one point");
  add_field(classify);
  classify->add_option("--coords", c.coords, "8 coordinates in order 4i+2j+k")->required();
  classify->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* rank = app.add_subcommand("rank", "Tensor rank of one point");
  add_field(rank);
  rank->add_option("--coords", c.coords, "8 coordinates in order 4i+2j+k")->required();
  rank->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* shamrock = app.add_subcommand("shamrock", "Shamrock of a Segre point");
  add_field(shamrock);
  shamrock->add_option("--point", c.segre_point,
                       "Three PG(1,q) points as 6 comma-separated values");
  add_output(shamrock, {"json", "text"});

  CLI::App* orbits = app.add_subcommand("orbits", "Orbit partition of PG(7,q)");
  add_field(orbits);
  add_output(orbits, {"json", "csv", "text"});
  add_space(orbits);

  CLI::App* verify = app.add_subcommand("verify", "Verify the orbit theorems");
  add_field(verify);
  add_output(verify, {"json", "csv", "text"});
  add_space(verify);

  std::vector<const char*> argv{"segre222"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return kMalformedInput;
  }

  if (c.format.empty()) c.format = orbits->parsed() ? "json" : "text";
  try {
    if (classify->parsed()) return cmd_classify(c, out);
    if (rank->parsed()) return cmd_rank(c, out);
    if (shamrock->parsed()) return cmd_shamrock(c, out);
    if (orbits->parsed()) return cmd_space(c, false, out, err);
    if (verify->parsed()) return cmd_space(c, true, out, err);
  } catch (const InputError& ex) {
    err << "error: " << ex.message << '\n';
    return ex.code;
  } catch (const ResourceGuardError& ex) {
    err << "error: " << ex.what() << " (pass --allow-large to override)\n";
    return kResourceGuard;
  }
  return kMalformedInput;
}

}  // namespace segre::cli
