#include "cgs/output.hpp"

#include <iomanip>
#include <sstream>

#include "cgs/version.hpp"

namespace cgs {

std::string to_string(BasisMode m) {
  return m == BasisMode::NabeshimaFullSet ? "nabeshima" : "ksw";
}

std::string to_string(ChoiceStrategy s) {
  return s == ChoiceStrategy::MaxDimensionDeterministic ? "deterministic" : "random";
}

std::optional<BasisMode> basis_mode_from_string(std::string_view text) {
  if (text == "nabeshima") return BasisMode::NabeshimaFullSet;
  if (text == "ksw") return BasisMode::KswSingle;
  return std::nullopt;
}

std::optional<ChoiceStrategy> strategy_from_string(std::string_view text) {
  if (text == "deterministic") return ChoiceStrategy::MaxDimensionDeterministic;
  if (text == "random") return ChoiceStrategy::MaxDimensionRandom;
  return std::nullopt;
}

std::string render_ideal(const IdealHandle& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += render(gens[i]);
  }
  return out + ">";
}

std::string render_text(const CGSOutput& out, const std::string& problem_name) {
  std::ostringstream os;
  const RingSpec& ring = *out.ring;
  os << "problem: " << problem_name << "\n";
  os << "variables:";
  for (const auto& v : ring.variables()) os << " " << v;
  os << " (" << to_string(ring.ordering().order_x()) << ")\n";
  os << "parameters:";
  for (const auto& a : ring.parameters()) os << " " << a;
  os << " (" << to_string(ring.ordering().order_a()) << ")\n";
  os << "input:\n";
  for (const auto& g : out.input.generators()) os << "  " << render(g) << "\n";
  os << "basis mode: " << to_string(out.config.basis_mode)
     << ", strategy: " << to_string(out.config.strategy) << ", seed: " << out.config.seed
     << "\n";
  os << "segments: " << out.segments.size() << "\n";
  for (std::size_t i = 0; i < out.segments.size(); ++i) {
    const Segment& seg = out.segments[i];
    os << "\nsegment " << (i + 1) << "\n";
    os << "  vanishing: " << render_ideal(seg.vanishing) << "\n";
    os << "  exceptions:";
    if (seg.exceptions.empty()) {
      os << " none";
    } else {
      for (std::size_t e = 0; e < seg.exceptions.size(); ++e)
        os << (e ? ", " : " ") << render_ideal(seg.exceptions[e]);
    }
    os << "\n  basis:";
    if (seg.basis.empty()) {
      os << " {}";
    } else {
      for (const auto& g : seg.basis) os << "\n    " << render(g);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string seconds_str(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << s << "s";
  return os.str();
}

}  // namespace

std::string render_stats_table(const std::vector<StatsRow>& rows, bool with_times) {
  struct Col {
    const char* header;
    const OpStat Stats::* op;
  };
  static constexpr Col cols[] = {
      {"GB K[A,X]", &Stats::gb_kax},   {"GB K[A]", &Stats::gb_ka},
      {"a in b", &Stats::contains_check}, {"Z\\Z empty", &Stats::emptiness_check},
      {"MB", &Stats::mb},              {"sqfr", &Stats::sqfr},
  };

  std::size_t name_w = 7;
  for (const auto& r : rows) name_w = std::max(name_w, r.name.size());

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w + 2)) << "problem";
  for (const auto& c : cols) os << std::setw(with_times ? 18 : 10) << c.header;
  os << std::setw(6) << "#" << (with_times ? "time" : "") << "\n";

  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(name_w + 2)) << r.name;
    if (!r.note.empty()) {
      os << r.note << "\n";
      continue;
    }
    for (const auto& c : cols) {
      const OpStat& op = r.stats.*(c.op);
      std::string cell = std::to_string(op.count);
      if (with_times) cell += "  " + seconds_str(op.seconds);
      os << std::setw(with_times ? 18 : 10) << cell;
    }
    os << std::setw(6) << r.stats.segments;
    if (with_times) os << seconds_str(r.stats.total_seconds);
    os << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const CGSOutput& out, const std::string& problem_name) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["problem"] = problem_name;

  const RingSpec& ring = *out.ring;
  doc["ring"] = {{"variables", ring.variables()},
                 {"parameters", ring.parameters()},
                 {"order_x", to_string(ring.ordering().order_x())},
                 {"order_a", to_string(ring.ordering().order_a())}};

  doc["config"] = {{"algorithm", "iter"},
                   {"basis_mode", to_string(out.config.basis_mode)},
                   {"strategy", to_string(out.config.strategy)},
                   {"seed", out.config.seed},
                   {"prune_empty", out.config.prune_empty},
                   {"max_iterations", out.config.max_iterations},
                   {"max_seconds", out.config.max_seconds}};

  auto poly_list = [](const std::vector<Polynomial>& polys) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : polys) arr.push_back(render(g));
    return arr;
  };

  doc["input"] = poly_list(out.input.generators());

  nlohmann::json segments = nlohmann::json::array();
  for (const auto& seg : out.segments) {
    nlohmann::json exceptions = nlohmann::json::array();
    for (const auto& e : seg.exceptions) exceptions.push_back(poly_list(e.generators()));
    segments.push_back({{"vanishing", poly_list(seg.vanishing.generators())},
                        {"exceptions", exceptions},
                        {"basis", poly_list(seg.basis)}});
  }
  doc["segments"] = segments;

  const Stats& st = out.stats;
  doc["stats"] = {{"gb_kax", st.gb_kax.count},
                  {"gb_ka", st.gb_ka.count},
                  {"contains_check", st.contains_check.count},
                  {"emptiness_check", st.emptiness_check.count},
                  {"mb", st.mb.count},
                  {"sqfr", st.sqfr.count},
                  {"iterations", st.iterations},
                  {"segments", st.segments}};
  return doc;
}

LoadedOutput output_from_json(const nlohmann::json& doc) {
  const auto& jring = doc.at("ring");
  auto ox = block_order_from_string(jring.at("order_x").get<std::string>());
  auto oa = block_order_from_string(jring.at("order_a").get<std::string>());
  if (!ox || !oa) throw usage_error("structured document: unknown block order");
  RingPtr ring = make_ring(jring.at("variables").get<std::vector<std::string>>(),
                           jring.at("parameters").get<std::vector<std::string>>(), *ox, *oa);

  auto polys = [&](const nlohmann::json& arr) {
    std::vector<Polynomial> out;
    out.reserve(arr.size());
    for (const auto& s : arr) out.push_back(parse_polynomial(s.get<std::string>(), ring));
    return out;
  };

  LoadedOutput loaded;
  loaded.problem = doc.at("problem").get<std::string>();
  CGSOutput& out = loaded.output;
  out.ring = ring;
  out.input = IdealHandle(ring, polys(doc.at("input")));

  const auto& jc = doc.at("config");
  auto mode = basis_mode_from_string(jc.at("basis_mode").get<std::string>());
  auto strat = strategy_from_string(jc.at("strategy").get<std::string>());
  if (!mode || !strat) throw usage_error("structured document: unknown config value");
  out.config.basis_mode = *mode;
  out.config.strategy = *strat;
  out.config.seed = jc.at("seed").get<std::uint64_t>();
  out.config.prune_empty = jc.at("prune_empty").get<bool>();
  out.config.max_iterations = jc.at("max_iterations").get<long>();
  out.config.max_seconds = jc.at("max_seconds").get<double>();

  for (const auto& jseg : doc.at("segments")) {
    Segment seg;
    seg.vanishing = IdealHandle(ring, polys(jseg.at("vanishing")));
    for (const auto& je : jseg.at("exceptions")) seg.exceptions.emplace_back(ring, polys(je));
    seg.basis = polys(jseg.at("basis"));
    out.segments.push_back(std::move(seg));
  }

  const auto& js = doc.at("stats");
  Stats& st = out.stats;
  st.gb_kax.count = js.at("gb_kax").get<long>();
  st.gb_ka.count = js.at("gb_ka").get<long>();
  st.contains_check.count = js.at("contains_check").get<long>();
  st.emptiness_check.count = js.at("emptiness_check").get<long>();
  st.mb.count = js.at("mb").get<long>();
  st.sqfr.count = js.at("sqfr").get<long>();
  st.iterations = js.at("iterations").get<long>();
  st.segments = js.at("segments").get<long>();
  return loaded;
}

}  // namespace cgs
