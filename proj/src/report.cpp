#include "sidon/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sidon/error.hpp"

namespace sidon {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json str_array(std::span<const Integer> xs) {
  Json a = Json::array();
  for (const Integer& x : xs) a.push_back(to_string(x));
  return a;
}

template <typename T>
Json num_array(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const T& x : xs) a.push_back(x);
  return a;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const Rational& x : p) a.push_back(to_string(x));
  return a;
}

std::string joined(std::span<const Integer> xs, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += to_string(xs[i]);
  }
  return s;
}

std::string joined(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json extraction_json(const ExtractionReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "extract";
  j["certificate_kind"] = r.certificate_kind();
  j["n"] = r.n;
  j["dedup_removed"] = r.dedup_removed;
  j["modulus"] = {{"p", r.modulus.p}, {"g", r.modulus.g}, {"m", r.modulus.m},
                  {"c", to_string(r.modulus.c)}};
  j["compression"] = {{"theta", r.theta.str()},
                      {"b_size", r.b_size},
                      {"kept", r.kept},
                      {"collisions_removed", r.collisions_removed},
                      {"pair_collisions", r.pair_collisions},
                      {"trials_used", r.trials_used},
                      {"best_trial", r.best_trial}};
  j["chosen_block"] = {{"index", r.block.index},
                       {"intersection", r.block.intersection},
                       {"block_count", r.block_count}};
  j["subset_size"] = r.subset.size();
  j["subset"] = str_array(r.subset);
  j["ratio"] = fixed6(r.ratio);
  j["certified"] = r.certified;
  return j;
}

const char* kExtractHeader =
    "n,dedup_removed,p,g,m,c,theta,b_size,kept,collisions_removed,pair_collisions,"
    "trials_used,best_trial,block_count,block_index,block_intersection,subset_size,"
    "ratio,certified,certificate_kind,subset\n";

std::string extraction_csv_row(const ExtractionReport& r) {
  std::ostringstream o;
  o << r.n << ',' << r.dedup_removed << ',' << r.modulus.p << ',' << r.modulus.g << ','
    << r.modulus.m << ',' << to_string(r.modulus.c) << ',' << r.theta.str() << ','
    << r.b_size << ',' << r.kept << ',' << r.collisions_removed << ','
    << r.pair_collisions << ',' << r.trials_used << ',' << r.best_trial << ','
    << r.block_count << ',' << r.block.index << ',' << r.block.intersection << ','
    << r.subset.size() << ',' << fixed6(r.ratio) << ',' << (r.certified ? "true" : "false")
    << ',' << r.certificate_kind() << ',' << joined(r.subset) << '\n';
  return o.str();
}

std::string extraction_text(const ExtractionReport& r) {
  std::ostringstream o;
  o << "certificate: " << r.certificate_kind() << (r.certified ? " (certified)" : "") << '\n'
    << "n: " << r.n << " (duplicates removed: " << r.dedup_removed << ")\n"
    << "modulus: p = " << r.modulus.p << ", g = " << r.modulus.g << ", m = " << r.modulus.m
    << ", c = " << to_string(r.modulus.c) << '\n'
    << "theta: " << r.theta.str() << '\n'
    << "compression: |B| = " << r.b_size << ", |C| = " << r.kept
    << ", collisions removed = " << r.collisions_removed << ", trials = " << r.trials_used
    << ", best trial = " << r.best_trial << '\n'
    << "block: " << r.block.index << " of " << r.block_count
    << ", intersection = " << r.block.intersection << '\n'
    << "|S| = " << r.subset.size() << ", |S|/sqrt(n) = " << fixed6(r.ratio) << '\n'
    << "subset: " << joined(r.subset) << '\n';
  return o.str();
}

Json witness_json(const Witness& w) {
  Json j;
  j["kind"] = std::string(witness_kind_name(w.kind));
  j["elements"] = str_array(w.elements);
  if (w.kind == WitnessKind::b2g_violation) {
    j["value"] = to_string(w.value);
    Json pairs = Json::array();
    for (const auto& [a, b] : w.pairs) pairs.push_back({to_string(a), to_string(b)});
    j["pairs"] = pairs;
  }
  j["description"] = w.describe();
  return j;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw Error(Errc::invalid_params, "unknown format '" + std::string(name) + "'");
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string render(const ExtractionReport& r, Format fmt) {
  switch (fmt) {
    case Format::json: return dump(extraction_json(r));
    case Format::csv: return std::string(kExtractHeader) + extraction_csv_row(r);
    case Format::text: return extraction_text(r);
  }
  return {};
}

std::string render(const PointExtraction& e, Format fmt) {
  const ReductionCertificate& c = e.cert;
  if (fmt == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = "extract-points";
    j["dim"] = c.direction.size();
    j["vector_certified"] = e.vector_certified;
    j["reduction"] = {{"direction", str_array(c.direction)},
                      {"common_denominator", to_string(c.common_denominator)},
                      {"min_gap", to_string(c.min_gap)},
                      {"attempts", c.attempts},
                      {"fallback_direction", c.fallback_direction},
                      {"orientation", c.orientation},
                      {"offset", to_string(c.offset)},
                      {"scale", to_string(c.scale)}};
    j["extraction"] = extraction_json(e.report);
    j["indices"] = num_array(e.indices);
    Json pts = Json::array();
    for (const Point& p : e.subset) pts.push_back(point_json(p));
    j["points"] = pts;
    return dump(j);
  }
  std::ostringstream o;
  if (fmt == Format::csv) {
    o << "index";
    for (std::size_t d = 1; d <= c.direction.size(); ++d) o << ",x" << d;
    o << '\n';
    for (std::size_t i = 0; i < e.subset.size(); ++i) {
      o << e.indices[i];
      for (const Rational& x : e.subset[i]) o << ',' << to_string(x);
      o << '\n';
    }
    return o.str();
  }
  o << "direction: " << joined(c.direction) << '\n'
    << "common denominator: " << to_string(c.common_denominator) << '\n'
    << "min gap: " << to_string(c.min_gap) << '\n'
    << "vector check: " << (e.vector_certified ? "passed" : "not run") << '\n'
    << extraction_text(e.report) << "points:\n";
  for (std::size_t i = 0; i < e.subset.size(); ++i) {
    o << "  " << e.indices[i] << ":";
    for (const Rational& x : e.subset[i]) o << ' ' << to_string(x);
    o << '\n';
  }
  return o.str();
}

std::string render(const OracleResult& r, unsigned g, Format fmt) {
  const std::string kind = g == 1 ? "sidon" : "b2g";
  switch (fmt) {
    case Format::json: {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "oracle";
      j["kind"] = kind;
      j["g"] = g;
      j["optimum"] = r.optimum;
      j["exhausted"] = r.exhausted;
      j["nodes_explored"] = r.nodes_explored;
      j["witness"] = str_array(r.witness);
      return dump(j);
    }
    case Format::csv:
      return "kind,g,optimum,exhausted,nodes_explored,witness\n" + kind + ',' +
             std::to_string(g) + ',' + std::to_string(r.optimum) + ',' +
             (r.exhausted ? "true" : "false") + ',' + std::to_string(r.nodes_explored) + ',' +
             joined(r.witness) + '\n';
    case Format::text: {
      std::ostringstream o;
      o << "optimum: " << r.optimum << (r.exhausted ? "" : " (lower bound, budget exhausted)")
        << '\n'
        << "nodes explored: " << r.nodes_explored << '\n'
        << "witness: " << joined(r.witness) << '\n';
      return o.str();
    }
  }
  return {};
}

std::string render(const PlanarDifferenceSet& d, const Cover& cover, Format fmt) {
  switch (fmt) {
    case Format::json: {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "singer";
      j["q"] = d.q;
      j["g"] = cover.g;
      j["N"] = d.modulus;
      j["modulus"] = cover.modulus;
      j["difference_set"] = num_array(d.elements);
      Json blocks = Json::array();
      for (const auto& b : cover.blocks) blocks.push_back(num_array(b));
      j["blocks"] = blocks;
      j["certified"] = true;
      return dump(j);
    }
    case Format::csv: {
      std::string s = "block,elements\n";
      for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
        s += std::to_string(i) + ',' + joined(cover.blocks[i]) + '\n';
      }
      return s;
    }
    case Format::text: {
      std::ostringstream o;
      o << "q = " << d.q << ", N = " << d.modulus << ", g = " << cover.g
        << ", modulus = " << cover.modulus << '\n'
        << "D: " << joined(d.elements) << '\n';
      for (std::size_t i = 0; i < cover.blocks.size(); ++i) {
        o << "block " << i << ": " << joined(cover.blocks[i]) << '\n';
      }
      return o.str();
    }
  }
  return {};
}

std::string render(const VerifyOutcome& v, Format fmt) {
  const std::string kind = v.g == 1 ? "sidon" : "b2g";
  const std::string mod = v.modulus ? to_string(*v.modulus) : "";
  switch (fmt) {
    case Format::json: {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "verify";
      j["kind"] = kind;
      j["g"] = v.g;
      j["modulus"] = v.modulus ? Json(mod) : Json(nullptr);
      j["n"] = v.n;
      j["dedup_removed"] = v.dedup_removed;
      j["verified"] = !v.verdict.has_value();
      j["witness"] = v.verdict ? witness_json(*v.verdict) : Json(nullptr);
      return dump(j);
    }
    case Format::csv:
      return "kind,g,modulus,n,verified,witness\n" + kind + ',' + std::to_string(v.g) + ',' +
             mod + ',' + std::to_string(v.n) + ',' + (v.verdict ? "false" : "true") + ',' +
             (v.verdict ? v.verdict->describe() : "") + '\n';
    case Format::text:
      if (!v.verdict) return "verified: " + kind + " (n = " + std::to_string(v.n) + ")\n";
      return "rejected: " + v.verdict->describe() + '\n';
  }
  return {};
}

std::string render(const BenchTable& t, Format fmt, bool timing) {
  auto opt = [](const std::optional<std::size_t>& x) {
    return x ? std::to_string(*x) : std::string();
  };
  if (fmt == Format::json) {
    Json rows = Json::array();
    for (const BenchRow& r : t.rows) {
      Json j;
      j["family"] = r.family;
      j["instance"] = r.instance;
      j["n"] = r.n;
      j["p"] = r.p;
      j["m"] = r.m;
      j["b_size"] = r.b_size;
      j["kept"] = r.kept;
      j["subset"] = r.subset;
      j["ratio"] = fixed6(r.ratio);
      j["oracle_optimum"] = r.oracle_optimum ? Json(*r.oracle_optimum) : Json(nullptr);
      j["oracle_exhausted"] = r.oracle_optimum ? Json(r.oracle_exhausted) : Json(nullptr);
      if (timing) j["wall_ms"] = r.wall_ms;
      rows.push_back(j);
    }
    Json j;
    j["schema"] = kSchema;
    j["command"] = "bench";
    j["rows"] = rows;
    j["summary"] = {{"instances", t.rows.size()},
                    {"min_ratio", fixed6(t.min_ratio)},
                    {"mean_ratio", fixed6(t.mean_ratio)}};
    return dump(j);
  }
  std::ostringstream o;
  if (fmt == Format::csv) {
    o << "family,instance,n,p,m,b_size,kept,subset,ratio,oracle_optimum,oracle_exhausted,"
         "min_ratio,mean_ratio"
      << (timing ? ",wall_ms" : "") << '\n';
    for (const BenchRow& r : t.rows) {
      o << r.family << ',' << r.instance << ',' << r.n << ',' << r.p << ',' << r.m << ','
        << r.b_size << ',' << r.kept << ',' << r.subset << ',' << fixed6(r.ratio) << ','
        << opt(r.oracle_optimum) << ','
        << (r.oracle_optimum ? (r.oracle_exhausted ? "true" : "false") : "") << ",,";
      if (timing) o << ',' << fixed6(r.wall_ms);
      o << '\n';
    }
    o << "summary," << t.rows.size() << ",,,,,,,,,," << fixed6(t.min_ratio) << ','
      << fixed6(t.mean_ratio) << (timing ? "," : "") << '\n';
    return o.str();
  }
  for (const BenchRow& r : t.rows) {
    o << r.family << " #" << r.instance << ": n = " << r.n << ", p = " << r.p << ", m = " << r.m
      << ", |B| = " << r.b_size << ", |C| = " << r.kept << ", |S| = " << r.subset
      << ", ratio = " << fixed6(r.ratio);
    if (r.oracle_optimum) {
      o << ", oracle = " << *r.oracle_optimum << (r.oracle_exhausted ? "" : "+");
    }
    if (timing) o << ", " << fixed6(r.wall_ms) << " ms";
    o << '\n';
  }
  o << "summary: " << t.rows.size() << " instances, min ratio = " << fixed6(t.min_ratio)
    << ", mean ratio = " << fixed6(t.mean_ratio) << '\n';
  return o.str();
}

}  // namespace sidon
