#include "besicover/space_io.hpp"

#include <fstream>
#include <sstream>

#include "besicover/generators.hpp"

namespace besicover {

namespace {

[[noreturn]] void fail_parse(const std::string& message) {
  throw Error(Errc::ParseError, message);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail_parse(e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) {
    fail_parse("floating point distances are not accepted; use \"p/q\" strings");
  }
  fail_parse("expected a rational (\"p/q\" string or integer), got " + std::string(value.type_name()));
}

Json rational_to_json(const Rational& value) { return Json(to_string(value)); }

FiniteMetricSpace space_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dist")) fail_parse("space document needs a \"dist\" table");
  DistanceScale scale = DistanceScale::Plain;
  if (doc.contains("scale")) {
    const std::string s = doc.at("scale").get<std::string>();
    if (s == "squared") {
      scale = DistanceScale::Squared;
    } else if (s != "plain") {
      fail_parse("unknown scale '" + s + "'");
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
  const Json& dist = doc.at("dist");
  if (!dist.is_array() || dist.empty()) fail_parse("\"dist\" must be a nonempty array of rows");
  std::vector<std::vector<Rational>> table;
  table.reserve(dist.size());
  for (const Json& row : dist) {
    if (!row.is_array()) fail_parse("\"dist\" rows must be arrays");
    std::vector<Rational> values;
    values.reserve(row.size());
    for (const Json& cell : row) values.push_back(rational_from_json(cell));
    table.push_back(std::move(values));
  }
  try {
    return FiniteMetricSpace::from_table(std::move(labels), std::move(table), scale);
  } catch (const std::invalid_argument& e) {
    fail_parse(e.what());
  }
}

Json space_to_json(const FiniteMetricSpace& space) {
  Json doc;
  doc["labels"] = space.labels();
  doc["scale"] = to_cstring(space.scale());
  Json rows = Json::array();
  for (int i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < space.size(); ++j) row.push_back(to_string(space.distance(i, j)));
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return doc;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << column << ": " << e.what();
    fail_parse(msg.str());
  }
}

FiniteMetricSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return space_from_json(parse_json_text(buffer.str(), path));
}

void save_space(const FiniteMetricSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << space_to_json(space).dump(2) << "\n";
}

namespace {

FiniteMetricSpace dispatch_generator(const std::string& name, const Json& spec) {
  auto get_int = [&](const char* key, int fallback = -1) {
    if (spec.contains(key)) return spec.at(key).get<int>();
    if (fallback >= 0) return fallback;
    fail_parse(std::string("generator '") + name + "' needs \"" + key + "\"");
  };
  if (name == "paper_ultrametric" || name == "paper_ultra") {
    return make_paper_ultrametric(get_int("N"));
  }
  if (name == "grid_square" || name == "grid") return make_grid_square(get_int("N"));
  if (name == "zero_one") return make_zero_one(spec.contains("n") ? get_int("n") : get_int("N"));
  if (name == "lattice") {
    const int dim = get_int("dim", 1);
    const int side = get_int("side");
    std::string norm_name = spec.contains("norm") ? spec.at("norm").get<std::string>() : "linf";
    LatticeNorm norm;
    if (norm_name == "l1") {
      norm = LatticeNorm::L1;
    } else if (norm_name == "linf") {
      norm = LatticeNorm::Linf;
    } else if (norm_name == "l2sq" || norm_name == "l2-squared") {
      norm = LatticeNorm::L2Squared;
    } else {
      fail_parse("unknown lattice norm '" + norm_name + "'");
    }
    Rational spacing(1, 10);
    if (spec.contains("spacing")) spacing = rational_from_json(spec.at("spacing"));
    return make_lattice(dim, side, norm, spacing);
  }
  if (name == "dendrogram") {
    const int n = spec.contains("n") ? get_int("n") : get_int("N");
    const auto seed = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : 0;
    return make_random_ultrametric(n, seed);
  }
  fail_parse("unknown generator '" + name + "'");
}

}  // namespace

FiniteMetricSpace space_from_generator_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("gen")) fail_parse("generator spec needs \"gen\"");
  return dispatch_generator(spec.at("gen").get<std::string>(), spec);
}

FiniteMetricSpace space_from_generator_string(const std::string& spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.empty() || parts[0].empty()) fail_parse("empty generator spec");
  const std::string& name = parts[0];
  auto arg_int = [&](std::size_t i) {
    if (i >= parts.size()) fail_parse("generator '" + name + "' is missing an argument");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      fail_parse("bad integer '" + parts[i] + "' in generator spec");
    }
  };
  if (name == "paper_ultra" || name == "paper_ultrametric") {
    return make_paper_ultrametric(arg_int(1));
  }
  if (name == "grid" || name == "grid_square") return make_grid_square(arg_int(1));
  if (name == "zero_one") return make_zero_one(arg_int(1));
  if (name == "lattice") {
    Json j{{"gen", "lattice"}, {"dim", arg_int(1)}, {"side", arg_int(2)}};
    if (parts.size() > 3) j["norm"] = parts[3];
    if (parts.size() > 4) j["spacing"] = parts[4];
    return space_from_generator_spec(j);
  }
  if (name == "dendrogram") {
    const int n = arg_int(1);
    const std::uint64_t seed = parts.size() > 2 ? std::stoull(parts[2]) : 0;
    return make_random_ultrametric(n, seed);
  }
  fail_parse("unknown generator '" + name + "'");
}

std::string space_content_hash(const FiniteMetricSpace& space) {
  const std::string dump = space_to_json(space).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << hash;
  return out.str();
}

Json ball_to_json(const Ball& ball) {
  return Json{{"center", ball.center},
              {"radius", to_string(ball.radius)},
              {"kind", to_cstring(ball.kind)}};
}

Ball ball_from_json(const Json& doc) {
  Ball ball;
  ball.center = doc.at("center").get<int>();
  ball.radius = rational_from_json(doc.at("radius"));
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "open") {
    ball.kind = BallKind::Open;
  } else if (kind == "closed") {
    ball.kind = BallKind::Closed;
  } else {
    fail_parse("unknown ball kind '" + kind + "'");
  }
  return ball;
}

Json family_to_json(const BallFamily& family) {
  Json doc;
  doc["kind"] = to_cstring(family.kind());
  Json balls = Json::array();
  for (const Ball& b : family.balls()) {
    balls.push_back(Json{{"center", b.center}, {"radius", to_string(b.radius)}});
  }
  doc["balls"] = std::move(balls);
  return doc;
}

BallFamily family_from_json(const Json& doc) {
  const std::string kind_name = doc.at("kind").get<std::string>();
  BallKind kind;
  if (kind_name == "open") {
    kind = BallKind::Open;
  } else if (kind_name == "closed") {
    kind = BallKind::Closed;
  } else {
    fail_parse("unknown family kind '" + kind_name + "'");
  }
  BallFamily family(kind);
  for (const Json& b : doc.at("balls")) {
    family.add(b.at("center").get<int>(), rational_from_json(b.at("radius")));
  }
  return family;
}

}  // namespace besicover
