#include "deltacheck/io.hpp"

#include <fstream>
#include <sstream>

namespace deltacheck {

namespace {

std::string field(const std::string& where, const std::string& name) {
  return where.empty() ? name : where + "." + name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(source + ": " + e.what());
  }
}

}  // namespace

LatticePolytope polytope_from_json(const Json& body, const std::string& where) {
  if (!body.is_object())
    throw UsageError((where.empty() ? std::string("polytope") : where) + ": expected an object");
  std::string name;
  if (body.contains("name")) {
    if (!body["name"].is_string()) throw UsageError(field(where, "name") + ": expected a string");
    name = body["name"].get<std::string>();
  }
  if (!body.contains("vertices")) throw UsageError(field(where, "vertices") + ": missing");
  const Json& vs = body["vertices"];
  if (!vs.is_array() || vs.empty())
    throw UsageError(field(where, "vertices") + ": expected a nonempty array");
  std::vector<IntVector> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = field(where, "vertices[" + std::to_string(i) + "]");
    if (!vs[i].is_array()) throw UsageError(at + ": expected an array of integers");
    if (vs[i].size() != vs[0].size())
      throw UsageError(at + ": has " + std::to_string(vs[i].size()) + " coordinates, expected " +
                       std::to_string(vs[0].size()));
    IntVector v;
    for (std::size_t c = 0; c < vs[i].size(); ++c) {
      const Json& x = vs[i][c];
      if (x.is_number_unsigned()) {
        v.emplace_back(std::to_string(x.get<std::uint64_t>()));
      } else if (x.is_number_integer()) {
        v.emplace_back(std::to_string(x.get<std::int64_t>()));
      } else {
        throw UsageError(at + "[" + std::to_string(c) + "]: expected an integer");
      }
    }
    vertices.push_back(std::move(v));
  }
  try {
    return LatticePolytope(std::move(vertices), std::move(name));
  } catch (const UsageError& e) {
    throw UsageError(field(where, "vertices") + ": " + e.what());
  }
}

LatticePolytope parse_polytope(const std::string& text, const std::string& source) {
  return polytope_from_json(parse_text(text, source), source);
}

LatticePolytope load_polytope_file(const std::filesystem::path& path) {
  return parse_polytope(read_file(path), path.string());
}

std::pair<LatticePolytope, LatticePolytope> parse_pair(const std::string& text,
                                                       const std::string& source) {
  const Json j = parse_text(text, source);
  if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
    throw UsageError(source + ": expected an object with fields P and Q");
  LatticePolytope p = polytope_from_json(j["P"], source + ": P");
  LatticePolytope q = polytope_from_json(j["Q"], source + ": Q");
  if (p.ambient_rank() != q.ambient_rank())
    throw UsageError(source + ": P and Q live in lattices of different rank");
  if (!contains(p, q)) throw UsageError(source + ": Q is not contained in P");
  return {std::move(p), std::move(q)};
}

std::pair<LatticePolytope, LatticePolytope> load_pair_file(const std::filesystem::path& path) {
  return parse_pair(read_file(path), path.string());
}

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(std::span<const Int> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntPoly& p) {
  if (p.is_zero()) return Json::array({0});
  return to_json(std::span<const Int>(p.coefficients()));
}

Json to_json(const LatticePolytope& p) {
  Json j;
  j["name"] = p.name();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  j["vertices"] = std::move(vs);
  return j;
}

Json pair_to_json(const LatticePolytope& p, const LatticePolytope& q) {
  Json j;
  j["P"] = to_json(p);
  j["Q"] = to_json(q);
  return j;
}

Json to_json(const PairReport& r, bool with_timing) {
  Json j;
  j["P"] = r.p_name;
  j["Q"] = r.q_name;
  j["delta_P"] = to_json(r.delta_p);
  j["delta_Q"] = to_json(r.delta_q);
  j["monotone"] = r.monotone;
  j["agree_P"] = r.p.agree();
  j["agree_Q"] = r.q.agree();
  j["linkwise"] = r.linkwise;
  j["hom_check"] = r.hom_check;
  j["hom_samples"] = r.hom_samples;
  j["surjective"] = r.surjective;
  Json seeds;
  seeds["triangulation"] = r.seed;
  seeds["hom"] = r.hom_seed;
  seeds["attempts"] = r.attempts;
  seeds["penalty"] = to_json(r.penalty);
  j["seeds"] = std::move(seeds);
  j["passed"] = r.passed();
  if (!r.passed()) j["certificate"] = r.certificate();
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

std::string render(const Json& j) { return j.dump() + "\n"; }

}  // namespace deltacheck
