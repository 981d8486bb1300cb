#include "deltacheck/commands.hpp"

#include <fstream>

#include "deltacheck/boxdecomp.hpp"
#include "deltacheck/ehrhart.hpp"
#include "deltacheck/io.hpp"
#include "deltacheck/orbring.hpp"
#include "deltacheck/random.hpp"

namespace deltacheck {

DeltaMethod parse_method(const std::string& name) {
  if (name == "count") return DeltaMethod::count;
  if (name == "boxes") return DeltaMethod::boxes;
  if (name == "orbifold") return DeltaMethod::orbifold;
  if (name == "all") return DeltaMethod::all;
  throw UsageError("unknown method '" + name + "' (expected count, boxes, orbifold or all)");
}

CommandOutput cmd_delta(const LatticePolytope& p, DeltaMethod method, std::uint64_t seed) {
  const LatticePolytope np = normalize(p).polytope;
  switch (method) {
    case DeltaMethod::count:
      return {render(to_json(counting_delta(np)))};
    case DeltaMethod::boxes:
      return {render(to_json(box_delta(generic_triangulation(np, seed))))};
    case DeltaMethod::orbifold:
      return {render(to_json(DeformedGroupRing(generic_triangulation(np, seed)).hilbert_delta()))};
    case DeltaMethod::all:
      break;
  }
  const LatticeTriangulation t = generic_triangulation(np, seed);
  const TripleDelta d = triple_delta(t, DeformedGroupRing(t));
  Json j;
  j["count"] = to_json(d.count);
  j["boxes"] = to_json(d.boxes);
  j["orbifold"] = to_json(d.orbifold);
  j["agree"] = d.agree();
  return {render(j), d.agree() ? 0 : 1};
}

CommandOutput cmd_hvector(const LatticePolytope& p, std::uint64_t seed) {
  const LatticeTriangulation t = generic_triangulation(normalize(p).polytope, seed);
  Json j;
  j["name"] = p.name();
  j["h"] = to_json(h_polynomial(t));
  j["unimodular"] = is_unimodular(t);
  j["simplices"] = t.simplices().size();
  return {render(j)};
}

CommandOutput cmd_decompose(const LatticePolytope& p, std::uint64_t seed) {
  const LatticeTriangulation t = generic_triangulation(normalize(p).polytope, seed);
  Json j;
  j["name"] = p.name();
  Json pts = Json::array();
  for (const auto& x : t.points()) pts.push_back(to_json(x));
  j["points"] = std::move(pts);
  Json terms = Json::array();
  for (const auto& term : box_decomposition(t)) {
    Json e;
    e["face"] = term.face;
    e["box"] = to_json(term.box);
    e["link_h"] = to_json(term.link_h);
    e["d_ref"] = term.d_ref;
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  j["delta"] = to_json(box_delta(t));
  return {render(j)};
}

CommandOutput cmd_orbifold(const LatticePolytope& p, std::uint64_t seed) {
  const DeformedGroupRing ring(generic_triangulation(normalize(p).polytope, seed));
  const unsigned d = ring.triangulation().dimension();
  Json degrees = Json::array();
  std::vector<Int> delta;
  for (unsigned k = 0; k <= d + 2; ++k) {
    const GradedSlice s = ring.slice(k);
    Json e;
    e["k"] = k;
    e["basis"] = s.basis.size();
    e["relation_rank"] = s.relation_rank;
    e["blocks"] = s.blocks;
    e["quotient"] = to_json(s.quotient_dimension());
    degrees.push_back(std::move(e));
    if (k <= d) delta.push_back(s.quotient_dimension());
  }
  Json j;
  j["name"] = p.name();
  j["degrees"] = std::move(degrees);
  j["delta"] = to_json(IntPoly(std::move(delta)));
  return {render(j)};
}

CommandOutput cmd_monotone(const LatticePolytope& p, const LatticePolytope& q, std::uint64_t seed,
                           bool with_timing) {
  const PairReport r = verify_pair(p, q, seed);
  return {render(to_json(r, with_timing)), r.passed() ? 0 : 1};
}

std::string generated_pair_text(const PairBounds& bounds, std::uint64_t seed, unsigned index) {
  auto [p, q] = random_pair(bounds, derive_seed(seed, index));
  const std::string stem = "pair_" + std::to_string(seed) + "_" + std::to_string(index);
  return render(pair_to_json(LatticePolytope(p.vertices(), stem + "/P"),
                             LatticePolytope(q.vertices(), stem + "/Q")));
}

CommandOutput cmd_gen(const PairBounds& bounds, unsigned count, std::uint64_t seed,
                      const std::filesystem::path& out_dir) {
  random_pair(bounds, seed);  // validates the bounds before touching the filesystem
  std::filesystem::create_directories(out_dir);
  Json files = Json::array();
  for (unsigned i = 0; i < count; ++i) {
    const std::string name =
        "pair_" + std::to_string(seed) + "_" + std::to_string(i) + ".json";
    std::ofstream out(out_dir / name, std::ios::binary);
    if (!out) throw UsageError((out_dir / name).string() + ": cannot write");
    out << generated_pair_text(bounds, seed, i);
    files.push_back(name);
  }
  Json j;
  j["files"] = std::move(files);
  return {render(j)};
}

}  // namespace deltacheck
