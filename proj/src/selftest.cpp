#include "deltacheck/selftest.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "deltacheck/boxdecomp.hpp"
#include "deltacheck/commands.hpp"
#include "deltacheck/ehrhart.hpp"
#include "deltacheck/io.hpp"
#include "deltacheck/random.hpp"

namespace deltacheck {

namespace {

using Clock = std::chrono::steady_clock;

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntPoly poly(std::initializer_list<long> xs) {
  std::vector<Int> c;
  for (long x : xs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

LatticePolytope standard_simplex(std::size_t d, long scale, std::string name) {
  std::vector<IntVector> vs{IntVector(d)};
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = scale;
    vs.push_back(std::move(e));
  }
  return LatticePolytope(std::move(vs), std::move(name));
}

LatticePolytope reeve(long h) {
  return LatticePolytope({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, h})},
                         "reeve_" + std::to_string(h));
}

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body, turning any exception into a failed result.
template <typename Body>
CriterionResult run_criterion(int id, std::string name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = since(start);
  return r;
}

std::string count_str(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

std::vector<GoldenCase> golden_table() {
  std::vector<GoldenCase> g;
  for (long k = 1; k <= 4; ++k)
    g.push_back({LatticePolytope({iv({0}), iv({k})}, "segment_" + std::to_string(k)),
                 poly({1, k - 1})});
  g.push_back({LatticePolytope({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, "unit_square"),
               poly({1, 1})});
  std::vector<IntVector> cube;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) cube.push_back(iv({x, y, z}));
  g.push_back({LatticePolytope(cube, "unit_cube"), poly({1, 4, 1})});
  g.push_back({standard_simplex(2, 2, "two_triangle"), poly({1, 3})});
  for (long h = 2; h <= 5; ++h) g.push_back({reeve(h), poly({1, 0, h - 1})});
  for (std::size_t d = 1; d <= 3; ++d)
    g.push_back({standard_simplex(d, 1, "simplex_" + std::to_string(d)), poly({1})});
  return g;
}

std::vector<GoldenCase> parse_golden_table(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("golden table: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("golden table: expected an array");
  std::vector<GoldenCase> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "golden[" + std::to_string(i) + "]";
    LatticePolytope p = polytope_from_json(j[i], where);
    if (!j[i].contains("delta") || !j[i]["delta"].is_array())
      throw UsageError(where + ".delta: expected an array of integers");
    std::vector<Int> c;
    for (const auto& x : j[i]["delta"]) {
      if (!x.is_number_integer()) throw UsageError(where + ".delta: expected integers");
      c.emplace_back(std::to_string(x.get<std::int64_t>()));
    }
    out.push_back({std::move(p), IntPoly(std::move(c))});
  }
  return out;
}

std::vector<LatticePolytope> generated_corpus(unsigned count, unsigned max_coord,
                                              std::uint64_t seed) {
  std::vector<LatticePolytope> out;
  for (unsigned i = 0; i < count; ++i) {
    const std::size_t dim = 1 + i % 3;
    SeededRng rng(derive_seed(seed, i));
    while (true) {
      const std::size_t n = dim + 1 + rng.below(3);
      std::vector<IntVector> pts(n, IntVector(dim));
      for (auto& x : pts)
        for (auto& c : x) c = Int(static_cast<unsigned long>(rng.below(max_coord + 1)));
      LatticePolytope p = LatticePolytope::hull_of(pts, "corpus_" + std::to_string(i));
      if (p.is_full_dimensional()) {
        out.push_back(std::move(p));
        break;
      }
    }
  }
  return out;
}

SelftestOptions selftest_options(bool deep) {
  SelftestOptions o;
  o.deep = deep;
  if (deep) {
    o.corpus_size = 100;
    o.pair_count = 200;
    o.budget_triple *= 3;
    o.budget_monotone *= 3;
  }
  return o;
}

struct CorpusEntry {
  LatticePolytope p;  // full-dimensional
  IntPoly delta;      // by counting
  std::vector<LatticeTriangulation> ts;
};

struct PairEntry {
  LatticePolytope p, q;
  std::uint64_t seed;
  PairReport report;
};

struct Selftest::State {
  SelftestOptions opt;
  std::vector<GoldenCase> golden;
  std::optional<std::vector<CorpusEntry>> corpus;
  std::optional<std::vector<PairEntry>> pairs;

  const std::vector<CorpusEntry>& build_corpus() {
    if (corpus) return *corpus;
    std::vector<LatticePolytope> ps;
    for (const auto& g : golden) ps.push_back(normalize(g.polytope).polytope);
    for (auto& p : generated_corpus(opt.corpus_size, opt.corpus_max_coord, opt.seed))
      ps.push_back(std::move(p));
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CorpusEntry e{ps[i], counting_delta(ps[i]), {}};
      for (unsigned s = 0; s < opt.triangulation_seeds; ++s)
        e.ts.push_back(generic_triangulation(ps[i], derive_seed(derive_seed(opt.seed, 1000 + i), s)));
      out.push_back(std::move(e));
    }
    corpus = std::move(out);
    return *corpus;
  }

  const std::vector<PairEntry>& build_pairs() {
    if (pairs) return *pairs;
    std::vector<PairEntry> out;
    for (unsigned i = 0; i < opt.pair_count; ++i) {
      const std::uint64_t seed = derive_seed(opt.seed, 5000 + i);
      auto [p, q] = random_pair({1 + i % 3, opt.pair_max_coord, false}, seed);
      p = LatticePolytope(p.vertices(), "pair_" + std::to_string(i) + "/P");
      q = LatticePolytope(q.vertices(), "pair_" + std::to_string(i) + "/Q");
      PairReport r = verify_pair(p, q, derive_seed(seed, 1), opt.hom_samples);
      out.push_back({std::move(p), std::move(q), derive_seed(seed, 1), std::move(r)});
    }
    pairs = std::move(out);
    return *pairs;
  }
};

Selftest::Selftest(SelftestOptions options) : state_(std::make_unique<State>()) {
  state_->opt = std::move(options);
  state_->golden = state_->opt.golden ? *state_->opt.golden : golden_table();
}

Selftest::~Selftest() = default;

CriterionResult Selftest::triple_agreement() {
  CriterionResult result = run_criterion(1, "triple agreement: count = boxes = orbifold", [&](CriterionResult& r) {
    const auto& corpus = state_->build_corpus();
    std::size_t checked = 0;
    for (const auto& e : corpus) {
      for (const auto& t : e.ts) {
        const IntPoly boxes = box_delta(t);
        const IntPoly orbifold = DeformedGroupRing(t).hilbert_delta();
        ++checked;
        if (boxes != e.delta || orbifold != e.delta) {
          r.detail = e.p.name() + " " + to_string(std::span<const Int>(t.heights())) +
                     ": count " + e.delta.to_string() + ", boxes " + boxes.to_string() +
                     ", orbifold " + orbifold.to_string();
          return;
        }
      }
    }
    r.passed = true;
    r.detail = count_str(corpus.size(), "polytopes") + " x " +
               std::to_string(state_->opt.triangulation_seeds) + " seeds, " +
               count_str(checked, "triangulations");
  });
  const double budget = state_->opt.budget_triple;
  if (result.passed && budget > 0 && result.seconds > budget) {
    result.passed = false;
    result.detail += "; over the time budget";
  }
  return result;
}

CriterionResult Selftest::golden_values() {
  return run_criterion(2, "golden delta values", [&](CriterionResult& r) {
    for (const auto& g : state_->golden) {
      const IntPoly d = counting_delta(normalize(g.polytope).polytope);
      if (d != g.delta) {
        r.detail = g.polytope.name() + ": counted " + d.to_string() + ", table says " +
                   g.delta.to_string();
        return;
      }
    }
    r.passed = true;
    r.detail = count_str(state_->golden.size(), "golden polytopes");
  });
}

CriterionResult Selftest::monotonicity() {
  return run_criterion(3, "monotonicity delta_Q <= delta_P", [&](CriterionResult& r) {
    const auto start = Clock::now();
    const auto& pairs = state_->build_pairs();
    for (const auto& e : pairs) {
      if (!e.report.monotone) {
        r.detail = e.report.certificate();
        return;
      }
    }
    std::set<unsigned> dims;
    for (const auto& e : pairs) dims.insert(e.p.ambient_rank());
    r.passed = true;
    r.detail = count_str(pairs.size(), "pairs") + " over " + count_str(dims.size(), "dimensions");
    const double budget = state_->opt.budget_monotone;
    if (budget > 0 && since(start) > budget) {
      r.passed = false;
      r.detail += "; over the time budget";
    }
  });
}

CriterionResult Selftest::h_vector_sandwich() {
  return run_criterion(4, "h-vector sandwich 0 <= h_T <= delta_P", [&](CriterionResult& r) {
    auto check = [&](const LatticeTriangulation& t, const IntPoly& delta,
                     const std::string& label) -> bool {
      const IntPoly h = h_polynomial(t);
      const bool uni = is_unimodular(t);
      if (h.has_negative_coefficient() || !poly_leq(h, delta) || (h == delta) != uni) {
        r.detail = label + ": h_T = " + h.to_string() + ", delta = " + delta.to_string() +
                   ", unimodular = " + (uni ? "yes" : "no");
        return false;
      }
      return true;
    };
    std::size_t unimodular = 0, other = 0;
    for (const auto& e : state_->build_corpus())
      for (const auto& t : e.ts) {
        if (!check(t, e.delta, e.p.name())) return;
        (is_unimodular(t) ? unimodular : other) += 1;
      }

    struct Fixed {
      LatticePolytope p;
      std::vector<long> heights;
      bool unimodular;
    };
    const std::vector<Fixed> fixed = {
        {LatticePolytope({iv({0}), iv({2})}, "split_segment"), {0, -1, 0}, true},
        {LatticePolytope({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, "diagonal_square"),
         {0, 0, 0, 1},
         true},
        {LatticePolytope({iv({0}), iv({2})}, "trivial_segment"), {0, 0, 0}, false},
        {reeve(3), {0, 0, 0, 0}, false},
    };
    for (const auto& f : fixed) {
      std::vector<Int> heights(f.heights.begin(), f.heights.end());
      const LatticeTriangulation t = triangulate(f.p, heights);
      if (is_unimodular(t) != f.unimodular) {
        r.detail = f.p.name() + ": unexpected unimodularity";
        return;
      }
      if (!check(t, counting_delta(f.p), f.p.name())) return;
    }
    r.passed = unimodular > 0 && other > 0;
    r.detail = count_str(unimodular, "unimodular") + " and " + count_str(other, "non-unimodular") +
               " corpus triangulations, plus 4 fixed cases";
  });
}

CriterionResult Selftest::restriction_checks() {
  return run_criterion(5, "restriction: surjectivity, ring hom, linkwise", [&](CriterionResult& r) {
    const auto& pairs = state_->build_pairs();
    std::size_t degrees = 0, samples = 0;
    for (const auto& e : pairs) {
      const PairReport& rep = e.report;
      bool surj = rep.surjective.size() == normalize(e.q).polytope.ambient_rank() + 1;
      for (bool s : rep.surjective) surj = surj && s;
      if (!surj || !rep.hom_check || rep.hom_samples < 1000 || !rep.linkwise) {
        r.detail = rep.certificate();
        return;
      }
      degrees += rep.surjective.size();
      samples += rep.hom_samples;
    }
    r.passed = true;
    r.detail = count_str(pairs.size(), "pairs") + ", " +
               count_str(degrees, "surjective degrees") + ", " +
               count_str(samples, "ring-hom samples");
  });
}

CriterionResult Selftest::structural_identities() {
  return run_criterion(6, "structural identities", [&](CriterionResult& r) {
    std::size_t simplices = 0, boxes = 0;
    for (const auto& e : state_->build_corpus()) {
      const std::string& name = e.p.name();
      const std::size_t d = e.p.ambient_rank();
      const Int vol = normalized_volume(e.p);
      if (e.delta.evaluate(1) != vol) {
        r.detail = name + ": delta(1) = " + e.delta.evaluate(1).get_str() + " but volume " +
                   vol.get_str();
        return;
      }
      const Int interior_count = count_lattice_points(e.p, 1) - Int(static_cast<unsigned long>(d)) - 1;
      if (e.delta.coeff(1) != interior_count) {
        r.detail = name + ": delta_1 = " + e.delta.coeff(1).get_str() + " but #P - d - 1 = " +
                   interior_count.get_str();
        return;
      }
      for (const auto& t : e.ts) {
        for (const auto& s : t.simplices()) {
          ++simplices;
          Int total = 0;
          for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
            Face f;
            for (std::size_t i = 0; i < s.size(); ++i)
              if (mask & (1u << i)) f.push_back(s[i]);
            total += static_cast<unsigned long>(box_points(f, t).size());
          }
          if (total != simplex_volume(t, s)) {
            r.detail = name + ": simplex " + to_string(s) + " has " + total.get_str() +
                       " box points, |det| = " + simplex_volume(t, s).get_str();
            return;
          }
        }
        for (const auto& f : t.faces()) {
          if (f.empty()) continue;
          const auto pts = box_points(f, t);
          if (pts.empty()) continue;
          ++boxes;
          IntVector sum(d + 1);
          for (auto i : f) sum = add(sum, t.lifted(i));
          std::set<IntVector> ws, reflected;
          for (const auto& b : pts) {
            ws.insert(b.w);
            reflected.insert(subtract(sum, b.w));
          }
          if (ws != reflected) {
            r.detail = name + ": box of face " + to_string(f) + " is not symmetric";
            return;
          }
          const IntPoly ages = box_poly(f, t);
          for (std::size_t a = 0; a <= f.size(); ++a)
            if (ages.coeff(a) != ages.coeff(f.size() - a)) {
              r.detail = name + ": ages on face " + to_string(f) + " are not palindromic: " +
                         ages.to_string();
              return;
            }
        }
      }
      const DeformedGroupRing ring(e.ts.front());
      for (unsigned k = d + 1; k <= d + 2; ++k) {
        const Int g = ring.graded_dimension(k);
        if (g != 0) {
          r.detail = name + ": graded dimension " + g.get_str() + " in degree " + std::to_string(k);
          return;
        }
      }
      if (state_->opt.deep) {
        const auto counts = ehrhart_counts(e.p, d + 2);
        for (unsigned m = d + 1; m <= d + 2; ++m) {
          Int f = 0;
          for (std::size_t i = 0; i <= d && i <= m; ++i) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), m - i + d, d);
            f += e.delta.coeff(i) * b;
          }
          if (f != counts[m]) {
            r.detail = name + ": count at m = " + std::to_string(m) + " is " +
                       counts[m].get_str() + ", delta predicts " + f.get_str();
            return;
          }
        }
      }
    }
    r.passed = true;
    r.detail = count_str(simplices, "simplex partitions") + ", " +
               count_str(boxes, "symmetric boxes") +
               (state_->opt.deep ? ", counts at m = d+1, d+2" : "");
  });
}

CriterionResult Selftest::determinism() {
  return run_criterion(7, "determinism and regularity", [&](CriterionResult& r) {
    const auto& corpus = state_->build_corpus();
    std::size_t outputs = 0, certificates = 0;
    auto same = [&](const CommandOutput& a, const CommandOutput& b, const std::string& what) {
      ++outputs;
      if (a.out == b.out && a.exit_code == b.exit_code) return true;
      r.detail = what + " differs between runs";
      return false;
    };
    const std::uint64_t seed = state_->opt.seed;
    for (std::size_t i = 0; i < corpus.size(); i += std::max<std::size_t>(1, corpus.size() / 8)) {
      const LatticePolytope& p = corpus[i].p;
      if (!same(cmd_delta(p, DeltaMethod::all, seed), cmd_delta(p, DeltaMethod::all, seed),
                "delta " + p.name()) ||
          !same(cmd_hvector(p, seed), cmd_hvector(p, seed), "hvector " + p.name()) ||
          !same(cmd_decompose(p, seed), cmd_decompose(p, seed), "decompose " + p.name()) ||
          !same(cmd_orbifold(p, seed), cmd_orbifold(p, seed), "orbifold " + p.name()))
        return;
    }
    const PairBounds bounds{2, 3, false};
    for (unsigned i = 0; i < 3; ++i) {
      ++outputs;
      if (generated_pair_text(bounds, seed, i) != generated_pair_text(bounds, seed, i)) {
        r.detail = "generated pair " + std::to_string(i) + " differs between runs";
        return;
      }
    }
    for (const auto& e : corpus)
      for (const auto& t : e.ts) {
        ++certificates;
        if (!regularity_certificate(t)) {
          r.detail = e.p.name() + ": heights do not reproduce the triangulation";
          return;
        }
        if (auto bad = validate_triangulation(t)) {
          r.detail = e.p.name() + ": " + *bad;
          return;
        }
      }
    const auto& pairs = state_->build_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& e = pairs[i];
      const TriangulatedPair pair = triangulation_of_pair(e.p, e.q, e.seed);
      certificates += 2;
      if (!regularity_certificate(pair.whole) || !regularity_certificate(pair.restricted) ||
          pair.whole.heights() != e.report.heights) {
        r.detail = e.p.name() + ": pair triangulation not reproduced; " + e.report.certificate();
        return;
      }
      if (i < 3 && !same(cmd_monotone(e.p, e.q, e.seed), cmd_monotone(e.p, e.q, e.seed),
                         "monotone " + e.p.name()))
        return;
    }
    r.passed = true;
    r.detail = count_str(outputs, "repeated outputs identical") + ", " +
               count_str(certificates, "regularity certificates");
  });
}

std::vector<CriterionResult> Selftest::run_all() {
  std::vector<CriterionResult> out;
  out.push_back(triple_agreement());
  out.push_back(golden_values());
  out.push_back(monotonicity());
  out.push_back(h_vector_sandwich());
  out.push_back(restriction_checks());
  out.push_back(structural_identities());
  out.push_back(determinism());
  return out;
}

}  // namespace deltacheck
