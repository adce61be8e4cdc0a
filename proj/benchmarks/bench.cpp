#include <benchmark/benchmark.h>

#include <cstddef>
#include <map>

#include "exsplash/census.hpp"
#include "exsplash/finite_field.hpp"
#include "exsplash/circle_models.hpp"
#include "exsplash/projection.hpp"
#include "exsplash/splash.hpp"
#include "exsplash/subline_families.hpp"

using namespace exsplash;

namespace {

const FieldCtx& field(unsigned q) {
  static std::map<unsigned, FieldCtx> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, FieldCtx::make(q)).first;
  return it->second;
}

const PlaneCtx& plane(unsigned q) {
  static std::map<unsigned, PlaneCtx> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, PlaneCtx(field(q))).first;
  return it->second;
}

void bm_field_mul(benchmark::State& state) {
  const FieldCtx& F = field(static_cast<unsigned>(state.range(0)));
  unsigned i = 1;
  for (auto _ : state) {
    Fq3 x = F.mul(F.el(i % F.ext_size()), F.el((i * 7 + 3) % F.ext_size()));
    benchmark::DoNotOptimize(x);
    ++i;
  }
}
BENCHMARK(bm_field_mul)->Arg(2)->Arg(5)->Arg(9);

void bm_field_norm(benchmark::State& state) {
  const FieldCtx& F = field(static_cast<unsigned>(state.range(0)));
  unsigned i = 1;
  for (auto _ : state) {
    Fq x = F.norm(F.el(i % F.ext_size()));
    benchmark::DoNotOptimize(x);
    ++i;
  }
}
BENCHMARK(bm_field_norm)->Arg(2)->Arg(5);

void bm_plane_join(benchmark::State& state) {
  const PlaneCtx& pl = plane(static_cast<unsigned>(state.range(0)));
  const auto& pts = pl.points();
  std::size_t i = 0;
  for (auto _ : state) {
    ProjLine L = pl.join(pts[i % pts.size()], pts[(i + 1) % pts.size()]);
    benchmark::DoNotOptimize(L);
    ++i;
  }
}
BENCHMARK(bm_plane_join)->Arg(2)->Arg(3);

void bm_compute_splash(benchmark::State& state) {
  const unsigned q = static_cast<unsigned>(state.range(0));
  const PlaneCtx& pl = plane(q);
  Subplane pi = Subplane::canonical(pl);
  ProjLine ell = canonical_exterior_line(pl);
  for (auto _ : state) {
    Splash S = compute_splash(pl, pi, ell);
    benchmark::DoNotOptimize(S);
  }
}
BENCHMARK(bm_compute_splash)->Arg(2)->Arg(3)->Arg(4);

void bm_subplane_from_quadrangle(benchmark::State& state) {
  const unsigned q = static_cast<unsigned>(state.range(0));
  const PlaneCtx& pl = plane(q);
  Subplane pi = Subplane::canonical(pl);
  const auto& P = pi.points();
  std::array<ProjPoint, 4> quad{};
  bool found = false;
  for (std::size_t b = 1; b < P.size() && !found; ++b)
    for (std::size_t c = b + 1; c < P.size() && !found; ++c)
      for (std::size_t d = c + 1; d < P.size() && !found; ++d) {
        try {
          Subplane probe = Subplane::from_quadrangle(pl, P[0], P[b], P[c], P[d]);
          (void)probe;
          quad = {P[0], P[b], P[c], P[d]};
          found = true;
        } catch (const Error&) {
        }
      }
  if (!found) {
    state.SkipWithError("no admissible quadrangle found");
    return;
  }
  for (auto _ : state) {
    Subplane sp = Subplane::from_quadrangle(pl, quad[0], quad[1], quad[2], quad[3]);
    benchmark::DoNotOptimize(sp);
  }
}
BENCHMARK(bm_subplane_from_quadrangle)->Arg(2)->Arg(3);

void bm_classify_families(benchmark::State& state) {
  const unsigned q = static_cast<unsigned>(state.range(0));
  const PlaneCtx& pl = plane(q);
  Subplane pi = Subplane::canonical(pl);
  ProjLine ell = canonical_exterior_line(pl);
  for (auto _ : state) {
    SublineFamilies fam = classify_families(pl, pi, ell);
    benchmark::DoNotOptimize(fam);
  }
}
BENCHMARK(bm_classify_families)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_projection_census(benchmark::State& state) {
  const unsigned q = static_cast<unsigned>(state.range(0));
  const PlaneCtx& pl = plane(q);
  Subplane pi = Subplane::canonical(pl);
  ProjLine ell = canonical_exterior_line(pl);
  for (auto _ : state) {
    ProjectionCensus pc = projection_census(pl, pi, ell, 1);
    benchmark::DoNotOptimize(pc);
  }
}
BENCHMARK(bm_projection_census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_cover_census(benchmark::State& state) {
  const FieldCtx& F = field(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto cc = enumerate_covers(F);
    benchmark::DoNotOptimize(cc);
  }
}
BENCHMARK(bm_cover_census)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_exhaustive_census_q2(benchmark::State& state) {
  const PlaneCtx& pl = plane(2);
  ProjLine ell = canonical_exterior_line(pl);
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    ExhaustiveCensus ec = exhaustive_exterior_census(pl, ell, jobs);
    benchmark::DoNotOptimize(ec);
  }
}
BENCHMARK(bm_exhaustive_census_q2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3);

} // namespace

BENCHMARK_MAIN();
