#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "exsplash/splash.hpp"

namespace exsplash {

// Deterministic random source shared by all sampling helpers. The engine and
// the bounded-draw rule are pinned so a seed reproduces byte-identical runs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform-ish draw in [0, bound) via modulo; bound must be positive.
  std::uint64_t next(std::uint64_t bound);

private:
  std::mt19937_64 gen_;
};

// All subplanes sharing one splash on the census line.
struct SplashClass {
  std::vector<std::uint32_t> splash_key; // sorted plane indices of the splash
  std::uint64_t subplane_count = 0;
  bool carriers_consistent = false; // every member realises the same carrier pair
  std::pair<std::uint32_t, std::uint32_t> carrier_key{}; // sorted plane indices
};

struct ExhaustiveCensus {
  std::uint64_t quadrangle_count = 0;         // quadrangles scanned (points off the line)
  std::uint64_t subplane_count = 0;           // distinct subplanes they generate
  std::uint64_t exterior_subplane_count = 0;  // ... that miss the line entirely
  std::vector<SplashClass> classes;           // sorted by splash_key
  // Point-index sets of the members of the class whose splash is the splash of
  // the canonical subplane (present only when that class occurs).
  std::vector<std::vector<std::uint32_t>> canonical_class_members;
};

// Enumerates every subplane generated by a quadrangle of points off the given
// line and groups the exterior ones by splash. Exhaustive: intended for q = 2.
ExhaustiveCensus exhaustive_exterior_census(const PlaneCtx& pl, const ProjLine& line,
                                            unsigned jobs = 1);

// The subplanes that contain the subline b and induce the given exterior
// splash on its host line. The subline must avoid the meet of its host with
// the splash host, and each of its points must see the splash host inside
// the splash (guaranteed when b lies in such a subplane already).
std::vector<Subplane> subplanes_through_subline_with_splash(const PlaneCtx& pl, const Subline& b,
                                                            const Splash& s);

// Common points of two subplanes (sorted).
std::vector<ProjPoint> subplane_intersection(const Subplane& a, const Subplane& b);

// True when the points are exactly an order-q subline.
bool points_form_subline(const PlaneCtx& pl, const std::vector<ProjPoint>& pts);

// Random subplane having the line as an exterior line (rejection sampling
// over quadrangles of points off the line).
Subplane random_exterior_subplane(const PlaneCtx& pl, const ProjLine& line, Rng& rng);

// Random subline suitable for the two-subplane search: its host line meets
// the splash host off the splash, and its points project into the splash.
Subline random_splash_subline(const PlaneCtx& pl, const Splash& s, Rng& rng);

// Random subplane with the same splash as the base subplane: a random
// perspectivity with the splash host as axis, optionally composed with the
// family-swapping involution.
Subplane random_subplane_with_splash(const PlaneCtx& pl, const Subplane& base, const Splash& s,
                                     Rng& rng);

// Closed-form counts.
std::uint64_t splash_count_closed_form(unsigned q);          // per line
std::uint64_t subplanes_per_splash_closed_form(unsigned q);  // class size
std::uint64_t exterior_subplanes_closed_form(unsigned q);    // per line

} // namespace exsplash
