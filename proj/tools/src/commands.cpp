#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "exsplash/census.hpp"
#include "exsplash/circle_models.hpp"
#include "exsplash/errors.hpp"
#include "exsplash/plane.hpp"
#include "exsplash/projection.hpp"
#include "exsplash/splash.hpp"
#include "exsplash/subline_families.hpp"
#include "exsplash/text_io.hpp"
#include "exsplash/verification.hpp"

namespace exsplash::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void require_geometry_order(unsigned q) {
  if (q < 2 || q > 5)
    fail(Errc::BadParameters,
         "geometry subcommands support q in {2,3,4,5}; got q = " + std::to_string(q));
}

void require_census_order(unsigned q) {
  if (q != 2 && q != 3)
    fail(Errc::BadParameters,
         "this census is supported at q = 2 (exhaustive) and q = 3 (sampled); got q = " +
             std::to_string(q));
}

// Element text is up to three base-q digits, most significant first, matching
// the output format: v = ((a2*q) + a1)*q + a0 for "a2a1a0".
Fq3 parse_element(const FieldCtx& F, const std::string& s) {
  if (s.empty() || s.size() > 3)
    fail(Errc::BadParameters, "element '" + s + "' is not 1-3 base-q digits");
  unsigned v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') fail(Errc::BadParameters, "element '" + s + "' has a non-digit");
    unsigned d = static_cast<unsigned>(ch - '0');
    if (d >= F.q())
      fail(Errc::BadParameters, "element '" + s + "' has digit " + std::to_string(d) +
                                    " outside GF(" + std::to_string(F.q()) + ")");
    v = v * F.q() + d;
  }
  return F.el(v);
}

ProjLine parse_line(const PlaneCtx& pl, const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ',') { parts.push_back(cur); cur.clear(); }
    else cur.push_back(ch);
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    fail(Errc::BadParameters, "--line expects three comma-separated elements l,m,n");
  const FieldCtx& F = pl.field();
  Fq3 l = parse_element(F, parts[0]);
  Fq3 m = parse_element(F, parts[1]);
  Fq3 n = parse_element(F, parts[2]);
  return pl.make_line(l, m, n); // rejects the zero triple
}

std::vector<std::string> point_texts(const FieldCtx& F, const std::vector<ProjPoint>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(text_of(F, p));
  return out;
}

std::vector<std::string> theta_texts(const FieldCtx& F, const std::vector<Pg1Point>& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(text_of(F, t));
  return out;
}

std::string kv_text(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(w - k.size() + 2, ' ');
    out += v;
    out += '\n';
  }
  return out;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  std::vector<std::vector<std::string>> data;
  for (const auto& [k, v] : rows) data.push_back({k, csv_safe(v)});
  write_csv(os, {"field", "value"}, data);
  return os.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Shared canonical context for the geometry subcommands.
struct Scene {
  FieldCtx F;
  PlaneCtx pl;
  Subplane pi;
  ProjLine ell;

  explicit Scene(const Options& opt)
      : F(poly_of(opt) ? FieldCtx::make(opt.q, *poly_of(opt)) : FieldCtx::make(opt.q)),
        pl(F),
        pi(Subplane::canonical(pl)),
        ell(canonical_exterior_line(pl)) {}
};

} // namespace

// ----------------------------------------------------------------- field
int cmd_field(const Options& opt) {
  auto poly = poly_of(opt); // may throw BadParameters -> config error
  FieldCtx F = poly ? FieldCtx::make(opt.q, *poly) : FieldCtx::make(opt.q);

  const unsigned n1 = F.q() * F.q() + F.q() + 1;
  const unsigned tau_order = F.mul_order(F.tau());
  const bool tau_primitive = tau_order == F.ext_units();

  bool norm_mult = true, trace_linear = true;
  for (unsigned a = 0; a < F.ext_size() && norm_mult; ++a)
    for (unsigned b = 0; b < F.ext_size(); ++b) {
      Fq3 x = F.el(a), y = F.el(b);
      if (F.norm(F.mul(x, y)) != F.mul(F.norm(x), F.norm(y))) { norm_mult = false; break; }
    }
  for (unsigned a = 0; a < F.ext_size() && trace_linear; ++a)
    for (unsigned b = 0; b < F.ext_size(); ++b) {
      Fq3 x = F.el(a), y = F.el(b);
      if (F.trace(F.add(x, y)) != F.add(F.trace(x), F.trace(y))) { trace_linear = false; break; }
    }
  for (unsigned l = 0; l < F.q() && trace_linear; ++l)
    for (unsigned a = 0; a < F.ext_size(); ++a) {
      Fq lam = F.q_el(l);
      Fq3 x = F.el(a);
      if (F.trace(F.mul(F.embed(lam), x)) != F.mul(lam, F.trace(x))) { trace_linear = false; break; }
    }

  bool fibers_ok = true;
  {
    std::set<std::uint16_t> seen;
    for (unsigned f = 1; f < F.q(); ++f) {
      auto fiber = F.solve_norm_eq(F.q_el(f));
      if (fiber.size() != n1) fibers_ok = false;
      for (Fq3 x : fiber)
        if (!seen.insert(x.v).second) fibers_ok = false;
    }
    if (seen.size() != F.ext_units()) fibers_ok = false;
  }

  const bool pass = tau_primitive && norm_mult && trace_linear && fibers_ok;
  const CubicCoeffs pc = F.poly();
  const std::string poly_text = "tau^3 = " + text_of(F, pc.t2) + "*tau^2 + " +
                                text_of(F, pc.t1) + "*tau + " + text_of(F, pc.t0);

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "field";
    j["q"] = F.q();
    j["p"] = F.p();
    j["ext_size"] = F.ext_size();
    j["poly"] = {{"t0", pc.t0.v}, {"t1", pc.t1.v}, {"t2", pc.t2.v}};
    j["poly_text"] = poly_text;
    j["tau_order"] = tau_order;
    j["norm_fiber_count"] = F.q() - 1;
    j["norm_fiber_size"] = n1;
    j["checks"] = {{"tau_primitive", tau_primitive},
                   {"norm_multiplicative", norm_mult},
                   {"trace_gfq_linear", trace_linear},
                   {"norm_fibers_partition", fibers_ok}};
    j["pass"] = pass;
    payload = dump(j);
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"command", "field"},
        {"q", std::to_string(F.q())},
        {"p", std::to_string(F.p())},
        {"ext_size", std::to_string(F.ext_size())},
        {"poly", poly_text},
        {"tau_order", std::to_string(tau_order)},
        {"norm_fiber_count", std::to_string(F.q() - 1)},
        {"norm_fiber_size", std::to_string(n1)},
        {"tau_primitive", bool_text(tau_primitive)},
        {"norm_multiplicative", bool_text(norm_mult)},
        {"trace_gfq_linear", bool_text(trace_linear)},
        {"norm_fibers_partition", bool_text(fibers_ok)},
        {"pass", bool_text(pass)},
    };
    payload = opt.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- splash
int cmd_splash(const Options& opt) {
  require_geometry_order(opt.q);
  Scene sc(opt);
  const ProjLine line = opt.line.empty() ? sc.ell : parse_line(sc.pl, opt.line);

  std::size_t on_line = 0;
  for (const auto& p : sc.pi.points())
    if (sc.pl.incident(p, line)) ++on_line;
  const std::string kind = on_line == 0 ? "exterior" : (on_line == 1 ? "tangent" : "secant");

  ojson j;
  j["command"] = "splash";
  j["q"] = sc.F.q();
  j["line"] = text_of(sc.F, line);
  j["kind"] = kind;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"command", "splash"},
      {"q", std::to_string(sc.F.q())},
      {"line", text_of(sc.F, line)},
      {"kind", kind},
  };

  if (kind == "secant") {
    std::vector<ProjPoint> meet;
    for (const auto& p : sc.pi.points())
      if (sc.pl.incident(p, line)) meet.push_back(p);
    std::sort(meet.begin(), meet.end());
    j["subplane_points_on_line"] = point_texts(sc.F, meet);
    rows.push_back({"subplane_points_on_line", join(point_texts(sc.F, meet), " ")});
  } else {
    Splash S = compute_splash(sc.pl, sc.pi, line);
    j["size"] = S.points.size();
    rows.push_back({"size", std::to_string(S.points.size())});
    if (kind == "tangent") {
      j["centre"] = text_of(sc.F, S.centre);
      rows.push_back({"centre", text_of(sc.F, S.centre)});
    } else {
      CarrierTriple tri = carriers(sc.pl, sc.pi, line);
      SingerGroup singer = singer_group(sc.pl, sc.pi, line);
      auto theta = splash_theta_set(sc.pl, S);
      StabilizerPair sp = stabilizer_pair(sc.pl, S);
      unsigned stab = mobius_generated_order(sc.F, {sp.carrier_fixing, sp.carrier_swapping});
      j["carriers"] = {{"e1", text_of(sc.F, tri.e1)},
                       {"e2", text_of(sc.F, tri.e2)},
                       {"e3", text_of(sc.F, tri.e3)}};
      j["singer_order"] = singer.order;
      j["stabilizer_order"] = stab;
      j["theta"] = theta_texts(sc.F, theta);
      rows.push_back({"carrier_e1", text_of(sc.F, tri.e1)});
      rows.push_back({"carrier_e2", text_of(sc.F, tri.e2)});
      rows.push_back({"carrier_e3", text_of(sc.F, tri.e3)});
      rows.push_back({"singer_order", std::to_string(singer.order)});
      rows.push_back({"stabilizer_order", std::to_string(stab)});
      rows.push_back({"theta", join(theta_texts(sc.F, theta), " ")});
    }
    j["points"] = point_texts(sc.F, S.points);
    rows.push_back({"points", join(point_texts(sc.F, S.points), " ")});
  }

  std::string payload = opt.format == "json"
                            ? dump(j)
                            : (opt.format == "csv" ? kv_csv(rows) : kv_text(rows));
  return write_artifact(opt, payload);
}

// ---------------------------------------------------------------- models
int cmd_models(const Options& opt) {
  require_geometry_order(opt.q);
  Scene sc(opt);
  Splash S = compute_splash(sc.pl, sc.pi, sc.ell);
  auto theta = splash_theta_set(sc.pl, S);

  Cover cov = fit_cover(sc.pl, S);
  auto cov_pts = cover_points(sc.F, cov);
  const bool cover_ok = cov_pts == theta;

  SherkSurface sherk{sc.F.q_one(), sc.F.zero(), sc.F.zero(), sc.F.q_one()};
  auto sherk_pts = sherk_points(sc.F, sherk);
  const bool sherk_ok = sherk_pts == theta;

  LinearSetBasis basis;
  Fq3 t = sc.F.tau(), t2 = sc.F.mul(t, t);
  basis.rows[0] = {sc.F.one(), sc.F.neg(sc.F.one())};
  basis.rows[1] = {t, sc.F.neg(sc.F.frobenius(t, 1))};
  basis.rows[2] = {t2, sc.F.neg(sc.F.frobenius(t2, 1))};
  const bool scattered = is_scattered(sc.F, basis);
  auto lin_pts = linear_set_points(sc.F, basis);
  const bool linear_ok = scattered && lin_pts == theta;

  const bool pass = cover_ok && sherk_ok && linear_ok;

  std::optional<SherkCensus> strata;
  if (sc.F.q() == 2) strata.emplace(sherk_size_census(sc.F));

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "models";
    j["q"] = sc.F.q();
    j["theta"] = theta_texts(sc.F, theta);
    j["cover"] = {{"kind", cov.kind == CoverKind::TypeI ? "I" : "II"},
                  {"a", text_of(sc.F, cov.a)},
                  {"f", text_of(sc.F, cov.f)},
                  {"matches", cover_ok}};
    j["sherk"] = {{"f", text_of(sc.F, sherk.f)},
                  {"alpha", text_of(sc.F, sherk.alpha)},
                  {"delta", text_of(sc.F, sherk.delta)},
                  {"g", text_of(sc.F, sherk.g)},
                  {"matches", sherk_ok}};
    j["linear_set"] = {{"scattered", scattered}, {"matches", linear_ok}};
    if (strata) {
      ojson s = ojson::object();
      for (const auto& [size, count] : strata->class_counts)
        s[std::to_string(size)] = count;
      j["sherk_size_strata"] = s;
      j["sherk_top_stratum_set_count"] =
          strata->distinct_sets.count(7) ? strata->distinct_sets.at(7).size() : 0;
    }
    j["pass"] = pass;
    payload = dump(j);
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"command", "models"},
        {"q", std::to_string(sc.F.q())},
        {"theta", join(theta_texts(sc.F, theta), " ")},
        {"cover_kind", cov.kind == CoverKind::TypeI ? "I" : "II"},
        {"cover_a", text_of(sc.F, cov.a)},
        {"cover_f", text_of(sc.F, cov.f)},
        {"cover_matches", bool_text(cover_ok)},
        {"sherk_matches", bool_text(sherk_ok)},
        {"linear_set_scattered", bool_text(scattered)},
        {"linear_set_matches", bool_text(linear_ok)},
    };
    if (strata) {
      std::string st;
      for (const auto& [size, count] : strata->class_counts) {
        if (!st.empty()) st += " ";
        st += std::to_string(size) + ":" + std::to_string(count);
      }
      rows.push_back({"sherk_size_strata", st});
    }
    rows.push_back({"pass", bool_text(pass)});
    payload = opt.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

// -------------------------------------------------------------- sublines
int cmd_sublines(const Options& opt) {
  require_geometry_order(opt.q);
  Scene sc(opt);
  Splash S = compute_splash(sc.pl, sc.pi, sc.ell);
  auto subs = sublines_in_splash(sc.pl, S);

  if (sc.F.q() == 2) {
    // Every 3-subset of the splash closes into a subline at q = 2, so the
    // two-family classification is undefined; report the degenerate count.
    std::string payload;
    if (opt.format == "json") {
      ojson j;
      j["command"] = "sublines";
      j["q"] = 2;
      j["subline_count"] = subs.size();
      j["classified"] = false;
      j["note"] = "family classification requires q > 2";
      payload = dump(j);
    } else {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"command", "sublines"},
          {"q", "2"},
          {"subline_count", std::to_string(subs.size())},
          {"classified", "false"},
          {"note", "family classification requires q > 2"},
      };
      payload = opt.format == "csv" ? kv_csv(rows) : kv_text(rows);
    }
    int rc = write_artifact(opt, payload);
    if (rc != kExitPass) return rc;
    return subs.size() == 35 ? kExitPass : kExitFail;
  }

  const unsigned n1 = sc.F.q() * sc.F.q() + sc.F.q() + 1;
  SublineFamilies fam = classify_families(sc.pl, sc.pi, sc.ell);

  bool partition_ok = fam.pencil.size() == n1 && fam.conic.size() == n1;
  {
    std::set<std::vector<ProjPoint>> all, oracle;
    for (const auto& b : fam.pencil) all.insert(b.points);
    for (const auto& b : fam.conic) all.insert(b.points);
    for (const auto& b : subs) oracle.insert(b.points);
    partition_ok = partition_ok && all.size() == 2 * n1 && all == oracle;
  }

  bool witness_ok = true;
  for (const auto& b : fam.pencil)
    if (!witnesses_concurrent(sc.pl, sc.pi, S, b)) witness_ok = false;
  for (const auto& b : fam.conic)
    if (witnesses_concurrent(sc.pl, sc.pi, S, b)) witness_ok = false;

  FamilySwap fs = swap_families(sc.pl, S, sc.pi);
  bool swap_ok = fs.involution.compose(sc.F, fs.involution) == Homography::identity(sc.F) &&
                 !(fs.image == sc.pi) &&
                 compute_splash(sc.pl, fs.image, sc.ell).points == S.points;
  {
    std::set<std::vector<ProjPoint>> pset, cset;
    for (const auto& b : fam.pencil) pset.insert(b.points);
    for (const auto& b : fam.conic) cset.insert(b.points);
    for (const auto& b : fam.pencil) {
      std::vector<ProjPoint> img;
      for (const auto& p : b.points) img.push_back(fs.involution.apply(sc.pl, p));
      std::sort(img.begin(), img.end());
      if (!cset.count(img)) swap_ok = false;
    }
    for (const auto& b : fam.conic) {
      std::vector<ProjPoint> img;
      for (const auto& p : b.points) img.push_back(fs.involution.apply(sc.pl, p));
      std::sort(img.begin(), img.end());
      if (!pset.count(img)) swap_ok = false;
    }
  }

  const bool pass = partition_ok && witness_ok && swap_ok;

  auto family_texts = [&](const std::vector<Subline>& f) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : f) out.push_back(point_texts(sc.F, b.points));
    return out;
  };

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "sublines";
    j["q"] = sc.F.q();
    j["subline_count"] = subs.size();
    j["classified"] = true;
    j["pencil_count"] = fam.pencil.size();
    j["conic_count"] = fam.conic.size();
    j["partition_ok"] = partition_ok;
    j["pencil_witnesses_concurrent"] = witness_ok;
    j["swap_involution"] = text_of(sc.F, fs.involution.matrix());
    j["families_exchanged"] = swap_ok;
    j["pencil"] = family_texts(fam.pencil);
    j["conic"] = family_texts(fam.conic);
    j["pass"] = pass;
    payload = dump(j);
  } else if (opt.format == "csv") {
    std::vector<std::vector<std::string>> data;
    for (const auto& b : fam.pencil)
      data.push_back({"pencil", csv_safe(join(point_texts(sc.F, b.points), " "))});
    for (const auto& b : fam.conic)
      data.push_back({"conic", csv_safe(join(point_texts(sc.F, b.points), " "))});
    std::ostringstream os;
    write_csv(os, {"family", "points"}, data);
    payload = os.str();
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"command", "sublines"},
        {"q", std::to_string(sc.F.q())},
        {"subline_count", std::to_string(subs.size())},
        {"pencil_count", std::to_string(fam.pencil.size())},
        {"conic_count", std::to_string(fam.conic.size())},
        {"partition_ok", bool_text(partition_ok)},
        {"pencil_witnesses_concurrent", bool_text(witness_ok)},
        {"swap_involution", text_of(sc.F, fs.involution.matrix())},
        {"families_exchanged", bool_text(swap_ok)},
        {"pass", bool_text(pass)},
    };
    payload = kv_text(rows);
  }
  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

// --------------------------------------------------------------- project
int cmd_project(const Options& opt) {
  require_census_order(opt.q);
  Scene sc(opt);
  const unsigned q = sc.F.q();
  const unsigned n1 = q * q + q + 1;
  Splash S = compute_splash(sc.pl, sc.pi, sc.ell);
  CarrierTriple tri = carriers(sc.pl, sc.pi, sc.ell);
  SingerGroup singer = singer_group(sc.pl, sc.pi, sc.ell);
  ProjectionCensus pc = projection_census(sc.pl, sc.pi, sc.ell, jobs_of(opt));

  // Asserted structure: proven orbit and multiplicity constraints.
  const std::size_t q3 = sc.F.ext_size();
  bool structure_ok = pc.source_count == sc.pl.point_count() - n1 - (q3 + 1);
  std::size_t tangent_images = 0, exterior_images = 0, equals_splash = 0;
  for (const auto& g : pc.groups) {
    if (g.cls == ProjectionClass::TangentSize) {
      ++tangent_images;
      if (g.singer_orbit_size != n1) structure_ok = false;
    } else {
      ++exterior_images;
      if (g.singer_orbit_size != 1 && g.singer_orbit_size != n1) structure_ok = false;
      if (g.same_carriers) {
        std::size_t k = g.sources.size();
        if (q % 2 == 0 ? (k != 1 && k != n1) : (k != n1 && k != n1 + 1)) structure_ok = false;
      }
      if (g.equals_splash) {
        ++equals_splash;
        if (q % 2 != 0) structure_ok = false;
        else if (!(g.sources.size() == 1 && g.sources.front() == tri.e3)) structure_ok = false;
      }
    }
  }
  if (q % 2 == 0 && equals_splash != 1) structure_ok = false;

  // Reported conjecture: tangent images from single points on extended
  // subplane lines; same-carrier strata one Singer orbit each; remaining
  // exterior images from one point or two points in different orbits.
  std::size_t expected_tangent = static_cast<std::size_t>(n1) * (q3 - q - 1);
  bool tangent_single = true, location_ok = true;
  for (const auto& g : pc.groups) {
    const bool tangent = g.cls == ProjectionClass::TangentSize;
    if (tangent && g.sources.size() != 1) tangent_single = false;
    for (const auto& s : g.sources) {
      bool on_ext = false;
      for (const auto& L : sc.pi.lines())
        if (sc.pl.incident(s, L)) { on_ext = true; break; }
      if (on_ext != tangent) location_ok = false;
    }
  }
  auto one_orbit = [&](std::vector<ProjPoint> srcs) {
    if (srcs.empty()) return false;
    std::vector<ProjPoint> orbit;
    ProjPoint p = srcs.front();
    for (unsigned i = 0; i < n1; ++i) {
      orbit.push_back(p);
      p = singer.generator.apply(sc.pl, p);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit == srcs;
  };
  std::size_t fiber_images = 0, exceptional = 0, single_images = 0, double_images = 0;
  bool fiber_orbits_ok = true, rest_ok = true;
  for (const auto& g : pc.groups) {
    if (g.cls != ProjectionClass::ExteriorSize) continue;
    if (g.same_carriers) {
      ++fiber_images;
      if (g.equals_splash) continue; // covered by the asserted structure
      std::vector<ProjPoint> srcs = g.sources;
      if (q % 2 == 1 && srcs.size() == n1 + 1) {
        ++exceptional;
        auto it = std::find(srcs.begin(), srcs.end(), tri.e3);
        if (it == srcs.end()) fiber_orbits_ok = false;
        else srcs.erase(it);
      }
      if (!one_orbit(std::move(srcs))) fiber_orbits_ok = false;
    } else {
      if (g.sources.size() == 1) ++single_images;
      else if (g.sources.size() == 2) {
        ++double_images;
        std::vector<ProjPoint> orbit;
        ProjPoint p = g.sources[0];
        for (unsigned i = 0; i < n1; ++i) {
          orbit.push_back(p);
          p = singer.generator.apply(sc.pl, p);
        }
        std::sort(orbit.begin(), orbit.end());
        if (std::binary_search(orbit.begin(), orbit.end(), g.sources[1])) rest_ok = false;
      } else rest_ok = false;
    }
  }
  std::size_t expected_fibers = (q % 2 == 0) ? (q - 1) : (q - 2);
  if (q % 2 == 1 && exceptional != 1) fiber_orbits_ok = false;
  const bool conjecture_holds = tangent_images == expected_tangent && tangent_single &&
                                location_ok && fiber_images == expected_fibers &&
                                fiber_orbits_ok && rest_ok &&
                                single_images + double_images + expected_fibers ==
                                    exterior_images;

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "project";
    j["q"] = q;
    j["line"] = text_of(sc.F, sc.ell);
    j["source_count"] = pc.source_count;
    j["tangent_images"] = tangent_images;
    j["exterior_images"] = exterior_images;
    j["structure_pass"] = structure_ok;
    j["conjecture"] = {{"tangent_images_expected", expected_tangent},
                       {"tangent_single_source", tangent_single},
                       {"sources_on_extended_lines_iff_tangent_image", location_ok},
                       {"same_carrier_images", fiber_images},
                       {"same_carrier_images_expected", expected_fibers},
                       {"same_carrier_one_orbit_each", fiber_orbits_ok},
                       {"odd_order_exceptional_images", exceptional},
                       {"other_images_single_source", single_images},
                       {"other_images_double_source", double_images},
                       {"double_sources_in_distinct_orbits", rest_ok},
                       {"holds", conjecture_holds}};
    ojson groups = ojson::array();
    for (const auto& g : pc.groups) {
      groups.push_back({{"kind", g.cls == ProjectionClass::TangentSize ? "tangent" : "exterior"},
                        {"image_size", g.image.size()},
                        {"source_count", g.sources.size()},
                        {"orbit_size", g.singer_orbit_size},
                        {"same_carriers", g.same_carriers},
                        {"equals_splash", g.equals_splash}});
    }
    j["groups"] = std::move(groups);
    payload = dump(j);
  } else if (opt.format == "csv") {
    std::vector<std::vector<std::string>> data;
    for (const auto& g : pc.groups)
      data.push_back({g.cls == ProjectionClass::TangentSize ? "tangent" : "exterior",
                      std::to_string(g.image.size()), std::to_string(g.sources.size()),
                      std::to_string(g.singer_orbit_size), bool_text(g.same_carriers),
                      bool_text(g.equals_splash)});
    std::ostringstream os;
    write_csv(os, {"kind", "image_size", "source_count", "orbit_size", "same_carriers",
                   "equals_splash"},
              data);
    payload = os.str();
  } else {
    // aggregate (kind, source_count, orbit_size) histogram for readability
    std::map<std::tuple<std::string, std::size_t, unsigned>, std::size_t> hist;
    for (const auto& g : pc.groups)
      ++hist[{g.cls == ProjectionClass::TangentSize ? "tangent" : "exterior", g.sources.size(),
              g.singer_orbit_size}];
    std::vector<std::pair<std::string, std::string>> rows = {
        {"command", "project"},
        {"q", std::to_string(q)},
        {"line", text_of(sc.F, sc.ell)},
        {"source_count", std::to_string(pc.source_count)},
        {"tangent_images", std::to_string(tangent_images)},
        {"exterior_images", std::to_string(exterior_images)},
        {"structure_pass", bool_text(structure_ok)},
        {"conjecture_holds", bool_text(conjecture_holds)},
    };
    for (const auto& [key, count] : hist) {
      const auto& [kind, srcs, orbit] = key;
      rows.push_back({"images_" + kind + "_sources" + std::to_string(srcs) + "_orbit" +
                          std::to_string(orbit),
                      std::to_string(count)});
    }
    payload = kv_text(rows);
  }
  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return structure_ok ? kExitPass : kExitFail; // conjecture never affects the exit
}

// ---------------------------------------------------------------- census
int cmd_census(const Options& opt) {
  require_census_order(opt.q);
  Scene sc(opt);
  const unsigned q = sc.F.q();
  const unsigned n1 = q * q + q + 1;
  Splash S = compute_splash(sc.pl, sc.pi, sc.ell);

  if (q == 2) {
    ExhaustiveCensus ec = exhaustive_exterior_census(sc.pl, sc.ell, jobs_of(opt));
    bool pass = ec.exterior_subplane_count == exterior_subplanes_closed_form(q) &&
                ec.classes.size() == splash_count_closed_form(q);
    for (const auto& cl : ec.classes)
      if (cl.subplane_count != subplanes_per_splash_closed_form(q) || !cl.carriers_consistent)
        pass = false;

    // intersection profile within the canonical splash class
    const auto& mem = ec.canonical_class_members;
    const auto& pts = sc.pl.points();
    std::map<std::size_t, std::uint64_t> hist;
    std::uint64_t subline_pairs = 0, triangle_pairs = 0;
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b) {
        std::vector<std::uint32_t> in;
        std::set_intersection(mem[a].begin(), mem[a].end(), mem[b].begin(), mem[b].end(),
                              std::back_inserter(in));
        ++hist[in.size()];
        if (in.size() > q + 1) pass = false;
        if (in.size() == q + 1) {
          ProjPoint P = pts[in[0]], Q = pts[in[1]], R = pts[in[2]];
          if (sc.pl.incident(R, sc.pl.join(P, Q))) {
            if (points_form_subline(sc.pl, {P, Q, R})) ++subline_pairs;
            else pass = false;
          } else ++triangle_pairs;
        }
      }
    const std::uint64_t expected_subline_pairs = mem.size() * n1 / 2;
    pass = pass && subline_pairs == expected_subline_pairs;

    // sampled: an admissible subline lies in exactly two class members
    Rng rng(opt.seed + 1);
    bool two_ok = true;
    const unsigned samples = 100;
    for (unsigned i = 0; i < samples; ++i) {
      Subline b = random_splash_subline(sc.pl, S, rng);
      auto found = subplanes_through_subline_with_splash(sc.pl, b, S);
      if (found.size() != 2) two_ok = false;
      else if (subplane_intersection(found[0], found[1]) != b.points) two_ok = false;
    }
    pass = pass && two_ok;

    std::string payload;
    if (opt.format == "json") {
      ojson j;
      j["command"] = "census";
      j["q"] = q;
      j["mode"] = "exhaustive";
      j["quadrangles"] = ec.quadrangle_count;
      j["subplanes"] = ec.subplane_count;
      j["exterior_subplanes"] = ec.exterior_subplane_count;
      j["exterior_expected"] = exterior_subplanes_closed_form(q);
      j["class_count"] = ec.classes.size();
      j["class_count_expected"] = splash_count_closed_form(q);
      j["per_class_expected"] = subplanes_per_splash_closed_form(q);
      ojson cls = ojson::array();
      for (const auto& c : ec.classes) {
        cls.push_back({{"carrier_1", text_of(sc.F, pts[c.carrier_key.first])},
                       {"carrier_2", text_of(sc.F, pts[c.carrier_key.second])},
                       {"subplane_count", c.subplane_count},
                       {"carriers_consistent", c.carriers_consistent}});
      }
      j["classes"] = std::move(cls);
      ojson h = ojson::object();
      for (const auto& [size, count] : hist) h[std::to_string(size)] = count;
      j["intersection_sizes"] = h;
      j["subline_pairs"] = subline_pairs;
      j["subline_pairs_expected"] = expected_subline_pairs;
      j["triangle_pairs"] = triangle_pairs;
      j["two_subplane_samples"] = samples;
      j["two_subplanes_per_subline"] = two_ok;
      j["pass"] = pass;
      payload = dump(j);
    } else if (opt.format == "csv") {
      std::vector<std::vector<std::string>> data;
      std::size_t idx = 0;
      for (const auto& c : ec.classes)
        data.push_back({std::to_string(idx++), std::to_string(c.subplane_count),
                        bool_text(c.carriers_consistent),
                        csv_safe(text_of(sc.F, pts[c.carrier_key.first])),
                        csv_safe(text_of(sc.F, pts[c.carrier_key.second]))});
      std::ostringstream os;
      write_csv(os, {"class_index", "subplane_count", "carriers_consistent", "carrier_1",
                     "carrier_2"},
                data);
      payload = os.str();
    } else {
      std::string histtext;
      for (const auto& [size, count] : hist) {
        if (!histtext.empty()) histtext += " ";
        histtext += std::to_string(size) + ":" + std::to_string(count);
      }
      std::vector<std::pair<std::string, std::string>> rows = {
          {"command", "census"},
          {"q", std::to_string(q)},
          {"mode", "exhaustive"},
          {"quadrangles", std::to_string(ec.quadrangle_count)},
          {"subplanes", std::to_string(ec.subplane_count)},
          {"exterior_subplanes", std::to_string(ec.exterior_subplane_count)},
          {"class_count", std::to_string(ec.classes.size())},
          {"per_class", std::to_string(subplanes_per_splash_closed_form(q))},
          {"intersection_sizes", histtext},
          {"subline_pairs", std::to_string(subline_pairs)},
          {"triangle_pairs", std::to_string(triangle_pairs)},
          {"two_subplane_samples", std::to_string(samples)},
          {"two_subplanes_per_subline", bool_text(two_ok)},
          {"pass", bool_text(pass)},
      };
      payload = kv_text(rows);
    }
    int rc = write_artifact(opt, payload);
    if (rc != kExitPass) return rc;
    return pass ? kExitPass : kExitFail;
  }

  // q == 3: closed-form count plus sampled structure checks
  auto covers = enumerate_covers(sc.F);
  bool count_ok = covers.size() == splash_count_closed_form(q);
  bool identity_ok = splash_count_closed_form(q) * subplanes_per_splash_closed_form(q) ==
                     exterior_subplanes_closed_form(q);

  Rng rng(opt.seed + 1);
  bool two_ok = true;
  const unsigned subline_samples = 20;
  for (unsigned i = 0; i < subline_samples; ++i) {
    Subline b = random_splash_subline(sc.pl, S, rng);
    auto found = subplanes_through_subline_with_splash(sc.pl, b, S);
    if (found.size() != 2) two_ok = false;
    else if (subplane_intersection(found[0], found[1]) != b.points) two_ok = false;
  }

  Rng rng2(opt.seed + 2);
  std::map<std::size_t, std::uint64_t> hist;
  bool profile_ok = true;
  const unsigned pair_samples = 25;
  for (unsigned i = 0; i < pair_samples; ++i) {
    Subplane a = random_subplane_with_splash(sc.pl, sc.pi, S, rng2);
    Subplane b = random_subplane_with_splash(sc.pl, sc.pi, S, rng2);
    if (a == b) continue;
    auto common = subplane_intersection(a, b);
    ++hist[common.size()];
    if (common.size() > q + 1) profile_ok = false;
    if (common.size() == q + 1 && !points_form_subline(sc.pl, common)) profile_ok = false;
  }
  const bool pass = count_ok && identity_ok && two_ok && profile_ok;

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "census";
    j["q"] = q;
    j["mode"] = "sampled";
    j["splash_count"] = covers.size();
    j["splash_count_expected"] = splash_count_closed_form(q);
    j["per_class_expected"] = subplanes_per_splash_closed_form(q);
    j["exterior_expected"] = exterior_subplanes_closed_form(q);
    j["product_identity"] = identity_ok;
    j["two_subplane_samples"] = subline_samples;
    j["two_subplanes_per_subline"] = two_ok;
    ojson h = ojson::object();
    for (const auto& [size, count] : hist) h[std::to_string(size)] = count;
    j["intersection_sizes"] = h;
    j["intersection_profile_ok"] = profile_ok;
    j["pass"] = pass;
    payload = dump(j);
  } else {
    std::string histtext;
    for (const auto& [size, count] : hist) {
      if (!histtext.empty()) histtext += " ";
      histtext += std::to_string(size) + ":" + std::to_string(count);
    }
    std::vector<std::pair<std::string, std::string>> rows = {
        {"command", "census"},
        {"q", std::to_string(q)},
        {"mode", "sampled"},
        {"splash_count", std::to_string(covers.size())},
        {"splash_count_expected", std::to_string(splash_count_closed_form(q))},
        {"per_class_expected", std::to_string(subplanes_per_splash_closed_form(q))},
        {"exterior_expected", std::to_string(exterior_subplanes_closed_form(q))},
        {"product_identity", bool_text(identity_ok)},
        {"two_subplane_samples", std::to_string(subline_samples)},
        {"two_subplanes_per_subline", bool_text(two_ok)},
        {"intersection_sizes", histtext},
        {"intersection_profile_ok", bool_text(profile_ok)},
        {"pass", bool_text(pass)},
    };
    payload = opt.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------------ verify-all
int cmd_verify_all(const Options& opt) {
  require_geometry_order(opt.q);
  VerifyOptions vo;
  vo.q = opt.q;
  vo.poly = poly_of(opt);
  vo.seed = opt.seed;
  vo.jobs = jobs_of(opt);
  auto results = run_verification(vo);
  const bool pass = all_passed(results);

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["command"] = "verify-all";
    j["q"] = opt.q;
    j["seed"] = opt.seed;
    ojson checks = ojson::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name},
                        {"pass", r.pass},
                        {"report_only", r.report_only},
                        {"details", r.details}});
    j["checks"] = std::move(checks);
    j["pass"] = pass;
    payload = dump(j);
  } else if (opt.format == "csv") {
    std::vector<std::vector<std::string>> data;
    for (const auto& r : results)
      data.push_back({r.name, r.pass ? "PASS" : "FAIL", bool_text(r.report_only),
                      csv_safe(r.details)});
    std::ostringstream os;
    write_csv(os, {"check", "result", "report_only", "details"}, data);
    payload = os.str();
  } else {
    std::size_t w = 0;
    for (const auto& r : results) w = std::max(w, r.name.size());
    std::string out;
    for (const auto& r : results) {
      out += r.name;
      out.append(w - r.name.size() + 2, ' ');
      out += r.pass ? "PASS" : "FAIL";
      out += r.report_only ? "*" : " ";
      out += "  ";
      out += r.details;
      out += '\n';
    }
    std::size_t asserted = 0, failures = 0, reported = 0;
    for (const auto& r : results) {
      if (r.report_only) ++reported;
      else {
        ++asserted;
        if (!r.pass) ++failures;
      }
    }
    out += "asserted: " + std::to_string(asserted) + "  failures: " + std::to_string(failures) +
           "  report-only (*): " + std::to_string(reported) + "\n";
    payload = out;
  }

  // timing to stderr only, so artifacts stay byte-identical across runs
  double total = 0;
  for (const auto& r : results) {
    std::fprintf(stderr, "%-42s %6.2fs\n", r.name.c_str(), r.seconds);
    total += r.seconds;
  }
  std::fprintf(stderr, "%-42s %6.2fs\n", "total", total);

  int rc = write_artifact(opt, payload);
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitFail;
}

} // namespace exsplash::cli
