#include "options.hpp"

#include <cstdio>
#include <fstream>
#include <thread>

#include "exsplash/errors.hpp"

namespace exsplash::cli {

std::optional<CubicCoeffs> poly_of(const Options& opt) {
  if (opt.poly_digits.empty()) return std::nullopt;
  if (opt.poly_digits.size() != 3)
    throw Error(Errc::BadParameters, "--poly expects exactly three values t0,t1,t2");
  for (unsigned d : opt.poly_digits)
    if (d >= opt.q)
      throw Error(Errc::BadParameters,
                  "--poly digit " + std::to_string(d) + " is not an element label of GF(" +
                      std::to_string(opt.q) + ")");
  CubicCoeffs c;
  c.t0 = Fq{static_cast<std::uint16_t>(opt.poly_digits[0])};
  c.t1 = Fq{static_cast<std::uint16_t>(opt.poly_digits[1])};
  c.t2 = Fq{static_cast<std::uint16_t>(opt.poly_digits[2])};
  return c;
}

unsigned jobs_of(const Options& opt) {
  if (opt.jobs) return opt.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

int write_artifact(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fflush(stdout);
    return kExitPass;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", opt.out.c_str());
    return kExitConfig;
  }
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  f.close();
  if (!f) {
    std::fprintf(stderr, "error: short write to %s\n", opt.out.c_str());
    return kExitConfig;
  }
  return kExitPass;
}

std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

} // namespace exsplash::cli
