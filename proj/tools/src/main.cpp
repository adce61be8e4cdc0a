#include <cstdio>
#include <exception>

#include "CLI11.hpp"

#include "commands.hpp"
#include "exsplash/errors.hpp"
#include "options.hpp"

namespace {

// Errors raised while interpreting the configuration itself.
bool is_config_error(exsplash::Errc c) {
  using exsplash::Errc;
  switch (c) {
    case Errc::NotPrimePower:
    case Errc::ReduciblePolynomial:
    case Errc::NonPrimitiveRoot:
    case Errc::BadParameters:
    case Errc::AllZeroParameters:
      return true;
    default:
      return false;
  }
}

} // namespace

int main(int argc, char** argv) {
  using namespace exsplash::cli;
  Options opt;

  CLI::App app{"exact engine for exterior splashes of small-order subplanes in cubic-extension planes"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", opt.q, "subplane order")->capture_default_str();
    sub->add_option("--poly", opt.poly_digits,
                    "defining cubic t0,t1,t2 with tau^3 = t2*tau^2 + t1*tau + t0")
        ->delimiter(',')
        ->expected(1, 3);
    sub->add_option("--seed", opt.seed, "seed for all sampling")->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "worker threads (0 = available parallelism)");
    sub->add_option("--format", opt.format, "artifact format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "write the artifact to this file instead of stdout");
  };

  CLI::App* c_field =
      app.add_subcommand("field", "build and validate the field tables for one order");
  CLI::App* c_splash = app.add_subcommand(
      "splash", "classify a line against the canonical subplane and compute its splash");
  CLI::App* c_models = app.add_subcommand(
      "models", "check the cover, Sherk-surface and linear-set descriptions of the splash");
  CLI::App* c_sublines = app.add_subcommand(
      "sublines", "classify the splash sublines into pencil and dual-conic families");
  CLI::App* c_project = app.add_subcommand(
      "project", "census of subplane projections onto the exterior line, with conjecture report");
  CLI::App* c_census = app.add_subcommand(
      "census", "count subplanes sharing a splash, exhaustively or by sampling");
  CLI::App* c_verify =
      app.add_subcommand("verify-all", "run the full verification suite for one order");

  for (CLI::App* sub : {c_field, c_splash, c_models, c_sublines, c_project, c_census, c_verify})
    add_common(sub);
  c_splash->add_option("--line", opt.line,
                       "line coordinates l,m,n as base-q digit strings (default: the canonical "
                       "exterior line)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (c_field->parsed()) return cmd_field(opt);
    if (c_splash->parsed()) return cmd_splash(opt);
    if (c_models->parsed()) return cmd_models(opt);
    if (c_sublines->parsed()) return cmd_sublines(opt);
    if (c_project->parsed()) return cmd_project(opt);
    if (c_census->parsed()) return cmd_census(opt);
    if (c_verify->parsed()) return cmd_verify_all(opt);
  } catch (const exsplash::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_config_error(e.code()) ? kExitConfig : kExitFail;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitConfig; // no subcommand (unreachable with require_subcommand)
}
