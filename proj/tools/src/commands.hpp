#pragma once

#include "options.hpp"

namespace exsplash::cli {

int cmd_field(const Options& opt);
int cmd_splash(const Options& opt);
int cmd_models(const Options& opt);
int cmd_sublines(const Options& opt);
int cmd_project(const Options& opt);
int cmd_census(const Options& opt);
int cmd_verify_all(const Options& opt);

} // namespace exsplash::cli
