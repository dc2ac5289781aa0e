#pragma once

#include <string>
#include <vector>

namespace kmbc::cli {

/// Runs one of the scripted walkthroughs; returns a process exit code.
int run_demo(const std::string& name);

std::vector<std::string> demo_names();

}  // namespace kmbc::cli
