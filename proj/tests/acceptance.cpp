// Acceptance runner: executes the full verification suite at the stated
// tolerances and fixed seeds, printing one line per criterion. Exit status 0
// only when every check and every runtime budget passes.

#include <filesystem>

#include "dms/commands.hpp"

int main() {
  dms::cli::RunConfig cfg;
  cfg.out_dir = (std::filesystem::temp_directory_path() / "dms_acceptance").string();
  return dms::cli::cmd_verify(cfg);
}
