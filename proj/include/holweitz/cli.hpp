#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "holweitz/render.hpp"

namespace holweitz::cli {

/// Runs one invocation. args excludes the program name. Returns the exit
/// status: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

/// Golden corpus: fixture file name -> document.
std::map<std::string, Json> golden_corpus();

/// Compares the corpus against the files in dir, writing a diff for every
/// mismatch to out. Returns the number of mismatching files.
int selftest(const std::filesystem::path& dir, std::ostream& out);
void bless(const std::filesystem::path& dir, std::ostream& out);

}  // namespace holweitz::cli
