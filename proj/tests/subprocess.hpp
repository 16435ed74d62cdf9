#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct CommandResult {
    int exit_code = -1;
    std::string output;
    std::string error;
};

inline std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Run a shell command capturing stdout and stderr separately. Callers build
/// commands from known absolute paths, so plain shell redirection is enough.
inline CommandResult run_command(const std::string& command) {
    static int counter = 0;
    auto stem = std::filesystem::temp_directory_path() /
                ("s121_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::path out_file = stem.string() + ".out";
    std::filesystem::path err_file = stem.string() + ".err";

    std::string full = command + " > " + out_file.string() + " 2> " + err_file.string();
    int status = std::system(full.c_str());

    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = slurp(out_file);
    result.error = slurp(err_file);
    std::filesystem::remove(out_file);
    std::filesystem::remove(err_file);
    return result;
}

}  // namespace testutil
