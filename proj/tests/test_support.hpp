#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "golden_streams.hpp"

namespace support {

inline void check_certificate(const LinkStream& stream, const TimedClique& c) {
    for (const std::string& error : certificate_errors(stream, c)) FAIL_CHECK(error);
}

inline void check_certificates(const LinkStream& stream, const std::vector<TimedClique>& cliques) {
    for (const TimedClique& c : cliques) check_certificate(stream, c);
}

inline void check_counter_laws(const EnumCounters& c) {
    for (const std::string& error : counter_law_violations(c)) FAIL_CHECK(error);
}

// --- subprocess helpers for CLI tests ----------------------------------------

inline std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "lsclique_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string write_temp_file(const std::string& name, const std::string& content) {
    auto path = temp_dir() / name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path.string();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs `lsclique args`, capturing exit code and both output channels.
inline CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    auto out_path = temp_dir() / ("out." + std::to_string(++counter));
    auto err_path = temp_dir() / ("err." + std::to_string(counter));
    std::string command = std::string(LSCLIQUE_BINARY_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
    int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path.string());
    result.err = read_file(err_path.string());
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

}  // namespace support
