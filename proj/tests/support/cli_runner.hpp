// Helper for driving the installed CLI binary from tests. The binary path
// arrives via the PADIC_REGRESS_CLI environment variable (set by ctest) or
// the --cli flag of the acceptance runner.

#ifndef PADIC_TESTS_CLI_RUNNER_HPP
#define PADIC_TESTS_CLI_RUNNER_HPP

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace padic::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

class CliRunner {
public:
  explicit CliRunner(std::string binary) : binary_(std::move(binary)) {
    if (binary_.empty()) throw std::runtime_error("CLI binary path not provided");
    work_dir_ = std::filesystem::temp_directory_path() /
                ("padic-regress-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(work_dir_);
  }

  ~CliRunner() {
    std::error_code ec;
    std::filesystem::remove_all(work_dir_, ec);
  }

  static std::string binary_from_env() {
    const char* env = std::getenv("PADIC_REGRESS_CLI");
    return env ? env : "";
  }

  std::filesystem::path path(const std::string& name) const { return work_dir_ / name; }

  CliResult run(const std::string& args) const {
    const auto out_path = work_dir_ / "last-output.txt";
    const std::string cmd = binary_ + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status == -1) throw std::runtime_error("failed to spawn CLI");
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    if (!in) throw std::runtime_error("missing file " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream out(path(name));
    out << content;
  }

private:
  std::string binary_;
  std::filesystem::path work_dir_;
};

/// First "key = value" occurrence in a report; empty when absent.
inline std::string report_value(const std::string& text, const std::string& key) {
  const std::string needle = key + " = ";
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t line_end = text.find('\n', pos);
    const std::string line = text.substr(pos, line_end - pos);
    if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
    if (line_end == std::string::npos) break;
    pos = line_end + 1;
  }
  return {};
}

}  // namespace padic::testing

#endif
