#pragma once

// Runs the installed CLI binary (path injected by the build) and captures
// stdout plus the exit code.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace clirun {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline Result run(const std::string& args) {
  std::string cmd = std::string(COPATH_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content) {
    path_ = std::filesystem::temp_directory_path() / name;
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace clirun
