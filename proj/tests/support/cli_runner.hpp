#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cli {

struct Result {
  int code = -1;
  std::string out;
};

// Run the cluster-geom binary with `args`; stderr is discarded. `env` is an
// optional "NAME=value" prefix.
inline Result run(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += "env " + env + " ";
  cmd += std::string("\"") + CLUSTERGEOM_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  Result r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cli
