#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ontomap/error.hpp"
#include "ontomap/ontology.hpp"

namespace ontomap::testing {

std::filesystem::path source_path(const std::string& relative);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// The bundled obesity ontology, parsed; throws if it does not parse.
const Ontology& fixture();
std::string fixture_text();

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Code of the ontomap::Error thrown by `f`, or nullopt if it returns.
template <typename F>
std::optional<Errc> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

EntityName n(const char* local);  // default-prefix name

// Runs a shell command, capturing stdout; returns the exit status.
int run_command(const std::string& command, std::string* output = nullptr);

}  // namespace ontomap::testing
