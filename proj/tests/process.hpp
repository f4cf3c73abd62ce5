// Runs the command-line tool as a child process for the tests that exercise
// it end to end.

#ifndef OSEG_TESTS_PROCESS_HPP_
#define OSEG_TESTS_PROCESS_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace process {

  struct Result {
    int         status = -1;
    std::string out;
  };

  // stdout is captured, stderr is discarded
  inline Result run(std::string const& arguments) {
    std::string const command = std::string(OSEG_CLI) + " " + arguments + " 2>/dev/null";
    FILE*             pipe    = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
      throw std::runtime_error("cannot start " + command);
    }
    Result                  result;
    std::array<char, 4096> buffer{};
    std::size_t             got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
      result.out.append(buffer.data(), got);
    }
    int const raw = ::pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
  }

  class TempDir {
   public:
    TempDir() {
      _path = std::filesystem::temp_directory_path()
              / ("oseg-test-" + std::to_string(::getpid()));
      std::filesystem::create_directories(_path);
    }
    TempDir(TempDir const&)            = delete;
    TempDir& operator=(TempDir const&) = delete;
    ~TempDir() {
      std::error_code ignored;
      std::filesystem::remove_all(_path, ignored);
    }

    std::string write(std::string const& name, std::string const& content) const {
      auto const    file = _path / name;
      std::ofstream out(file);
      out << content;
      return file.string();
    }

    std::filesystem::path const& path() const {
      return _path;
    }

   private:
    std::filesystem::path _path;
  };

}  // namespace process

#endif  // OSEG_TESTS_PROCESS_HPP_
