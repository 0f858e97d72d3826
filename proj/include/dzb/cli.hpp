#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dzb::cli {

struct JobSpec {
  std::string command;  // stab, qparams, hecke, oracle, cocycle, validate
  std::string input, output;
  std::string format = "json";  // json or text
  std::size_t max_group_order = 1000000;
  std::size_t max_length = 64;
  bool equivariant = false;
};

struct JobResult {
  int exit_code = 0;  // 0 ok, 1 input, 2 guard, 3 invariant
  std::string report;
  std::string diagnostic;
};

// Runs a job on an input document given as JSON text; never throws.
JobResult run_document(const JobSpec& spec, const std::string& input_text);
// Reads spec.input, runs, and writes the report to spec.output when it is set.
JobResult run(const JobSpec& spec);

int main(int argc, char** argv);

}  // namespace dzb::cli
