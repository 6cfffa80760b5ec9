#pragma once

namespace semigen {

// Command-line front end; returns the process exit code
// (0 ok, 1 numeric failure reported as JSON, 2 usage/validation error).
int run_cli(int argc, char** argv);

}  // namespace semigen
