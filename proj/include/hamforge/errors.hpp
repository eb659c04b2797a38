// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef HAMFORGE_ERRORS_HPP
#define HAMFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamforge {

// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user-supplied parameters (CLI exit code 2).
class parameter_error : public error {
public:
  explicit parameter_error(const std::string& msg) : error(msg) {}
};

// Malformed input text. Line/column are 1-based; column 0 means "whole line".
class parse_error : public parameter_error {
public:
  parse_error(const std::string& msg, int line, int column = 0)
      : parameter_error("line " + std::to_string(line) +
                        (column > 0 ? ", col " + std::to_string(column) : "") +
                        ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

// A constructed value violates a type invariant.
class validation_error : public error {
public:
  explicit validation_error(const std::string& msg) : error(msg) {}
};

// Problem size exceeds a documented capacity bound.
class capacity_error : public error {
public:
  explicit capacity_error(const std::string& msg) : error(msg) {}
};

// A randomized generator exhausted its retry budget.
class generation_error : public error {
public:
  explicit generation_error(const std::string& msg) : error(msg) {}
};

// An iterative search failed to converge within its bound.
class search_error : public error {
public:
  explicit search_error(const std::string& msg) : error(msg) {}
};

// Measurement branches of a gadget circuit induce different data operators.
class nondeterministic_channel_error : public error {
public:
  explicit nondeterministic_channel_error(const std::string& msg) : error(msg) {}
};

}  // namespace hamforge

#endif
