// Copyright 2026 The explicitavg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXPLICITAVG_ERRORS_HPP_
#define EXPLICITAVG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace explicitavg {

// Root of every error the library throws. The CLI maps subclasses onto
// process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based; 0 when the error is not tied to a
// particular line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A loaded data set violates an invariant. check() names the failed check.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::string check)
      : Error(what), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// A truncation window asks for zeros above the height of the loaded table.
class InsufficientZeros : public Error {
 public:
  InsufficientZeros(const std::string& what, double required_height,
                    double available_height)
      : Error(what),
        required_height_(required_height),
        available_height_(available_height) {}
  double required_height() const { return required_height_; }
  double available_height() const { return available_height_; }

 private:
  double required_height_;
  double available_height_;
};

// Quadrature could not reach the requested tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace explicitavg

#endif  // EXPLICITAVG_ERRORS_HPP_
