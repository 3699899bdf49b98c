// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regfactor {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of an operation (e.g. odd m for rho1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 input. `offset` is the zero-based byte position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Instance exceeds a configured size cap (oracle enumeration, solver limits).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A randomized generator ran out of its rejection budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace regfactor
