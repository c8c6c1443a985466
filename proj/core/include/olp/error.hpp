#pragma once

#include <stdexcept>
#include <string>

namespace olp {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scene file could not be parsed. Carries the 1-based source line.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class ExtractionError : public Error {
public:
  ExtractionError(const std::string& entity, const std::string& msg)
      : Error(entity.empty() ? msg : "'" + entity + "': " + msg), entity_(entity) {}
  const std::string& entity() const { return entity_; }

private:
  std::string entity_;
};

class InterpolationError : public Error {
public:
  using Error::Error;
};

class CodegenError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace olp
