#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentialg {

// Root of every error raised by the toolkit. The CLI maps subclasses to exit
// codes, so new failure modes should derive from one of these.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
  explicit IoError(const std::string& path, const std::string& what = "cannot open")
      : Error(what + ": " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

class MalformedLine : public Error {
public:
  MalformedLine(std::size_t line_no, const std::string& reason)
      : Error("malformed line " + std::to_string(line_no) + ": " + reason), line_no_(line_no) {}
  std::size_t line_no() const noexcept { return line_no_; }

private:
  std::size_t line_no_;
};

class FormatVersionMismatch : public Error {
public:
  using Error::Error;
};

class EmptySeed : public Error {
public:
  EmptySeed() : Error("seed lexicon is empty") {}
};

class EmptyCorpus : public Error {
public:
  EmptyCorpus() : Error("corpus is empty") {}
};

class InvalidHyperparameter : public Error {
public:
  using Error::Error;
};

class SingleClassDataset : public Error {
public:
  SingleClassDataset() : Error("training data contains a single class") {}
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("DimensionMismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected), actual_(actual) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

private:
  std::size_t expected_;
  std::size_t actual_;
};

class InsufficientData : public Error {
public:
  InsufficientData(const std::string& cell, std::size_t available, std::size_t requested)
      : Error("InsufficientData: cell " + cell + " has " + std::to_string(available) +
              " messages, " + std::to_string(requested) + " requested"),
        cell_(cell), available_(available), requested_(requested) {}
  const std::string& cell() const noexcept { return cell_; }
  std::size_t available() const noexcept { return available_; }
  std::size_t requested() const noexcept { return requested_; }

private:
  std::string cell_;
  std::size_t available_;
  std::size_t requested_;
};

class StratumTooSmall : public Error {
public:
  StratumTooSmall(const std::string& stratum, std::size_t size, std::size_t minimum)
      : Error("StratumTooSmall: " + stratum + " has " + std::to_string(size) +
              " items, at least " + std::to_string(minimum) + " required") {}
};

class LengthMismatch : public Error {
public:
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("LengthMismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

}  // namespace sentialg
