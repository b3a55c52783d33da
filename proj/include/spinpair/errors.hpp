#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spinpair {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model or sweep parameter violates its documented range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The requested electron count would split a degenerate shell.
class MidShellError : public Error {
 public:
  MidShellError(int requested, int below, int above);

  int requested() const noexcept { return requested_; }
  /// Nearest valid counts; -1 when no valid count exists on that side.
  int nearest_below() const noexcept { return below_; }
  int nearest_above() const noexcept { return above_; }

 private:
  int requested_;
  int below_;
  int above_;
};

class TooFewElectrons : public Error {
 public:
  explicit TooFewElectrons(int count);
  int count() const noexcept { return count_; }

 private:
  int count_;
};

/// No two-particle weight at the requested configuration.
class VanishingTrace : public Error {
 public:
  VanishingTrace(double raw_trace, double threshold);
  double raw_trace() const noexcept { return raw_trace_; }

 private:
  double raw_trace_;
};

class SiteOutOfRange : public Error {
 public:
  SiteOutOfRange(int site, int num_sites);
};

/// Density-matrix validation failures. `defect()` is the measured violation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class NotHermitian : public ValidationError {
 public:
  explicit NotHermitian(double defect);
};

class TraceNotOne : public ValidationError {
 public:
  explicit TraceNotOne(double defect);
};

class NotPSD : public ValidationError {
 public:
  explicit NotPSD(double min_eigenvalue);
};

class IntractableSize : public Error {
 public:
  IntractableSize(int sites, int electrons);
};

}  // namespace spinpair
