#ifndef THZ_ERRORS_HPP
#define THZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thz {

// Invalid argument to a numeric kernel (non-finite, out of domain).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Input is inside the numeric domain but outside the model's validity range
// (e.g. separation beyond the outer turbulence scale).
class validity_error : public std::runtime_error {
 public:
  explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

// Lookup outside an ingested data table, e.g. frequency off the absorption grid.
class table_range_error : public std::out_of_range {
 public:
  explicit table_range_error(const std::string& what) : std::out_of_range(what) {}
};

// Malformed input data file; `line` is 1-based within the file.
class ingest_error : public std::runtime_error {
 public:
  ingest_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A quantity hit a pole of the model (reported with the offending input).
class singularity_error : public std::runtime_error {
 public:
  singularity_error(const std::string& what, double offending_input)
      : std::runtime_error(what), offending_input_(offending_input) {}
  double offending_input() const { return offending_input_; }

 private:
  double offending_input_;
};

// An iterative numeric routine failed to reach its target tolerance.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double achieved_tolerance)
      : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}
  double achieved_tolerance() const { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

// Bad run configuration (CLI or config file).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thz

#endif  // THZ_ERRORS_HPP
