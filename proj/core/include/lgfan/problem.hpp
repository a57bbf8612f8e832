/**
 * @file problem.hpp
 * Text input format and the end-to-end pipelines behind each mode.
 *
 *   ring poly(x,y);            # or weyl(t1,t2,x,y)
 *   ideal: x^3 - y^2;          # comma separated; dx is the derivation of x
 *   subspace: rows [[..],..];  # each row is the ambient image of a parameter
 *   region: uloc;              # uloc | wloc | wglob | positive | full
 *   mode: local-fan;
 *   base_point: [1/2, 0];
 *   weights: [..], [..];       # compare-initials
 *   homogenization: auto;      # alpha[:a,b,..] | h01 | h11 | double | auto
 */
#pragma once

#include <optional>

#include "lgfan/document.hpp"
#include "lgfan/local_fan.hpp"

namespace lgfan {

enum class Mode { global_fan, local_fan, normal_fan, compare_initials, check_fan };
Mode parse_mode(const std::string& s);
std::string mode_name(Mode m);

enum class HomMode { automatic, alpha, h01, h11, doubleH };
struct HomChoice {
  HomMode mode = HomMode::automatic;
  std::vector<int> alpha;
};
HomChoice parse_homogenization(const std::string& s);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct ProblemSpec {
  Ring ring;
  std::vector<WeylElement> generators;
  std::vector<QVec> subspace;  // empty: identity
  std::optional<QVec> base_point;
  Mode mode = Mode::local_fan;
  std::optional<Region> region;
  std::vector<Weight> weights;
  HomChoice homogenization;
  std::string source;
};

ProblemSpec parse_problem(const std::string& text);

// Pieces of the grammar, also used for command line values.
WeylElement parse_polynomial(const Ring& ring, const std::string& text);
QVec parse_vector(const std::string& text);
std::vector<QVec> parse_matrix(const std::string& text);

Region default_region(const ProblemSpec& spec);

struct RunOptions {
  int threads = 1;
  bool validate = false;
};

/// Mode dispatch. check-fan is handled by check_document.
FanDocument run(const ProblemSpec& spec, const RunOptions& opt = {});

FanReport check_document(const FanDocument& doc);

}  // namespace lgfan
