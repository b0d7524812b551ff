#ifndef POLYSEQ_TOOLS_VERIFY_HPP
#define POLYSEQ_TOOLS_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyseq/exactnum.hpp"

namespace polyseq::verify {

struct SamplePoint {
  long a;
  Rational q;
  std::vector<Rational> L;
};

/// (a, q, L) = (1,1,[1]), (2,1,[1]), (1,1/2,[2]), (3,2,[1/2,3]), (-3,1,[1])
std::vector<SamplePoint> default_sample();

struct Config {
  std::size_t n_max = 10;
  std::size_t m_max = 4;
  std::size_t p_max = 3;
  std::vector<long> ks{1, 2, 3, -1, -2};
  std::vector<SamplePoint> sample = default_sample();
  /// Evaluation points for the polynomial identities.
  std::vector<Rational> points{Rational(0), Rational(1), Rational(-1), Rational(2, 3)};
  /// Orders of the bivariate expansions.
  std::size_t double_n = 5;
  std::size_t double_k = 5;
  bool parallel = true;
};

struct Failure {
  std::string where;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string id;
  std::string ranges;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<Failure> failures;
  /// Mismatches at parameters where the identity is not asserted.
  std::vector<Failure> notes;

  bool ok() const noexcept { return failures.empty(); }
};

/// All identity ids in report order.
const std::vector<std::string> &identity_ids();
bool is_identity(const std::string &id);

/// Runs one suite. Throws std::invalid_argument for an unknown id.
Report run_identity(const std::string &id, const Config &config);

/// Runs the named suites (concurrently when config.parallel) and returns the
/// reports in the order of identity_ids().
std::vector<Report> run_identities(const std::vector<std::string> &ids, const Config &config);

std::string render_text(const std::vector<Report> &reports);
std::string render_json(const std::vector<Report> &reports);

} // namespace polyseq::verify

#endif
